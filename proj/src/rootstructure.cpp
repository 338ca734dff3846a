#include "psums/rootstructure.hpp"

#include <algorithm>
#include <stdexcept>

#include "psums/errors.hpp"

namespace psums {

std::vector<SquarefreeFactor> squarefree_decomposition(const RationalPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");

    std::vector<SquarefreeFactor> factors;
    if (p.degree() == 0) return factors;

    // Yun's algorithm on the monic form.
    RationalPolynomial f = p.monic();
    RationalPolynomial g = gcd(f, f.derivative());
    RationalPolynomial b = exact_divide(f, g);
    RationalPolynomial d = exact_divide(f.derivative(), g) - b.derivative();
    long multiplicity = 1;
    while (b.degree() > 0) {
        RationalPolynomial a = gcd(b, d);  // gcd(b, 0) = b: the remaining factor
        if (a.degree() > 0) factors.push_back({a, multiplicity});
        b = exact_divide(b, a);
        d = exact_divide(d, a) - b.derivative();
        ++multiplicity;
    }
    return factors;
}

MultiplicityProfile multiplicity_profile(const ProblemInstance& instance) {
    validate(instance);
    if (instance.k < 2) throw std::domain_error("multiplicity_profile: k must be >= 2");

    PowerSumPolynomial polynomial = build(instance);
    std::vector<SquarefreeFactor> factors = squarefree_decomposition(polynomial.scaled);

    MultiplicityProfile profile;
    profile.distinct_count = 0;
    profile.zero_multiplicity = 0;
    for (const SquarefreeFactor& sf : factors) {
        long roots = sf.factor.degree();
        profile.distinct_count += roots;
        for (long i = 0; i < roots; ++i) profile.multiplicities.push_back(sf.multiplicity);
        if (sf.factor.coefficient(0) == 0) profile.zero_multiplicity = sf.multiplicity;
    }
    std::sort(profile.multiplicities.begin(), profile.multiplicities.end(), std::greater<>());

    long total = 0;
    for (long m : profile.multiplicities) total += m;
    if (total != instance.k + 1 || profile.zero_multiplicity == 0) {
        throw invariant_violation("multiplicity profile inconsistent for k=" +
                                  std::to_string(instance.k) + " l=" +
                                  std::to_string(instance.ell));
    }
    return profile;
}

bool has_three_distinct_roots(const ProblemInstance& instance) {
    return multiplicity_profile(instance).distinct_count >= 3;
}

TwoRootCheck two_root_hypothetical(const ProblemInstance& instance) {
    validate(instance);
    if (instance.k < 2) throw std::domain_error("two_root_hypothetical: k must be >= 2");
    unsigned long k = static_cast<unsigned long>(instance.k);
    Int ell(instance.ell);

    Int a = pow_int(ell, k - 1) - 1;
    Int b = pow_int(ell, k + 1) - 1;
    Int c = pow_int(ell, k) - 1;
    c *= c;

    Int denominator = 3 * Int(instance.k + 1) * c - 2 * Int(instance.k) * a * b;
    if (denominator == 0) {
        throw degenerate_expression("two_root_hypothetical: zero denominator at k=" +
                                    std::to_string(instance.k) + " l=" +
                                    std::to_string(instance.ell));
    }

    TwoRootCheck check;
    check.hypothetical_multiplicity =
        Rat(instance.k) * (Rat(1) - make_rat(2 * a * b, denominator));
    check.interval_ok = check.hypothetical_multiplicity > Rat(instance.k - 2) &&
                        check.hypothetical_multiplicity < Rat(instance.k);
    check.inequality_ok = c > a * b;
    return check;
}

bool contradiction_identities(long ell_max) {
    if (ell_max < 2) throw std::domain_error("contradiction_identities: l_max must be >= 2");
    for (long ell = 2; ell <= ell_max; ++ell) {
        Int l(ell);
        Int lhs1 = 8 * (l * l + l + 1);
        Int rhs1 = 9 * (l + 1) * (l + 1);
        if (lhs1 == rhs1) return false;
        Int lhs2 = (l + 1) * (l * l + 1);
        Int quad = l * l + l + 1;
        if (lhs2 == quad * quad) return false;
    }
    return true;
}

}  // namespace psums
