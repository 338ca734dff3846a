#include "psums/powersum.hpp"

#include <stdexcept>

#include "psums/bernoulli.hpp"
#include "psums/errors.hpp"

namespace psums {

void validate(const ProblemInstance& instance) {
    if (instance.k < 1) throw std::domain_error("instance: k must be >= 1");
    if (instance.ell < 2) throw std::domain_error("instance: l must be >= 2");
}

PowerSumPolynomial build(const ProblemInstance& instance) {
    validate(instance);
    std::size_t q = static_cast<std::size_t>(instance.k) + 1;
    RationalPolynomial base = bernoulli_polynomial(q);
    RationalPolynomial scaled =
        base.compose_affine(Rat(instance.ell), Rat(1)) - base.compose_affine(Rat(1), Rat(1));
    RationalPolynomial sum = scaled * make_rat(1, instance.k + 1);
    return PowerSumPolynomial{instance, std::move(sum), std::move(scaled)};
}

Int evaluate_sum(const PowerSumPolynomial& polynomial, const Int& x) {
    Rat value = polynomial.sum(x);
    if (value.get_den() != 1) {
        throw invariant_violation("sum polynomial evaluated to a non-integer at x = " +
                                  to_string(x));
    }
    return value.get_num();
}

TopCoefficients top_coefficients(const ProblemInstance& instance) {
    validate(instance);
    if (instance.k < 2) throw std::domain_error("top_coefficients: k must be >= 2");
    unsigned long k = static_cast<unsigned long>(instance.k);
    Int ell(instance.ell);

    TopCoefficients expected;
    expected.degree_kp1 = Rat(pow_int(ell, k + 1) - 1);
    expected.degree_k = Rat(instance.k + 1) * Rat(pow_int(ell, k) - 1) / Rat(2);
    expected.degree_km1 =
        Rat(instance.k + 1) * Rat(instance.k) * Rat(pow_int(ell, k - 1) - 1) / Rat(12);

    PowerSumPolynomial polynomial = build(instance);
    const RationalPolynomial& h = polynomial.scaled;
    if (h.coefficient(k + 1) != expected.degree_kp1 || h.coefficient(k) != expected.degree_k ||
        h.coefficient(k - 1) != expected.degree_km1) {
        throw invariant_violation("top coefficient formulas disagree with built polynomial for k=" +
                                  std::to_string(instance.k) + " l=" +
                                  std::to_string(instance.ell));
    }
    return expected;
}

Rat degree1_coefficient(const ProblemInstance& instance) {
    validate(instance);
    if (instance.k % 2 != 0) {
        throw std::domain_error("degree1_coefficient: k must be even");
    }
    Rat expected = Rat(instance.k + 1) * Rat(instance.ell - 1) *
                   bernoulli_number(static_cast<std::size_t>(instance.k));
    PowerSumPolynomial polynomial = build(instance);
    if (polynomial.scaled.coefficient(1) != expected || expected == 0) {
        throw invariant_violation("degree-1 coefficient formula disagrees for k=" +
                                  std::to_string(instance.k) + " l=" +
                                  std::to_string(instance.ell));
    }
    return expected;
}

Rat degree2_coefficient(const ProblemInstance& instance) {
    validate(instance);
    if (instance.k % 2 == 0 || instance.k < 3) {
        throw std::domain_error("degree2_coefficient: k must be odd and >= 3");
    }
    Rat expected = Rat(binomial(static_cast<unsigned long>(instance.k) + 1, 2)) *
                   Rat(Int(instance.ell) * Int(instance.ell) - 1) *
                   bernoulli_number(static_cast<std::size_t>(instance.k) - 1);
    PowerSumPolynomial polynomial = build(instance);
    if (polynomial.scaled.coefficient(2) != expected || expected == 0) {
        throw invariant_violation("degree-2 coefficient formula disagrees for k=" +
                                  std::to_string(instance.k) + " l=" +
                                  std::to_string(instance.ell));
    }
    return expected;
}

Int direct_sum(const ProblemInstance& instance, const Int& x) {
    validate(instance);
    if (x < 1) throw std::domain_error("direct_sum: x must be >= 1");
    Int total = 0;
    Int upper = Int(instance.ell) * x;
    Int term;
    for (Int j = x + 1; j <= upper; ++j) {
        mpz_pow_ui(term.get_mpz_t(), j.get_mpz_t(), static_cast<unsigned long>(instance.k));
        total += term;
    }
    return total;
}

}  // namespace psums
