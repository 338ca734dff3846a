#include "psums/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "psums/bernoulli.hpp"
#include "psums/errors.hpp"

namespace psums {

TValues t_values(const MultiplicityProfile& profile, long n) {
    if (n < 2) throw std::domain_error("t_values: n must be >= 2");
    if (profile.multiplicities.empty()) throw std::domain_error("t_values: empty profile");
    TValues ts;
    ts.values.reserve(profile.multiplicities.size());
    for (long r : profile.multiplicities) ts.values.push_back(n / std::gcd(n, r));
    return ts;
}

PatternVerdict pattern_check(const TValues& ts) {
    if (ts.values.empty()) throw std::domain_error("pattern_check: empty t-values");
    long non_units = 0;
    long twos = 0;
    long single = 1;
    for (long t : ts.values) {
        if (t != 1) {
            ++non_units;
            single = t;
        }
        if (t == 2) ++twos;
    }
    PatternVerdict verdict;
    if (non_units <= 1) {
        verdict.forbidden = true;
        verdict.pattern = ForbiddenPattern::SingleNonUnit;
        verdict.single_t = single;  // 1 for the all-ones tuple
    } else if (non_units == 2 && twos == 2) {
        verdict.forbidden = true;
        verdict.pattern = ForbiddenPattern::TwoTwos;
    }
    return verdict;
}

SchinzelTijdemanStatus schinzel_tijdeman_status(const MultiplicityProfile& profile) {
    if (profile.distinct_count < 2) return SchinzelTijdemanStatus::NotApplicable;
    long simple = static_cast<long>(std::count(profile.multiplicities.begin(),
                                               profile.multiplicities.end(), 1L));
    if (simple >= 3) return SchinzelTijdemanStatus::FinitelyManyAboveN1;
    if (simple == 2) return SchinzelTijdemanStatus::FinitelyManyAboveN2;
    return SchinzelTijdemanStatus::BoundedN;
}

std::string to_string(ProofCase c) {
    switch (c) {
        case ProofCase::Case1i: return "Case1i";
        case ProofCase::Case1ii: return "Case1ii";
        case ProofCase::Case2i: return "Case2i";
        case ProofCase::Case2ii_n3: return "Case2ii_n3";
        case ProofCase::Case2ii_n4: return "Case2ii_n4";
        case ProofCase::Case2ii_nBig: return "Case2ii_nBig";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::FiniteByBrindza: return "FiniteByBrindza";
        case Verdict::ExcludedK: return "ExcludedK";
        case Verdict::DelegatedEvenL: return "DelegatedEvenL";
        case Verdict::Unresolved: return "Unresolved";
    }
    return "?";
}

namespace {

ProofCase case_position(long k, long n) {
    if (k % 2 == 0) return k % n == 0 ? ProofCase::Case1ii : ProofCase::Case1i;
    if ((k - 1) % n == 0) return ProofCase::Case2i;
    if (n == 3) return ProofCase::Case2ii_n3;
    if (n == 4) return ProofCase::Case2ii_n4;
    return ProofCase::Case2ii_nBig;
}

void assert_no_nth_root(const ObstructionReport& report, long n) {
    if (report.obstructed && rational_nth_power_root(report.target, n).has_value()) {
        throw invariant_violation("obstruction target " + to_string(report.target) +
                                  " unexpectedly has an exact root of index " +
                                  std::to_string(n));
    }
}

}  // namespace

ObstructionReport obstruction_case1(const ProblemInstance& instance, long n) {
    validate(instance);
    if (instance.k < 2 || instance.k % 2 != 0) {
        throw std::domain_error("obstruction_case1: k must be even and >= 2");
    }
    if (n < 2) throw std::domain_error("obstruction_case1: n must be >= 2");

    Int ell(instance.ell);
    Int denominator = pow_int(ell, static_cast<unsigned long>(instance.k) + 1) - 1;
    if (vp(denominator, 2) != vp(Int(instance.ell - 1), 2)) {
        throw invariant_violation("v2(l^(k+1)-1) != v2(l-1) at k=" + std::to_string(instance.k) +
                                  " l=" + std::to_string(instance.ell));
    }

    ObstructionReport report;
    report.target = Rat(instance.k + 1) * Rat(instance.ell - 1) *
                    bernoulli_number(static_cast<std::size_t>(instance.k)) / Rat(denominator);
    report.v2 = vp(report.target, 2);
    report.obstructed = report.v2 == -1;
    report.detail = ProofCase::Case1ii;
    assert_no_nth_root(report, n);
    return report;
}

ZValueResult z_value(long k, long ell) {
    if (k < 3 || k % 2 == 0) throw std::domain_error("z_value: k must be odd and >= 3");
    if (ell < 3 || ell % 2 == 0) throw std::domain_error("z_value: l must be odd and >= 3");

    ZValueResult result;
    result.z = 0;
    Int l(ell);
    for (long i = 0; i <= (k - 1) / 2; ++i) {
        result.z += pow_int(l, static_cast<unsigned long>(2 * i));
    }

    Int half = Int(k + 1) / 2;
    result.e = vp(half, 2);
    Int modulus = pow_int(Int(2), static_cast<unsigned long>(result.e) + 1);
    result.congruence_ok =
        mpz_congruent_p(result.z.get_mpz_t(), half.get_mpz_t(), modulus.get_mpz_t()) != 0;
    return result;
}

ObstructionReport obstruction_case2(const ProblemInstance& instance, long n) {
    validate(instance);
    if (instance.k < 3 || instance.k % 2 == 0) {
        throw std::domain_error("obstruction_case2: k must be odd and >= 3");
    }
    if (instance.ell % 2 == 0) {
        throw std::domain_error("obstruction_case2: l must be odd (even l is delegated)");
    }
    if (n < 2) throw std::domain_error("obstruction_case2: n must be >= 2");

    Int ell(instance.ell);
    Int denominator = pow_int(ell, static_cast<unsigned long>(instance.k) + 1) - 1;
    ObstructionReport report;
    report.target = Rat(binomial(static_cast<unsigned long>(instance.k) + 1, 2)) *
                    make_rat(ell * ell - 1, denominator) *
                    bernoulli_number(static_cast<std::size_t>(instance.k) - 1);
    report.v2 = vp(report.target, 2);
    report.obstructed = report.v2 == -1;
    report.detail =
        (instance.k - 1) % n == 0 ? ProofCase::Case2i : ProofCase::Case2ii_n4;

    // Cross-check through the z route: v2(target) = v2(C(k+1,2)) - v2(z) - 1
    // and the congruence pins v2(z) = e = v2((k+1)/2).
    ZValueResult z = z_value(instance.k, instance.ell);
    long v2_binom = vp(Rat(binomial(static_cast<unsigned long>(instance.k) + 1, 2)), 2);
    long v2_bk1 = vp(bernoulli_number(static_cast<std::size_t>(instance.k) - 1), 2);
    if (!z.congruence_ok || vp(z.z, 2) != z.e ||
        report.v2 != v2_binom - z.e + v2_bk1) {
        throw invariant_violation("z-value route disagrees with direct v2 at k=" +
                                  std::to_string(instance.k) + " l=" +
                                  std::to_string(instance.ell));
    }
    assert_no_nth_root(report, n);
    return report;
}

namespace {

ClassificationReport classify_with_profile(const ProblemInstance& instance,
                                           const std::optional<MultiplicityProfile>& profile,
                                           long n) {
    ClassificationReport report;
    report.instance = instance;
    report.n = n;

    if (instance.k == 1 || instance.k == 3) {
        report.verdict = Verdict::ExcludedK;
        if (profile) {
            report.profile = profile;
            report.ts = t_values(*profile, n);
            report.pattern = pattern_check(*report.ts);
        }
        return report;
    }

    report.profile = profile;
    report.ts = t_values(*profile, n);
    report.pattern = pattern_check(*report.ts);
    report.proof_case = case_position(instance.k, n);

    const bool even_k = instance.k % 2 == 0;
    const bool odd_ell = instance.ell % 2 != 0;
    const bool uses_case1_obstruction = report.proof_case == ProofCase::Case1ii;
    const bool uses_case2_obstruction = (report.proof_case == ProofCase::Case2i ||
                                         report.proof_case == ProofCase::Case2ii_n4);

    if (!report.pattern->forbidden) {
        report.verdict = Verdict::FiniteByBrindza;
        // Attach the 2-adic witness on the branches whose argument rests
        // on it, even though the computed pattern already settles things.
        if (uses_case1_obstruction) {
            report.obstruction = obstruction_case1(instance, n);
        } else if (uses_case2_obstruction && odd_ell) {
            report.obstruction = obstruction_case2(instance, n);
        }
        return report;
    }

    // The computed t-pattern is forbidden: the verdict now depends on the
    // 2-adic obstruction ruling the pattern's root configuration out.
    if (even_k) {
        report.obstruction = obstruction_case1(instance, n);
    } else if (odd_ell) {
        report.obstruction = obstruction_case2(instance, n);
    } else {
        report.verdict = Verdict::DelegatedEvenL;
        return report;
    }
    report.verdict =
        report.obstruction->obstructed ? Verdict::FiniteByBrindza : Verdict::Unresolved;
    return report;
}

}  // namespace

ClassificationReport classify(const ProblemInstance& instance, long n) {
    validate(instance);
    if (n < 2) throw std::domain_error("classify: n must be >= 2");
    std::optional<MultiplicityProfile> profile;
    if (instance.k >= 2) profile = multiplicity_profile(instance);
    return classify_with_profile(instance, profile, n);
}

std::vector<ClassificationReport> classify_range(const ProblemInstance& instance, long n_lo,
                                                 long n_hi) {
    validate(instance);
    if (n_lo < 2) throw std::domain_error("classify_range: n must start at 2 or above");
    std::optional<MultiplicityProfile> profile;
    if (instance.k >= 2) profile = multiplicity_profile(instance);
    std::vector<ClassificationReport> reports;
    for (long n = n_lo; n <= n_hi; ++n) {
        reports.push_back(classify_with_profile(instance, profile, n));
    }
    return reports;
}

}  // namespace psums
