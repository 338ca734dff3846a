#include "psums/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "psums/bernoulli.hpp"
#include "psums/classifier.hpp"
#include "psums/powersum.hpp"
#include "psums/rootstructure.hpp"
#include "psums/search.hpp"

namespace psums {

namespace {

bool is_squarefree(Int n) {
    if (n < 1) return false;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

std::string spot(long k, long ell) {
    return "k=" + std::to_string(k) + " l=" + std::to_string(ell);
}

std::string spot(long k, long ell, long n) {
    return spot(k, ell) + " n=" + std::to_string(n);
}

using Check = bool (*)(const VerifyOptions&, std::string&);

bool check_convention(const VerifyOptions&, std::string& counterexample) {
    if (bernoulli_number(1) != make_rat(-1, 2)) {
        counterexample = "B_1 = " + to_string(bernoulli_number(1));
        return false;
    }
    if (bernoulli_number(2) != make_rat(1, 6)) {
        counterexample = "B_2 = " + to_string(bernoulli_number(2));
        return false;
    }
    return true;
}

bool check_vsc(const VerifyOptions& options, std::string& counterexample) {
    for (long k = 2; k <= std::max(options.kmax, 2L); k += 2) {
        Rat b = bernoulli_number(static_cast<std::size_t>(k));
        if (b.get_den() != vsc_denominator(k) || !is_squarefree(b.get_den()) ||
            vp(b, 2) != -1) {
            counterexample = "k=" + std::to_string(k) + " B_k=" + to_string(b);
            return false;
        }
    }
    return true;
}

bool check_identity(const VerifyOptions& options, std::string& counterexample) {
    for (long k = 2; k <= std::max(options.kmax, 2L); ++k) {
        if (!check_binom_bernoulli_identity(k)) {
            counterexample = "k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool check_poly_at_zero(const VerifyOptions& options, std::string& counterexample) {
    long qmax = std::min(std::max(options.kmax, 2L) + 1, 30L);
    for (long q = 0; q <= qmax; ++q) {
        std::size_t i = static_cast<std::size_t>(q);
        if (bernoulli_polynomial(i)(Rat(0)) != bernoulli_number(i)) {
            counterexample = "q=" + std::to_string(q);
            return false;
        }
    }
    return true;
}

bool check_oracle_equivalence(const VerifyOptions& options, std::string& counterexample) {
    for (long k = 1; k <= options.kmax; ++k) {
        for (long ell = 2; ell <= options.lmax; ++ell) {
            if (!cross_check_polynomial({k, ell}, Int(10))) {
                counterexample = spot(k, ell);
                return false;
            }
        }
    }
    return true;
}

bool check_coefficients(const VerifyOptions& options, std::string& counterexample) {
    // The coefficient accessors throw on any disagreement with the built
    // polynomial, so calling them is the check.
    for (long k = 2; k <= options.kmax; ++k) {
        for (long ell = 2; ell <= options.lmax; ++ell) {
            try {
                top_coefficients({k, ell});
                if (k % 2 == 0) degree1_coefficient({k, ell});
                if (k % 2 == 1 && k >= 3) degree2_coefficient({k, ell});
            } catch (const std::exception& e) {
                counterexample = spot(k, ell) + ": " + e.what();
                return false;
            }
        }
    }
    return true;
}

bool check_roots(const VerifyOptions& options, std::string& counterexample) {
    for (long k = 2; k <= options.kmax; ++k) {
        for (long ell = 2; ell <= options.lmax; ++ell) {
            MultiplicityProfile profile = multiplicity_profile({k, ell});
            long total = 0;
            for (long r : profile.multiplicities) total += r;
            long expected_zero = k % 2 == 0 ? 1 : 2;
            if (profile.distinct_count < 3 || total != k + 1 ||
                profile.zero_multiplicity != expected_zero) {
                counterexample = spot(k, ell);
                return false;
            }
        }
    }
    return true;
}

bool check_two_root_exclusion(const VerifyOptions& options, std::string& counterexample) {
    for (long k = 2; k <= options.kmax; ++k) {
        for (long ell = 2; ell <= options.lmax; ++ell) {
            TwoRootCheck check = two_root_hypothetical({k, ell});
            if (!check.interval_ok || !check.inequality_ok) {
                counterexample = spot(k, ell) + " r=" +
                                 to_string(check.hypothetical_multiplicity);
                return false;
            }
        }
    }
    if (!contradiction_identities(std::max(options.lmax, 100L))) {
        counterexample = "degenerate identity below l=" +
                         std::to_string(std::max(options.lmax, 100L));
        return false;
    }
    return true;
}

bool check_z_congruence(const VerifyOptions& options, std::string& counterexample) {
    for (long k = 3; k <= options.kmax; k += 2) {
        for (long ell = 3; ell <= options.lmax; ell += 2) {
            ZValueResult z = z_value(k, ell);
            if (!z.congruence_ok || vp(z.z, 2) != z.e) {
                counterexample = spot(k, ell) + " z=" + to_string(z.z);
                return false;
            }
        }
    }
    return true;
}

bool check_obstruction_case1(const VerifyOptions& options, std::string& counterexample) {
    long n_hi = std::min(options.nmax, 10L);
    for (long k = 2; k <= options.kmax; k += 2) {
        for (long ell = 2; ell <= options.lmax; ++ell) {
            for (long n = 2; n <= n_hi; ++n) {
                ObstructionReport report = obstruction_case1({k, ell}, n);
                if (!report.obstructed || report.v2 != -1) {
                    counterexample = spot(k, ell, n) + " target=" + to_string(report.target);
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_obstruction_case2(const VerifyOptions& options, std::string& counterexample) {
    long n_hi = std::min(options.nmax, 10L);
    for (long k = 3; k <= options.kmax; k += 2) {
        for (long ell = 3; ell <= options.lmax; ell += 2) {
            for (long n = 2; n <= n_hi; ++n) {
                ObstructionReport report = obstruction_case2({k, ell}, n);
                if (!report.obstructed || report.v2 != -1) {
                    counterexample = spot(k, ell, n) + " target=" + to_string(report.target);
                    return false;
                }
            }
        }
    }
    return true;
}

bool check_classifier(const VerifyOptions& options, std::string& counterexample) {
    for (long k = 2; k <= options.kmax; ++k) {
        if (k == 3) continue;
        for (long ell = 2; ell <= options.lmax; ++ell) {
            for (const ClassificationReport& report :
                 classify_range({k, ell}, 2, options.nmax)) {
                if (report.verdict != Verdict::FiniteByBrindza) {
                    counterexample = spot(k, ell, report.n) + " verdict=" +
                                     to_string(report.verdict);
                    return false;
                }
            }
        }
    }
    return true;
}

struct NamedCheck {
    const char* name;
    Check run;
};

constexpr NamedCheck kChecks[] = {
    {"bernoulli-convention", check_convention},
    {"bernoulli-vsc-denominator", check_vsc},
    {"bernoulli-binom-identity", check_identity},
    {"bernoulli-poly-at-zero", check_poly_at_zero},
    {"oracle-equivalence", check_oracle_equivalence},
    {"coefficient-formulas", check_coefficients},
    {"three-distinct-roots", check_roots},
    {"two-root-exclusion", check_two_root_exclusion},
    {"z-congruence", check_z_congruence},
    {"obstruction-case1", check_obstruction_case1},
    {"obstruction-case2", check_obstruction_case2},
    {"classifier-coverage", check_classifier},
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    if (options.kmax < 2 || options.lmax < 2 || options.nmax < 2) {
        throw std::domain_error("verify: kmax, lmax and nmax must all be >= 2");
    }
    std::vector<CheckResult> results;
    results.reserve(std::size(kChecks));
    for (const NamedCheck& check : kChecks) {
        CheckResult result;
        result.name = check.name;
        result.passed = check.run(options, result.counterexample);
        results.push_back(std::move(result));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace psums
