#ifndef PSUMS_CLASSIFIER_HPP
#define PSUMS_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "psums/exactnum.hpp"
#include "psums/rootstructure.hpp"

namespace psums {

// t_i = n / gcd(n, r_i), one value per distinct root. Kept in the same
// order as the profile's multiplicities (descending r_i); all pattern
// logic is permutation-invariant.
struct TValues {
    std::vector<long> values;
};

TValues t_values(const MultiplicityProfile& profile, long n);

// The two t-value shapes under which the superelliptic finiteness theorem
// gives no bound:
//   SingleNonUnit  {t,1,...,1} with t >= 1 -- at most one entry differs
//                  from 1 (the all-ones tuple counts, with t = 1);
//   TwoTwos        {2,2,1,...,1} -- exactly two entries equal 2, rest 1.
enum class ForbiddenPattern { SingleNonUnit, TwoTwos };

struct PatternVerdict {
    bool forbidden = false;
    std::optional<ForbiddenPattern> pattern;
    std::optional<long> single_t;  // the t of SingleNonUnit
};

PatternVerdict pattern_check(const TValues& ts);

// What the exponent-bounding theorems say about a polynomial with this
// root profile: >= 2 distinct roots bounds n; >= 3 simple roots leaves
// finitely many solutions for every n > 1; exactly 2 simple roots leaves
// finitely many for n > 2.
enum class SchinzelTijdemanStatus {
    BoundedN,
    FinitelyManyAboveN1,
    FinitelyManyAboveN2,
    NotApplicable,
};

SchinzelTijdemanStatus schinzel_tijdeman_status(const MultiplicityProfile& profile);

// Position in the classifier's case tree, split on the parity of k and a
// divisibility condition on n:
//   Case1i     k even, n does not divide k
//   Case1ii    k even, n divides k
//   Case2i     k odd,  n divides k-1
//   Case2ii_*  k odd,  n does not divide k-1 (n = 3, n = 4, n > 4)
enum class ProofCase { Case1i, Case1ii, Case2i, Case2ii_n3, Case2ii_n4, Case2ii_nBig };

std::string to_string(ProofCase c);

// A 2-adic obstruction witness. If every nonzero root of the scaled
// polynomial had multiplicity divisible by n, the product of its roots
// would force a rational whose n-th power equals `target`; v2(target) = -1
// (2 divides the denominator exactly once) makes that impossible for any
// n >= 2.
struct ObstructionReport {
    Rat target;
    long v2 = 0;
    bool obstructed = false;
    ProofCase detail = ProofCase::Case1ii;
};

// target = (k+1)(l-1) B_k / (l^(k+1)-1). Requires k even >= 2. Also checks
// v2(l^(k+1)-1) == v2(l-1) and, when obstructed, that target has no exact
// n-th root; failures raise invariant_violation.
ObstructionReport obstruction_case1(const ProblemInstance& instance, long n);

// z = l^(k-1) + l^(k-3) + ... + l^2 + 1 (so that (l^2-1) z = l^(k+1)-1),
// e = v2((k+1)/2), and the congruence z == (k+1)/2 (mod 2^(e+1)), which
// pins v2(z) = e. Requires k, l odd and >= 3.
struct ZValueResult {
    Int z;
    long e = 0;
    bool congruence_ok = false;
};

ZValueResult z_value(long k, long ell);

// target = C(k+1,2) (l^2-1) / (l^(k+1)-1) * B_{k-1}. Requires k odd >= 3
// and l odd >= 3 (even l is delegated before reaching this computation).
// v2(target) = -1 is cross-checked through the z-value route.
ObstructionReport obstruction_case2(const ProblemInstance& instance, long n);

enum class Verdict { FiniteByBrindza, ExcludedK, DelegatedEvenL, Unresolved };

std::string to_string(Verdict v);

// Outcome of classifying one (k, l, n): the verdict, the position in the
// case tree, and the computed witnesses backing the verdict.
struct ClassificationReport {
    ProblemInstance instance;
    long n = 0;
    Verdict verdict = Verdict::Unresolved;
    std::optional<ProofCase> proof_case;
    std::optional<MultiplicityProfile> profile;
    std::optional<TValues> ts;
    std::optional<PatternVerdict> pattern;
    std::optional<ObstructionReport> obstruction;
};

// Ground truth first: computes the actual multiplicity profile and checks
// the t-pattern directly; the case-specific 2-adic arguments are layered on
// top as witnesses, and decide the verdict only when the pattern is
// actually forbidden. k = 1 and k = 3 are excluded up front (both have
// infinite solution families).
ClassificationReport classify(const ProblemInstance& instance, long n);

// Same reports as calling classify for each n in [n_lo, n_hi], computing
// the profile once.
std::vector<ClassificationReport> classify_range(const ProblemInstance& instance, long n_lo,
                                                 long n_hi);

}  // namespace psums

#endif
