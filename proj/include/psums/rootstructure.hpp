#ifndef PSUMS_ROOTSTRUCTURE_HPP
#define PSUMS_ROOTSTRUCTURE_HPP

#include <vector>

#include "psums/polynomial.hpp"
#include "psums/powersum.hpp"

namespace psums {

struct SquarefreeFactor {
    RationalPolynomial factor;  // monic, squarefree
    long multiplicity;
};

// Yun decomposition: p = leading(p) * prod factor_i^multiplicity_i with the
// factors monic, squarefree and pairwise coprime. Exact arithmetic only; the
// gcd chains run over integer-cleared polynomials. Factors are returned in
// increasing multiplicity order; constant p yields an empty list.
// Throws std::domain_error for the zero polynomial.
std::vector<SquarefreeFactor> squarefree_decomposition(const RationalPolynomial& p);

// Root multiplicities of the scaled power-sum polynomial over C, read off
// the squarefree factor degrees; no numerical root finding is involved.
struct MultiplicityProfile {
    std::vector<long> multiplicities;  // one entry per distinct root, descending
    long distinct_count;               // number of distinct complex roots
    long zero_multiplicity;            // multiplicity of the root 0
};

// Requires k >= 2.
MultiplicityProfile multiplicity_profile(const ProblemInstance& instance);

bool has_three_distinct_roots(const ProblemInstance& instance);

// Consequences of assuming the scaled polynomial had only two distinct
// roots, zero of multiplicity r among them. Matching its three leading
// coefficients against lc * x^r (x + a)^(k+1-r) forces, with
// A = l^(k-1)-1, B = l^(k+1)-1, C = (l^k-1)^2,
//   r = k * (1 - 2AB / (3(k+1)C - 2kAB)),
// and C > AB pins r strictly between k-2 and k, while the zero root only
// ever has multiplicity 1 or 2; the leftover candidates are killed by the
// identities in contradiction_identities below.
struct TwoRootCheck {
    Rat hypothetical_multiplicity;  // the forced r
    bool interval_ok;               // k-2 < r < k
    bool inequality_ok;             // (l^k-1)^2 > (l^(k-1)-1)(l^(k+1)-1)
};

// Throws degenerate_expression if the formula's denominator vanishes
// (not expected for k >= 2, l >= 2).
TwoRootCheck two_root_hypothetical(const ProblemInstance& instance);

// The two identities whose failure finishes the two-root exclusion for
// r = 1 (k = 2) and r = 2 (k = 3): verifies for all l in 2..l_max that
// 8(l^2+l+1) != 9(l+1)^2 and (l+1)(l^2+1) != (l^2+l+1)^2.
bool contradiction_identities(long ell_max);

}  // namespace psums

#endif
