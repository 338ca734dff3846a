#ifndef PSUMS_SEARCH_HPP
#define PSUMS_SEARCH_HPP

#include <optional>
#include <vector>

#include "psums/powersum.hpp"

namespace psums {

// A solution of (x+1)^k + ... + (l*x)^k = y^n inside the search box.
struct SolutionTriple {
    Int x;
    Int y;
    long n;

    bool operator==(const SolutionTriple&) const = default;
};

// Every (x, y, n) with 1 <= x <= x_max, n >= 2 (and n <= n_max if given)
// satisfying the equation, sorted by (x, n). Each perfect-power exponent is
// reported separately. The exponent loop is bounded by floor(log2 N) since
// y >= 2 there; N = 1 (only possible for y = 1) cannot occur in this range
// and is rejected as an invariant violation.
std::vector<SolutionTriple> find_solutions(const ProblemInstance& instance, const Int& x_max,
                                           std::optional<long> n_max = std::nullopt);

// Same, restricted to x in [x_lo, x_hi]. Concatenating adjacent ranges
// yields exactly the full output, so sweeps can be partitioned freely.
std::vector<SolutionTriple> find_solutions_in_range(const ProblemInstance& instance,
                                                    const Int& x_lo, const Int& x_hi,
                                                    std::optional<long> n_max = std::nullopt);

// True iff the sum polynomial agrees with literal summation for every
// x in 1..x_max.
bool cross_check_polynomial(const ProblemInstance& instance, const Int& x_max);

}  // namespace psums

#endif
