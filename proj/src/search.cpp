#include "psums/search.hpp"

#include <stdexcept>

#include "psums/errors.hpp"

namespace psums {

std::vector<SolutionTriple> find_solutions_in_range(const ProblemInstance& instance,
                                                    const Int& x_lo, const Int& x_hi,
                                                    std::optional<long> n_max) {
    validate(instance);
    if (x_lo < 1) throw std::domain_error("find_solutions: x must start at 1 or above");
    if (n_max && *n_max < 2) throw std::domain_error("find_solutions: n_max must be >= 2");

    std::vector<SolutionTriple> solutions;
    for (Int x = x_lo; x <= x_hi; ++x) {
        Int value = direct_sum(instance, x);
        if (value < 2) {
            // Would require y = 1, impossible for x >= 1, l >= 2.
            throw invariant_violation("sum below 2 at x = " + to_string(value));
        }
        // y >= 2 forces n <= floor(log2 N) = bit length - 1.
        long n_hi = static_cast<long>(mpz_sizeinbase(value.get_mpz_t(), 2)) - 1;
        if (n_max && *n_max < n_hi) n_hi = *n_max;
        for (long n = 2; n <= n_hi; ++n) {
            NthRootResult root = integer_nth_root(value, n);
            if (root.exact) solutions.push_back({x, root.root, n});
        }
    }
    return solutions;
}

std::vector<SolutionTriple> find_solutions(const ProblemInstance& instance, const Int& x_max,
                                           std::optional<long> n_max) {
    if (x_max < 1) throw std::domain_error("find_solutions: x_max must be >= 1");
    return find_solutions_in_range(instance, Int(1), x_max, n_max);
}

bool cross_check_polynomial(const ProblemInstance& instance, const Int& x_max) {
    validate(instance);
    if (x_max < 1) throw std::domain_error("cross_check_polynomial: x_max must be >= 1");
    PowerSumPolynomial polynomial = build(instance);
    for (Int x = 1; x <= x_max; ++x) {
        if (evaluate_sum(polynomial, x) != direct_sum(instance, x)) return false;
    }
    return true;
}

}  // namespace psums
