#ifndef PSUMS_BERNOULLI_HPP
#define PSUMS_BERNOULLI_HPP

#include <cstddef>
#include <mutex>
#include <vector>

#include "psums/exactnum.hpp"
#include "psums/polynomial.hpp"

namespace psums {

// Memoized table of Bernoulli numbers under the B_1 = -1/2 convention,
// computed by the defining recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
// Requesting index i extends the table up to i. Extension is serialized;
// readers always observe values identical to uncached computation.
class BernoulliTable {
public:
    Rat at(std::size_t i) const;
    std::size_t size() const;

    // Process-wide table shared by the free functions below.
    static BernoulliTable& shared();

private:
    mutable std::mutex mutex_;
    mutable std::vector<Rat> values_;

    void extend_locked(std::size_t i) const;
};

// B_i from the shared table.
Rat bernoulli_number(std::size_t i);

// The degree-q Bernoulli polynomial: coefficient of x^(q-i) is C(q, i) B_i.
// Monic of degree exactly q.
RationalPolynomial bernoulli_polynomial(std::size_t q);

// Product of the primes p with (p-1) | k; by the von Staudt-Clausen theorem
// this equals the denominator of B_k in lowest terms for even k. Independent
// of the recurrence, so the two paths cross-check each other.
// Throws std::domain_error unless k is even and >= 2.
Int vsc_denominator(long k);

// Whether sum_{i=0}^{k-1} C(k, i) B_i == 0 holds exactly. True for every
// k >= 2; exposed as a self-test.
bool check_binom_bernoulli_identity(long k);

}  // namespace psums

#endif
