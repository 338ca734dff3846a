#include "psums/bernoulli.hpp"

#include <stdexcept>

namespace psums {

Rat BernoulliTable::at(std::size_t i) const {
    std::lock_guard<std::mutex> lock(mutex_);
    extend_locked(i);
    return values_[i];
}

std::size_t BernoulliTable::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return values_.size();
}

void BernoulliTable::extend_locked(std::size_t i) const {
    if (values_.empty()) values_.emplace_back(1);
    while (values_.size() <= i) {
        std::size_t m = values_.size();
        // C(m+1, m) B_m = -sum_{j=0}^{m-1} C(m+1, j) B_j
        Rat sum(0);
        for (std::size_t j = 0; j < m; ++j) {
            sum += Rat(binomial(m + 1, j)) * values_[j];
        }
        values_.push_back(-sum / Rat(static_cast<long>(m) + 1));
    }
}

BernoulliTable& BernoulliTable::shared() {
    static BernoulliTable table;
    return table;
}

Rat bernoulli_number(std::size_t i) { return BernoulliTable::shared().at(i); }

RationalPolynomial bernoulli_polynomial(std::size_t q) {
    std::vector<Rat> coeffs(q + 1, Rat(0));
    for (std::size_t i = 0; i <= q; ++i) {
        coeffs[q - i] = Rat(binomial(q, i)) * bernoulli_number(i);
    }
    return RationalPolynomial(std::move(coeffs));
}

Int vsc_denominator(long k) {
    if (k < 2 || k % 2 != 0) {
        throw std::domain_error("vsc_denominator: index must be even and >= 2");
    }
    Int product = 1;
    for (long d = 1; d <= k; ++d) {
        if (k % d == 0 && is_prime(Int(d + 1))) product *= d + 1;
    }
    return product;
}

bool check_binom_bernoulli_identity(long k) {
    if (k < 2) throw std::domain_error("check_binom_bernoulli_identity: k must be >= 2");
    Rat sum(0);
    for (long i = 0; i < k; ++i) {
        sum += Rat(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i))) *
               bernoulli_number(static_cast<std::size_t>(i));
    }
    return sum == 0;
}

}  // namespace psums
