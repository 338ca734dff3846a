#include "psums/exactnum.hpp"

#include <stdexcept>

namespace psums {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Int& n) { return n.get_str(); }

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

long vp(const Int& n, const Int& p) {
    if (n == 0) throw std::domain_error("vp: valuation of zero is undefined");
    if (!is_prime(p)) throw std::domain_error("vp: " + to_string(p) + " is not prime");
    Int reduced;
    mp_bitcnt_t count = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return static_cast<long>(count);
}

long vp(const Rat& q, const Int& p) {
    if (q == 0) throw std::domain_error("vp: valuation of zero is undefined");
    if (!is_prime(p)) throw std::domain_error("vp: " + to_string(p) + " is not prime");
    Int scratch;
    long num = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t()));
    long den = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()));
    return num - den;
}

Valuation valuation_of(const Rat& q, const Int& p) { return Valuation{p, vp(q, p)}; }

NthRootResult integer_nth_root(const Int& value, long n) {
    if (n < 2) throw std::domain_error("integer_nth_root: exponent must be >= 2");
    if (value < 0) throw std::domain_error("integer_nth_root: negative radicand");
    NthRootResult result;
    int exact = mpz_root(result.root.get_mpz_t(), value.get_mpz_t(),
                         static_cast<unsigned long>(n));
    result.exact = exact != 0;
    return result;
}

std::optional<Rat> rational_nth_power_root(const Rat& q, long n) {
    if (n < 2) throw std::domain_error("rational_nth_power_root: exponent must be >= 2");
    if (q == 0) return Rat(0);
    if (q < 0 && n % 2 == 0) return std::nullopt;

    Int num_abs = abs(q.get_num());
    NthRootResult num_root = integer_nth_root(num_abs, n);
    if (!num_root.exact) return std::nullopt;
    NthRootResult den_root = integer_nth_root(q.get_den(), n);
    if (!den_root.exact) return std::nullopt;

    Int num = q < 0 ? Int(-num_root.root) : num_root.root;
    return make_rat(num, den_root.root);
}

Int binomial(unsigned long n, unsigned long k) {
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

Rat pow_rat(const Rat& base, unsigned long exp) {
    Rat result;
    mpz_pow_ui(result.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(result.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exp);
    // powers of a canonical rational are canonical
    return result;
}

}  // namespace psums
