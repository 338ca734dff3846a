#ifndef PSUMS_EXACTNUM_HPP
#define PSUMS_EXACTNUM_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace psums {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in canonical form:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1. GMP maintains the canonical
// form through arithmetic; make_rat canonicalizes raw num/den pairs.
using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

// "num/den", or just "num" when the denominator is 1. Never decimals.
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

// Deterministic trial division up to the square root.
bool is_prime(const Int& n);

// p-adic valuation of a prime p in a nonzero rational: the unique v with
// q = p^v * (u/w), p dividing neither u nor w. Negative when p divides the
// denominator. Throws std::domain_error for q = 0 or p not prime.
long vp(const Rat& q, const Int& p);
long vp(const Int& n, const Int& p);

struct Valuation {
    Int prime;
    long value;
};

Valuation valuation_of(const Rat& q, const Int& p);

struct NthRootResult {
    Int root;    // floor(value^(1/n))
    bool exact;  // root^n == value
};

// Requires value >= 0 and n >= 2.
NthRootResult integer_nth_root(const Int& value, long n);

// Exact rational n-th root, if one exists: r with r^n == q. For q in lowest
// terms it exists iff |num| and den are both perfect n-th powers and
// (q >= 0 or n is odd). Requires n >= 2.
std::optional<Rat> rational_nth_power_root(const Rat& q, long n);

Int binomial(unsigned long n, unsigned long k);
Int pow_int(const Int& base, unsigned long exp);
Rat pow_rat(const Rat& base, unsigned long exp);

}  // namespace psums

#endif
