#ifndef PSUMS_POLYNOMIAL_HPP
#define PSUMS_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "psums/exactnum.hpp"

namespace psums {

// Dense univariate polynomial over the rationals. Coefficient index equals
// the degree of the monomial. The highest-index coefficient is nonzero
// unless the polynomial is zero, which is stored as an empty vector and has
// degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rat> coefficients);

    static RationalPolynomial constant(const Rat& c);
    static RationalPolynomial monomial(const Rat& c, std::size_t degree);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rat& leading() const;
    Rat coefficient(std::size_t d) const;
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    Rat operator()(const Rat& x) const;
    Rat operator()(const Int& x) const;

    RationalPolynomial derivative() const;

    // p(a*x + b), computed by Horner substitution of the affine argument.
    RationalPolynomial compose_affine(const Rat& a, const Rat& b) const;

    RationalPolynomial monic() const;

    RationalPolynomial operator-() const;
    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator-=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const Rat& scalar);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
        return a += b;
    }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
        return a -= b;
    }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) {
        return a *= b;
    }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rat& s) { return a *= s; }
    friend RationalPolynomial operator*(const Rat& s, RationalPolynomial a) { return a *= s; }

    bool operator==(const RationalPolynomial& other) const = default;

    // Human-readable form for diagnostics, e.g. "7x^3 + 9/2x^2 + 1/2x".
    std::string to_string() const;

private:
    std::vector<Rat> coeffs_;
    void trim();
};

struct PolynomialDivision {
    RationalPolynomial quotient;
    RationalPolynomial remainder;
};

// Long division over Q: a = quotient * b + remainder, deg remainder < deg b.
PolynomialDivision divide(const RationalPolynomial& a, const RationalPolynomial& b);

// Division known to be exact; throws invariant_violation on a nonzero remainder.
RationalPolynomial exact_divide(const RationalPolynomial& a, const RationalPolynomial& b);

// Monic gcd over Q. The remainder chain runs over primitive integer
// polynomials (coefficients cleared by the lcm of denominators, content
// removed each step) so no rational blowup occurs.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

}  // namespace psums

#endif
