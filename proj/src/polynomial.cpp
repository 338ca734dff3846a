#include "psums/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "psums/errors.hpp"

namespace psums {

RationalPolynomial::RationalPolynomial(std::vector<Rat> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Rat& c) {
    return RationalPolynomial(std::vector<Rat>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rat& c, std::size_t degree) {
    std::vector<Rat> coeffs(degree + 1, Rat(0));
    coeffs[degree] = c;
    return RationalPolynomial(std::move(coeffs));
}

const Rat& RationalPolynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rat RationalPolynomial::coefficient(std::size_t d) const {
    return d < coeffs_.size() ? coeffs_[d] : Rat(0);
}

Rat RationalPolynomial::operator()(const Rat& x) const {
    Rat value(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
    return value;
}

Rat RationalPolynomial::operator()(const Int& x) const { return (*this)(Rat(x)); }

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return RationalPolynomial();
    std::vector<Rat> result(coeffs_.size() - 1);
    for (std::size_t d = 1; d < coeffs_.size(); ++d) {
        result[d - 1] = coeffs_[d] * Rat(static_cast<long>(d));
    }
    return RationalPolynomial(std::move(result));
}

RationalPolynomial RationalPolynomial::compose_affine(const Rat& a, const Rat& b) const {
    RationalPolynomial argument(std::vector<Rat>{b, a});
    RationalPolynomial result;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        result *= argument;
        result += constant(*it);
    }
    return result;
}

RationalPolynomial RationalPolynomial::monic() const {
    if (is_zero()) throw std::domain_error("monic form of zero polynomial");
    RationalPolynomial result = *this;
    Rat inv = Rat(1) / leading();
    for (auto& c : result.coeffs_) c *= inv;
    return result;
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial result = *this;
    for (auto& c : result.coeffs_) c = -c;
    return result;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rat(0));
    for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rat(0));
    for (std::size_t d = 0; d < other.coeffs_.size(); ++d) coeffs_[d] -= other.coeffs_[d];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> result(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            result[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(result);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

std::string RationalPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rat mag = abs(c);
        if (mag != 1 || i == 0) out << psums::to_string(mag);
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

PolynomialDivision divide(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    RationalPolynomial remainder = a;
    RationalPolynomial quotient;
    Rat lead_inv = Rat(1) / b.leading();
    while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(remainder.degree() - b.degree());
        Rat factor = remainder.leading() * lead_inv;
        RationalPolynomial term = RationalPolynomial::monomial(factor, shift);
        quotient += term;
        remainder -= term * b;
    }
    return {std::move(quotient), std::move(remainder)};
}

RationalPolynomial exact_divide(const RationalPolynomial& a, const RationalPolynomial& b) {
    PolynomialDivision d = divide(a, b);
    if (!d.remainder.is_zero()) {
        throw invariant_violation("exact_divide: nonzero remainder dividing (" + a.to_string() +
                                  ") by (" + b.to_string() + ")");
    }
    return d.quotient;
}

namespace {

// Primitive integer polynomials, used only for the gcd remainder chain.
using IntPoly = std::vector<Int>;

void trim_int(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const Int& c : p) {
        g = ::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

// Divides out the content and makes the leading coefficient positive.
void make_primitive(IntPoly& p) {
    trim_int(p);
    if (p.empty()) return;
    Int g = content(p);
    if (p.back() < 0) g = -g;
    if (g != 1) {
        for (Int& c : p) c /= g;
    }
}

IntPoly cleared(const RationalPolynomial& p) {
    Int scale = 1;
    for (const Rat& c : p.coefficients()) scale = lcm(scale, c.get_den());
    IntPoly result;
    result.reserve(p.coefficients().size());
    for (const Rat& c : p.coefficients()) {
        Rat scaled = c * Rat(scale);
        result.push_back(scaled.get_num());
    }
    make_primitive(result);
    return result;
}

// Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a divided
// by b, computed purely in integer arithmetic.
IntPoly pseudo_remainder(IntPoly r, const IntPoly& b) {
    const Int& lead_b = b.back();
    while (r.size() >= b.size() && !r.empty()) {
        Int lead_r = r.back();
        std::size_t shift = r.size() - b.size();
        for (Int& c : r) c *= lead_b;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[shift + j] -= lead_r * b[j];
        }
        trim_int(r);
    }
    return r;
}

RationalPolynomial from_int(const IntPoly& p) {
    std::vector<Rat> coeffs;
    coeffs.reserve(p.size());
    for (const Int& c : p) coeffs.emplace_back(c);
    return RationalPolynomial(std::move(coeffs));
}

}  // namespace

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();

    IntPoly u = cleared(a);
    IntPoly v = cleared(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        IntPoly r = pseudo_remainder(u, v);
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    return from_int(u).monic();
}

}  // namespace psums
