#ifndef PSUMS_POWERSUM_HPP
#define PSUMS_POWERSUM_HPP

#include "psums/exactnum.hpp"
#include "psums/polynomial.hpp"

namespace psums {

// Parameters of the sum (x+1)^k + (x+2)^k + ... + (l*x)^k.
struct ProblemInstance {
    long k;    // exponent, >= 1
    long ell;  // multiplier, >= 2
};

void validate(const ProblemInstance& instance);

// The sum above as a polynomial in x, in two normalizations that share
// their roots and multiplicities:
//   sum    S(x), the polynomial whose values are the integer sums;
//   scaled H(x) = (k+1) * S(x), whose coefficients match the closed forms
//          below (integer leading coefficient l^(k+1) - 1).
// Coefficient and root analysis uses the scaled form; solution search uses
// the sum form. Both have constant term 0 and degree k+1.
struct PowerSumPolynomial {
    ProblemInstance instance;
    RationalPolynomial sum;
    RationalPolynomial scaled;
};

PowerSumPolynomial build(const ProblemInstance& instance);

// Evaluates S at an integer point; the value is always an integer for x >= 1
// (checked; a fractional value raises invariant_violation).
Int evaluate_sum(const PowerSumPolynomial& polynomial, const Int& x);

// The three leading coefficients of the scaled form, by closed formula:
// l^(k+1)-1 at degree k+1, (k+1)(l^k-1)/2 at degree k,
// (k+1)k(l^(k-1)-1)/12 at degree k-1. Checked against the built polynomial;
// a mismatch raises invariant_violation. Requires k >= 2.
struct TopCoefficients {
    Rat degree_kp1;
    Rat degree_k;
    Rat degree_km1;
};

TopCoefficients top_coefficients(const ProblemInstance& instance);

// Coefficient of x in the scaled form for even k: (k+1)(l-1)B_k, nonzero.
// Checked against the built polynomial. Throws std::domain_error for odd k.
Rat degree1_coefficient(const ProblemInstance& instance);

// Coefficient of x^2 in the scaled form for odd k >= 3:
// C(k+1,2)(l^2-1)B_{k-1}, nonzero. Checked against the built polynomial.
// Throws std::domain_error for even k.
Rat degree2_coefficient(const ProblemInstance& instance);

// Literal summation sum_{j=x+1}^{l*x} j^k; the independent oracle for S.
// Requires x >= 1.
Int direct_sum(const ProblemInstance& instance, const Int& x);

}  // namespace psums

#endif
