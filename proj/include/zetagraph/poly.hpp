#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zg {

using BigInt = mpz_class;

// Dense univariate polynomial over Z, ascending coefficients, canonical form
// (no trailing zero coefficient; the zero polynomial has an empty list).
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long value);
    explicit IntPoly(BigInt constant);
    explicit IntPoly(std::vector<BigInt> ascending_coeffs);

    static IntPoly variable();                 // t
    static IntPoly monomial(BigInt c, int deg);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& leading() const;
    BigInt coeff(int i) const;                 // 0 outside the support
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) = default;

    IntPoly pow(unsigned e) const;
    BigInt eval(const BigInt& x) const;

    // Coefficients as decimal strings, ascending (the JSON wire form).
    std::vector<std::string> decimal_coeffs() const;
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

struct PolyDivision {
    bool exact = false;   // rhs divides lhs over Z[t]
    IntPoly quotient;     // valid when exact
    IntPoly remainder;    // nonzero residual when !exact
};

// Long division over Z[t]; stops with the residual as remainder at the first
// step whose leading-coefficient division is inexact (no integer quotient
// exists in that case).
PolyDivision poly_divide(const IntPoly& lhs, const IntPoly& rhs);

// Exact quotient; throws std::domain_error naming the nonzero remainder.
IntPoly divexact(const IntPoly& lhs, const IntPoly& rhs);

// Parses a product of factors such as
//   (1-t^2)^4*(t-1)*(3*t-1)*(3*t^2+1)*(9*t^4-2*t^2+1)
// and expands it. '*' between factors is optional, any single letter works as
// the variable, a factor may be a bare term like x^10 or -3.
IntPoly parse_factored(const std::string& text);

}  // namespace zg
