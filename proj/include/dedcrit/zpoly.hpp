#pragma once

// Dense univariate polynomials over Z.

#include "dedcrit/arith.hpp"

#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dedcrit {

/**
 * Polynomial with arbitrary-precision integer coefficients, constant term
 * first. The zero polynomial is the empty coefficient vector and every
 * nonzero polynomial has a nonzero leading coefficient.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Int& c);
    static IntPoly monomial(const Int& c, std::size_t k);
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of x^i, zero past the degree.
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly derivative() const;
    Int evaluate(const Int& at) const;
    /// f(x + shift)
    IntPoly taylor_shift(const Int& shift) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Int& s);
    /// Exact division of every coefficient; throws std::domain_error otherwise.
    IntPoly& divide_exact(const Int& s);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
    friend IntPoly operator*(const Int& s, IntPoly a) { return a *= s; }
    IntPoly operator-() const;
    bool operator==(const IntPoly& other) const { return c_ == other.c_; }

    /// Human form, e.g. "x^2 - 5".
    std::string to_string(char var = 'x') const;
    /// Decimal strings, constant term first.
    std::vector<std::string> to_decimal_strings() const;

private:
    void normalize();

    std::vector<Int> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& f);

IntPoly pow(IntPoly base, unsigned e);

struct DivMod {
    IntPoly quotient;
    IntPoly remainder;
};

/// Euclidean division by a monic divisor of degree >= 1; exact over Z.
DivMod monic_divmod(const IntPoly& f, const IntPoly& phi);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
Int content(const IntPoly& f);

/// Minimum p-adic valuation over the nonzero coefficients.
unsigned gauss_valuation(const IntPoly& f, const Int& p);

/// Resultant via the subresultant pseudo-remainder sequence.
Int resultant(const IntPoly& a, const IntPoly& b);

/// (-1)^(n(n-1)/2) Res(f, f') for monic f of degree n >= 2.
Int discriminant(const IntPoly& f);

/// Phi_{p^r}(x) = (x^{p^r} - 1) / (x^{p^{r-1}} - 1).
IntPoly cyclotomic_prime_power(const Int& p, unsigned r);

/// Digits (a_0, ..., a_l) of f = sum a_i phi^(l-i); each digit is zero or of
/// degree below deg(phi).
std::vector<IntPoly> phi_adic_expansion(const IntPoly& f, const IntPoly& phi);

/// Raised on malformed polynomial text; `position` is a 1-based column.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Either a JSON array of coefficient strings, constant term first
/// (`["-5","0","1"]`), or a sum of `c*x^k` terms (`x^2 - 5`).
IntPoly parse_poly(std::string_view text, char var = 'x');

}  // namespace dedcrit
