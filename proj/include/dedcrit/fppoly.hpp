#pragma once

// Polynomials over the prime field F_p and their factorization.

#include "dedcrit/zpoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dedcrit {

/// Polynomial over F_p with residues in [0, p), constant term first.
class FpPoly {
public:
    FpPoly(Int p, std::vector<Int> coeffs);

    static FpPoly zero(const Int& p) { return FpPoly(p, {}); }
    static FpPoly one(const Int& p) { return FpPoly(p, {Int(1)}); }
    static FpPoly x(const Int& p) { return FpPoly(p, {Int(0), Int(1)}); }

    const Int& modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& leading() const;

    /// The lift with coefficients in [0, p).
    IntPoly lift() const { return IntPoly(c_); }
    /// The lift with coefficients in (-p/2, p/2]; x - 1 lifts to x - 1.
    IntPoly balanced_lift() const;
    FpPoly monic() const;
    FpPoly derivative() const;

    FpPoly& operator+=(const FpPoly& rhs);
    FpPoly& operator-=(const FpPoly& rhs);
    FpPoly& operator*=(const FpPoly& rhs);
    FpPoly& operator*=(const Int& s);

    friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
    friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
    friend FpPoly operator*(FpPoly a, const FpPoly& b) { return a *= b; }
    friend FpPoly operator*(FpPoly a, const Int& s) { return a *= s; }
    bool operator==(const FpPoly& other) const { return p_ == other.p_ && c_ == other.c_; }

    std::string to_string() const;

private:
    void normalize();
    void check_same_field(const FpPoly& other) const;

    Int p_;
    std::vector<Int> c_;
};

struct FpDivMod {
    FpPoly quotient;
    FpPoly remainder;
};

FpDivMod divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// base^e mod m.
FpPoly powmod(FpPoly base, Int e, const FpPoly& m);
FpPoly pow(FpPoly base, unsigned e);

/// Ordering by degree, then lexicographically on coefficients from the
/// constant term up.
bool canonical_less(const FpPoly& a, const FpPoly& b);

FpPoly reduce_mod_p(const IntPoly& f, const Int& p);

struct FpFactor {
    FpPoly factor;
    unsigned multiplicity = 0;
};

/// unit * prod(factor^multiplicity); factors monic, irreducible, distinct and
/// in canonical order.
struct FactorizationModP {
    Int p;
    Int unit;
    std::vector<FpFactor> factors;

    FpPoly expand() const;
};

/// Squarefree, distinct-degree and equal-degree stages; the equal-degree
/// splitting draws from a generator seeded with `seed`.
FactorizationModP factor_mod_p(const FpPoly& f, std::uint64_t seed);

/// Rabin's irreducibility test. Throws std::invalid_argument on constants.
bool is_irreducible_mod_p(const FpPoly& f);

}  // namespace dedcrit
