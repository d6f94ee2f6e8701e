#pragma once

// Rings of integers of quadratic fields Q(sqrt d): prime splitting,
// valuations at prime ideals, and the pure-power maximality test for
// x^n - u with u in O_K.

#include "dedcrit/criterion.hpp"
#include "dedcrit/purepower.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dedcrit {

/// Q(sqrt d) with d squarefree, d != 0, 1. The integral basis is {1, w} with
/// w = (1 + sqrt d)/2 when d = 1 mod 4 and w = sqrt d otherwise.
class QuadField {
public:
    explicit QuadField(Int d);

    const Int& d() const { return d_; }
    bool half_integral() const { return half_; }
    /// Field discriminant: d or 4d.
    Int discriminant() const { return half_ ? d_ : Int(4 * d_); }
    /// w^2 = trace_w * w + norm_w
    const Int& trace_w() const { return trace_w_; }
    const Int& norm_w() const { return norm_w_; }

    bool operator==(const QuadField& other) const { return d_ == other.d_; }

private:
    Int d_;
    bool half_ = false;
    Int trace_w_;
    Int norm_w_;
};

/// a + b*w in the integral basis of `field`.
class QuadInt {
public:
    QuadInt(QuadField field, Int a, Int b = 0);

    const QuadField& field() const { return field_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Int norm() const;
    Int trace() const;

    QuadInt& operator+=(const QuadInt& rhs);
    QuadInt& operator-=(const QuadInt& rhs);
    QuadInt& operator*=(const QuadInt& rhs);
    friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
    friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
    friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
    bool operator==(const QuadInt& other) const;

    /// Both coordinates reduced into [0, m).
    QuadInt reduced(const Int& m) const;

    /// "a+b*w"
    std::string to_string() const;

private:
    void check_same_field(const QuadInt& other) const;

    QuadField field_;
    Int a_;
    Int b_;
};

QuadInt pow(QuadInt x, unsigned e);
/// x^e with coordinates reduced mod m after every step.
QuadInt pow_mod(const QuadInt& x, Int e, const Int& m);

/// Accepts the polynomial grammar in the variable `w` of degree <= 1,
/// e.g. "3+2*w", "-w", "5".
QuadInt parse_quad_int(const QuadField& field, std::string_view text);

enum class SplitKind { split, inert, ramified };
std::string_view to_string(SplitKind k);

/// A prime ideal of O_K above the rational prime p. For split primes,
/// `hensel_root` is the root of the minimal polynomial of w that this ideal
/// corresponds to, w = root mod (the ideal), known modulo p^precision.
struct QuadPrime {
    Int p;
    SplitKind kind = SplitKind::inert;
    unsigned e = 1;
    unsigned f = 1;
    std::optional<Int> hensel_root;
    unsigned precision = 0;

    std::string to_string() const;
};

/// Primes of O_K above p, classified by the Kronecker symbol (disc K / p).
/// The two split primes are ordered by their root in [0, p).
std::vector<QuadPrime> split_prime(const QuadField& field, const Int& p);

/// v_P(x R). Throws std::domain_error for x = 0.
unsigned nu_P(const QuadInt& x, const QuadPrime& P);

/// Exact test whether u = w^k for some w in O_K. Candidate roots come from a
/// floating-point embedding and are verified exactly; a first exact filter
/// rejects u whose norm is not a k-th power.
bool is_power_in_field(const QuadInt& u, unsigned k);

/// Capelli's criterion over K: x^n - u is irreducible iff u is no q-th power
/// for primes q | n and, when 4 | n, u is not in -4K^4.
bool pure_power_irreducible_over(const QuadInt& u, unsigned n);

struct QuadPrimeCheck {
    QuadPrime prime;
    unsigned nu_u = 0;
    // v_P(u^(p^f) - u), filled in only when v_P(u) = 0
    std::optional<unsigned> nu_frobenius;
    // nu_frobenius is a lower bound (the true valuation is at least this)
    bool nu_frobenius_lower_bound = false;
    bool ok = false;
};

struct QuadPurePowerVerdict {
    QuadField field;
    unsigned n = 0;
    QuadInt u;
    Verdict verdict = Verdict::unknown;
    std::vector<QuadPrimeCheck> checks;
    std::optional<QuadPrime> failing_prime;
    std::optional<PurePowerFailure> reason;
};

/// Checks every prime ideal P | n*u: v_P(u) = 1, or v_P(u) = 0 and
/// v_P(u^(p^f) - u) = 1. Throws std::domain_error when the irreducibility
/// screen finds x^n - u reducible over K.
QuadPurePowerVerdict thm4_check(const QuadField& field, unsigned n, const QuadInt& u);

/// thm4_check over Q(sqrt 3) for every (m, n); each n must be divisible by 3.
std::vector<QuadPurePowerVerdict> example2_suite(const std::vector<Int>& m_values,
                                                 const std::vector<unsigned>& n_values);

}  // namespace dedcrit
