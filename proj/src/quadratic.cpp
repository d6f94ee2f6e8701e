#include "dedcrit/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dedcrit {

namespace {

// Frobenius valuations are resolved modulo p^kFrobeniusPrecision.
constexpr unsigned kFrobeniusPrecision = 16;

Int mod(const Int& a, const Int& m)
{
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int inverse_mod(const Int& a, const Int& m)
{
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("no inverse of " + a.get_str() + " mod " + m.get_str());
    return r;
}

Int power(const Int& b, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Tonelli-Shanks; a must be a nonzero square mod the odd prime p.
Int sqrt_mod(const Int& a_in, const Int& p)
{
    const Int a = mod(a_in, p);
    if (a == 0) return 0;
    Int q = p - 1;
    unsigned s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q >>= 1;
        ++s;
    }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Int c, t, r, tmp;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Int e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        tmp = t;
        while (tmp != 1) {
            tmp = tmp * tmp % p;
            ++i;
            if (i == m) throw std::domain_error(a.get_str() + " is not a square mod " + p.get_str());
        }
        Int b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

// Newton lift of a simple root of X^2 - T X - N from mod p to mod p^k.
Int lift_root(const QuadField& field, const Int& root, const Int& p, unsigned k)
{
    Int r = root;
    unsigned prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        const Int m = power(p, prec);
        const Int value = r * r - field.trace_w() * r - field.norm_w();
        const Int slope = 2 * r - field.trace_w();
        r = mod(r - value * inverse_mod(slope, m), m);
    }
    return r;
}

std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

QuadField::QuadField(Int d) : d_(std::move(d))
{
    if (d_ == 0 || d_ == 1) throw std::invalid_argument("quadratic field: d must differ from 0 and 1");
    const auto fac = factor(d_);
    if (!fac.complete) throw std::invalid_argument("quadratic field: could not certify that d is squarefree");
    for (const auto& pp : fac.factors)
        if (pp.exponent > 1) throw std::invalid_argument("quadratic field: d = " + d_.get_str() + " is not squarefree");
    half_ = mod(d_, 4) == 1;
    if (half_) {
        trace_w_ = 1;
        norm_w_ = (d_ - 1) / 4;
    } else {
        trace_w_ = 0;
        norm_w_ = d_;
    }
}

QuadInt::QuadInt(QuadField field, Int a, Int b) : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {}

void QuadInt::check_same_field(const QuadInt& other) const
{
    if (!(field_ == other.field_)) throw std::invalid_argument("quadratic integers from different fields");
}

Int QuadInt::norm() const { return a_ * a_ + a_ * b_ * field_.trace_w() - b_ * b_ * field_.norm_w(); }

Int QuadInt::trace() const { return 2 * a_ + b_ * field_.trace_w(); }

QuadInt& QuadInt::operator+=(const QuadInt& rhs)
{
    check_same_field(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& rhs)
{
    check_same_field(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& rhs)
{
    check_same_field(rhs);
    const Int bb = b_ * rhs.b_;
    const Int a = a_ * rhs.a_ + bb * field_.norm_w();
    const Int b = a_ * rhs.b_ + b_ * rhs.a_ + bb * field_.trace_w();
    a_ = a;
    b_ = b;
    return *this;
}

bool QuadInt::operator==(const QuadInt& other) const
{
    return field_ == other.field_ && a_ == other.a_ && b_ == other.b_;
}

QuadInt QuadInt::reduced(const Int& m) const { return QuadInt(field_, mod(a_, m), mod(b_, m)); }

std::string QuadInt::to_string() const
{
    std::ostringstream os;
    os << a_ << (b_ < 0 ? "-" : "+") << abs(b_) << "*w";
    return os.str();
}

QuadInt pow(QuadInt x, unsigned e)
{
    QuadInt r(x.field(), 1, 0);
    while (e) {
        if (e & 1) r *= x;
        e >>= 1;
        if (e) x *= x;
    }
    return r;
}

QuadInt pow_mod(const QuadInt& x, Int e, const Int& m)
{
    QuadInt r = QuadInt(x.field(), 1, 0).reduced(m);
    QuadInt base = x.reduced(m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * base).reduced(m);
        e >>= 1;
        if (e > 0) base = (base * base).reduced(m);
    }
    return r;
}

QuadInt parse_quad_int(const QuadField& field, std::string_view text)
{
    const IntPoly p = parse_poly(text, 'w');
    if (p.degree() > 1) throw ParseError("a quadratic integer is linear in w", 1);
    return QuadInt(field, p.coeff(0), p.coeff(1));
}

std::string_view to_string(SplitKind k)
{
    switch (k) {
    case SplitKind::split: return "split";
    case SplitKind::inert: return "inert";
    case SplitKind::ramified: return "ramified";
    }
    return "inert";
}

std::string QuadPrime::to_string() const
{
    std::ostringstream os;
    os << "P|" << p << " (" << dedcrit::to_string(kind) << ", e=" << e << ", f=" << f;
    if (hensel_root) os << ", w=" << *hensel_root << " mod " << p << "^" << precision;
    os << ")";
    return os.str();
}

std::vector<QuadPrime> split_prime(const QuadField& field, const Int& p)
{
    if (p < 2 || !is_prime(p)) throw std::invalid_argument(p.get_str() + " is not prime");
    const int symbol = mpz_kronecker(field.discriminant().get_mpz_t(), p.get_mpz_t());
    if (symbol == 0) return {QuadPrime{p, SplitKind::ramified, 2, 1, std::nullopt, 0}};
    if (symbol == -1) return {QuadPrime{p, SplitKind::inert, 1, 2, std::nullopt, 0}};

    std::vector<Int> roots;
    if (p == 2) {
        for (long r = 0; r < 2; ++r)
            if (mod(Int(r * r) - field.trace_w() * r - field.norm_w(), p) == 0) roots.emplace_back(r);
    } else {
        const Int s = sqrt_mod(field.trace_w() * field.trace_w() + 4 * field.norm_w(), p);
        const Int half = inverse_mod(2, p);
        roots.push_back(mod((field.trace_w() + s) * half, p));
        roots.push_back(mod((field.trace_w() - s) * half, p));
    }
    std::sort(roots.begin(), roots.end());
    if (roots.size() != 2 || roots[0] == roots[1])
        throw std::logic_error("split prime without two distinct roots");
    std::vector<QuadPrime> out;
    for (const auto& r : roots) out.push_back(QuadPrime{p, SplitKind::split, 1, 1, r, 1});
    return out;
}

unsigned nu_P(const QuadInt& x, const QuadPrime& P)
{
    if (x.is_zero()) throw std::domain_error("valuation of zero is infinite");
    const unsigned vn = detail::valuation_unchecked(x.norm(), P.p);
    switch (P.kind) {
    case SplitKind::inert: return vn / 2;
    case SplitKind::ramified: return vn;
    case SplitKind::split: break;
    }
    const unsigned k = vn + 1;
    const Int r = lift_root(x.field(), *P.hensel_root, P.p, k);
    const Int value = mod(x.a() + x.b() * r, power(P.p, k));
    if (value == 0) throw std::logic_error("split valuation exceeded the norm bound");
    return detail::valuation_unchecked(value, P.p);
}

bool is_power_in_field(const QuadInt& u, unsigned k)
{
    if (k == 0) throw std::invalid_argument("is_power_in_field: k must be positive");
    if (k == 1 || u.is_zero()) return true;

    const Int n = u.norm();
    if (n < 0 && k % 2 == 0) return false;
    Int root;
    const Int abs_n = abs(n);
    if (mpz_root(root.get_mpz_t(), abs_n.get_mpz_t(), k) == 0) return false;

    using cplx = std::complex<long double>;
    const QuadField& K = u.field();
    const long double d = mpz_get_d(K.d().get_mpz_t());
    const cplx sq = d >= 0 ? cplx(std::sqrt(d), 0) : cplx(0, std::sqrt(-d));
    const cplx w1 = K.half_integral() ? (1.0L + sq) / 2.0L : sq;
    const cplx w2 = K.half_integral() ? (1.0L - sq) / 2.0L : -sq;
    const long double a = mpz_get_d(u.a().get_mpz_t());
    const long double b = mpz_get_d(u.b().get_mpz_t());
    const cplx s1 = a + b * w1, s2 = a + b * w2;

    auto roots_of = [k](cplx z) {
        std::vector<cplx> out;
        const long double r = std::pow(std::abs(z), 1.0L / k);
        const long double arg = std::arg(z);
        for (unsigned j = 0; j < k; ++j) {
            const long double t = (arg + 2.0L * std::numbers::pi_v<long double> * j) / k;
            out.push_back(std::polar(r, t));
        }
        return out;
    };
    const auto r1 = roots_of(s1), r2 = roots_of(s2);
    const long double limit = 9.0e18L;
    for (const auto& x1 : r1) {
        for (const auto& x2 : r2) {
            const cplx y = (x1 - x2) / (w1 - w2);
            const cplx x = x1 - y * w1;
            if (std::abs(x.imag()) > 0.5L || std::abs(y.imag()) > 0.5L) continue;
            if (std::abs(x.real()) > limit || std::abs(y.real()) > limit) continue;
            const long long xr = std::llround(x.real()), yr = std::llround(y.real());
            for (long long dx = -1; dx <= 1; ++dx)
                for (long long dy = -1; dy <= 1; ++dy)
                    if (pow(QuadInt(K, Int(static_cast<long>(xr + dx)), Int(static_cast<long>(yr + dy))), k) == u)
                        return true;
        }
    }
    return false;
}

bool pure_power_irreducible_over(const QuadInt& u, unsigned n)
{
    if (n < 1) throw std::invalid_argument("degree must be positive");
    for (unsigned q : prime_divisors(n))
        if (is_power_in_field(u, q)) return false;
    if (n % 4 == 0 && is_power_in_field(QuadInt(u.field(), -4) * u, 4)) return false;
    return true;
}

QuadPurePowerVerdict thm4_check(const QuadField& field, unsigned n, const QuadInt& u)
{
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (u.is_zero()) throw std::invalid_argument("u must be nonzero");
    if (!(u.field() == field)) throw std::invalid_argument("u lies in a different field");
    if (!pure_power_irreducible_over(u, n))
        throw std::domain_error("x^" + std::to_string(n) + " - (" + u.to_string() + ") is reducible over K");

    QuadPurePowerVerdict out{field, n, u, Verdict::maximal, {}, std::nullopt, std::nullopt};
    const PrimeFactorization fac = factor(Int(n) * u.norm());
    for (const auto& pp : fac.factors) {
        const Int& p = pp.prime;
        const bool p_divides_n = Int(n) % p == 0;
        for (const QuadPrime& P : split_prime(field, p)) {
            QuadPrimeCheck check{P, nu_P(u, P), std::nullopt, false, false};
            if (check.nu_u == 0 && !p_divides_n) continue;
            std::optional<PurePowerFailure> fail;
            if (check.nu_u >= 1) {
                check.ok = check.nu_u == 1;
                if (!check.ok) fail = PurePowerFailure::nu_u_not_one;
            } else {
                const Int modulus = power(p, kFrobeniusPrecision);
                const QuadInt z = (pow_mod(u, power(p, P.f), modulus) - u).reduced(modulus);
                unsigned nu = z.is_zero() ? kFrobeniusPrecision : nu_P(z, P);
                if (nu >= kFrobeniusPrecision) {
                    nu = kFrobeniusPrecision;
                    check.nu_frobenius_lower_bound = true;
                }
                check.nu_frobenius = nu;
                check.ok = nu == 1;
                if (!check.ok) fail = PurePowerFailure::frobenius_val_not_one;
            }
            if (fail && !out.failing_prime) {
                out.verdict = Verdict::not_maximal;
                out.failing_prime = P;
                out.reason = fail;
            }
            out.checks.push_back(std::move(check));
        }
    }
    if (out.verdict == Verdict::maximal && !fac.complete) out.verdict = Verdict::unknown;
    return out;
}

std::vector<QuadPurePowerVerdict> example2_suite(const std::vector<Int>& m_values, const std::vector<unsigned>& n_values)
{
    const QuadField K(3);
    std::vector<QuadPurePowerVerdict> out;
    for (unsigned n : n_values) {
        if (n % 3 != 0) throw std::invalid_argument("example suite requires 3 | n, got n = " + std::to_string(n));
        for (const Int& m : m_values) out.push_back(thm4_check(K, n, QuadInt(K, m, 0)));
    }
    return out;
}

}  // namespace dedcrit
