#include "dedcrit/zpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace dedcrit {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t k)
{
    std::vector<Int> v(k + 1, Int(0));
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::leading() const
{
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

IntPoly IntPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

Int IntPoly::evaluate(const Int& at) const
{
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

IntPoly IntPoly::taylor_shift(const Int& shift) const
{
    // Horner in the ring Z[x]: acc = acc * (x + shift) + c_i
    std::vector<Int> acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc.emplace_back(0);
        for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] = acc[i - 1] + acc[i] * shift;
        acc[0] = acc[0] * shift + *it;
    }
    return IntPoly(std::move(acc));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs)
{
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs)
{
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs)
{
    if (c_.empty() || rhs.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Int> out(c_.size() + rhs.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    c_ = std::move(out);
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const Int& s)
{
    for (auto& c : c_) c *= s;
    normalize();
    return *this;
}

IntPoly& IntPoly::divide_exact(const Int& s)
{
    if (s == 0) throw std::domain_error("division by zero");
    for (auto& c : c_) {
        if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()))
            throw std::domain_error("inexact coefficient division by " + s.get_str());
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    }
    return *this;
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

std::string IntPoly::to_string(char var) const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Int& c = c_[k];
        if (c == 0) continue;
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) {
            os << mag;
            if (k > 0) os << '*';
        }
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

std::vector<std::string> IntPoly::to_decimal_strings() const
{
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.get_str());
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << f.to_string(); }

IntPoly pow(IntPoly base, unsigned e)
{
    IntPoly r = IntPoly::constant(1);
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

DivMod monic_divmod(const IntPoly& f, const IntPoly& phi)
{
    if (phi.degree() < 1) throw std::invalid_argument("monic_divmod: divisor must have degree >= 1");
    if (!phi.is_monic()) throw std::invalid_argument("monic_divmod: divisor must be monic");
    const int m = phi.degree();
    std::vector<Int> rem = f.coeffs();
    if (f.degree() < m) return {IntPoly(), f};
    std::vector<Int> quot(static_cast<std::size_t>(f.degree() - m + 1), Int(0));
    const auto& pc = phi.coeffs();
    for (int k = f.degree(); k >= m; --k) {
        const Int q = rem[k];
        if (q == 0) continue;
        quot[k - m] = q;
        for (int j = 0; j <= m; ++j) rem[k - m + j] -= q * pc[j];
    }
    rem.resize(static_cast<std::size_t>(m));
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
    const int db = b.degree();
    if (a.degree() < db) return a;
    std::vector<Int> r = a.coeffs();
    const Int& lb = b.leading();
    const auto& bc = b.coeffs();
    int e = a.degree() - db + 1;
    for (int k = a.degree(); k >= db; --k) {
        const Int lead = r[k];
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= lead * bc[j];
        --e;
    }
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= scale;
    r.resize(static_cast<std::size_t>(db));
    return IntPoly(std::move(r));
}

Int content(const IntPoly& f)
{
    Int g = 0;
    for (const auto& c : f.coeffs()) g = gcd(g, c);
    return g;
}

unsigned gauss_valuation(const IntPoly& f, const Int& p)
{
    if (f.is_zero()) throw std::domain_error("Gauss valuation of the zero polynomial is infinite");
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("gauss_valuation: " + p.get_str() + " is not prime");
    unsigned best = ~0u;
    for (const auto& c : f.coeffs()) {
        if (c == 0) continue;
        best = std::min(best, detail::valuation_unchecked(c, p));
        if (best == 0) break;
    }
    return best;
}

namespace {

Int ipow(const Int& b, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Int exact_div(const Int& a, const Int& b)
{
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

Int resultant(const IntPoly& a_in, const IntPoly& b_in)
{
    if (a_in.is_zero() || b_in.is_zero()) return 0;
    IntPoly a = a_in, b = b_in;
    int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) s = -1;
    }
    if (b.degree() == 0) return s * ipow(b.leading(), static_cast<unsigned long>(a.degree()));

    const Int ca = content(a), cb = content(b);
    a.divide_exact(ca);
    b.divide_exact(cb);
    const Int t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));
    Int g = 1, h = 1;
    for (;;) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return 0;
        r.divide_exact(g * ipow(h, static_cast<unsigned long>(delta)));
        b = std::move(r);
        g = a.leading();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_div(ipow(g, static_cast<unsigned long>(delta)), ipow(h, static_cast<unsigned long>(delta - 1)));
        }
        if (b.degree() == 0) {
            const auto da = static_cast<unsigned long>(a.degree());
            h = exact_div(ipow(b.leading(), da), ipow(h, da - 1));
            return s * t * h;
        }
    }
}

Int discriminant(const IntPoly& f)
{
    const int n = f.degree();
    if (n < 2) throw std::invalid_argument("discriminant: degree must be >= 2");
    if (!f.is_monic()) throw std::invalid_argument("discriminant: polynomial must be monic");
    Int res = resultant(f, f.derivative());
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    return (pairs % 2 == 0) ? res : Int(-res);
}

IntPoly cyclotomic_prime_power(const Int& p, unsigned r)
{
    if (r < 1) throw std::invalid_argument("cyclotomic_prime_power: r must be >= 1");
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("cyclotomic_prime_power: " + p.get_str() + " is not prime");
    if (!p.fits_ulong_p()) throw std::invalid_argument("cyclotomic_prime_power: prime too large");
    Int step_z = ipow(p, r - 1);
    if (!step_z.fits_ulong_p() || ipow(p, r) > 100000000)
        throw std::invalid_argument("cyclotomic_prime_power: degree too large");
    const std::size_t step = step_z.get_ui();
    const std::size_t count = p.get_ui();
    std::vector<Int> c(step * (count - 1) + 1, Int(0));
    for (std::size_t k = 0; k < count; ++k) c[k * step] = 1;
    return IntPoly(std::move(c));
}

std::vector<IntPoly> phi_adic_expansion(const IntPoly& f, const IntPoly& phi)
{
    if (!phi.is_monic()) throw std::invalid_argument("phi_adic_expansion: phi must be monic");
    if (phi.degree() < 1) throw std::invalid_argument("phi_adic_expansion: phi must have degree >= 1");
    if (phi.degree() > f.degree()) throw std::invalid_argument("phi_adic_expansion: deg(phi) exceeds deg(f)");
    const std::size_t l = static_cast<std::size_t>(f.degree() / phi.degree());
    std::vector<IntPoly> digits(l + 1);
    IntPoly rest = f;
    // Lowest digit first, stored at the tail.
    for (std::size_t i = 0; i <= l; ++i) {
        auto [q, r] = monic_divmod(rest, phi);
        digits[l - i] = std::move(r);
        rest = std::move(q);
    }
    return digits;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
{
}

}  // namespace dedcrit
