#include "dedcrit/fppoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dedcrit {

namespace {

void reduce(Int& v, const Int& p) { mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()); }

Int inverse(const Int& a, const Int& p)
{
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("no inverse of " + a.get_str() + " mod " + p.get_str());
    return r;
}

}  // namespace

FpPoly::FpPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs))
{
    if (p_ < 2) throw std::invalid_argument("FpPoly: modulus must be a prime");
    for (auto& c : c_) reduce(c, p_);
    normalize();
}

void FpPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::check_same_field(const FpPoly& other) const
{
    if (p_ != other.p_) throw std::invalid_argument("FpPoly: mismatched moduli");
}

const Int& FpPoly::leading() const
{
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

IntPoly FpPoly::balanced_lift() const
{
    const Int half = p_ / 2;
    std::vector<Int> c(c_);
    for (auto& x : c)
        if (x > half) x -= p_;
    return IntPoly(std::move(c));
}

FpPoly FpPoly::monic() const
{
    if (c_.empty()) return *this;
    return *this * inverse(c_.back(), p_);
}

FpPoly FpPoly::derivative() const
{
    if (c_.size() <= 1) return zero(p_);
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return FpPoly(p_, std::move(d));
}

FpPoly& FpPoly::operator+=(const FpPoly& rhs)
{
    check_same_field(rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) {
        c_[i] += rhs.c_[i];
        if (c_[i] >= p_) c_[i] -= p_;
    }
    normalize();
    return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& rhs)
{
    check_same_field(rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) {
        c_[i] -= rhs.c_[i];
        if (c_[i] < 0) c_[i] += p_;
    }
    normalize();
    return *this;
}

FpPoly& FpPoly::operator*=(const FpPoly& rhs)
{
    check_same_field(rhs);
    if (c_.empty() || rhs.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Int> out(c_.size() + rhs.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    for (auto& c : out) reduce(c, p_);
    c_ = std::move(out);
    normalize();
    return *this;
}

FpPoly& FpPoly::operator*=(const Int& s)
{
    Int r = s;
    reduce(r, p_);
    for (auto& c : c_) {
        c *= r;
        reduce(c, p_);
    }
    normalize();
    return *this;
}

std::string FpPoly::to_string() const { return lift().to_string(); }

FpDivMod divmod(const FpPoly& a, const FpPoly& b)
{
    if (b.is_zero()) throw std::domain_error("FpPoly division by zero");
    if (a.modulus() != b.modulus()) throw std::invalid_argument("FpPoly: mismatched moduli");
    const Int& p = a.modulus();
    const int db = b.degree();
    if (a.degree() < db) return {FpPoly::zero(p), a};
    std::vector<Int> rem = a.coeffs();
    std::vector<Int> quot(static_cast<std::size_t>(a.degree() - db + 1), Int(0));
    const Int inv = inverse(b.leading(), p);
    const auto& bc = b.coeffs();
    for (int k = a.degree(); k >= db; --k) {
        Int q = rem[k] * inv;
        reduce(q, p);
        if (q == 0) continue;
        quot[k - db] = q;
        for (int j = 0; j <= db; ++j) {
            Int& r = rem[k - db + j];
            r -= q * bc[j];
            reduce(r, p);
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).quotient; }
FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).remainder; }

FpPoly gcd(const FpPoly& a, const FpPoly& b)
{
    FpPoly u = a, v = b;
    while (!v.is_zero()) {
        FpPoly r = u % v;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

FpPoly powmod(FpPoly base, Int e, const FpPoly& m)
{
    if (e < 0) throw std::invalid_argument("powmod: negative exponent");
    FpPoly r = FpPoly::one(m.modulus()) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return r;
}

FpPoly pow(FpPoly base, unsigned e)
{
    FpPoly r = FpPoly::one(base.modulus());
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

bool canonical_less(const FpPoly& a, const FpPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

FpPoly reduce_mod_p(const IntPoly& f, const Int& p)
{
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("reduce_mod_p: " + p.get_str() + " is not prime");
    return FpPoly(p, f.coeffs());
}

FpPoly FactorizationModP::expand() const
{
    FpPoly r = FpPoly(p, {unit});
    for (const auto& [g, l] : factors) r *= pow(g, l);
    return r;
}

namespace {

struct Piece {
    FpPoly poly;
    unsigned multiplicity;
};

// g(x) with g(x)^p = f(x); valid when f' = 0.
FpPoly pth_root(const FpPoly& f)
{
    const std::size_t p = f.modulus().get_ui();
    std::vector<Int> c;
    for (std::size_t k = 0; k * p < f.coeffs().size(); ++k) c.push_back(f.coeffs()[k * p]);
    return FpPoly(f.modulus(), std::move(c));
}

void squarefree_split(const FpPoly& f, unsigned scale, std::vector<Piece>& out)
{
    if (f.degree() < 1) return;
    const FpPoly df = f.derivative();
    if (df.is_zero()) {
        squarefree_split(pth_root(f), scale * static_cast<unsigned>(f.modulus().get_ui()), out);
        return;
    }
    FpPoly c = gcd(f, df);
    FpPoly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        FpPoly y = gcd(w, c);
        FpPoly fac = w / y;
        if (!fac.is_one()) out.push_back({fac.monic(), i * scale});
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() >= 1)
        squarefree_split(pth_root(c.monic()), scale * static_cast<unsigned>(f.modulus().get_ui()), out);
}

std::vector<std::pair<FpPoly, unsigned>> distinct_degree(FpPoly g)
{
    const Int& p = g.modulus();
    const FpPoly x = FpPoly::x(p);
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly h = x % g;
    unsigned d = 1;
    while (g.degree() >= 2 * static_cast<int>(d)) {
        h = powmod(h, p, g);
        FpPoly fac = gcd(g, h - x);
        if (!fac.is_one()) {
            out.emplace_back(fac, d);
            g = g / fac;
            h = h % g;
        }
        ++d;
    }
    if (g.degree() > 0) out.emplace_back(g.monic(), static_cast<unsigned>(g.degree()));
    return out;
}

FpPoly random_poly(const Int& p, int below_degree, std::mt19937_64& rng)
{
    std::vector<Int> c(static_cast<std::size_t>(below_degree));
    const std::size_t words = mpz_sizeinbase(p.get_mpz_t(), 2) / 64 + 2;
    Int w;
    for (auto& v : c) {
        v = 0;
        for (std::size_t i = 0; i < words; ++i) {
            mpz_set_ui(w.get_mpz_t(), rng());
            v <<= 64;
            v += w;
        }
    }
    return FpPoly(p, std::move(c));
}

void equal_degree(const FpPoly& f, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out)
{
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    const Int& p = f.modulus();
    Int half;
    if (p != 2) {
        mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), d);
        half = (half - 1) / 2;
    }
    for (;;) {
        FpPoly a = random_poly(p, f.degree(), rng);
        if (a.degree() < 1) continue;
        FpPoly b = FpPoly::zero(p);
        if (p == 2) {
            // trace of a from F_{2^d} down to F_2
            FpPoly term = a;
            b = a;
            for (unsigned i = 1; i < d; ++i) {
                term = (term * term) % f;
                b += term;
            }
        } else {
            b = powmod(a, half, f) - FpPoly::one(p);
        }
        FpPoly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

FactorizationModP factor_mod_p(const FpPoly& f, std::uint64_t seed)
{
    if (f.is_zero()) throw std::invalid_argument("factor_mod_p: zero polynomial");
    FactorizationModP out{f.modulus(), f.leading(), {}};
    if (f.degree() == 0) return out;

    std::mt19937_64 rng(seed);
    std::vector<Piece> pieces;
    squarefree_split(f.monic(), 1, pieces);
    for (const auto& piece : pieces) {
        for (auto& [block, d] : distinct_degree(piece.poly)) {
            std::vector<FpPoly> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (auto& g : irreducibles) out.factors.push_back({std::move(g), piece.multiplicity});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FpFactor& a, const FpFactor& b) { return canonical_less(a.factor, b.factor); });
    return out;
}

bool is_irreducible_mod_p(const FpPoly& f)
{
    if (f.degree() < 1) throw std::invalid_argument("is_irreducible_mod_p: constant polynomial");
    if (f.degree() == 1) return true;
    const FpPoly g = f.monic();
    const Int& p = g.modulus();
    const unsigned n = static_cast<unsigned>(g.degree());
    const FpPoly x = FpPoly::x(p);

    std::vector<FpPoly> frob(n + 1, FpPoly::zero(p));  // x^(p^k) mod g
    frob[0] = x % g;
    for (unsigned k = 1; k <= n; ++k) frob[k] = powmod(frob[k - 1], p, g);
    if (!(frob[n] - x % g).is_zero()) return false;

    unsigned rest = n;
    for (unsigned q = 2; q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        if (!gcd(g, frob[n / q] - x).is_one()) return false;
    }
    return true;
}

}  // namespace dedcrit
