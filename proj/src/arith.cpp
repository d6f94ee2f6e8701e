#include "dedcrit/arith.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace dedcrit {

namespace {

constexpr std::uint32_t kTrialBound = 1000000;

const std::vector<std::uint32_t>& sieve()
{
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= kTrialBound; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m)
{
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// The first twelve primes as witnesses are deterministic for n < 3.3e24.
bool miller_rabin_u64(u64 n)
{
    static constexpr u64 witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 w : witnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : witnesses) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool fits_u64(const Int& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Int& n) { return static_cast<u64>(mpz_get_ui(n.get_mpz_t())); }

u64 seed_from(const Int& n)
{
    u64 s = static_cast<u64>(mpz_get_ui(n.get_mpz_t())) ^ 0x9e3779b97f4a7c15ULL;
    s ^= s >> 31;
    s *= 0xbf58476d1ce4e5b9ULL;
    return s ^ (s >> 29);
}

Int random_below(std::mt19937_64& rng, const Int& n)
{
    Int r = 0, w;
    const size_t words = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 2;
    for (size_t i = 0; i < words; ++i) {
        mpz_set_ui(w.get_mpz_t(), rng());
        r <<= 64;
        r += w;
    }
    return r % n;
}

// Brent's cycle detection with batched gcds. Returns 0 when every attempt
// runs out of iterations.
Int pollard_brent(const Int& n, u64 seed)
{
    if (n % 2 == 0) return 2;
    std::mt19937_64 rng(seed);
    constexpr unsigned kAttempts = 8;
    constexpr unsigned long kMaxRun = 1UL << 20;
    constexpr unsigned long kBatch = 128;

    for (unsigned attempt = 0; attempt < kAttempts; ++attempt) {
        Int y = random_below(rng, n);
        Int c = random_below(rng, n - 1) + 1;
        Int g = 1, q = 1, x, ys, diff;
        auto step = [&](Int& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        unsigned long run = 1;
        while (g == 1 && run <= kMaxRun) {
            x = y;
            for (unsigned long i = 0; i < run; ++i) step(y);
            unsigned long k = 0;
            while (k < run && g == 1) {
                ys = y;
                const unsigned long lim = std::min(kBatch, run - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    step(y);
                    diff = abs(x - y);
                    q = q * diff % n;
                }
                g = gcd(q, n);
                k += kBatch;
            }
            run *= 2;
        }
        if (g == n) {
            do {
                step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

void add_prime(std::vector<PrimePower>& out, const Int& p, unsigned e)
{
    for (auto& pp : out) {
        if (pp.prime == p) {
            pp.exponent += e;
            return;
        }
    }
    out.push_back({p, e});
}

}  // namespace

Int PrimeFactorization::reconstruct() const
{
    Int r = sign;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        r *= pe;
    }
    return r * cofactor;
}

unsigned PrimeFactorization::exponent_of(const Int& p) const
{
    for (const auto& pp : factors)
        if (pp.prime == p) return pp.exponent;
    return 0;
}

namespace detail {
unsigned valuation_unchecked(const Int& n, const Int& p)
{
    Int rest;
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}
}  // namespace detail

unsigned valuation_int(const Int& n, const Int& p)
{
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("valuation: " + p.get_str() + " is not prime");
    if (n == 0) throw std::domain_error("valuation of zero is infinite");
    return detail::valuation_unchecked(n, p);
}

bool is_prime(const Int& n)
{
    if (n < 2) throw std::invalid_argument("is_prime: argument must be >= 2");
    if (fits_u64(n)) return miller_rabin_u64(to_u64(n));
    // GMP >= 6.2 runs Baillie-PSW before its extra Miller-Rabin rounds.
    return mpz_probab_prime_p(n.get_mpz_t(), 24) != 0;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound)
{
    if (bound > kTrialBound) throw std::invalid_argument("primes_up_to: bound above 10^6");
    const auto& all = sieve();
    return {all.begin(), std::upper_bound(all.begin(), all.end(), bound)};
}

PrimeFactorization factor(const Int& n)
{
    if (n == 0) throw std::domain_error("cannot factor zero");
    PrimeFactorization out;
    out.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);

    for (std::uint32_t p : sieve()) {
        if (Int(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            Int pz = p;
            unsigned e = static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t()));
            out.factors.push_back({pz, e});
        }
    }

    std::vector<std::pair<Int, unsigned>> pending;
    if (m > 1) pending.emplace_back(m, 1);
    const u64 seed = seed_from(n);
    while (!pending.empty()) {
        auto [c, mult] = pending.back();
        pending.pop_back();
        if (is_prime(c)) {
            add_prime(out.factors, c, mult);
            continue;
        }
        Int root;
        if (mpz_perfect_square_p(c.get_mpz_t())) {
            mpz_sqrt(root.get_mpz_t(), c.get_mpz_t());
            pending.emplace_back(root, 2 * mult);
            continue;
        }
        Int d = pollard_brent(c, seed);
        if (d == 0) {
            out.complete = false;
            Int cm;
            mpz_pow_ui(cm.get_mpz_t(), c.get_mpz_t(), mult);
            out.cofactor *= cm;
            continue;
        }
        pending.emplace_back(d, mult);
        pending.emplace_back(c / d, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return out;
}

bool is_squarefree(const Int& n)
{
    const auto fac = factor(n);
    for (const auto& pp : fac.factors)
        if (pp.exponent > 1) return false;
    return fac.complete;
}

}  // namespace dedcrit
