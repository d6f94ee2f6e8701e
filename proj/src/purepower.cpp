#include "dedcrit/purepower.hpp"

#include <stdexcept>

namespace dedcrit {

std::string_view to_string(PurePowerFailure r)
{
    return r == PurePowerFailure::nu_u_not_one ? "nu_u_not_one" : "frobenius_val_not_one";
}

namespace {

void require_args(unsigned n, const Int& u)
{
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (u == 0) throw std::invalid_argument("u must be nonzero");
}

void require_irreducible(unsigned n, const Int& u)
{
    if (!pure_power_irreducible(n, u))
        throw std::domain_error("x^" + std::to_string(n) + " - (" + u.get_str() + ") is reducible over Q");
}

bool is_kth_power(const Int& v, unsigned k)
{
    if (v < 0 && k % 2 == 0) return false;
    Int r;
    Int a = abs(v);
    return mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) != 0;
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

// v_p(u^e - u) == 1 for p not dividing u, decided modulo p^2.
bool frobenius_valuation_is_one(const Int& u, const Int& e, const Int& p)
{
    const Int p2 = p * p;
    Int z;
    Int base = u % p2;
    if (base < 0) base += p2;
    mpz_powm(z.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p2.get_mpz_t());
    z -= base;
    mpz_mod(z.get_mpz_t(), z.get_mpz_t(), p2.get_mpz_t());
    return z != 0 && mpz_divisible_p(z.get_mpz_t(), p.get_mpz_t());
}

}  // namespace

IntPoly pure_power_poly(unsigned n, const Int& u)
{
    IntPoly f = IntPoly::monomial(1, n);
    f -= IntPoly::constant(u);
    return f;
}

bool pure_power_irreducible(unsigned n, const Int& u)
{
    require_args(n, u);
    for (unsigned q : prime_divisors(n))
        if (is_kth_power(u, q)) return false;
    if (n % 4 == 0 && u < 0 && is_kth_power(Int(-4 * u), 4)) return false;
    return true;
}

bool thm3_sufficient(unsigned n, const Int& a)
{
    require_args(n, a);
    if (!is_squarefree(a)) return false;
    for (unsigned q : prime_divisors(n))
        if (!mpz_divisible_ui_p(a.get_mpz_t(), q)) return false;
    // the hypothesis makes x^n - a Eisenstein at every prime of n, so this never fires
    require_irreducible(n, a);
    return true;
}

PurePowerVerdict cor5_exact(unsigned n, const Int& u)
{
    require_args(n, u);
    require_irreducible(n, u);
    PurePowerVerdict out{n, u, Verdict::maximal, std::nullopt, std::nullopt};
    const PrimeFactorization fac = factor(Int(u * n));
    for (const auto& pp : fac.factors) {
        const Int& p = pp.prime;
        std::optional<PurePowerFailure> fail;
        if (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
            if (detail::valuation_unchecked(u, p) != 1) fail = PurePowerFailure::nu_u_not_one;
        } else if (!frobenius_valuation_is_one(u, p, p)) {
            fail = PurePowerFailure::frobenius_val_not_one;
        }
        if (fail) {
            out.verdict = Verdict::not_maximal;
            out.failing_prime = p;
            out.reason = fail;
            return out;
        }
    }
    if (!fac.complete) out.verdict = Verdict::unknown;
    return out;
}

bool frobenius_exponent_flexibility(unsigned n, const Int& u, const Int& p, unsigned r_max, std::uint64_t seed)
{
    require_args(n, u);
    if (p < 2 || !is_prime(p)) throw std::invalid_argument(p.get_str() + " is not prime");
    if (Int(n) % p != 0) throw std::invalid_argument("p must divide n");
    if (u % p == 0) throw std::invalid_argument("p must not divide u");
    if (r_max < 1) throw std::invalid_argument("r_max must be >= 1");
    require_irreducible(n, u);

    const bool locally_maximal = local_maximality(pure_power_poly(n, u), p, seed).locally_maximal;
    Int e = p;
    for (unsigned r = 1; r <= r_max; ++r, e *= p)
        if (frobenius_valuation_is_one(u, e, p) && !locally_maximal) return false;
    return true;
}

}  // namespace dedcrit
