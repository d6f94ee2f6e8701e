#include "dedcrit/criterion.hpp"

#include <random>
#include <stdexcept>

namespace dedcrit {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::maximal: return "maximal";
    case Verdict::not_maximal: return "not-maximal";
    case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(IrreducibilityStatus s)
{
    switch (s) {
    case IrreducibilityStatus::certified_eisenstein: return "certified-eisenstein";
    case IrreducibilityStatus::certified_modp: return "certified-modp";
    case IrreducibilityStatus::assumed: return "assumed";
    }
    return "assumed";
}

namespace {

void require_monic(const IntPoly& f)
{
    if (f.degree() < 2) throw std::invalid_argument("f must have degree >= 2");
    if (!f.is_monic()) throw std::invalid_argument("f must be monic");
}

void require_prime(const Int& p)
{
    if (p < 2 || !is_prime(p)) throw std::invalid_argument(p.get_str() + " is not prime");
}

// [v_p(r) = 1], with v_p(0) infinite
bool valuation_is_one(const IntPoly& r, const Int& p)
{
    if (r.is_zero()) return false;
    for (const auto& c : r.coeffs()) {
        if (c == 0) continue;
        if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t())) return false;
    }
    const Int p2 = p * p;
    for (const auto& c : r.coeffs())
        if (c != 0 && !mpz_divisible_p(c.get_mpz_t(), p2.get_mpz_t())) return true;
    return false;
}

}  // namespace

LocalReport local_maximality(const IntPoly& f, const Int& p, std::uint64_t seed)
{
    require_monic(f);
    require_prime(p);
    LocalReport report{p, {}, true};
    const auto fac = factor_mod_p(reduce_mod_p(f, p), seed);
    for (const auto& [phi_bar, l] : fac.factors) {
        FactorEvidence ev{phi_bar, l, phi_bar.balanced_lift(), {}, std::nullopt, true};
        ev.remainder = monic_divmod(f, ev.lift).remainder;
        if (l >= 2) {
            if (ev.remainder.is_zero())
                throw std::domain_error("a lift of a repeated factor divides f exactly, so f is reducible");
            ev.remainder_valuation = gauss_valuation(ev.remainder, p);
            ev.satisfied = *ev.remainder_valuation == 1;
        }
        report.locally_maximal = report.locally_maximal && ev.satisfied;
        report.factors.push_back(std::move(ev));
    }
    return report;
}

bool classical_dedekind_oracle(const IntPoly& f, const Int& p, std::uint64_t seed)
{
    require_monic(f);
    require_prime(p);
    const FpPoly fbar = reduce_mod_p(f, p);
    const auto fac = factor_mod_p(fbar, seed);
    FpPoly gbar = FpPoly::one(p);
    for (const auto& factor : fac.factors) gbar *= factor.factor;
    const FpPoly hbar = fbar / gbar;

    IntPoly t = gbar.lift() * hbar.lift() - f;
    t.divide_exact(p);
    const FpPoly tbar = reduce_mod_p(t, p);
    return gcd(gcd(tbar, gbar), hbar).is_one();
}

IrreducibilityStatus screen_irreducibility(const IntPoly& f, const Int& disc)
{
    require_monic(f);
    const auto eisenstein_primes = primes_up_to(1000);
    for (long shift : {0L, 1L, -1L}) {
        const IntPoly g = f.taylor_shift(shift);
        Int inner = 0;
        for (int i = 0; i < g.degree(); ++i) inner = gcd(inner, g.coeff(static_cast<std::size_t>(i)));
        if (inner == 0) continue;
        for (std::uint32_t p : eisenstein_primes) {
            if (!mpz_divisible_ui_p(inner.get_mpz_t(), p)) continue;
            if (!mpz_divisible_ui_p(Int(g.coeff(0) / p).get_mpz_t(), p)) return IrreducibilityStatus::certified_eisenstein;
        }
    }
    for (std::uint32_t p : primes_up_to(100)) {
        if (disc != 0 && mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        if (is_irreducible_mod_p(reduce_mod_p(f, p))) return IrreducibilityStatus::certified_modp;
    }
    return IrreducibilityStatus::assumed;
}

Certificate is_maximal_global(const IntPoly& f, std::uint64_t seed)
{
    require_monic(f);
    Certificate cert;
    cert.f = f;
    cert.disc = discriminant(f);
    if (cert.disc == 0) throw std::domain_error("discriminant is zero: f is not squarefree as a polynomial, so not irreducible");
    cert.irreducibility = screen_irreducibility(f, cert.disc);
    cert.disc_factorization = factor(cert.disc);

    bool all_pass = true;
    for (const auto& pp : cert.disc_factorization.factors) {
        if (pp.exponent < 2) continue;
        cert.checked_primes.push_back(local_maximality(f, pp.prime, seed));
        all_pass = all_pass && cert.checked_primes.back().locally_maximal;
    }
    if (!all_pass)
        cert.verdict = Verdict::not_maximal;
    else
        cert.verdict = cert.disc_factorization.complete ? Verdict::maximal : Verdict::unknown;
    return cert;
}

bool lift_stability_check(const IntPoly& f, const Int& p, std::size_t factor_index, unsigned trials,
                          std::uint64_t seed)
{
    const LocalReport report = local_maximality(f, p, seed);
    if (factor_index >= report.factors.size())
        throw std::out_of_range("factor index " + std::to_string(factor_index) + " out of range");
    const FactorEvidence& ev = report.factors[factor_index];
    if (ev.multiplicity < 2) throw std::invalid_argument("remark applies only when l_i >= 2");

    const bool canonical = ev.satisfied;
    std::mt19937_64 rng(seed ^ 0x6c69667473746162ULL);
    std::uniform_int_distribution<long> coeff(-1000000, 1000000);
    const std::size_t deg = static_cast<std::size_t>(ev.lift.degree());
    for (unsigned trial = 0; trial < trials; ++trial) {
        std::vector<Int> h(deg);
        for (auto& c : h) c = coeff(rng);
        const IntPoly other = ev.lift + IntPoly(std::move(h)) * p;
        const IntPoly r = monic_divmod(f, other).remainder;
        if (valuation_is_one(r, p) != canonical) return false;
    }
    return true;
}

}  // namespace dedcrit
