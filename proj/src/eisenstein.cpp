#include "dedcrit/eisenstein.hpp"

#include "dedcrit/fppoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dedcrit {

bool is_eisenstein_at(const IntPoly& f, const Int& p)
{
    if (f.degree() < 1) throw std::invalid_argument("is_eisenstein_at: constant polynomial");
    if (!f.is_monic()) throw std::invalid_argument("is_eisenstein_at: polynomial must be monic");
    if (p < 2 || !is_prime(p)) throw std::invalid_argument(p.get_str() + " is not prime");
    for (int i = 0; i < f.degree(); ++i)
        if (!mpz_divisible_p(f.coeffs()[i].get_mpz_t(), p.get_mpz_t())) return false;
    const Int& a0 = f.coeffs()[0];
    return a0 != 0 && detail::valuation_unchecked(a0, p) == 1;
}

bool is_phi_eisenstein(const IntPoly& f, const IntPoly& phi, const Int& p)
{
    if (p < 2 || !is_prime(p)) throw std::invalid_argument(p.get_str() + " is not prime");
    if (!f.is_monic()) throw std::invalid_argument("hypothesis failed: f is not monic");
    if (!phi.is_monic() || phi.degree() < 1) throw std::invalid_argument("hypothesis failed: phi is not monic of degree >= 1");
    if (phi.degree() > f.degree()) throw std::invalid_argument("hypothesis failed: deg(phi) > deg(f)");
    const FpPoly phi_bar = reduce_mod_p(phi, p);
    if (!is_irreducible_mod_p(phi_bar)) throw std::invalid_argument("hypothesis failed: phi is not irreducible mod p");
    if (f.degree() % phi.degree() != 0 ||
        !(pow(phi_bar, static_cast<unsigned>(f.degree() / phi.degree())) == reduce_mod_p(f, p)))
        throw std::invalid_argument("hypothesis failed: f is not congruent to a power of phi mod p");

    const auto digits = phi_adic_expansion(f, phi);
    const std::size_t l = digits.size() - 1;
    for (std::size_t i = 1; i < l; ++i)
        if (!digits[i].is_zero() && gauss_valuation(digits[i], p) < 1) return false;
    return !digits[l].is_zero() && gauss_valuation(digits[l], p) == 1;
}

std::string ThetaDescriptor::description() const
{
    std::ostringstream os;
    os << "theta = alpha^" << s << " / " << p << "^" << t;
    return os.str();
}

ThetaDescriptor power_basis_generator(unsigned n, unsigned m, const Int& p)
{
    if (n < 2) throw std::invalid_argument("power_basis_generator: n must be >= 2");
    if (m < 1) throw std::invalid_argument("power_basis_generator: m must be >= 1");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("power_basis_generator: gcd(m, n) != 1");
    if (p < 2 || !is_prime(p)) throw std::invalid_argument(p.get_str() + " is not prime");

    // s = m^-1 mod n by the extended Euclidean algorithm
    long r0 = static_cast<long>(n), r1 = static_cast<long>(m % n);
    long s0 = 0, s1 = 1;
    while (r1 != 0) {
        const long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    long s = s0 % static_cast<long>(n);
    if (s < 0) s += static_cast<long>(n);
    const long t = (static_cast<long>(m) * s - 1) / static_cast<long>(n);

    ThetaDescriptor out{n, m, s, t, p};
    if (out.theta_power_valuation() != 1) throw std::logic_error("power_basis_generator: m*s - n*t != 1");
    return out;
}

}  // namespace dedcrit
