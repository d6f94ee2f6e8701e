#pragma once

// Eisenstein-type sufficient conditions for p-maximality.

#include "dedcrit/zpoly.hpp"

#include <string>

namespace dedcrit {

/// All non-leading coefficients divisible by p, constant term exactly once.
bool is_eisenstein_at(const IntPoly& f, const Int& p);

/**
 * (phi, p)-Eisenstein test on the phi-adic expansion f = sum a_i phi^(l-i):
 * v_p(a_i) >= 1 for 0 < i < l and v_p(a_l) = 1.
 *
 * Requires phi monic with phi mod p irreducible and f = phi^l mod p; throws
 * std::invalid_argument naming the violated hypothesis otherwise.
 */
bool is_phi_eisenstein(const IntPoly& f, const IntPoly& phi, const Int& p);

/// theta = alpha^s / p^t for a root alpha of x^n + a with v_p(a) = m.
struct ThetaDescriptor {
    unsigned n = 0;
    unsigned m = 0;
    long s = 0;
    long t = 0;
    Int p;

    /// v_p(theta^n) = m*s - n*t
    long theta_power_valuation() const { return static_cast<long>(m) * s - static_cast<long>(n) * t; }
    std::string description() const;
};

/// Solves m*s - n*t = 1 with 0 <= s < n. Throws std::invalid_argument when
/// gcd(m, n) != 1.
ThetaDescriptor power_basis_generator(unsigned n, unsigned m, const Int& p);

}  // namespace dedcrit
