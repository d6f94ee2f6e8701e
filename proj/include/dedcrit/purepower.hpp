#pragma once

// Closed-form maximality tests for f = x^n - u over Z.

#include "dedcrit/criterion.hpp"

#include <optional>
#include <string_view>

namespace dedcrit {

enum class PurePowerFailure { nu_u_not_one, frobenius_val_not_one };

std::string_view to_string(PurePowerFailure r);

struct PurePowerVerdict {
    unsigned n = 0;
    Int u;
    Verdict verdict = Verdict::unknown;
    std::optional<Int> failing_prime;
    std::optional<PurePowerFailure> reason;
};

/// x^n - u
IntPoly pure_power_poly(unsigned n, const Int& u);

/// Capelli: x^n - u is irreducible over Q iff u is not a q-th power for any
/// prime q | n, and u is not -4c^4 when 4 | n.
bool pure_power_irreducible(unsigned n, const Int& u);

/// a squarefree and rad(n) | a. Sufficient for maximality; false says nothing.
bool thm3_sufficient(unsigned n, const Int& a);

/// Exact test over the primes p | n*u: v_p(u) = 1 when p | u, otherwise
/// v_p(u^p - u) = 1. Throws std::domain_error when x^n - u is reducible.
PurePowerVerdict cor5_exact(unsigned n, const Int& u);

/// Whenever v_p(u^(p^r) - u) = 1 for some 1 <= r <= r_max, the local engine
/// must report Z[alpha] p-maximal.
bool frobenius_exponent_flexibility(unsigned n, const Int& u, const Int& p, unsigned r_max,
                                    std::uint64_t seed = 0);

}  // namespace dedcrit
