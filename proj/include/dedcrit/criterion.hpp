#pragma once

// Maximality of Z[alpha] for a root alpha of a monic irreducible f in Z[x].
//
// Locally at p: factor f mod p as prod(phi_i^l_i), lift each phi_i to a monic
// integer polynomial and take the remainder R_i of f by that lift. Z[alpha] is
// p-maximal iff every factor has l_i = 1 or v_p(R_i) = 1. Globally only the
// primes whose square divides disc(f) need checking.

#include "dedcrit/arith.hpp"
#include "dedcrit/fppoly.hpp"
#include "dedcrit/zpoly.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace dedcrit {

enum class Verdict { maximal, not_maximal, unknown };

enum class IrreducibilityStatus { certified_eisenstein, certified_modp, assumed };

std::string_view to_string(Verdict v);
std::string_view to_string(IrreducibilityStatus s);

struct FactorEvidence {
    FpPoly phi_bar;
    unsigned multiplicity = 0;
    IntPoly lift;
    IntPoly remainder;
    // Only computed when multiplicity >= 2.
    std::optional<unsigned> remainder_valuation;
    bool satisfied = false;
};

struct LocalReport {
    Int p;
    std::vector<FactorEvidence> factors;
    bool locally_maximal = false;
};

struct Certificate {
    IntPoly f;
    Int disc;
    PrimeFactorization disc_factorization;
    std::vector<LocalReport> checked_primes;
    Verdict verdict = Verdict::unknown;
    IrreducibilityStatus irreducibility = IrreducibilityStatus::assumed;
};

/// Remainder-valuation check at p. f must be monic of degree >= 2 and is
/// assumed irreducible over Q.
LocalReport local_maximality(const IntPoly& f, const Int& p, std::uint64_t seed = 0);

/// Classical Dedekind criterion: with g = prod(phi_i), h = f/g mod p and
/// T = (g h - f)/p for monic lifts, p-maximal iff gcd(T, g, h) = 1 mod p.
bool classical_dedekind_oracle(const IntPoly& f, const Int& p, std::uint64_t seed = 0);

/// Cheap irreducibility certificates: Eisenstein at some p <= 1000 for f(x),
/// f(x+1) or f(x-1), then irreducibility mod a prime p <= 100 not dividing
/// disc. Anything else is `assumed`.
IrreducibilityStatus screen_irreducibility(const IntPoly& f, const Int& disc);

/// Checks every prime p with p^2 | disc(f). Throws std::domain_error when
/// disc(f) = 0.
Certificate is_maximal_global(const IntPoly& f, std::uint64_t seed = 0);

/// Re-evaluates [v_p(R_i) = 1] for `trials` random lifts phi + p*H,
/// deg H < deg phi, and compares with the canonical lift.
bool lift_stability_check(const IntPoly& f, const Int& p, std::size_t factor_index, unsigned trials,
                          std::uint64_t seed = 0);

}  // namespace dedcrit
