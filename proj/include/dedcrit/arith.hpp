#pragma once

// Integer utilities: primality, factorization and p-adic valuation.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace dedcrit {

using Int = mpz_class;

struct PrimePower {
    Int prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/**
 * Factored nonzero integer.
 *
 * sign * prod(prime^exponent) * cofactor == the factored value. When
 * `complete` is false the cofactor is a composite that resisted Pollard rho;
 * otherwise it is 1.
 */
struct PrimeFactorization {
    int sign = 1;
    std::vector<PrimePower> factors;
    bool complete = true;
    Int cofactor = 1;

    Int reconstruct() const;
    // Exponent of p among the found factors (0 if absent).
    unsigned exponent_of(const Int& p) const;
};

/// Largest k with p^k | n. Throws std::domain_error for n == 0 and
/// std::invalid_argument when p is not prime.
unsigned valuation_int(const Int& n, const Int& p);

/// Deterministic Miller-Rabin below 2^64, Baillie-PSW above.
/// Throws std::invalid_argument for n < 2.
bool is_prime(const Int& n);

/// Trial division up to 10^6 followed by Brent's variant of Pollard rho,
/// seeded from the input.
PrimeFactorization factor(const Int& n);

/// Squarefree test on |n| (n != 0). Returns false if the factorization was
/// incomplete and nothing conclusive was found.
bool is_squarefree(const Int& n);

/// Primes up to `bound` (inclusive, at most 10^6), ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

namespace detail {
// valuation without the primality check, n != 0, p >= 2
unsigned valuation_unchecked(const Int& n, const Int& p);
}  // namespace detail

}  // namespace dedcrit
