#include "doctest.h"

#include "dedcrit/purepower.hpp"
#include "oracles.hpp"

#include <stdexcept>

using dedcrit::Int;
using dedcrit::IntPoly;
using dedcrit::PurePowerFailure;
using dedcrit::Verdict;

TEST_CASE("pure_power_poly")
{
    CHECK(dedcrit::pure_power_poly(3, 2) == IntPoly{-2, 0, 0, 1});
    CHECK(dedcrit::pure_power_poly(2, -1) == IntPoly{1, 0, 1});
}

TEST_CASE("pure_power_irreducible")
{
    CHECK(dedcrit::pure_power_irreducible(2, 5));
    CHECK(dedcrit::pure_power_irreducible(2, -1));
    CHECK_FALSE(dedcrit::pure_power_irreducible(2, 4));
    CHECK_FALSE(dedcrit::pure_power_irreducible(3, 8));
    CHECK_FALSE(dedcrit::pure_power_irreducible(3, -27));
    CHECK_FALSE(dedcrit::pure_power_irreducible(6, 9));     // x^6 - 9 = (x^3 - 3)(x^3 + 3)
    CHECK_FALSE(dedcrit::pure_power_irreducible(4, -4));    // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
    CHECK_FALSE(dedcrit::pure_power_irreducible(8, -64));   // -64 = -4 * 2^4
    CHECK_FALSE(dedcrit::pure_power_irreducible(4, 4));
    CHECK(dedcrit::pure_power_irreducible(4, -1));
    CHECK(dedcrit::pure_power_irreducible(4, -16));  // -16 is not -4 times a fourth power
    CHECK(dedcrit::pure_power_irreducible(6, -3));
}

TEST_CASE("reducible pure powers stay reducible modulo good primes")
{
    for (unsigned n = 2; n <= 8; ++n) {
        for (long u = -30; u <= 30; ++u) {
            if (u == 0 || dedcrit::pure_power_irreducible(n, u)) continue;
            const IntPoly f = dedcrit::pure_power_poly(n, u);
            for (long p : {3, 5, 7, 11, 13, 17, 19, 23}) {
                if ((static_cast<long>(n) * u) % p == 0) continue;
                CHECK_FALSE(dedcrit::is_irreducible_mod_p(dedcrit::reduce_mod_p(f, p)));
            }
        }
    }
}

TEST_CASE("thm3_sufficient")
{
    CHECK(dedcrit::thm3_sufficient(6, 6));
    CHECK_FALSE(dedcrit::thm3_sufficient(2, 4));
    CHECK_FALSE(dedcrit::thm3_sufficient(2, 12));
    CHECK_FALSE(dedcrit::thm3_sufficient(3, 2));
    CHECK_FALSE(dedcrit::thm3_sufficient(6, 10));
    // a = 6 is squarefree and 2 | 6, so the hypothesis holds for n = 4
    CHECK(dedcrit::thm3_sufficient(4, 6));
    CHECK(dedcrit::thm3_sufficient(5, -10));
    CHECK_THROWS_AS(dedcrit::thm3_sufficient(1, 2), std::invalid_argument);
}

TEST_CASE("cor5_exact on named values")
{
    auto v = dedcrit::cor5_exact(2, 5);
    CHECK(v.verdict == Verdict::not_maximal);
    CHECK(v.failing_prime == Int(2));
    CHECK(v.reason == PurePowerFailure::frobenius_val_not_one);

    v = dedcrit::cor5_exact(2, 7);
    CHECK(v.verdict == Verdict::maximal);
    CHECK_FALSE(v.failing_prime.has_value());

    v = dedcrit::cor5_exact(2, 6);
    CHECK(v.verdict == Verdict::maximal);

    v = dedcrit::cor5_exact(2, 12);
    CHECK(v.verdict == Verdict::not_maximal);
    CHECK(v.failing_prime == Int(2));
    CHECK(v.reason == PurePowerFailure::nu_u_not_one);

    CHECK_THROWS_AS(dedcrit::cor5_exact(2, 9), std::domain_error);
    CHECK_THROWS_AS(dedcrit::cor5_exact(2, 0), std::invalid_argument);
}

TEST_CASE("cor5_exact agrees with the global engine")
{
    for (unsigned n = 2; n <= 6; ++n) {
        for (long u = -15; u <= 15; ++u) {
            if (u == 0 || !dedcrit::pure_power_irreducible(n, u)) continue;
            const auto v = dedcrit::cor5_exact(n, u);
            const auto cert = dedcrit::is_maximal_global(dedcrit::pure_power_poly(n, u));
            INFO("n = " << n << ", u = " << u);
            CHECK(v.verdict == cert.verdict);
        }
    }
}

TEST_CASE("thm3_sufficient implies maximal")
{
    for (unsigned n = 2; n <= 8; ++n) {
        for (long a = -30; a <= 30; ++a) {
            if (a == 0 || !dedcrit::pure_power_irreducible(n, a)) continue;
            if (!dedcrit::thm3_sufficient(n, a)) continue;
            INFO("n = " << n << ", a = " << a);
            CHECK(dedcrit::is_maximal_global(dedcrit::pure_power_poly(n, a)).verdict == Verdict::maximal);
        }
    }
}

TEST_CASE("frobenius_exponent_flexibility")
{
    CHECK(dedcrit::frobenius_exponent_flexibility(2, 7, 2, 4));
    CHECK(dedcrit::frobenius_exponent_flexibility(2, 5, 2, 4));
    CHECK(dedcrit::frobenius_exponent_flexibility(3, 2, 3, 3));
    CHECK(dedcrit::frobenius_exponent_flexibility(6, 5, 3, 3));
    CHECK_THROWS_AS(dedcrit::frobenius_exponent_flexibility(3, 2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(dedcrit::frobenius_exponent_flexibility(3, 6, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(dedcrit::frobenius_exponent_flexibility(2, 7, 2, 0), std::invalid_argument);

    // 5^(2^r) - 5 = 4 mod 8 for every r
    for (unsigned r = 1; r <= 5; ++r) {
        Int q = 1;
        for (unsigned i = 0; i < r; ++i) q *= 2;
        Int v;
        mpz_pow_ui(v.get_mpz_t(), Int(5).get_mpz_t(), q.get_ui());
        CHECK(oracle::valuation(v - 5, 2) == 2);
    }
}
