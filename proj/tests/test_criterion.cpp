#include "doctest.h"

#include "dedcrit/criterion.hpp"
#include "oracles.hpp"

#include <random>
#include <stdexcept>

using dedcrit::Int;
using dedcrit::IntPoly;
using dedcrit::Verdict;

TEST_CASE("local_maximality on named values")
{
    auto r = dedcrit::local_maximality(IntPoly{-5, 0, 1}, 2);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].multiplicity == 2);
    CHECK(r.factors[0].remainder == IntPoly{-4});
    CHECK(r.factors[0].remainder_valuation == 2u);
    CHECK_FALSE(r.locally_maximal);

    r = dedcrit::local_maximality(IntPoly{-7, 0, 1}, 2);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].remainder == IntPoly{-6});
    CHECK(r.factors[0].remainder_valuation == 1u);
    CHECK(r.locally_maximal);

    r = dedcrit::local_maximality(IntPoly{-2, 0, 0, 1}, 2);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].multiplicity == 3);
    CHECK(r.factors[0].remainder == IntPoly{-2});
    CHECK(r.locally_maximal);

    // factors with l = 1 need no remainder valuation
    r = dedcrit::local_maximality(IntPoly{1, 0, 1}, 5);
    CHECK(r.factors.size() == 2);
    for (const auto& ev : r.factors) {
        CHECK(ev.multiplicity == 1);
        CHECK_FALSE(ev.remainder_valuation.has_value());
        CHECK(ev.satisfied);
    }
    CHECK(r.locally_maximal);
}

TEST_CASE("local_maximality preconditions")
{
    CHECK_THROWS_AS(dedcrit::local_maximality(IntPoly{1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(dedcrit::local_maximality(IntPoly{1, 0, 1}, 4), std::invalid_argument);
    // reducible input with a nonzero remainder: -4 has valuation 2
    CHECK_FALSE(dedcrit::local_maximality(IntPoly{-4, 0, 1}, 2).locally_maximal);
    // (x + 1)^2 leaves remainder zero under the lift x + 1
    CHECK_THROWS_AS(dedcrit::local_maximality(IntPoly{1, 2, 1}, 2), std::domain_error);
}

TEST_CASE("classical_dedekind_oracle on named values")
{
    CHECK_FALSE(dedcrit::classical_dedekind_oracle(IntPoly{-5, 0, 1}, 2));
    CHECK(dedcrit::classical_dedekind_oracle(IntPoly{-7, 0, 1}, 2));
    CHECK(dedcrit::classical_dedekind_oracle(IntPoly{1, 0, 1}, 3));
}

TEST_CASE("is_maximal_global on named values")
{
    const IntPoly phi9{1, 0, 0, 1, 0, 0, 1};
    auto cert = dedcrit::is_maximal_global(phi9);
    CHECK(cert.verdict == Verdict::maximal);
    REQUIRE(cert.checked_primes.size() == 1);
    CHECK(cert.checked_primes[0].p == 3);
    REQUIRE(cert.checked_primes[0].factors.size() == 1);
    CHECK(cert.checked_primes[0].factors[0].remainder == IntPoly{3});

    cert = dedcrit::is_maximal_global(IntPoly{-5, 0, 1});
    CHECK(cert.verdict == Verdict::not_maximal);
    REQUIRE(cert.checked_primes.size() == 1);
    CHECK(cert.checked_primes[0].p == 2);
    CHECK_FALSE(cert.checked_primes[0].locally_maximal);

    cert = dedcrit::is_maximal_global(IntPoly{-2, 0, 0, 1});
    CHECK(cert.verdict == Verdict::maximal);
    CHECK(cert.disc == -108);
    REQUIRE(cert.checked_primes.size() == 2);
    CHECK(cert.checked_primes[0].p == 2);
    CHECK(cert.checked_primes[1].p == 3);
    CHECK(cert.irreducibility == dedcrit::IrreducibilityStatus::certified_eisenstein);
}

TEST_CASE("is_maximal_global on classical examples")
{
    // Z[sqrt(-3)] has index 2 in the Eisenstein integers
    CHECK(dedcrit::is_maximal_global(IntPoly{3, 0, 1}).verdict == Verdict::not_maximal);
    CHECK(dedcrit::is_maximal_global(IntPoly{1, 0, 1}).verdict == Verdict::maximal);
    CHECK(dedcrit::is_maximal_global(IntPoly{1, 1, 1}).verdict == Verdict::maximal);
    // 2 is a common index divisor of the cubic field of x^3 - x^2 - 2x - 8
    const auto cert = dedcrit::is_maximal_global(IntPoly{-8, -2, -1, 1});
    CHECK(cert.verdict == Verdict::not_maximal);
    bool failed_at_2 = false;
    for (const auto& r : cert.checked_primes)
        if (r.p == 2) failed_at_2 = !r.locally_maximal;
    CHECK(failed_at_2);
    // squarefree discriminant: nothing to check
    const auto sq = dedcrit::is_maximal_global(IntPoly{-1, -1, 0, 1});
    CHECK(sq.disc == -23);
    CHECK(sq.checked_primes.empty());
    CHECK(sq.verdict == Verdict::maximal);
}

TEST_CASE("is_maximal_global rejects a zero discriminant")
{
    CHECK_THROWS_AS(dedcrit::is_maximal_global(IntPoly{1, 2, 1}), std::domain_error);
    CHECK_THROWS_AS(dedcrit::is_maximal_global(IntPoly{1, 1}), std::invalid_argument);
}

TEST_CASE("screen_irreducibility")
{
    using dedcrit::IrreducibilityStatus;
    CHECK(dedcrit::screen_irreducibility(IntPoly{-2, 0, 0, 1}, -108) == IrreducibilityStatus::certified_eisenstein);
    // x^2 + 1 becomes Eisenstein at 2 after x -> x + 1
    CHECK(dedcrit::screen_irreducibility(IntPoly{1, 0, 1}, -4) == IrreducibilityStatus::certified_eisenstein);
    const IntPoly f{-1, -1, 0, 1};
    CHECK(dedcrit::screen_irreducibility(f, dedcrit::discriminant(f)) == IrreducibilityStatus::certified_modp);
    // x^4 + 1 is reducible modulo every prime and Eisenstein only after a shift
    const IntPoly g{1, 0, 0, 0, 1};
    CHECK(dedcrit::screen_irreducibility(g, dedcrit::discriminant(g)) == IrreducibilityStatus::certified_eisenstein);
}

TEST_CASE("local criterion agrees with the classical criterion")
{
    std::mt19937_64 rng(31);
    int compared = 0;
    for (int i = 0; i < 400; ++i) {
        const IntPoly f = oracle::random_monic(rng, 2 + static_cast<int>(rng() % 4), 20);
        const Int disc = dedcrit::discriminant(f);
        if (disc == 0) continue;
        for (const Int p : {2, 3, 5, 7}) {
            if (oracle::valuation(disc, p) < 2) continue;
            bool reducible = false;
            dedcrit::LocalReport r;
            try {
                r = dedcrit::local_maximality(f, p, i);
            } catch (const std::domain_error&) {
                reducible = true;
            }
            if (reducible) continue;
            CHECK(r.locally_maximal == dedcrit::classical_dedekind_oracle(f, p, i));
            ++compared;
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("lift_stability_check")
{
    const IntPoly phi9{1, 0, 0, 1, 0, 0, 1};
    CHECK(dedcrit::lift_stability_check(IntPoly{-5, 0, 1}, 2, 0, 10));
    CHECK(dedcrit::lift_stability_check(IntPoly{-7, 0, 1}, 2, 0, 10));
    CHECK(dedcrit::lift_stability_check(phi9, 3, 0, 10));
    CHECK(dedcrit::lift_stability_check(IntPoly{-8, -2, -1, 1}, 2, 0, 10));
    CHECK_THROWS_AS(dedcrit::lift_stability_check(IntPoly{-5, 0, 1}, 2, 3, 10), std::out_of_range);
    CHECK_THROWS_AS(dedcrit::lift_stability_check(IntPoly{1, 0, 1}, 5, 0, 10), std::invalid_argument);
}

TEST_CASE("to_string of verdicts")
{
    CHECK(dedcrit::to_string(Verdict::maximal) == "maximal");
    CHECK(dedcrit::to_string(Verdict::not_maximal) == "not-maximal");
    CHECK(dedcrit::to_string(Verdict::unknown) == "unknown");
    CHECK(dedcrit::to_string(dedcrit::IrreducibilityStatus::assumed) == "assumed");
}
