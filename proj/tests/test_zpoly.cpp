#include "doctest.h"

#include "dedcrit/zpoly.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

using dedcrit::Int;
using oracle::ipow;
using dedcrit::IntPoly;

TEST_CASE("basic arithmetic and normalization")
{
    const IntPoly f{1, 0, 1};
    CHECK(f.degree() == 2);
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK(IntPoly{}.degree() == -1);
    CHECK((f - f).is_zero());
    CHECK(f * IntPoly{-1, 1} == IntPoly{-1, 1, -1, 1});
    CHECK(f.derivative() == IntPoly{0, 2});
    CHECK(f.evaluate(3) == 10);
    CHECK(f.taylor_shift(1) == IntPoly{2, 2, 1});
    CHECK(dedcrit::pow(IntPoly{1, 1}, 3) == IntPoly{1, 3, 3, 1});
    CHECK(dedcrit::content(IntPoly{6, -9, 12}) == 3);

    IntPoly g{4, 6};
    g.divide_exact(2);
    CHECK(g == IntPoly{2, 3});
    CHECK_THROWS_AS(g.divide_exact(2), std::domain_error);
}

TEST_CASE("monic_divmod on named values")
{
    auto d = dedcrit::monic_divmod(IntPoly{1, 0, 1}, IntPoly{-1, 1});
    CHECK(d.quotient == IntPoly{1, 1});
    CHECK(d.remainder == IntPoly{2});

    d = dedcrit::monic_divmod(IntPoly{-5, 0, 1}, IntPoly{1, 1});
    CHECK(d.quotient == IntPoly{-1, 1});
    CHECK(d.remainder == IntPoly{-4});

    d = dedcrit::monic_divmod(IntPoly{-2, 0, 0, 1}, IntPoly{0, 1});
    CHECK(d.quotient == IntPoly{0, 0, 1});
    CHECK(d.remainder == IntPoly{-2});

    CHECK_THROWS_AS(dedcrit::monic_divmod(IntPoly{1, 1}, IntPoly{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(dedcrit::monic_divmod(IntPoly{1, 1}, IntPoly{1}), std::invalid_argument);
}

TEST_CASE("monic_divmod round trip on random inputs")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const IntPoly f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 9), 1000);
        const IntPoly phi = oracle::random_monic(rng, 1 + static_cast<int>(rng() % 4), 50);
        const auto [q, r] = dedcrit::monic_divmod(f, phi);
        CHECK(q * phi + r == f);
        CHECK(r.degree() < phi.degree());
    }
}

TEST_CASE("gauss_valuation")
{
    CHECK(dedcrit::gauss_valuation(IntPoly{-4}, 2) == 2);
    CHECK(dedcrit::gauss_valuation(IntPoly{4, 6, 2}, 2) == 1);
    CHECK(dedcrit::gauss_valuation(IntPoly{2, 1}, 2) == 0);
    CHECK_THROWS_AS(dedcrit::gauss_valuation(IntPoly{}, 2), std::domain_error);
    CHECK_THROWS_AS(dedcrit::gauss_valuation(IntPoly{4}, 6), std::invalid_argument);
}

TEST_CASE("gauss_valuation is additive (Gauss's lemma)")
{
    std::mt19937_64 rng(17);
    const long primes[] = {2, 3, 5, 7};
    for (int i = 0; i < 400; ++i) {
        const Int p = primes[i % 4];
        IntPoly f = oracle::random_poly(rng, static_cast<int>(rng() % 5), 30);
        IntPoly g = oracle::random_poly(rng, static_cast<int>(rng() % 5), 30);
        if (f.is_zero() || g.is_zero()) continue;
        f *= Int(ipow(p.get_ui(), rng() % 3));
        CHECK(dedcrit::gauss_valuation(f * g, p) == dedcrit::gauss_valuation(f, p) + dedcrit::gauss_valuation(g, p));
    }
}

TEST_CASE("discriminant on named values")
{
    CHECK(dedcrit::discriminant(IntPoly{-5, 0, 1}) == 20);
    CHECK(dedcrit::discriminant(IntPoly{-2, 0, 0, 1}) == -108);
    CHECK(dedcrit::discriminant(IntPoly{1, 1, 1}) == -3);
    CHECK(dedcrit::discriminant(IntPoly{1, 0, 0, 1, 0, 0, 1}) == -19683);
    CHECK(dedcrit::discriminant(IntPoly{1, 2, 1}) == 0);
    CHECK_THROWS_AS(dedcrit::discriminant(IntPoly{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(dedcrit::discriminant(IntPoly{1, 1, 2}), std::invalid_argument);
}

TEST_CASE("discriminant matches the Sylvester determinant")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        const IntPoly f = oracle::random_monic(rng, 2 + static_cast<int>(rng() % 6), 60);
        CHECK(dedcrit::discriminant(f) == oracle::sylvester_discriminant(f));
    }
}

TEST_CASE("discriminant of x^n - a matches the closed form")
{
    for (unsigned n = 2; n <= 9; ++n) {
        for (long a = -12; a <= 12; ++a) {
            if (a == 0) continue;
            std::vector<Int> c(n + 1, 0);
            c[0] = -a;
            c[n] = 1;
            Int expected = ipow(n, n) * Int(ipow(static_cast<unsigned long>(a < 0 ? -a : a), n - 1));
            // disc(x^n - a) = (-1)^(n(n-1)/2) n^n (-a)^(n-1)
            const bool neg_power = (-a < 0) && ((n - 1) % 2 == 1);
            if (neg_power) expected = -expected;
            if ((n * (n - 1) / 2) % 2 == 1) expected = -expected;
            CHECK(dedcrit::discriminant(IntPoly(c)) == expected);
        }
    }
}

TEST_CASE("resultant agrees with the Sylvester determinant")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const IntPoly f = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 5), 20);
        const IntPoly g = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 5), 20);
        if (f.degree() < 1 || g.degree() < 1) continue;
        CHECK(dedcrit::resultant(f, g) == oracle::sylvester_resultant(f, g));
    }
}

TEST_CASE("cyclotomic_prime_power")
{
    CHECK(dedcrit::cyclotomic_prime_power(2, 2) == IntPoly{1, 0, 1});
    CHECK(dedcrit::cyclotomic_prime_power(3, 2) == IntPoly{1, 0, 0, 1, 0, 0, 1});
    CHECK(dedcrit::cyclotomic_prime_power(5, 1) == IntPoly{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(dedcrit::cyclotomic_prime_power(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(dedcrit::cyclotomic_prime_power(3, 0), std::invalid_argument);

    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul}) {
        for (unsigned r = 1; r <= 3; ++r) {
            const IntPoly phi = dedcrit::cyclotomic_prime_power(p, r);
            CHECK(phi.evaluate(1) == p);
            const unsigned long q = ipow(p, r).get_ui(), q0 = ipow(p, r - 1).get_ui();
            CHECK(phi.degree() == static_cast<int>(q - q0));
            // Phi * (x^(p^(r-1)) - 1) = x^(p^r) - 1
            CHECK(phi * (IntPoly::monomial(1, q0) - IntPoly{1}) == IntPoly::monomial(1, q) - IntPoly{1});
        }
    }
}

TEST_CASE("phi_adic_expansion")
{
    auto digits = dedcrit::phi_adic_expansion(IntPoly{3, 0, 2, 0, 1}, IntPoly{0, 0, 1});
    REQUIRE(digits.size() == 3);
    CHECK(digits[0] == IntPoly{1});
    CHECK(digits[1] == IntPoly{2});
    CHECK(digits[2] == IntPoly{3});

    digits = dedcrit::phi_adic_expansion(IntPoly{-2, 0, 0, 1}, IntPoly{0, 1});
    REQUIRE(digits.size() == 4);
    CHECK(digits[0] == IntPoly{1});
    CHECK(digits[1].is_zero());
    CHECK(digits[2].is_zero());
    CHECK(digits[3] == IntPoly{-2});

    CHECK_THROWS_AS(dedcrit::phi_adic_expansion(IntPoly{1, 1}, IntPoly{1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(dedcrit::phi_adic_expansion(IntPoly{1, 1, 1}, IntPoly{1, 2}), std::invalid_argument);
}

TEST_CASE("phi_adic_expansion recomposes")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; ++i) {
        const int degree = 1 + static_cast<int>(rng() % 10);
        const IntPoly f = oracle::random_monic(rng, degree, 100);
        const IntPoly phi = oracle::random_monic(rng, 1 + static_cast<int>(rng() % std::min(3, degree)), 10);
        const auto digits = dedcrit::phi_adic_expansion(f, phi);
        IntPoly back;
        for (const auto& a : digits) {
            CHECK(a.degree() < phi.degree());
            back = back * phi + a;
        }
        CHECK(back == f);
    }
}

TEST_CASE("parse_poly accepts both input forms")
{
    CHECK(dedcrit::parse_poly("x^2-5") == IntPoly{-5, 0, 1});
    CHECK(dedcrit::parse_poly(" -x^3 + 2*x - 1 ") == IntPoly{-1, 2, 0, -1});
    CHECK(dedcrit::parse_poly("3x") == IntPoly{0, 3});
    CHECK(dedcrit::parse_poly("x^2 + x^2") == IntPoly{0, 0, 2});
    CHECK(dedcrit::parse_poly("7") == IntPoly{7});
    CHECK(dedcrit::parse_poly("[\"-2\", \"0\", \"0\", \"1\"]") == IntPoly{-2, 0, 0, 1});
    CHECK(dedcrit::parse_poly("[1, 0, 1]") == IntPoly{1, 0, 1});
    CHECK(dedcrit::parse_poly("x^2 + 123456789012345678901234567890") ==
          IntPoly({Int("123456789012345678901234567890"), 0, 1}));
}

TEST_CASE("parse_poly reports the failing column")
{
    const auto position_of = [](std::string_view text) -> std::size_t {
        try {
            dedcrit::parse_poly(text);
        } catch (const dedcrit::ParseError& e) {
            return e.position();
        }
        return 0;
    };
    CHECK(position_of("x^2+") == 5);
    CHECK(position_of("x^2 $ 1") == 5);
    CHECK(position_of("x^") == 3);
    CHECK(position_of("") == 1);
    CHECK(position_of("y+1") == 1);
    CHECK(position_of("[\"1\", \"a\"]") > 0);
    CHECK_THROWS_WITH_AS(dedcrit::parse_poly("x^2+"), doctest::Contains("at position 5"), dedcrit::ParseError);
}

TEST_CASE("to_string round trips through parse_poly")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        const IntPoly f = oracle::random_poly(rng, static_cast<int>(rng() % 7), 20);
        if (f.is_zero()) continue;
        CHECK(dedcrit::parse_poly(f.to_string()) == f);
    }
    CHECK(IntPoly{-5, 0, 1}.to_string() == "x^2 - 5");
    CHECK(IntPoly{0, 3}.to_string() == "3*x");
}
