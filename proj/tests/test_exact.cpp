#include "cvlab/exact.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

namespace {

using cvlab::BigInt;
using cvlab::GaussianRational;
using cvlab::Rational;
using cvlab::binomial;
using cvlab::make_rational;
using cvlab::parse_bigint;
using cvlab::parse_gaussian;
using cvlab::parse_rational;
using cvlab::to_string;

Rational random_rational(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 8);
    return make_rational(BigInt(num(gen)), BigInt(den(gen)));
}

GaussianRational random_gaussian(std::mt19937_64& gen) {
    return {random_rational(gen), random_rational(gen)};
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("binomial pinned values") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(7, 7) == 1);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
    CHECK_THROWS_AS(binomial(-5, 2), std::domain_error);
}

TEST_CASE("binomial satisfies the Pascal recurrence up to 64") {
    for (std::int64_t n = 1; n <= 64; ++n)
        for (std::int64_t k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial absorption identities") {
    for (std::int64_t n = 1; n <= 40; ++n)
        for (std::int64_t m = 0; m <= n; ++m)
            CHECK(BigInt(m) * binomial(n, m) == BigInt(n) * binomial(n - 1, m - 1));
    for (std::int64_t n = 2; n <= 40; ++n)
        for (std::int64_t m = 0; m <= n; ++m)
            CHECK(BigInt(m) * (m - 1) * binomial(n, m) ==
                  BigInt(n) * (n - 1) * binomial(n - 2, m - 2));
}

TEST_CASE("make_rational canonicalizes and rejects zero denominators") {
    CHECK(make_rational(BigInt(4), BigInt(6)) == Rational(2, 3));
    CHECK(make_rational(BigInt(-4), BigInt(-6)) == Rational(2, 3));
    CHECK(make_rational(BigInt(0), BigInt(7)) == 0);
    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("gaussian rational pinned arithmetic") {
    const GaussianRational i{Rational(0), Rational(1)};
    CHECK(i.abs_sq() == 1);
    CHECK(i * i == GaussianRational(-1L));
    CHECK((GaussianRational(1L) + i) * (GaussianRational(1L) - i) ==
          GaussianRational(2L));
    CHECK(GaussianRational(2L).pow(3) == GaussianRational(8L));
    CHECK((GaussianRational(1L) + i).pow(4) == GaussianRational(-4L));
    CHECK(GaussianRational(5L).pow(0) == GaussianRational(1L));
    CHECK(i.conj() == GaussianRational{Rational(0), Rational(-1)});
    CHECK(i.is_zero() == false);
    CHECK(GaussianRational().is_zero());
    CHECK(GaussianRational(3L).is_real());
    CHECK_FALSE(i.is_real());
}

TEST_CASE("gaussian rational division") {
    const GaussianRational a{Rational(3), Rational(-2)};
    const GaussianRational b{Rational(1, 2), Rational(5)};
    CHECK((a / b) * b == a);
    CHECK(a / GaussianRational(1L) == a);
    CHECK_THROWS_AS(a / GaussianRational(), std::domain_error);
}

TEST_CASE("gaussian rationals form a field (randomized)") {
    std::mt19937_64 gen(20260816);
    for (int trial = 0; trial < 200; ++trial) {
        const GaussianRational a = random_gaussian(gen);
        const GaussianRational b = random_gaussian(gen);
        const GaussianRational c = random_gaussian(gen);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).abs_sq() == a.abs_sq() * b.abs_sq());
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a * a.conj() == GaussianRational(a.abs_sq()));
        CHECK(a - a == GaussianRational());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("pow matches repeated multiplication") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        const GaussianRational a = random_gaussian(gen);
        GaussianRational by_hand(1L);
        for (unsigned e = 0; e <= 6; ++e) {
            CHECK(a.pow(e) == by_hand);
            by_hand *= a;
        }
    }
}

TEST_CASE("to_string formats") {
    CHECK(to_string(BigInt(-17)) == "-17");
    CHECK(to_string(Rational(2, 3)) == "2/3");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(GaussianRational(3L)) == "3");
    CHECK(to_string(GaussianRational{Rational(0), Rational(1)}) == "0+1i");
    CHECK(to_string(GaussianRational{Rational(0), Rational(-1)}) == "0-1i");
    CHECK(to_string(GaussianRational{Rational(2, 3), Rational(-1, 2)}) ==
          "2/3-1/2i");
}

TEST_CASE("parsing pinned forms") {
    CHECK(parse_bigint("42") == 42);
    CHECK(parse_bigint("+42") == 42);
    CHECK(parse_bigint("-42") == -42);
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_gaussian("1") == GaussianRational(1L));
    CHECK(parse_gaussian("0+1i") == GaussianRational{Rational(0), Rational(1)});
    CHECK(parse_gaussian("i") == GaussianRational{Rational(0), Rational(1)});
    CHECK(parse_gaussian("-i") == GaussianRational{Rational(0), Rational(-1)});
    CHECK(parse_gaussian("1i") == GaussianRational{Rational(0), Rational(1)});
    CHECK(parse_gaussian("5i") == parse_gaussian("0+5i"));
    CHECK(parse_gaussian("2/3-1/2i") ==
          GaussianRational{Rational(2, 3), Rational(-1, 2)});
    CHECK(parse_gaussian("-1/2+3i") ==
          GaussianRational{Rational(-1, 2), Rational(3)});
    CHECK(parse_gaussian("1+i") == GaussianRational{Rational(1), Rational(1)});
}

TEST_CASE("parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_bigint(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bigint("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_gaussian(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("xi"), std::invalid_argument);
}

TEST_CASE("to_string and parse_gaussian round-trip (randomized)") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 300; ++trial) {
        const GaussianRational a = random_gaussian(gen);
        CHECK(parse_gaussian(to_string(a)) == a);
    }
}

TEST_CASE("GaussianLess is a strict total order consistent with equality") {
    const cvlab::GaussianLess less;
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const GaussianRational a = random_gaussian(gen);
        const GaussianRational b = random_gaussian(gen);
        CHECK_FALSE(less(a, a));
        if (a == b) {
            CHECK_FALSE(less(a, b));
            CHECK_FALSE(less(b, a));
        } else {
            CHECK(less(a, b) != less(b, a));
        }
    }
}

}  // TEST_SUITE
