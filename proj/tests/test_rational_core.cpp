#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radkit/rational.hpp"

#include <random>

using namespace radkit;

namespace {

Rat rand_rat(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> n(-20, 20), d(1, 12);
    return make_rat(Int(n(rng)), Int(d(rng)));
}

} // namespace

TEST_CASE("make_rat and parse_rat") {
    CHECK(make_rat(Int(2), Int(-4)) == Rat(-1, 2));
    CHECK(parse_rat("-3/4") == Rat(-3, 4));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(rat_to_string(Rat(-3, 4)) == "-3/4");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("gcd_rat examples") {
    CHECK(gcd_rat({Rat(1, 3), Rat(1, 4)}) == Rat(1, 12));
    CHECK(gcd_rat({}) == Rat(0));
    CHECK(gcd_rat({Rat(1), Rat(1, 2), Rat(1, 3), Rat(1, 4), Rat(1, 2), Rat(1, 6)}) ==
          Rat(1, 12));
    CHECK(gcd_rat({Rat(0), Rat(0)}) == Rat(0));
    CHECK(gcd_rat({Rat(0), Rat(-2, 3)}) == Rat(2, 3));
}

TEST_CASE("gcd_rat divides inputs and lies in their Z-span") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        std::vector<Rat> xs;
        int len = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < len; ++i) xs.push_back(rand_rat(rng));
        Rat g = gcd_rat(xs);
        bool all_zero = true;
        for (const auto &x : xs) all_zero = all_zero && x == 0;
        if (all_zero) {
            CHECK(g == 0);
            continue;
        }
        CHECK(g > 0);
        // g divides every input
        for (const auto &x : xs) CHECK(is_integer(x / g));
        // g in the Z-span: after clearing by a common denominator L, the
        // integer gcd of the scaled inputs equals g * L
        Int L(1);
        for (const auto &x : xs) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), den(x).get_mpz_t());
        Int acc(0);
        for (const auto &x : xs) {
            Rat s = x * Rat(L);
            REQUIRE(is_integer(s));
            mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), num(s).get_mpz_t());
        }
        CHECK(Rat(acc) == g * Rat(L));
    }
}

TEST_CASE("Rat field axioms on random triples") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        Rat a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == 0);
        if (a != 0) CHECK(a * (Rat(1) / a) == 1);
    }
}

TEST_CASE("Angle normalization and group law") {
    CHECK(Angle(Rat(-1, 3)).value() == Rat(2, 3)); // -t stored as 1 - t
    CHECK(Angle(Rat(7, 3)).value() == Rat(1, 3));
    CHECK(Angle(Rat(1, 2)).is_half());
    CHECK((Angle(Rat(1, 2)) + Angle(Rat(2, 3))).value() == Rat(1, 6));
    CHECK((Angle(Rat(1, 4)) - Angle(Rat(1, 2))).value() == Rat(3, 4));
    CHECK((-Angle(Rat(1, 3))).value() == Rat(2, 3));
    CHECK((Angle(Rat(5, 12)) * Int(12)).is_zero());

    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        Angle a(rand_rat(rng)), b(rand_rat(rng)), c(rand_rat(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a + (-a)).is_zero());
        // order = reduced denominator; n*a = 0 iff order | n
        Int ord = a.order();
        CHECK(ord == a.value().get_den());
        for (Int n = 1; n <= 12; ++n)
            CHECK((a * n).is_zero() == (ord != 0 && n % ord == 0));
    }
}

TEST_CASE("red and ered") {
    CHECK(red(Int(12)) == 6);
    CHECK(ered(Int(12)) == 12);
    CHECK(red(Int(8)) == 2);
    CHECK(ered(Int(8)) == 4);
    CHECK(red(Int(6)) == 6);
    CHECK(ered(Int(6)) == 6);
    CHECK(red(Int(1)) == 1);
    CHECK(ered(Int(1)) == 1);
    for (int n = 1; n <= 100; ++n) {
        Int r = red(Int(n)), e = ered(Int(n));
        CHECK((e == r || e == 2 * r));
        CHECK((e == (n % 4 == 0 ? 2 * r : r)));
    }
}

TEST_CASE("factorize examples and reconstruction") {
    auto f24 = factorize(Int(24));
    REQUIRE(f24.factors.size() == 2);
    CHECK(f24.factors[0] == std::pair<Int, unsigned>{Int(2), 3u});
    CHECK(f24.factors[1] == std::pair<Int, unsigned>{Int(3), 1u});

    CHECK(factorize(Int(1)).factors.empty());

    auto big = factorize(Int(390624));
    REQUIRE(big.factors.size() == 4);
    CHECK(big.factors[0] == std::pair<Int, unsigned>{Int(2), 5u});
    CHECK(big.factors[1] == std::pair<Int, unsigned>{Int(3), 1u});
    CHECK(big.factors[2] == std::pair<Int, unsigned>{Int(13), 1u});
    CHECK(big.factors[3] == std::pair<Int, unsigned>{Int(313), 1u});
    CHECK(big.value() == 390624);
    for (const auto &[p, m] : big.factors) CHECK(is_prime(p));

    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
        Int n = Int(1 + rng() % 1000000);
        auto f = factorize(n);
        CHECK(f.value() == n);
        Int prev(1);
        for (const auto &[p, m] : f.factors) {
            CHECK(is_prime(p));
            CHECK(p > prev);
            CHECK(m >= 1);
            prev = p;
        }
    }
    CHECK(factorize(Int(-24)).value() == 24);
}

TEST_CASE("primality spot checks") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(31)));
    CHECK(is_prime(Int(313)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(0)));
    CHECK_FALSE(is_prime(Int(91))); // 7 * 13
}

TEST_CASE("cyclotomic unitary grading table up to 48") {
    // independent oracle: strip factors of 2, then at most one factor of 3
    auto oracle = [](int n) {
        while (n % 2 == 0) n /= 2;
        if (n % 3 == 0) n /= 3;
        return n == 1;
    };
    for (int n = 1; n <= 48; ++n)
        CHECK(cyclotomic_has_unitary_grading(Int(n)) == oracle(n));
    CHECK(cyclotomic_has_unitary_grading(Int(24)));
    CHECK_FALSE(cyclotomic_has_unitary_grading(Int(9)));
    CHECK(cyclotomic_has_unitary_grading(Int(1)));
}
