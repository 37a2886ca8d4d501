#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cqsl2/cyclotomic.hpp"

using namespace cqsl2;

TEST_CASE("q powers reduce modulo the cyclotomic polynomial") {
    CycField F(3);
    REQUIRE(F.degree() == 2);
    REQUIRE(F.q_power(0) == F.one());
    REQUIRE(F.q_power(3) == F.one());
    // zeta^2 = -1 - zeta
    REQUIRE(F.q_power(2) == F.from_coeffs({Rational(-1), Rational(-1)}));
    REQUIRE(F.q_power(-1) == F.q_power(2));

    for (int r : {3, 5, 7}) {
        CycField Fr(r);
        REQUIRE(Fr.eval_cyclotomic(Fr.q_power(1)).is_zero());
        REQUIRE(Fr.q_power(r) == Fr.one());
        REQUIRE(Fr.q_int(r).is_zero());
        REQUIRE((Fr.q_power(5) * Fr.q_power(-5)) == Fr.one());
    }
}

TEST_CASE("q-integers") {
    for (int r : {3, 5, 7}) {
        CycField F(r);
        REQUIRE(F.q_int(2) == F.one() + F.q_power(1));
        REQUIRE(F.q_int(0).is_zero());
        // defining fraction, including negative n
        for (long n = -5; n <= 5; ++n) {
            REQUIRE(F.q_int(n) * (F.one() - F.q_power(1)) ==
                    F.one() - F.q_power(n));
            REQUIRE(F.q_int(n, 2) * (F.one() - F.q_power(2)) ==
                    F.one() - F.q_power(2 * n));
        }
    }
    CycField F3(3);
    REQUIRE(F3.q_int(3).is_zero());
}

TEST_CASE("balanced q-integers") {
    CycField F(5);
    REQUIRE(F.q_bracket_sym(1) == F.one());
    REQUIRE(F.q_bracket_sym(0).is_zero());
    REQUIRE(F.q_bracket_sym(2) == F.q_power(1) + F.q_power(-1));
}

TEST_CASE("mu") {
    CycField F3(3);
    // q^{-2} = zeta at r = 3
    REQUIRE(F3.mu() == F3.one() - F3.q_power(1));
    for (int r : {3, 5, 7, 9}) {
        CycField F(r);
        REQUIRE(!F.mu().is_zero());
        REQUIRE(F.mu() == (F.q_power(2) - F.one()) * F.q_power(-2));
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(7);
    for (int r : {3, 5}) {
        CycField F(r);
        auto rand_scalar = [&] {
            std::vector<Rational> c(F.degree());
            std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
            for (auto& v : c) v = Rational(num(rng), den(rng));
            return F.from_coeffs(std::move(c));
        };
        for (int i = 0; i < 50; ++i) {
            CycScalar x = rand_scalar(), y = rand_scalar(), z = rand_scalar();
            REQUIRE((x * y) * z == x * (y * z));
            REQUIRE(x * (y + z) == x * y + x * z);
            REQUIRE(x + y == y + x);
            if (!x.is_zero()) REQUIRE(x * x.inv() == F.one());
        }
    }
}

TEST_CASE("serialization round trip") {
    std::mt19937 rng(11);
    CycField F(7);
    auto rand_scalar = [&] {
        std::vector<Rational> c(F.degree());
        std::uniform_int_distribution<int> num(-99, 99), den(1, 99);
        for (auto& v : c) v = Rational(num(rng), den(rng));
        return F.from_coeffs(std::move(c));
    };
    for (int i = 0; i < 50; ++i) {
        CycScalar x = rand_scalar();
        REQUIRE(F.parse(x.to_strings()) == x);
    }
    REQUIRE(parse_rational("-2/1") == Rational(-2));
    REQUIRE(rational_string(Rational(1, 3)) == "1/3");
}

TEST_CASE("inverse of zero is rejected") {
    CycField F(3);
    REQUIRE_THROWS(F.zero().inv());
}

TEST_CASE("higher cyclotomic fields") {
    CycField F9(9);
    REQUIRE(F9.degree() == 6);  // phi(9)
    REQUIRE(F9.eval_cyclotomic(F9.q_power(1)).is_zero());
    REQUIRE(F9.q_power(9) == F9.one());
    // q is primitive: q^3 != 1
    REQUIRE(F9.q_power(3) != F9.one());
}
