#include "qswap/scalar.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qswap;

TEST_CASE("field arithmetic basics") {
    Scalar inv_sqrt2 = Scalar::sqrt2(1, 2);
    CHECK(inv_sqrt2 * inv_sqrt2 == Scalar::rational(1, 2));

    Scalar one_plus = Scalar(1) + Scalar::sqrt2();
    Scalar one_minus = Scalar(1) - Scalar::sqrt2();
    CHECK(one_plus * one_minus == Scalar(-1));

    CHECK(Scalar::rational(3, 4).inverse() == Scalar::rational(4, 3));
    CHECK(Scalar::sqrt2().inverse() == Scalar::sqrt2(1, 2));

    CHECK((Scalar(1) + Scalar::sqrt2()) / (Scalar(1) + Scalar::sqrt2()) == Scalar(1));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("abs_square of real amplitudes") {
    Scalar a = Scalar::rational(1, 2) - Scalar::sqrt2(1, 3);
    CHECK(a.abs_square() == a * a);
    CHECK(a.abs_square().sign() >= 0);
}

TEST_CASE("canonical equality") {
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
    CHECK(Scalar::sqrt2(2, 2) == Scalar::sqrt2());
    CHECK(Scalar::rational(1, 2) != Scalar::sqrt2(1, 2));
}

TEST_CASE("sign of mixed values") {
    CHECK(Scalar(0).sign() == 0);
    CHECK((Scalar(1) - Scalar::sqrt2()).sign() == -1);   // 1 < sqrt2
    CHECK((Scalar(2) - Scalar::sqrt2()).sign() == 1);    // 2 > sqrt2
    CHECK((Scalar::sqrt2() - Scalar(1)).sign() == 1);
    CHECK((-Scalar::sqrt2(1, 100)).sign() == -1);
}

TEST_CASE("exact square roots in the field") {
    CHECK(Scalar::rational(9, 16).sqrt() == Scalar::rational(3, 4));
    CHECK(Scalar::rational(25, 16).sqrt() == Scalar::rational(5, 4));
    CHECK(Scalar::rational(1, 2).sqrt() == Scalar::sqrt2(1, 2));
    // (1 + 1/sqrt2)^2 = 3/2 + sqrt2
    Scalar v = Scalar::rational(3, 2) + Scalar::sqrt2();
    CHECK(v.sqrt() == Scalar(1) + Scalar::sqrt2(1, 2));
    CHECK_FALSE(Scalar(3).sqrt().has_value());
    CHECK_FALSE(Scalar::rational(1, 6).sqrt().has_value());
    CHECK_FALSE((-Scalar(4)).sqrt().has_value());
    CHECK(Scalar(0).sqrt() == Scalar(0));
}

TEST_CASE("to_double tracks the exact value") {
    CHECK(Scalar::rational(2, 9).to_double() == doctest::Approx(2.0 / 9).epsilon(1e-14));
    Scalar v = Scalar::rational(3, 7) + Scalar::sqrt2(5, 11);
    double expected = 3.0 / 7 + 5.0 / 11 * std::sqrt(2.0);
    CHECK(v.to_double() == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937_64 rng(7);
    auto random_scalar = [&rng] {
        auto r = [&rng] {
            return Rational(static_cast<long>(rng() % 19) - 9,
                            static_cast<long>(rng() % 7) + 1);
        };
        return Scalar(r(), r());
    };
    for (int i = 0; i < 200; ++i) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}
