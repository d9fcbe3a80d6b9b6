#include <catch2/catch_amalgamated.hpp>

#include "polyinv/rational.hpp"

using polyinv::Rat;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rat(6, 8) == Rat(3, 4));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0).to_fraction_string() == "0/1");
    CHECK(Rat(-2, 3).to_fraction_string() == "-2/3");
    CHECK(Rat(5).to_string() == "5");
    CHECK(Rat(5, 2).to_string() == "5/2");
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 3) - Rat(1, 3) == Rat(0));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 7) / Rat(2, 7) == Rat(1, 2));
    CHECK(-Rat(3, 5) == Rat(-3, 5));
    // A sum that floating point cannot represent exactly.
    Rat tenth(1, 10);
    Rat sum(0);
    for (int i = 0; i < 10; ++i) sum += tenth;
    CHECK(sum == Rat(1));
}

TEST_CASE("rational error cases") {
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
    CHECK_THROWS_AS(Rat::from_strings("1x", "2"), std::invalid_argument);
}

TEST_CASE("string construction") {
    CHECK(Rat::from_strings("-6", "8") == Rat(-3, 4));
    CHECK(Rat::from_strings("123456789123456789", "3") ==
          Rat::from_strings("41152263041152263", "1"));
}

TEST_CASE("factorials") {
    CHECK(polyinv::factorial(0) == 1);
    CHECK(polyinv::factorial(4) == 24);
    CHECK(polyinv::factorial(20) == mpz_class("2432902008176640000"));
}
