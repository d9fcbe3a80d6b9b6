#include <catch2/catch_amalgamated.hpp>

#include "maps.hpp"
#include "polyinv/nilpotency.hpp"

using namespace polyinv;
using testmaps::v;

TEST_CASE("weak index by symbolic Jacobian powers") {
    CHECK(weak_index(testmaps::quad2()) == 2);
    CHECK(weak_index(testmaps::tri3()) == 3);
    CHECK(weak_index(testmaps::mix3()) == 3);
    CHECK_FALSE(weak_index(testmaps::nonkeller2()).has_value());
    CHECK(weak_index(HPart::zero(3)) == 1);
}

TEST_CASE("weak index of the degree-13 counterexample, against direct powers") {
    HPart h = testmaps::vde();
    PolyMatrix jh = jacobian(h);
    PolyMatrix jh2 = jh * jh;
    PolyMatrix jh3 = jh2 * jh;
    CHECK_FALSE(jh2.is_zero());
    // The surviving square entry: paths of length 2 through the variable DAG.
    CHECK_FALSE(jh2.entry(1, 5).is_zero());
    CHECK(jh3.is_zero());
    CHECK(weak_index(h) == 3);
}

TEST_CASE("strong index by products over separate variable blocks") {
    CHECK(strong_index(testmaps::quad2()) == 2);
    CHECK(strong_index(testmaps::tri3()) == 3);
    CHECK_FALSE(strong_index(testmaps::nonkeller2()).has_value());
    CHECK(strong_index(HPart::zero(3)) == 1);
}

TEST_CASE("the degree-13 counterexample separates the two indices") {
    HPart h = testmaps::vde();
    CHECK(weak_index(h) == 3);
    // A length-3 block product survives even though JH^3 = 0.
    ProductCheck len3 = check_product_vanishes(h, 3);
    CHECK_FALSE(len3.vanishes);
    CHECK(check_product_vanishes(h, 4).vanishes);
    CHECK(strong_index(h) == 4);
}

TEST_CASE("block products with witnesses") {
    // One factor of quad2: JH itself, witness entry (1,2) with monomial 2 X2.
    ProductCheck one = check_product_vanishes(testmaps::quad2(), 1);
    CHECK_FALSE(one.vanishes);
    REQUIRE(one.witness.has_value());
    CHECK(one.witness->row == 1);
    CHECK(one.witness->col == 2);
    CHECK(one.witness->coefficient == Rat(2));
    CHECK(one.witness->monomial == MultiIndex(std::vector<int>{0, 1}));
    CHECK(render_block_monomial(one.witness->coefficient, one.witness->monomial, 2, 1) == "2*X2");

    CHECK(check_product_vanishes(testmaps::quad2(), 2).vanishes);

    // Length 2 for tri3: entry (1,3) is 4 X3 of block 1 times X3 of block 2.
    ProductCheck two = check_product_vanishes(testmaps::tri3(), 2);
    CHECK_FALSE(two.vanishes);
    REQUIRE(two.witness.has_value());
    CHECK(two.witness->row == 1);
    CHECK(two.witness->col == 3);
    CHECK(two.witness->coefficient == Rat(4));
    CHECK(two.witness->monomial == MultiIndex(std::vector<int>{0, 1, 0, 0, 0, 1}));
    CHECK(render_block_monomial(two.witness->coefficient, two.witness->monomial, 3, 2) ==
          "4*X2(1)*X3(2)");
}

TEST_CASE("vanishing is monotone in the product length") {
    for (const HPart& h : {testmaps::quad2(), testmaps::tri3(), testmaps::mix3()}) {
        auto p = strong_index(h);
        REQUIRE(p.has_value());
        for (int extra = 0; extra <= 2; ++extra)
            CHECK(check_product_vanishes(h, *p + extra).vanishes);
        for (int l = 1; l < *p; ++l) CHECK_FALSE(check_product_vanishes(h, l).vanishes);
    }
}

TEST_CASE("weak index never exceeds strong index") {
    for (const HPart& h :
         {testmaps::quad2(), testmaps::tri3(), testmaps::mix3(), testmaps::vde()}) {
        auto e = weak_index(h);
        auto p = strong_index(h);
        REQUIRE(e.has_value());
        REQUIRE(p.has_value());
        CHECK(*e <= *p);
    }
}

TEST_CASE("setting all blocks equal recovers the plain Jacobian power") {
    // For the counterexample the length-3 block product is nonzero, but folding
    // the blocks onto one variable set must give JH^3 = 0.
    HPart h = testmaps::vde();
    std::size_t n = h.n();
    PolyMatrix jh = jacobian(h);
    PolyMatrix prod = jh.embedded(3 * n, 0) * jh.embedded(3 * n, n) * jh.embedded(3 * n, 2 * n);
    CHECK_FALSE(prod.is_zero());
    PolyMatrix jh3 = jh * jh * jh;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            CHECK(fold_blocks(prod.entry(i, j), n) == jh3.entry(i, j));
    // And one level down the fold must match the nonzero JH^2.
    PolyMatrix prod2 = jh.embedded(2 * n, 0) * jh.embedded(2 * n, n);
    PolyMatrix jh2 = jh * jh;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            CHECK(fold_blocks(prod2.entry(i, j), n) == jh2.entry(i, j));
}

TEST_CASE("nilpotency report") {
    NilpotencyReport rep = nilpotency_report(testmaps::quad2());
    CHECK(rep.weak == 2);
    CHECK(rep.strong == 2);
    CHECK(rep.weak_witnesses.size() == 1);
    CHECK(rep.strong_witnesses.size() == 1);
    std::string text = render_report(rep);
    CHECK(text.find("weak index: 2") != std::string::npos);
    CHECK(text.find("strong index: 2") != std::string::npos);
    CHECK(text.find("strongly nilpotent") != std::string::npos);
    CHECK(text.find("2*X2") != std::string::npos);

    NilpotencyReport none = nilpotency_report(testmaps::nonkeller2());
    CHECK_FALSE(none.weak.has_value());
    CHECK_FALSE(none.strong.has_value());
    CHECK(render_report(none).find("not nilpotent") != std::string::npos);
}

TEST_CASE("product length must be positive") {
    CHECK_THROWS_AS(check_product_vanishes(testmaps::quad2(), 0), std::invalid_argument);
}
