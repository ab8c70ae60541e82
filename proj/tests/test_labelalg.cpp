#include <catch_amalgamated.hpp>

#include <random>

#include "examples.hpp"
#include "oracles.hpp"

using namespace diagalg;

TEST_CASE("worked label products") {
    auto [a, b] = examples::label_first();
    auto r = concat(a, b);
    CHECK(r.coeff.str() == examples::label_first_coeff);
    CHECK(r.diagram.str() == examples::label_first_result);
    CHECK(r.trace.loops == 1);
    CHECK(r.trace.arcs.size() == 3);

    auto [c, d] = examples::label_second();
    auto s = concat(c, d);
    CHECK(s.coeff.str() == examples::label_second_coeff);
    CHECK(s.diagram.str() == examples::label_second_result);
}

TEST_CASE("concat agrees with the path-tracing oracle on all pairs at n <= 2") {
    for (int n = 1; n <= 2; ++n) {
        auto all = enumerate_all(n, oracle::labels(2));
        for (auto& x : all)
            for (auto& y : all) {
                auto r = concat(x, y);
                auto o = oracle::trace_concat(x, y);
                REQUIRE(r.coeff == o.coeff);
                REQUIRE(r.diagram == o.diagram);
            }
    }
}

TEST_CASE("concat agrees with the oracle on random pairs at n = 3, 4") {
    std::mt19937_64 rng(11);
    for (int n = 3; n <= 4; ++n) {
        auto all = enumerate_all(n, oracle::labels(2));
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int k = 0; k < 2000; ++k) {
            auto& x = all[pick(rng)];
            auto& y = all[pick(rng)];
            auto r = concat(x, y);
            auto o = oracle::trace_concat(x, y);
            REQUIRE(r.coeff == o.coeff);
            REQUIRE(r.diagram == o.diagram);
        }
    }
}

TEST_CASE("concat is associative on random triples") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_all(n, oracle::labels(2));
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int k = 0; k < 500; ++k) {
            LinearCombination a(all[pick(rng)]), b(all[pick(rng)]), c(all[pick(rng)]);
            REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        }
    }
}

TEST_CASE("linear combinations distribute") {
    LabelSet X{"0"};
    auto e = generator_diagram(Generator::E(1), 2, X);
    auto id = Diagram::identity(2, X);
    LinearCombination u(e, 2);
    u += LinearCombination(id, Polynomial(Monomial(ParamId::beta())));
    auto sq = multiply(u, u);
    // (2e + b) ^ 2 = 4 e^2 + 4 b e + b^2 = (8 b) e + b^2
    CHECK(sq.str() == "8*b * " + e.str() + " + b^2 * " + id.str());
    CHECK(LinearCombination().is_zero());
    CHECK(!u.single());
    CHECK(LinearCombination(e).single()->second == e);
}

TEST_CASE("concat rejects mismatched operands") {
    auto a = Diagram::identity(2, {"0"});
    CHECK_THROWS_AS(concat(a, Diagram::identity(3, {"0"})), SizeMismatch);
    CHECK_THROWS_AS(concat(a, Diagram::identity(2, {"1"})), LabelSetMismatch);
}

TEST_CASE("generator diagrams") {
    LabelSet X{"0", "1"};
    CHECK(generator_diagram(Generator::FUp("0", "1"), 2, X).str() ==
          "D(n=2;X=0,1;top=0,1;bottom=;pairs=(L1,T1);(L2,R2);(R1,T2))");
    CHECK(generator_diagram(Generator::WDown("1", "0"), 2, X).str() ==
          "D(n=2;X=0,1;top=1;bottom=0;pairs=(L1,R2);(L2,B1);(R1,T1))");
    CHECK_THROWS_AS(generator_diagram(Generator::E(2), 2, X), IndexOutOfRange);
    CHECK_THROWS_AS(generator_diagram(Generator::FUp("2", "0"), 2, X), IndexOutOfRange);
    CHECK(w_diagram("0", "1", 0, 3, X) == generator_diagram(Generator::WUp("0", "1"), 3, X));
    CHECK(w_diagram("0", "1", 3, 3, X) == generator_diagram(Generator::WDown("0", "1"), 3, X));
    CHECK_THROWS_AS(w_diagram("0", "1", 4, 3, X), IndexOutOfRange);
}
