#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_SUITE("monomial") {

TEST_CASE("lcm and gcd") {
    CHECK(lcm(mono(3, "x1^2*x2"), mono(3, "x2^2*x3")) == mono(3, "x1^2*x2^2*x3"));
    CHECK(lcm(mono(3, "x1*x2"), Monomial::unit(3)) == mono(3, "x1*x2"));
    CHECK(lcm(mono(4, "x1*x3"), mono(4, "x2*x4")) == mono(4, "x1*x2*x3*x4"));
    CHECK(gcd(mono(3, "x1^2*x2"), mono(3, "x1*x3")) == mono(3, "x1"));
    CHECK_THROWS_AS(lcm(mono(3, "x1"), mono(4, "x1")), AmbientMismatch);
}

TEST_CASE("support") {
    CHECK(support(mono(4, "x1*x4^2")) == face({1, 4}));
    CHECK(support(Monomial::unit(4)) == 0);
    CHECK(support(mono(3, "x1^2*x2^2*x3")) == face({1, 2, 3}));
}

TEST_CASE("strictly divides") {
    const auto m = mono(3, "x1*x2^2*x3");
    CHECK(strictly_divides(mono(3, "x2"), m));
    CHECK_FALSE(strictly_divides(mono(3, "x2^2"), m));
    CHECK(strictly_divides(Monomial::unit(2), mono(2, "x1*x2")));
    CHECK_THROWS(strictly_divides(mono(3, "x3^2"), m));
}

TEST_CASE("genericity") {
    CHECK(is_generic(counterexample()));
    CHECK(is_generic(ideal(2, "x1, x2")));
    CHECK_FALSE(is_generic(ideal(3, "x1*x2, x1*x3")));
    CHECK_FALSE(is_generic(ideal(3, "x1^2*x2, x1^2*x3, x2*x3")));
    CHECK(is_generic(ideal(3, "x2*x3, x1*x2^2, x1*x3^2")));
    CHECK(is_generic(ideal(2, "x1^2, x2^2")));
}

TEST_CASE("colon") {
    CHECK(colon(ideal(2, "x1^2, x1*x2"), mono(2, "x1")) == ideal(2, "x1, x2"));
    CHECK(colon(counterexample(), Monomial::unit(4)) == counterexample());
    CHECK(colon(ideal(2, "x1*x2"), mono(2, "x2")) == ideal(2, "x1"));
    CHECK(colon(ideal(2, "x1*x2"), mono(2, "x1*x2^3")).is_unit());
}

TEST_CASE("radical") {
    CHECK(radical(counterexample()) == ideal(4, "x1*x2, x2*x3, x1*x4, x3*x4"));
    CHECK(radical(terai()) == terai());
    CHECK(radical(ideal(1, "x1^3")) == ideal(1, "x1"));
}

TEST_CASE("contains") {
    CHECK(contains(ideal(2, "x1*x2"), mono(2, "x1^2*x2^2")));
    CHECK_FALSE(contains(ideal(2, "x1*x2"), mono(2, "x1")));
    CHECK(MonomialIdeal::unit(ring(3)).contains(Monomial::unit(3)));
    CHECK_FALSE(MonomialIdeal::zero(ring(3)).contains(Monomial::unit(3)));
}

TEST_CASE("intersect, sum, product") {
    const auto p = ideal(4, "x1, x3"), q = ideal(4, "x2, x4");
    CHECK(intersect(p, q) == ideal(4, "x1*x2, x1*x4, x2*x3, x3*x4"));
    CHECK(product(p, q) == intersect(p, q));
    CHECK(intersect(counterexample(), MonomialIdeal::unit(ring(4))) == counterexample());
    CHECK(intersect(ideal(1, "x1"), ideal(1, "x1^2")) == ideal(1, "x1^2"));
    CHECK(sum(p, q) == ideal(4, "x1, x2, x3, x4"));
    CHECK(intersect(p, MonomialIdeal::zero(ring(4))).is_zero());
    CHECK_THROWS_AS(sum(p, ideal(3, "x1")), AmbientMismatch);
}

TEST_CASE("construction normalizes") {
    const auto I = ideal(3, "x2*x3, x1*x1, x1^3, x1^2*x2, x3");
    CHECK(I.gens() == std::vector<Monomial>{mono(3, "x3"), mono(3, "x1^2")});
    CHECK(ideal(2, "x2, x1").gens().front() == mono(2, "x1"));
    CHECK(MonomialIdeal(ring(2), {Monomial::unit(2), mono(2, "x1")}).is_unit());
    CHECK_THROWS_AS(MonomialIdeal(ring(2), {Monomial::unit(3)}), AmbientMismatch);
    CHECK_THROWS(MonomialIdeal(ring(1), {Monomial(std::vector<Exponent>{kDefaultExponentCap + 1})}));
}

TEST_CASE("rings") {
    CHECK_THROWS(Ring({"x", "x"}));
    CHECK_THROWS(Ring({"x"}, 4));
    CHECK_THROWS(Ring::standard(65));
    CHECK(Ring::standard(3)->index_of("x2") == 1u);
    CHECK_FALSE(Ring::standard(3)->index_of("y").has_value());
    CHECK(with_characteristic(terai(), 2).ring()->characteristic() == 2);
    CHECK(is_prime_number(2147483647));
    CHECK_FALSE(is_prime_number(1));
}

TEST_CASE("degenerate inputs are rejected by predicates") {
    CHECK_THROWS_AS(MonomialIdeal::zero(ring(2)).require_proper_nonzero("t"), DegenerateInput);
    CHECK_THROWS_AS(MonomialIdeal::unit(ring(2)).require_proper_nonzero("t"), DegenerateInput);
    CHECK_THROWS_AS(counterexample().require_squarefree("t"), NotSquarefree);
    CHECK_THROWS_AS(is_generic(MonomialIdeal::zero(ring(2))), DegenerateInput);
}

TEST_CASE("to_string") {
    CHECK(to_string(counterexample()) == "x1^2*x2, x1*x4^2, x2^2*x3, x3^2*x4");
    CHECK(to_string(Monomial::unit(2), *ring(2)) == "1");
    CHECK(to_string(MonomialIdeal::zero(ring(2))) == "0");
    CHECK(to_string(MonomialPrime{face({1, 3})}, *ring(3)) == "(x1, x3)");
}

TEST_CASE("property: minimality and grlex order after every operation") {
    Generator gen(11);
    auto minimal = [](const MonomialIdeal& I) {
        const auto& g = I.gens();
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                if (i != j && g[i].divides(g[j])) return false;
        return std::is_sorted(g.begin(), g.end(), grlex_less);
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto I = gen.ideal(4, 3, 5), J = gen.ideal(4, 3, 5);
        const auto u = gen.ideal(4, 2, 1).gens().front();
        for (const auto& K : {I, radical(I), intersect(I, J), sum(I, J), product(I, J), colon(I, u), adjoin(I, u)})
            REQUIRE(minimal(K));
    }
}

TEST_CASE("property: colon agrees with brute force") {
    Generator gen(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto I = gen.ideal(3, 3, 4);
        const auto u = gen.ideal(3, 3, 1).gens().front();
        CHECK(oracle::sorted(colon(I, u).gens()) == oracle::colon(I.gens(), u));
    }
}

TEST_CASE("property: colon adjunction v in (I:u) iff uv in I") {
    Generator gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto I = gen.ideal(3, 3, 4);
        const auto u = gen.ideal(3, 2, 1).gens().front();
        const auto C = colon(I, u);
        for (const auto& v : oracle::box({3, 3, 3})) CHECK(C.contains(v) == I.contains(u * v));
    }
}

TEST_CASE("property: intersection and sum membership") {
    Generator gen(14);
    for (int trial = 0; trial < 100; ++trial) {
        const auto I = gen.ideal(3, 3, 4), J = gen.ideal(3, 3, 4);
        const auto meet = intersect(I, J), join = sum(I, J);
        for (const auto& v : oracle::box({4, 4, 4})) {
            CHECK(meet.contains(v) == (I.contains(v) && J.contains(v)));
            CHECK(join.contains(v) == (I.contains(v) || J.contains(v)));
        }
    }
}

TEST_CASE("property: radical is idempotent and lcm supports unite") {
    Generator gen(15);
    for (int trial = 0; trial < 200; ++trial) {
        const auto I = gen.ideal(4, 3, 5);
        CHECK(radical(radical(I)) == radical(I));
        CHECK(radical(I).is_squarefree());
        const auto u = gen.ideal(4, 3, 1).gens().front(), v = gen.ideal(4, 3, 1).gens().front();
        CHECK(support(lcm(u, v)) == (support(u) | support(v)));
    }
}

TEST_CASE("property: genericity is invariant under variable permutations") {
    Generator gen(16);
    for (int trial = 0; trial < 200; ++trial) {
        const auto I = gen.ideal(4, 3, 5);
        std::vector<std::size_t> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), gen.engine());
        std::vector<Monomial> permuted;
        for (const auto& g : I.gens()) {
            Monomial h = Monomial::unit(4);
            for (std::size_t i = 0; i < 4; ++i) h[perm[i]] = g[i];
            permuted.push_back(h);
        }
        CHECK(is_generic(I) == is_generic(MonomialIdeal(I.ring(), permuted)));
    }
}

TEST_CASE("property: genericity matches the definition evaluated directly") {
    Generator gen(17);
    auto direct = [](const MonomialIdeal& I) {
        const auto& g = I.gens();
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                bool shared = false;
                for (std::size_t k = 0; k < I.nvars(); ++k)
                    if (g[i][k] > 0 && g[i][k] == g[j][k]) shared = true;
                if (!shared) continue;
                const auto m = lcm(g[i], g[j]);
                bool found = false;
                for (std::size_t t = 0; t < g.size(); ++t)
                    if (t != i && t != j && g[t].divides(m) && (m / g[t]).support() == m.support()) found = true;
                if (!found) return false;
            }
        return true;
    };
    for (int trial = 0; trial < 300; ++trial) {
        const auto I = gen.ideal(4, 3, 5);
        CHECK(is_generic(I) == direct(I));
    }
}

} // TEST_SUITE
