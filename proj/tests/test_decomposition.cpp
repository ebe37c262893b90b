#include <doctest.h>

#include "monomideal/decomposition.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<MonomialIdeal> components(const MonomialIdeal& I) {
    std::vector<MonomialIdeal> out;
    for (const auto& q : irreducible_decomposition(I).components) out.push_back(q.to_ideal(I.ring()));
    return out;
}

std::set<VarSet> as_set(const std::vector<MonomialPrime>& ps) {
    std::set<VarSet> out;
    for (const auto& p : ps) out.insert(p.vars);
    return out;
}

} // namespace

TEST_SUITE("decomposition") {

TEST_CASE("irreducible decomposition examples") {
    CHECK(components(ideal(2, "x1^2, x1*x2")) == std::vector{ideal(2, "x1"), ideal(2, "x1^2, x2")});
    CHECK(components(ideal(3, "x1, x3")) == std::vector{ideal(3, "x1, x3")});
    CHECK(components(ideal(4, "x1*x2, x1*x4, x2*x3, x3*x4")) ==
          std::vector{ideal(4, "x1, x3"), ideal(4, "x2, x4")});
    CHECK(irreducible_decomposition(counterexample()).intersection(counterexample().ring()) == counterexample());
}

TEST_CASE("decomposition membership on the box [0,2]^2") {
    const auto I = ideal(2, "x1^2, x1*x2");
    const auto d = irreducible_decomposition(I);
    for (const auto& u : oracle::box({2, 2})) CHECK(d.contains(u) == oracle::member(I.gens(), u));
}

TEST_CASE("associated and minimal primes") {
    const auto E = ideal(2, "x1^2, x1*x2");
    CHECK(as_set(associated_primes(E)) == std::set<VarSet>{face({1}), face({1, 2})});
    CHECK(as_set(associated_primes(E)) == oracle::associated_primes(E));
    CHECK(as_set(minimal_primes(E)) == std::set<VarSet>{face({1})});

    const auto p = ideal(4, "x2, x4");
    CHECK(as_set(associated_primes(p)) == std::set<VarSet>{face({2, 4})});
    CHECK(as_set(minimal_primes(p)) == std::set<VarSet>{face({2, 4})});

    const auto J = ideal(4, "x1*x2, x1*x4, x2*x3, x3*x4");
    CHECK(as_set(associated_primes(J)) == std::set<VarSet>{face({1, 3}), face({2, 4})});
    CHECK(as_set(minimal_primes(J)) == std::set<VarSet>{face({1, 3}), face({2, 4})});

    // Canonical order: by height, then by index list.
    CHECK(associated_primes(E).front() == MonomialPrime{face({1})});
}

TEST_CASE("dimension, height and S1") {
    CHECK(dim_quotient(ideal(4, "x1*x2, x1*x4, x2*x3, x3*x4")) == 2);
    CHECK(dim_quotient(ideal(3, "x1, x2, x3")) == 0);
    CHECK_THROWS_AS(dim_quotient(MonomialIdeal::zero(ring(3))), DegenerateInput);
    CHECK(height(ideal(2, "x1^2, x1*x2")) == 1);
    CHECK_FALSE(satisfies_S1(ideal(2, "x1^2, x1*x2")));
    CHECK(satisfies_S1(ideal(4, "x1*x2, x1*x4, x2*x3, x3*x4")));
    CHECK_FALSE(satisfies_S1(counterexample()));
    CHECK(satisfies_S1(ideal(2, "x1^2, x2^3")));
}

TEST_CASE("minimal_elements") {
    const std::vector<MonomialPrime> ps{{face({1, 2})}, {face({1})}, {face({3})}, {face({1})}};
    CHECK(minimal_elements(ps) == std::vector<MonomialPrime>{{face({1})}, {face({3})}});
}

TEST_CASE("property: decomposition agrees with brute-force membership") {
    Generator gen(21);
    for (int trial = 0; trial < 150; ++trial) {
        const auto I = gen.ideal(4, 3, 5);
        const auto d = irreducible_decomposition(I);
        REQUIRE(d.intersection(I.ring()) == I);
        CHECK(is_irredundant(d, I.ring()));
        for (const auto& u : oracle::box(oracle::lcm_bound(I.gens(), 4, 1)))
            REQUIRE(d.contains(u) == oracle::member(I.gens(), u));
    }
}

TEST_CASE("property: components are irreducible and pairwise incomparable") {
    Generator gen(22);
    for (int trial = 0; trial < 150; ++trial) {
        const auto I = gen.ideal(4, 3, 5);
        const auto d = irreducible_decomposition(I);
        for (std::size_t a = 0; a < d.components.size(); ++a) {
            CHECK(d.components[a].to_ideal(I.ring()).gens().size() ==
                  static_cast<std::size_t>(popcount(d.components[a].powers().support())));
            for (std::size_t b = 0; b < d.components.size(); ++b)
                if (a != b) CHECK_FALSE(d.components[a].is_contained_in(d.components[b]));
        }
    }
}

TEST_CASE("property: Ass agrees with the colon-witness oracle") {
    Generator gen(23);
    for (int trial = 0; trial < 150; ++trial) {
        const auto I = gen.ideal(3, 3, 4);
        const auto ass = associated_primes(I), min = minimal_primes(I);
        CHECK(as_set(ass) == oracle::associated_primes(I));
        for (const auto& p : min) CHECK(std::find(ass.begin(), ass.end(), p) != ass.end());
        CHECK(minimal_elements(ass) == min);
        if (I.is_squarefree()) CHECK(ass == min);
    }
}

TEST_CASE("property: dim is n minus the height") {
    Generator gen(24);
    for (int trial = 0; trial < 100; ++trial) {
        const auto I = gen.ideal(4, 2, 5);
        CHECK(dim_quotient(I) + height(I) == 4);
        CHECK(dim_quotient(I) == dim_quotient(radical(I)));
    }
}

} // TEST_SUITE
