#include "artifact/nilhecke.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace artifact;

static Poly X(int i) { return Poly::variable(var::x(i)); }

TEST_CASE("nil Hecke examples") {
    CHECK(normalize(2, {Gen::tau(1), Gen::tau(1)}).is_zero());
    auto e = normalize(2, {Gen::tau(1), Gen::x(1)});
    auto expect = NilHeckeElt::tau(2, 1).times_poly(Poly(1)) ;
    expect = NilHeckeElt::scalar(2, X(2)) * NilHeckeElt::tau(2, 1) + NilHeckeElt::scalar(2, Poly(1));
    CHECK(e == expect);
    CHECK_THROWS_AS(normalize(2, {Gen::tau(2)}), IndexOutOfRange);
    CHECK_THROWS_AS(normalize(2, {Gen::x(3)}), IndexOutOfRange);
}

TEST_CASE("three-strand chain identity") {
    auto lhs = normalize(3, {Gen::tau(1), Gen::tau(2), Gen::ylin(2), Gen::ylin(1), Gen::tau(1), Gen::tau(2)});
    auto rhs = NilHeckeElt::scalar(3, ylin(3)) * NilHeckeElt::tau_word(3, {2, 1, 2}) + NilHeckeElt::tau_word(3, {1, 2});
    CHECK(lhs == rhs);
}

TEST_CASE("stored words are shortlex minimal") {
    auto e = NilHeckeElt::tau_word(3, {2, 1, 2});
    REQUIRE(e.terms().size() == 1);
    CHECK(e.terms().begin()->first == Word{1, 2, 1});
}

TEST_CASE("divided power idempotents") {
    auto [p, m] = divided_power_idempotents();
    CHECK(p + m == NilHeckeElt::scalar(2, Poly(1)));
    CHECK((p * m).is_zero());
    CHECK((m * p).is_zero());
    CHECK(p * p == p);
    CHECK(m * m == m);
}

static std::vector<Gen> random_word(std::mt19937_64& rng, int n, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen), kind(0, 3), idx(1, n), tidx(1, n - 1), c(-2, 2);
    std::vector<Gen> w;
    int L = len(rng);
    for (int k = 0; k < L; ++k) {
        switch (kind(rng)) {
        case 0: case 1: w.push_back(Gen::tau(tidx(rng))); break;
        case 2: w.push_back(Gen::x(idx(rng))); break;
        default: w.push_back(c(rng) == 0 ? Gen::y() : Gen::scalar(Poly(c(rng)))); break;
        }
    }
    return w;
}

TEST_CASE("confluence: left-to-right equals right-to-left on 1000 seeded words") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 1000; ++t) {
        auto w = random_word(rng, 3, 8);
        CHECK(normalize(3, w, false) == normalize(3, w, true));
    }
}

TEST_CASE("faithfulness on 500 seeded pairs") {
    std::mt19937_64 rng(99);
    std::vector<int> vars{var::y, var::x(1), var::x(2), var::x(3)};
    for (int t = 0; t < 500; ++t) {
        auto w = random_word(rng, 3, 6);
        Poly f = oracle::random_poly(rng, vars, 4, 3);
        CHECK(act_on_poly(normalize(3, w), f) == act_on_poly(3, w, f));
    }
}

TEST_CASE("act_on_poly examples") {
    CHECK(act_on_poly(NilHeckeElt::tau(2, 1), X(1)) == Poly(1));
    CHECK(act_on_poly(normalize(2, {Gen::tau(1), Gen::x(1)}), X(1)) == X(2) + X(1));
    CHECK(act_on_poly(NilHeckeElt::tau(2, 1), X(1) * X(1) * X(2)) == X(1) * X(2));
}
