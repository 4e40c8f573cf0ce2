#include "artifact/models.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace artifact;

namespace {

const std::vector<Kind> kAllMorphKinds = {Kind::A, Kind::YE, Kind::F, Kind::G1, Kind::YYEE,
                                          Kind::G2, Kind::FF, Kind::L2, Kind::U};

// E^2 != 0 but tau ignores the Hecke relations: good for coordinate round trips only
TwoRep synthetic() { return load_rep_file(std::string(ARTIFACT_DATA_DIR) + "/synthetic_ee.json"); }

Elt random_elt(const Models& m, Kind k, int nu, std::mt19937_64& rng) {
    Elt e = m.zero(k, nu);
    for (auto& c : e.v) c = oracle::random_poly(rng, {var::u, var::y}, 2, 2);
    return e;
}

void check_round_trips(const TwoRep& rep, int seed) {
    Models m(rep);
    std::mt19937_64 rng(seed);
    for (int nu = -7; nu <= 7; nu += 2)
        for (Kind k : kAllMorphKinds) {
            CAPTURE(kind_name(k));
            CAPTURE(nu);
            int n = m.dim(k, nu);
            for (int i = 0; i < n; ++i) {
                Elt b = m.basis(k, nu, i);
                CHECK(m.from_morph(k, nu, m.to_morph(b)) == b);
            }
            for (int t = 0; t < 200 / 9 + 1; ++t) {
                Elt e = random_elt(m, k, nu, rng);
                CHECK(m.from_morph(k, nu, m.to_morph(e)) == e);
            }
        }
    for (int nu = -7; nu <= 7; nu += 2)
        for (int t = 0; t < 10; ++t) {
            Elt e = random_elt(m, Kind::G3, nu, rng);
            CHECK(m.from_g3(nu, m.to_g3(e)) == e);
        }
}

}  // namespace

TEST_CASE("model round trips on L(1)") { check_round_trips(make_L1(), 11); }

TEST_CASE("model round trips with E^2 nonzero") {
    TwoRep s = synthetic();
    CHECK(!power(s.E, 2).is_zero());
    check_round_trips(s, 12);
}

TEST_CASE("unit of G1 is the identity morphism") {
    for (const TwoRep& rep : {make_L1(), synthetic()}) {
        Models m(rep);
        for (int nu = -5; nu <= 5; nu += 2) {
            if (!m.words().supports(nu)) continue;
            Elt one = m.basis(Kind::G1, nu, 0);
            Morph g = m.to_morph(one);
            CHECK(g.top == PolyMatrix::identity(g.top.rows()));
            CHECK(g.bottom == PolyMatrix::identity(1));
        }
    }
}

TEST_CASE("non-members are rejected") {
    Models m(synthetic());
    // L2 at 1: top must agree with the bottom modulo y1
    Morph g = m.to_morph(m.zero(Kind::L2, 1));
    REQUIRE(g.top.rows() > 0);
    g.top.at(0, 0) = Poly(1);
    CHECK_THROWS_AS(m.from_morph(Kind::L2, 1, g), NotInModel);
    // G1 at -1: a constant top that is not the bottom scalar
    Morph h = m.to_morph(m.basis(Kind::G1, -1, 0));
    h.bottom.at(0, 0) = Poly(0);
    CHECK_THROWS_AS(m.from_morph(Kind::G1, -1, h), NotInModel);
    // wrong shapes
    CHECK_THROWS_AS(m.from_morph(Kind::G2, -1, h), ShapeMismatch);
}

TEST_CASE("E' on C lands in the models") {
    {
        Models m(make_L1());
        std::mt19937_64 rng(5);
        for (int nu = -5; nu <= 5; nu += 2) {
            CAPTURE(nu);
            Elt g = random_elt(m, Kind::G1, nu, rng);
            Elt u = m.e_prime(g);
            CHECK(u.kind == Kind::U);
            Morph mu = m.to_morph(u);
            CHECK(mu.top == kron(PolyMatrix::identity(m.words().rE(nu + 2)), m.to_morph(g).top));
            Elt e = random_elt(m, Kind::YE, nu, rng);
            CHECK(m.e_prime(e).kind == Kind::G2);
            Elt f = random_elt(m, Kind::F, nu, rng);
            CHECK(m.e_prime(f).kind == Kind::L2);
        }
    }
}

TEST_CASE("E' respects composition in C") {
    // E'(g' o g) = E'(g') o E'(g) for g, g' in End X2
    Models m(make_L1());
    std::mt19937_64 rng(8);
    for (int nu = -3; nu <= 1; nu += 2)
        for (int t = 0; t < 5; ++t) {
            Elt a = random_elt(m, Kind::G1, nu, rng), b = random_elt(m, Kind::G1, nu, rng);
            Elt ab = m.from_morph(Kind::G1, nu, compose(m.to_morph(b), m.to_morph(a)));
            Morph lhs = m.to_morph(m.e_prime(ab));
            Morph rhs = compose(m.to_morph(m.e_prime(b)), m.to_morph(m.e_prime(a)));
            CHECK(lhs == rhs);
        }
}
