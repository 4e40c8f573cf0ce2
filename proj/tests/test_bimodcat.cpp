#include "artifact/bimodcat.hpp"
#include "artifact/tworep.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace artifact;

static Poly U = Poly::variable(var::u);
static Poly Y = Poly::variable(var::y);

// a non-symmetric bimodule over the two-weight algebra: rank 2 at source 0,
// left u acting by a nilpotent-plus-scalar matrix
static Bimodule twisted(const AlgebraPtr& a) {
    Bimodule m = zero_bimodule(a, 0, "M");
    for (int w : a->support()) {
        Component& c = m.comp[w];
        c.rank = 2;
        c.basis = {"m0", "m1"};
        c.left[var::u] = PolyMatrix::from_rows({{U, Poly(1)}, {Poly(0), U}});
    }
    return m;
}

TEST_CASE("L(1) tensor examples") {
    TwoRep l1 = make_L1();
    CHECK(tensor_over_A(l1.E, l1.E).is_zero());
    Duality d = left_dual(l1.E);
    Bimodule fe = tensor_over_A(d.F, l1.E);
    CHECK(fe.rank(-1) == 1);
    CHECK(fe.rank(1) == 0);
    Bimodule A = unit_bimodule(l1.alg);
    Bimodule am = tensor_over_A(A, l1.E);
    for (auto& [w, c] : l1.E.comp) {
        CHECK(am.rank(w) == c.rank);
        for (auto& [v, m] : c.left) CHECK(am.at(w).left.at(v) == m);
    }
}

TEST_CASE("algebra mismatch is reported") {
    TwoRep a = make_L1(), b = make_L1(Field{5});
    CHECK_THROWS_AS(tensor_over_A(a.E, b.E), AlgebraMismatch);
}

TEST_CASE("zigzag identities for the dual") {
    TwoRep l1 = make_L1();
    Duality d = left_dual(l1.E);
    const Bimodule& E = l1.E;
    auto zig = compose(tensor_right(d.eps, E), tensor_left(E, d.eta));
    for (auto& [w, m] : zig.mat) CHECK(m == PolyMatrix::identity(E.rank(w)));
    auto zag = compose(tensor_left(d.F, d.eps), tensor_right(d.eta, d.F));
    for (auto& [w, m] : zag.mat) CHECK(m == PolyMatrix::identity(d.F.rank(w)));
    CHECK(d.eps.at(1) == PolyMatrix::identity(1));
}

TEST_CASE("zigzag for a larger symmetric bimodule") {
    auto a = std::make_shared<WeightedAlgebra>();
    a->gens = {{0, {var::u}}, {2, {var::u}}};
    Bimodule E = zero_bimodule(a, 2, "E");
    E.comp[0].rank = 3;
    E.comp[0].left[var::u] = PolyMatrix::scalar(3, U);
    Duality d = left_dual(E);
    auto zig = compose(tensor_right(d.eps, E), tensor_left(E, d.eta));
    CHECK(zig.at(0) == PolyMatrix::identity(3));
    auto zag = compose(tensor_left(d.F, d.eps), tensor_right(d.eta, d.F));
    CHECK(zag.at(2) == PolyMatrix::identity(3));
    CHECK_THROWS_AS(left_dual(twisted(a)), NotSymmetric);
}

TEST_CASE("compose, interchange and shape errors") {
    TwoRep l1 = make_L1();
    CHECK(compose(identity(l1.E), l1.x) == l1.x);
    CHECK(compose(l1.x, l1.x).at(-1) == PolyMatrix::scalar(1, U * U));
    auto a = std::make_shared<WeightedAlgebra>();
    a->gens = {{0, {var::u}}};
    Bimodule M = twisted(a);
    BimoduleMap f = identity(M);
    f.mat[0] = PolyMatrix::from_rows({{U, Poly(1)}, {Poly(0), U}});  // commutes with the left action
    BimoduleMap g = scalar_multiply(identity(M), Y + U);
    CHECK(compose(tensor_right(g, M), tensor_left(M, f)) == compose(tensor_left(M, f), tensor_right(g, M)));
    BimoduleMap bad = identity(M);
    bad.mat[0] = PolyMatrix(3, 2);
    CHECK_THROWS_AS(compose(identity(M), bad), ShapeMismatch);
}

TEST_CASE("tensor of non-symmetric bimodules keeps commuting actions and is associative") {
    auto a = std::make_shared<WeightedAlgebra>();
    a->gens = {{0, {var::u}}};
    Bimodule M = twisted(a);
    Bimodule MM = tensor_over_A(M, M);
    CHECK(!check_actions_commute(MM));
    // left u on m_i (x) n_j uses the right factor's left action on coefficients
    PolyMatrix expect = kron(PolyMatrix::from_rows({{Poly(1), Poly(0)}, {Poly(0), Poly(1)}}), M.at(0).left.at(var::u)) +
                        kron(PolyMatrix::from_rows({{Poly(0), Poly(1)}, {Poly(0), Poly(0)}}), PolyMatrix::identity(2));
    CHECK(MM.at(0).left.at(var::u) == expect);
    Bimodule l = tensor_over_A(MM, M), r = tensor_over_A(M, MM);
    CHECK(l.at(0).left.at(var::u) == r.at(0).left.at(var::u));
    BimoduleMap f = identity(M);
    f.mat[0] = PolyMatrix::from_rows({{U, Poly(1)}, {Poly(0), U}});
    CHECK(!check_action_commutes(tensor_right(f, M)));
    CHECK(!check_action_commutes(tensor_left(M, f)));
}

TEST_CASE("associativity on L(1) triple products") {
    TwoRep l1 = make_L1();
    Duality d = left_dual(l1.E);
    const Bimodule &E = l1.E, &F = d.F;
    std::vector<std::vector<Bimodule>> triples{{E, F, E}, {F, E, F}, {E, F, F}, {F, F, E}};
    for (auto& t : triples) {
        Bimodule l = tensor_over_A(tensor_over_A(t[0], t[1]), t[2]);
        Bimodule r = tensor_over_A(t[0], tensor_over_A(t[1], t[2]));
        for (auto& [w, c] : l.comp) {
            CHECK(c.rank == r.rank(w));
            for (auto& [v, m] : c.left) CHECK(m == r.at(w).left.at(v));
        }
    }
}

TEST_CASE("certify_iso examples") {
    TwoRep l1 = make_L1();
    auto c = certify_iso(identity(l1.E));
    CHECK(c.iso);
    CHECK(c.determinants.at(-1) == Poly(1));
    CHECK(c.determinants.at(1) == Poly(1));  // 0x0 block
    auto bad = certify_iso(std::map<int, PolyMatrix>{{0, PolyMatrix::scalar(1, U - Y)}});
    CHECK(!bad.iso);
    CHECK(bad.witness.find("not a unit") != std::string::npos);
    CHECK(!certify_iso(std::map<int, PolyMatrix>{{0, PolyMatrix(2, 1)}}).iso);
}

static PolyMatrix random_matrix(std::mt19937_64& rng, int n, bool unimodular) {
    std::vector<int> vars{var::u, var::y};
    if (!unimodular) {
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = oracle::random_poly(rng, vars, 2, 2);
        return m;
    }
    // product of unit triangular factors and a constant diagonal
    PolyMatrix lo = PolyMatrix::identity(n), up = PolyMatrix::identity(n), dg = PolyMatrix::identity(n);
    for (int i = 0; i < n; ++i) {
        dg.at(i, i) = Poly(i + 2);
        for (int j = 0; j < i; ++j) lo.at(i, j) = oracle::random_poly(rng, vars, 2, 2);
        for (int j = i + 1; j < n; ++j) up.at(i, j) = oracle::random_poly(rng, vars, 2, 2);
    }
    return lo * dg * up;
}

TEST_CASE("certify_iso agrees with an explicit two-sided inverse, seeded") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + t % 4;
        PolyMatrix m = random_matrix(rng, n, t % 2 == 0);
        auto cert = certify_iso(std::map<int, PolyMatrix>{{0, m}});
        Poly d = determinant(m);
        PolyMatrix adj = adjugate(m);
        CHECK(m * adj == PolyMatrix::scalar(n, d));
        CHECK(adj * m == PolyMatrix::scalar(n, d));
        bool inverse_exists = is_unit_det(d);
        if (inverse_exists) {
            PolyMatrix inv = adj.times(Poly::constant(1 / d.constant_term()));
            CHECK(m * inv == PolyMatrix::identity(n));
        }
        CHECK(cert.iso == inverse_exists);
        if (t % 2 == 0) CHECK(cert.iso);
    }
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + t % 4;
        PolyMatrix m = random_matrix(rng, n, false);
        // Leibniz formula
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        Poly d;
        do {
            int inv = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
            Poly term(inv % 2 ? -1 : 1);
            for (int i = 0; i < n; ++i) term *= m.at(i, p[i]);
            d += term;
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(determinant(m) == d);
    }
}
