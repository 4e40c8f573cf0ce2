#include "artifact/product.hpp"
#include "artifact/verify.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace artifact;

namespace {

const ProductRep& l1() {
    static const ProductRep P(make_L1());
    return P;
}

Elt random_elt(const Models& m, Kind k, int nu, std::mt19937_64& rng) {
    Elt e = m.zero(k, nu);
    for (auto& c : e.v) c = oracle::random_poly(rng, {var::u, var::y}, 2, 2);
    return e;
}

void require_pass(const CheckResult& r) {
    INFO(r.witness);
    CHECK(r.pass);
}

}  // namespace

TEST_CASE("C is an associative category with weights -2, 0, 2") {
    const ProductRep& P = l1();
    CHECK(P.c_weights(-4, 4) == std::vector<int>{-2, 0, 2});
    for (int l = -4; l <= 4; ++l) {
        CAPTURE(l);
        require_pass(check_c_associative(P, l));
        for (Bim b : {Bim::Et, Bim::Ft}) require_pass(check_actions(P, b, l));
    }
}

TEST_CASE("worked examples on L(1)") {
    const ProductRep& P = l1();
    const Models& m = P.models();
    Poly u = Poly::variable(var::u), y = Poly::variable(var::y);

    // Gamma: (1,0) (x) e goes to (e, y1 e, 0)
    Elt g = P.gamma_EE(m.basis(Kind::G1, 1, 0), m.basis(Kind::YE, -1, 0));
    CHECK(g == m.join(Kind::G2, -1, {{Poly(1)}, {u - y}, {}}));
    // tau~ sends it to (0, e, 0), closed form and composite alike
    Elt t = m.join(Kind::G2, -1, {{Poly(0)}, {Poly(1)}, {}});
    CHECK(P.tilde_tau(g, {2, 1}) == t);
    CHECK(P.tilde_tau_morph(g) == t);

    // x~ (1,0) = (y, eta(1))
    Elt one = m.basis(Kind::G1, -1, 0);
    CHECK(P.tilde_x(one, 1) == m.join(Kind::G1, -1, {{y}, {Poly(1)}}));
    CHECK(P.tilde_x_pow(one, 1, 1) == P.tilde_x(one, 1));
    CHECK(P.tilde_x_pow(one, 1, 0) == one);

    // F~ x~^i eta~ on the 11 corner for i = 0, 1
    CHECK(P.F_x_eta({1, 1}, 0).eval(P.words(), -1) == as_column({Poly(1), Poly(0)}));
    CHECK(P.F_x_eta({1, 1}, 1).eval(P.words(), -1) == as_column({y, Poly(1)}));

    // row summands of the 11 corner of rho~ at lambda 2
    CHECK(P.tilde_rho({1, 1}, 2).rows == std::vector<std::string>{"", "FE", "", ""});
}

TEST_CASE("powers of x~ compose") {
    const ProductRep& P = l1();
    for (int l = -4; l <= 4; ++l)
        for (auto c : corners()) {
            CAPTURE(l);
            CAPTURE(c.str());
            if (P.dim(Bim::Et, c, l)) require_pass(check_x_powers(P, c, l, 4));
        }
}

TEST_CASE("Hecke relations on the product") {
    const ProductRep& P = l1();
    int nonzero = 0;
    for (int l = -4; l <= 4; ++l)
        for (auto c : corners()) {
            if (!P.dim(Bim::EtEt, c, l)) continue;
            ++nonzero;
            for (auto& [name, r] : check_product_hecke(P, c, l)) {
                CAPTURE(name);
                CAPTURE(l);
                require_pass(r);
            }
        }
    CHECK(nonzero > 0);
}

TEST_CASE("kappa on the distinguished tensor") {
    const ProductRep& P = l1();
    const Models& m = P.models();
    auto v = P.g2l2_tensor(m.basis(Kind::G2, -1, 1), m.basis(Kind::L2, 1, 0));
    PolyMatrix k = P.kappa().eval(P.words(), 1) * as_column(v);
    CHECK(k == as_column({Poly(1)}));
}

TEST_CASE("middle actions: bimodule form agrees with composition") {
    const ProductRep& P = l1();
    const Models& m = P.models();
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        Elt g = random_elt(m, Kind::G2, -1, rng), l = random_elt(m, Kind::L2, 1, rng);
        std::vector<Poly> phi{oracle::random_poly(rng, {var::u, var::y}, 2, 2)};
        CHECK(P.g2_times_phi(g, phi) == P.g2_times_phi_morph(g, phi));
        CHECK(P.phi_times_l2(phi, l) == P.phi_times_l2_morph(phi, l));
    }
}

TEST_CASE("middle linearity over seeded triples") {
    require_pass(check_middle_linear(l1(), 1, 200, -4, 4));
    require_pass(check_middle_linear(l1(), 99, 200, -4, 4));
}

TEST_CASE("the plain coordinate projection is not middle-linear") {
    // the correction term in kappa is needed
    const ProductRep& P = l1();
    const Models& m = P.models();
    const Words& w = P.words();
    BlockMap naive({"EF"}, ProductRep::g2l2_words());
    naive.set(0, 2, w.ident("EF"));
    PolyMatrix nv = naive.eval(w, 1);
    std::mt19937_64 rng(3);
    bool broken = false;
    for (int t = 0; t < 50 && !broken; ++t) {
        Elt g = random_elt(m, Kind::G2, -1, rng), l = random_elt(m, Kind::L2, 1, rng);
        std::vector<Poly> phi{oracle::random_poly(rng, {var::u, var::y}, 2, 2)};
        auto lhs = as_column(P.g2l2_tensor(P.g2_times_phi(g, phi), l));
        auto rhs = as_column(P.g2l2_tensor(g, P.phi_times_l2(phi, l)));
        broken = !(nv * lhs == nv * rhs);
    }
    CHECK(broken);
}

TEST_CASE("unit of the adjunction") {
    for (int l = -4; l <= 4; ++l) {
        CAPTURE(l);
        require_pass(check_unit(l1(), l));
    }
    // corner 22 at lambda 0 is (1,0,0,1,0)
    const ProductRep& P = l1();
    Elt u = P.eta_one_composite(2, 0);
    REQUIRE(u.kind == Kind::U);
    CHECK(u == P.models().join(Kind::U, -1, {{Poly(1)}, {Poly(0)}, {Poly(0)}, {Poly(1)}, {}}));
}

TEST_CASE("closed forms agree with composition oracles") {
    const ProductRep& P = l1();
    for (int l = -4; l <= 4; ++l)
        for (auto c : corners()) {
            CAPTURE(l);
            CAPTURE(c.str());
            require_pass(check_sigma_oracle(P, c, l));
            for (int i = 0; i <= 4; ++i) {
                CAPTURE(i);
                require_pass(check_eps_x_F(P, c, l, i));
                require_pass(check_F_x_eta(P, c, l, i));
            }
        }
}

TEST_CASE("sigma~ on corner 22 carries y1 on the FEFE column") {
    // hand computation at lambda 0 (word weight -1, x acts by u)
    const ProductRep& P = l1();
    Poly u = Poly::variable(var::u), y = Poly::variable(var::y);
    PolyMatrix want(4, 4);
    want.at(0, 2) = Poly(1);
    want.at(0, 3) = u - y;
    want.at(1, 3) = Poly(1);
    want.at(2, 0) = Poly(1);
    want.at(2, 1) = u - y;
    want.at(3, 1) = Poly(1);
    CHECK(P.sigma_oracle({2, 2}, 0) == want);
    CHECK(P.sigma_closed({2, 2}).eval(P.words(), -1) == want);
}

TEST_CASE("lambda >= 0 corner-22 entry vanishes on L(1) in both sign conventions") {
    const ProductRep& P = l1();
    for (int i = 0; i <= 4; ++i)
        for (int nu = -5; nu <= 5; nu += 2) {
            CAPTURE(i);
            CAPTURE(nu);
            PolyMatrix a = P.theta_verbatim(i).eval(P.words(), nu);
            for (int r = 0; r < a.rows(); ++r)
                for (int c = 0; c < a.cols(); ++c) CHECK(a.at(r, c).is_zero());
        }
}

TEST_CASE("rho~ is invertible and the lambda 0 assemblies agree") {
    const ProductRep& P = l1();
    for (auto c : corners()) {
        CAPTURE(c.str());
        require_pass(check_rho_zero(P, c));
        for (int l = -4; l <= 4; ++l) {
            CAPTURE(l);
            require_pass(check_rho_iso(P, c, l));
            require_pass(check_certificate(P, c, l));
        }
    }
}

TEST_CASE("certificate shapes") {
    const ProductRep& P = l1();
    CornerCertificate c0 = triangular_certificate(P, {2, 2}, 0);
    CHECK(c0.row_operation);
    CHECK(c0.lower);
    CHECK(c0.blocks.size() == 4);
    CornerCertificate c11 = triangular_certificate(P, {1, 1}, 2);
    bool claimed = false;
    for (auto& b : c11.blocks) {
        CHECK(b.iso);
        CHECK(b.factorization_holds);
        claimed |= !b.factorization.empty();
    }
    CHECK(claimed);
    RhoCertificate all = triangular_certificate(P, -3);
    CHECK(all.corners.size() == 4);
}

TEST_CASE("certificates track invertibility on a broken rep") {
    // only weight -1: rho_{-1} is not an iso, so rho~ fails near there
    ProductRep P(load_rep_json(R"({"weights":{"-1":["u"]}})"));
    int failures = 0;
    for (int l = -3; l <= 3; ++l)
        for (auto c : corners()) {
            CAPTURE(l);
            CAPTURE(c.str());
            int nu = ProductRep::nu(c.j, l);
            bool iso = certify_iso(std::map<int, PolyMatrix>{{nu, P.tilde_rho(c, l).eval(P.words(), nu)}}).iso;
            bool cert = true;
            try {
                triangular_certificate(P, c, l);
            } catch (const NotTriangular&) {
                cert = false;
            } catch (const DiagonalNotIso&) {
                cert = false;
            }
            CHECK(iso == cert);
            failures += !iso;
        }
    CHECK(failures > 0);
}

TEST_CASE("build_product enforces the hypotheses") {
    CHECK_NOTHROW(build_product(make_L1()));
    CHECK_THROWS_AS(build_product(load_rep_json(R"({"weights":{"-1":["u"]}})"), -2, 2), HypothesesFailed);
}

TEST_CASE("harness reports are deterministic and failures carry witnesses") {
    SuiteConfig cfg;
    cfg.seed = 7;
    cfg.suites = {"identities", "hecke", "build-product", "certificates"};
    Report a = run(cfg);
    CHECK(a.ok());
    cfg.threads = 1;
    CHECK(to_json(run(cfg)) == to_json(a));

    SuiteConfig bad;
    bad.rep = std::string(ARTIFACT_DATA_DIR) + "/faulty_tau.json";
    bad.suites = {"hecke"};
    Report r = run(bad);
    CHECK_FALSE(r.ok());
    bool witnessed = false;
    for (auto& c : r.checks)
        if (!c.pass) witnessed |= c.witness.find("weight -1") != std::string::npos;
    CHECK(witnessed);

    SuiteConfig wrong;
    wrong.lo = 3;
    wrong.hi = 1;
    CHECK_THROWS_AS(wrong.validate(), ConfigError);
}
