#include "artifact/nilhecke.hpp"
#include "artifact/tworep.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace artifact;

TEST_CASE("make_L1 shape") {
    TwoRep l1 = make_L1();
    CHECK(l1.alg->support() == std::vector<int>{-1, 1});
    CHECK(l1.E.rank(-1) == 1);
    CHECK(l1.E.rank(1) == 0);
    CHECK(power(l1.E, 2).is_zero());
}

TEST_CASE("L(1) Hecke and hypotheses") {
    TwoRep l1 = make_L1();
    CHECK(all_pass(check_hecke(l1, 3)));
    auto h = check_hypotheses(l1, -4, 4, 2);
    for (auto& e : h) {
        CAPTURE(e.name);
        CAPTURE(e.weight);
        CHECK(e.pass);
    }
    bool found = false;
    for (auto& e : h)
        if (e.name == "first vanishing power") found = e.witness == "E^2 = 0";
    CHECK(found);
}

TEST_CASE("L(1) sigma and rho") {
    TwoRep l1 = make_L1();
    BimoduleMap s = sigma(l1);
    CHECK(s.at(1).rows() == 0);
    CHECK(s.at(1).cols() == 1);
    CHECK(s.at(-1).rows() == 1);
    CHECK(s.at(-1).cols() == 0);
    CHECK(!check_action_commutes(s));
    CHECK(rho(l1, 1) == PolyMatrix::identity(1));
    CHECK(rho(l1, -1) == PolyMatrix::identity(1));
    CHECK(rho(l1, 3).rows() == 0);
    for (int w = -4; w <= 4; ++w) {
        CAPTURE(w);
        CHECK(certify_iso(std::map<int, PolyMatrix>{{w, rho(l1, w)}}).iso);
    }
    CHECK(rho_nonneg(l1, 0) == rho_nonpos(l1, 0));
}

TEST_CASE("fault injection") {
    TwoRep l1 = make_L1();
    // tau perturbed by identity on a rank-1 E^2
    std::string text = R"({"name":"bad","weights":{"-1":["u"],"1":["u"],"3":["u"]},
      "E":{"-1":{"rank":1},"1":{"rank":1}},"x":{"-1":[["u"]],"1":[["u"]]},"tau":{"-1":[[1]]}})";
    TwoRep bad = load_rep_json(text);
    auto h = check_hecke(bad, 2);
    bool failed = false;
    for (auto& e : h)
        if (e.name == "tau^2=0" && e.weight == -1) failed = !e.pass && e.witness.find("weight -1") == 0;
    CHECK(failed);
    // dropping weight +1 breaks rho_{-1}
    TwoRep cut = load_rep_json(R"({"weights":{"-1":["u"]}})");
    auto hy = check_hypotheses(cut, -1, -1, 1);
    bool rho_failed = false;
    for (auto& e : hy)
        if (e.name == "rho iso" && e.weight == -1) rho_failed = !e.pass && !e.witness.empty();
    CHECK(rho_failed);
}

TEST_CASE("rep JSON round trip and load errors") {
    TwoRep l1 = make_L1();
    TwoRep back = load_rep_json(rep_to_json(l1));
    CHECK(back.E.rank(-1) == 1);
    CHECK(back.x.at(-1) == l1.x.at(-1));
    CHECK(rep_to_json(back) == rep_to_json(make_L1()));
    CHECK_THROWS_AS(load_rep_json("{"), RepLoadError);
    CHECK_THROWS_AS(load_rep_json(R"({"weights":{"0":["q"]}})"), RepLoadError);
    CHECK_THROWS_AS(load_rep_json(R"({"weights":{"0":["u"]},"E":{"0":{"rank":1}}})"), RepLoadError);
    CHECK_THROWS_AS(load_rep_json(R"({"weights":{"0":["u"],"2":["u"]},"E":{"0":{"rank":1}},"x":{"0":[["u","u"]]}})"),
                    RepLoadError);
}

TEST_CASE("Hecke relations in the polynomial representation") {
    std::mt19937_64 rng(17);
    std::vector<int> vars{var::y, var::x(1), var::x(2)};
    for (int t = 0; t < 50; ++t) {
        Poly f = oracle::random_poly(rng, vars, 4, 4);
        CHECK(act_on_poly(2, {Gen::tau(1), Gen::tau(1)}, f).is_zero());
        CHECK(act_on_poly(2, {Gen::tau(1), Gen::x(1)}, f) ==
              act_on_poly(2, {Gen::x(2), Gen::tau(1)}, f) + f);
        CHECK(act_on_poly(2, {Gen::x(1), Gen::tau(1)}, f) ==
              act_on_poly(2, {Gen::tau(1), Gen::x(2)}, f) + f);
    }
}
