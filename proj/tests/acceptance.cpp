// One line per acceptance criterion; exit status 1 if any fails.
#include "artifact/product.hpp"
#include "artifact/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace artifact;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

Outcome suites(std::vector<std::string> names, int min_records = 1) {
    SuiteConfig cfg;
    cfg.suites = std::move(names);
    Report r = run(cfg);
    Outcome o;
    int n = 0;
    for (auto& c : r.checks) {
        ++n;
        if (!c.pass && o.pass) {
            o.pass = false;
            o.note = c.id + ": " + c.witness;
        }
    }
    if (n < min_records) {
        o.pass = false;
        o.note = "only " + std::to_string(n) + " records";
    }
    if (o.pass) o.note = std::to_string(n) + " records";
    return o;
}

Outcome unit_element() {
    ProductRep P = build_product(make_L1());
    Outcome o;
    for (int l = -4; l <= 4; ++l) {
        CheckResult r = check_unit(P, l);
        if (!r.pass) return {false, "lambda " + std::to_string(l) + ": " + r.witness};
    }
    // the 22 corner at lambda 0 is the only nonzero U in the window
    Elt u = P.eta_one_composite(2, 0);
    Elt want = P.models().join(Kind::U, -1, {{Poly(1)}, {Poly(0)}, {Poly(0)}, {Poly(1)}, {}});
    if (u.kind != Kind::U || !(u == want)) return {false, "[eta~(1)]_22 is not (1,0,0,1,0)"};
    o.note = "(1,0,0,1,0) at lambda 0";
    return o;
}

Outcome middle_linear() {
    ProductRep P = build_product(make_L1());
    SuiteConfig cfg;
    CheckResult r = check_middle_linear(P, cfg.seed, 200, cfg.lo, cfg.hi);
    return {r.pass, r.pass ? "200 triples, seed " + std::to_string(cfg.seed) : r.witness};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    std::string a = std::string(ARTIFACT_BINARY_DIR) + "/acceptance_det_a.json";
    std::string b = std::string(ARTIFACT_BINARY_DIR) + "/acceptance_det_b.json";
    std::string cli = VERIFYCLI_PATH;
    for (auto& out : {a, b}) {
        std::string cmd = "\"" + cli + "\" verify-all --seed 7 --out \"" + out + "\" > /dev/null";
        if (std::system(cmd.c_str()) != 0) return {false, "verify-all did not pass"};
    }
    std::string ja = slurp(a), jb = slurp(b);
    std::remove(a.c_str());
    std::remove(b.c_str());
    if (ja.empty()) return {false, "empty report"};
    if (ja != jb) return {false, "reports differ"};
    return {true, std::to_string(ja.size()) + " identical bytes"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string what;
        double limit_s;  // 0: none
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all = {
        {1, "identity suite", 5, [] { return suites({"identities"}, 6); }},
        {2, "input rep L(1): Hecke, hypotheses, rho certified iso", 5, [] { return suites({"hecke", "rho-input"}); }},
        {3, "product Hecke relations on nonzero corners", 30,
         [] { return suites({"build-product", "product-hecke"}); }},
        {4, "sigma~ closed form equals the composition oracle", 60, [] { return suites({"sigma-oracle"}, 36); }},
        {5, "x~^i pairings equal their oracles, i <= 4", 60, [] { return suites({"pairing-oracle"}, 360); }},
        {6, "unit element", 0, unit_element},
        {7, "middle-linearity", 0, middle_linear},
        {8, "rho~ iso, triangular certificates agree, lambda 0 cross-formula", 60,
         [] { return suites({"rho-product", "certificates"}); }},
        {9, "determinism of verify-all", 0, determinism},
    };
    bool ok = true;
    for (auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, e.what()};
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && s >= c.limit_s) {
            o.pass = false;
            o.note += " (over the " + std::to_string((int)c.limit_s) + " s limit)";
        }
        ok = ok && o.pass;
        std::printf("%s criterion %d: %s [%.3f s] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.what.c_str(), s,
                    o.note.c_str());
    }
    return ok ? 0 : 1;
}
