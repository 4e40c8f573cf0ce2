#include "artifact/verify.hpp"

#include "artifact/nilhecke.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace artifact {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string lam(int l) { return "lambda=" + std::to_string(l); }

CheckResult ok() { return {}; }
CheckResult fail(std::string w) { return {false, std::move(w)}; }

CheckResult matrices_equal(const PolyMatrix& a, const PolyMatrix& b, const std::string& what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return fail(what + ": shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c))
                return fail(what + ": entry (" + std::to_string(r) + "," + std::to_string(c) + ") " + a.at(r, c).str() +
                            " vs " + b.at(r, c).str());
    return ok();
}

template <class F>
CheckResult guarded(F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

Poly X(int i, Field f) { return Poly::variable(var::x(i), f); }

Poly random_poly(std::mt19937_64& rng, Field f) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
    Poly p(f);
    int terms = deg(rng) + 1;
    for (int t = 0; t < terms; ++t) {
        Poly m = Poly(coef(rng), f);
        m *= Poly::variable(var::u, f).pow(deg(rng));
        m *= Poly::variable(var::y, f).pow(deg(rng));
        p += m;
    }
    return p;
}

Elt random_elt(const Models& m, Kind k, int nu, std::mt19937_64& rng) {
    Elt e = m.zero(k, nu);
    for (auto& c : e.v) c = random_poly(rng, m.field());
    return e;
}

struct Task {
    std::string id, anchor;
    std::function<CheckResult()> run;
};

// ---- identity suite

std::vector<Task> identity_tasks() {
    std::vector<Task> t;
    const char* anchor = "symmetric polynomial identities";
    t.push_back({"identities/divided-difference-shift", anchor, [] {
                     Field f;
                     for (int i = 0; i <= 8; ++i) {
                         Poly h12 = h_complete(i - 1, {var::x(1), var::x(2)}, f);
                         for (int a = 0; a <= 6; ++a)
                             for (int b = 0; a + b <= 6; ++b) {
                                 Poly p = X(1, f).pow(a) * X(2, f).pow(b);
                                 if (X(2, f).pow(i) * divided_difference(p, 1) !=
                                     divided_difference(X(1, f).pow(i) * p, 1) - h12 * p)
                                     return fail("i=" + std::to_string(i) + " on x1^" + std::to_string(a) + " x2^" +
                                                 std::to_string(b));
                             }
                     }
                     return ok();
                 }});
    t.push_back({"identities/power-difference", anchor, [] {
                     Field f;
                     Poly y = Poly::variable(var::y, f);
                     for (int i = 0; i <= 8; ++i)
                         if (X(2, f).pow(i) - y.pow(i) != (X(2, f) - y) * h_complete(i - 1, {var::x(2), var::y}, f))
                             return fail("i=" + std::to_string(i));
                     return ok();
                 }});
    t.push_back({"identities/h-sum", anchor, [] {
                     Field f;
                     for (int i = 0; i <= 8; ++i) {
                         Poly s(f);
                         for (int j = 0; j <= i - 1; ++j)
                             s += X(1, f).pow(j) * h_complete(i - 2 - j, {var::x(2), var::y}, f);
                         if (s != h_complete(i - 2, {var::x(1), var::x(2), var::y}, f)) return fail("i=" + std::to_string(i));
                     }
                     return ok();
                 }});
    t.push_back({"identities/h-difference", anchor, [] {
                     Field f;
                     Poly y = Poly::variable(var::y, f);
                     for (int i = 0; i <= 8; ++i)
                         if ((X(2, f) - y) * h_complete(i - 2, {var::x(1), var::x(2), var::y}, f) !=
                             h_complete(i - 1, {var::x(1), var::x(2)}, f) - h_complete(i - 1, {var::x(1), var::y}, f))
                             return fail("i=" + std::to_string(i));
                     return ok();
                 }});
    t.push_back({"identities/three-strand", "nil affine Hecke normal form", [] {
                     Field f;
                     Poly y3 = X(3, f) - Poly::variable(var::y, f);
                     auto lhs = normalize(3, {Gen::tau(1), Gen::tau(2), Gen::ylin(2), Gen::ylin(1), Gen::tau(1), Gen::tau(2)});
                     auto rhs = NilHeckeElt::scalar(3, y3) * NilHeckeElt::tau_word(3, {2, 1, 2}) +
                                NilHeckeElt::tau_word(3, {1, 2});
                     if (!(lhs == rhs)) return fail("normal form " + lhs.str());
                     return ok();
                 }});
    t.push_back({"identities/divided-powers", "orthogonal idempotents on two strands", [] {
                     auto [p, m] = divided_power_idempotents();
                     if (!(p + m == NilHeckeElt::scalar(2, Poly(1)))) return fail("sum is not 1");
                     if (!(p * m).is_zero() || !(m * p).is_zero()) return fail("not orthogonal");
                     if (!(p * p == p) || !(m * m == m)) return fail("not idempotent");
                     return ok();
                 }});
    return t;
}

// ---- input rep suites

std::vector<Task> report_tasks(const std::string& prefix, const std::string& anchor, const CheckReport& r) {
    std::vector<Task> t;
    for (auto& e : r) {
        CheckResult res{e.pass, e.witness};
        t.push_back({prefix + "/" + e.name + "/w=" + std::to_string(e.weight), anchor, [res] { return res; }});
    }
    return t;
}

std::optional<Elt> unit_expected(const Models& m, int i, int nu) {
    Kind k = i == 1 ? Kind::G1 : Kind::U;
    if (!m.dim(k, nu)) return std::nullopt;
    Morph id;
    if (i == 1) {
        id.top = PolyMatrix::identity(m.words().rE(nu), m.field());
        id.bottom = PolyMatrix::identity(1, m.field());
    } else {
        id.top = PolyMatrix::identity(m.words().rank("EE", nu), m.field());
        id.bottom = PolyMatrix::identity(2 * m.words().rE(nu), m.field());
    }
    return m.from_morph(k, nu, id);
}

}  // namespace

// ---- product checks

CheckResult check_c_associative(const ProductRep& P, int lambda) {
    return guarded([&] {
        for (auto a : corners())
            for (auto b : corners()) {
                if (a.j != b.i) continue;
                for (auto c : corners()) {
                    if (b.j != c.i) continue;
                    int da = P.dim(Bim::C, a, lambda), db = P.dim(Bim::C, b, lambda), dc = P.dim(Bim::C, c, lambda);
                    for (int x = 0; x < da; ++x)
                        for (int y = 0; y < db; ++y)
                            for (int z = 0; z < dc; ++z) {
                                Elt ea = P.basis(Bim::C, a, lambda, x), eb = P.basis(Bim::C, b, lambda, y),
                                    ec = P.basis(Bim::C, c, lambda, z);
                                Corner ab{a.i, b.j}, bc{b.i, c.j};
                                Elt l = P.c_mul(P.c_mul(ea, a, eb, b, lambda), ab, ec, c, lambda);
                                Elt r = P.c_mul(ea, a, P.c_mul(eb, b, ec, c, lambda), bc, lambda);
                                if (!(l == r))
                                    return fail("corners " + a.str() + "," + b.str() + "," + c.str() + " basis " +
                                                std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
                            }
                }
            }
        return ok();
    });
}

CheckResult check_actions(const ProductRep& P, Bim b, int lambda) {
    // E~ at lambda: left C(lambda+2), right C(lambda). F~: left C(lambda-2), right C(lambda).
    int left = b == Bim::Et ? lambda + 2 : lambda - 2;
    auto right_act = [&](const Elt& m, Corner mc, const Elt& c, Corner cc) {
        return b == Bim::Et ? P.et_right(m, mc, c, cc) : P.ft_right(m, mc, c, cc);
    };
    auto left_act = [&](const Elt& c, Corner cc, const Elt& m, Corner mc) {
        return b == Bim::Et ? P.et_left(c, cc, m, mc) : P.ft_left(c, cc, m, mc);
    };
    return guarded([&] {
        for (auto mc : corners())
            for (int x = 0; x < P.dim(b, mc, lambda); ++x) {
                Elt m = P.basis(b, mc, lambda, x);
                for (auto c1 : corners()) {
                    if (c1.i != mc.j) continue;
                    for (int y = 0; y < P.dim(Bim::C, c1, lambda); ++y) {
                        Elt e1 = P.basis(Bim::C, c1, lambda, y);
                        Corner m1{mc.i, c1.j};
                        Elt mc1 = right_act(m, mc, e1, c1);
                        for (auto c2 : corners()) {
                            if (c2.i != c1.j) continue;
                            for (int z = 0; z < P.dim(Bim::C, c2, lambda); ++z) {
                                Elt e2 = P.basis(Bim::C, c2, lambda, z);
                                Elt l = right_act(mc1, m1, e2, c2);
                                Elt r = right_act(m, mc, P.c_mul(e1, c1, e2, c2, lambda), {c1.i, c2.j});
                                if (!(l == r)) return fail("right action, corner " + mc.str() + " with " + c1.str() + "," + c2.str());
                            }
                        }
                        for (auto c0 : corners()) {
                            if (c0.j != mc.i) continue;
                            for (int z = 0; z < P.dim(Bim::C, c0, left); ++z) {
                                Elt e0 = P.basis(Bim::C, c0, left, z);
                                Elt l = right_act(left_act(e0, c0, m, mc), {c0.i, mc.j}, e1, c1);
                                Elt r = left_act(e0, c0, mc1, m1);
                                if (!(l == r)) return fail("bimodule, corner " + mc.str() + " with " + c0.str() + "," + c1.str());
                            }
                        }
                    }
                }
                for (auto c1 : corners()) {
                    if (c1.j != mc.i) continue;
                    for (int y = 0; y < P.dim(Bim::C, c1, left); ++y) {
                        Elt e1 = P.basis(Bim::C, c1, left, y);
                        Elt c1m = left_act(e1, c1, m, mc);
                        for (auto c0 : corners()) {
                            if (c0.j != c1.i) continue;
                            for (int z = 0; z < P.dim(Bim::C, c0, left); ++z) {
                                Elt e0 = P.basis(Bim::C, c0, left, z);
                                Elt l = left_act(e0, c0, c1m, {c1.i, mc.j});
                                Elt r = left_act(P.c_mul(e0, c0, e1, c1, left), {c0.i, c1.j}, m, mc);
                                if (!(l == r)) return fail("left action, corner " + mc.str() + " with " + c0.str() + "," + c1.str());
                            }
                        }
                    }
                }
            }
        return ok();
    });
}

std::vector<std::pair<std::string, CheckResult>> check_product_hecke(const ProductRep& P, Corner c, int lambda) {
    std::vector<std::pair<std::string, CheckResult>> out;
    try {
        PolyMatrix T = P.etet_matrix(c, lambda, [&](const Elt& t) { return P.tilde_tau(t, c); });
        PolyMatrix XE = P.etet_matrix(c, lambda, [&](const Elt& t) { return P.x_tilde_E(t, c); });
        PolyMatrix EX = P.etet_matrix(c, lambda, [&](const Elt& t) { return P.E_x_tilde(t, c); });
        PolyMatrix I = PolyMatrix::identity(T.rows(), P.field());
        out.push_back({"tau^2=0", matrices_equal(T * T, PolyMatrix(T.rows(), T.cols(), P.field()), "tau~^2")});
        out.push_back({"tau.Ex=xE.tau+1", matrices_equal(T * EX, XE * T + I, "tau~ Ex~")});
        out.push_back({"Ex.tau=tau.xE+1", matrices_equal(EX * T, T * XE + I, "Ex~ tau~")});
        if (c.j == 1) {
            PolyMatrix Tm = P.etet_matrix(c, lambda, [&](const Elt& t) { return P.tilde_tau_morph(t); });
            out.push_back({"tau-closed=composite", matrices_equal(T, Tm, "tau~")});
        }
    } catch (const std::exception& e) {
        out.push_back({"relations", fail(e.what())});
    }
    return out;
}

CheckResult check_x_powers(const ProductRep& P, Corner c, int lambda, int i_max) {
    return guarded([&] {
        Kind k = *P.kind(Bim::Et, c);
        int nu = ProductRep::nu(c.j, lambda);
        PolyMatrix one = P.models().matrix_of(k, nu, k, nu, [&](const Elt& a) { return P.tilde_x(a, c.j); });
        PolyMatrix it = PolyMatrix::identity(one.rows(), P.field());
        for (int i = 0; i <= i_max; ++i) {
            auto r = matrices_equal(P.tilde_x_pow_matrix(c, lambda, i), it, "x~^" + std::to_string(i));
            if (!r.pass) return r;
            for (int j = 0; i + j <= i_max; ++j) {
                PolyMatrix prod = P.tilde_x_pow_matrix(c, lambda, i) * P.tilde_x_pow_matrix(c, lambda, j);
                r = matrices_equal(prod, P.tilde_x_pow_matrix(c, lambda, i + j),
                                   "x~^" + std::to_string(i) + " x~^" + std::to_string(j));
                if (!r.pass) return r;
            }
            it = one * it;
        }
        return ok();
    });
}

CheckResult check_sigma_oracle(const ProductRep& P, Corner c, int lambda) {
    return guarded([&] {
        int nu = ProductRep::nu(c.j, lambda);
        return matrices_equal(P.sigma_closed(c).eval(P.words(), nu), P.sigma_oracle(c, lambda), "sigma~");
    });
}

CheckResult check_eps_x_F(const ProductRep& P, Corner c, int lambda, int i) {
    return guarded([&] {
        int nu = ProductRep::nu(c.j, lambda);
        return matrices_equal(P.eps_x_F(c, i).eval(P.words(), nu), P.eps_x_F_oracle(c, lambda, i), "eps~ x~^i F~");
    });
}

CheckResult check_F_x_eta(const ProductRep& P, Corner c, int lambda, int i) {
    return guarded([&] {
        int nu = ProductRep::nu(c.j, lambda);
        return matrices_equal(P.F_x_eta(c, i).eval(P.words(), nu), P.F_x_eta_oracle(c, lambda, i), "F~ x~^i eta~");
    });
}

CheckResult check_unit(const ProductRep& P, int lambda) {
    return guarded([&] {
        for (int i : {1, 2}) {
            int nu = ProductRep::nu(i, lambda);
            auto want = unit_expected(P.models(), i, nu);
            if (!want) continue;
            Elt got = P.eta_one_composite(i, lambda);
            if (!(got == *want)) return fail("corner " + std::to_string(i) + std::to_string(i) + " does not compose to the identity");
            if (i == 2) {
                // (1, 0, 0, 1, 0): identity in the Phi11 and Phi22 slots
                auto parts = P.models().split(got);
                auto idfe = P.words().hom_to_fw(PolyMatrix::identity(P.words().rE(nu), P.field()), "E", nu);
                if (parts[0] != idfe || parts[3] != idfe) return fail("diagonal slots are not the identity");
                for (int s : {1, 2, 4})
                    for (auto& p : parts[s])
                        if (!p.is_zero()) return fail("off-diagonal slot " + std::to_string(s + 1) + " is nonzero");
            }
        }
        return ok();
    });
}

CheckResult check_middle_linear(const ProductRep& P, unsigned long seed, int triples, int lo, int hi) {
    return guarded([&] {
        const Models& m = P.models();
        const Words& w = P.words();
        std::vector<int> nus;
        for (int nu = lo; nu <= hi; ++nu)
            if (m.dim(Kind::G2, nu - 2) && m.dim(Kind::L2, nu) && w.rank("FE", nu - 2)) nus.push_back(nu);
        if (nus.empty()) return fail("no weight with nonzero G2 (x) L2 in the window");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<size_t> pick(0, nus.size() - 1);
        for (int t = 0; t < triples; ++t) {
            int nu = nus[pick(rng)];
            Elt g = random_elt(m, Kind::G2, nu - 2, rng), l = random_elt(m, Kind::L2, nu, rng);
            std::vector<Poly> phi(w.rank("FE", nu - 2));
            for (auto& p : phi) p = random_poly(rng, P.field());
            PolyMatrix lhs = as_column(P.g2l2_tensor(P.g2_times_phi(g, phi), l), P.field());
            PolyMatrix rhs = as_column(P.g2l2_tensor(g, P.phi_times_l2(phi, l)), P.field());
            PolyMatrix om = P.omega3().eval(w, nu), ka = P.kappa().eval(w, nu);
            std::string where = "triple " + std::to_string(t) + " at weight " + std::to_string(nu);
            auto r = matrices_equal(om * lhs, om * rhs, "omega''' " + where);
            if (!r.pass) return r;
            r = matrices_equal(ka * lhs, ka * rhs, "kappa " + where);
            if (!r.pass) return r;
        }
        return ok();
    });
}

CheckResult check_rho_iso(const ProductRep& P, Corner c, int lambda) {
    return guarded([&] {
        int nu = ProductRep::nu(c.j, lambda);
        PolyMatrix m = P.tilde_rho(c, lambda).eval(P.words(), nu);
        IsoCertificate cert = certify_iso(std::map<int, PolyMatrix>{{nu, m}});
        if (!cert.iso) return fail(cert.witness.empty() ? "not invertible" : cert.witness);
        return ok();
    });
}

CheckResult check_rho_zero(const ProductRep& P, Corner c) {
    return guarded([&] {
        int nu = ProductRep::nu(c.j, 0);
        return matrices_equal(P.tilde_rho_nonneg(c, 0).eval(P.words(), nu), P.tilde_rho_nonpos(c, 0).eval(P.words(), nu),
                              "lambda=0 assemblies");
    });
}

CheckResult check_certificate(const ProductRep& P, Corner c, int lambda) {
    return guarded([&] {
        int nu = ProductRep::nu(c.j, lambda);
        bool iso = certify_iso(std::map<int, PolyMatrix>{{nu, P.tilde_rho(c, lambda).eval(P.words(), nu)}}).iso;
        bool cert_ok = true;
        std::string why;
        try {
            CornerCertificate cert = triangular_certificate(P, c, lambda);
            for (auto& b : cert.blocks) {
                if (!b.factorization_holds && cert_ok) {
                    cert_ok = false;
                    why = "diagonal block " + b.label + " is not " + (b.factorization.empty() ? "the identity" : b.factorization);
                }
            }
        } catch (const NotTriangular& e) {
            cert_ok = false;
            why = e.what();
        } catch (const DiagonalNotIso& e) {
            cert_ok = false;
            why = e.what();
        }
        if (cert_ok != iso)
            return fail(std::string("certificates disagree: determinant says ") + (iso ? "iso" : "not iso") +
                        ", triangular says " + (cert_ok ? "iso" : "not iso") + (why.empty() ? "" : " (" + why + ")"));
        if (!cert_ok) return fail(why);
        return ok();
    });
}

// ---- harness

void SuiteConfig::validate() const {
    if (lo > hi) throw ConfigError("weight window is empty: " + std::to_string(lo) + ".." + std::to_string(hi));
    if (i_max < 0) throw ConfigError("i-max must be nonnegative");
    if (triples < 0) throw ConfigError("triples must be nonnegative");
    if (format != "json" && format != "text") throw ConfigError("unknown report format " + format);
    for (auto& s : suites)
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
            throw ConfigError("unknown suite " + s);
}

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> s = {"identities",  "hecke",          "rho-input",  "build-product", "product-hecke",
                                               "sigma-oracle", "pairing-oracle", "rho-product", "certificates"};
    return s;
}

TwoRep load_rep(const SuiteConfig& cfg) {
    Field f{cfg.prime};
    if (cfg.rep == "L1") return make_L1(f);
    std::ifstream in(cfg.rep);
    if (!in) throw RepLoadError("cannot open " + cfg.rep);
    std::stringstream ss;
    ss << in.rdbuf();
    if (!cfg.field_given) return load_rep_json(ss.str());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(ss.str());
    } catch (const std::exception& e) {
        throw RepLoadError(cfg.rep + ": " + e.what());
    }
    j["field"] = cfg.prime;
    return load_rep_json(j.dump());
}

bool Report::ok() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Report run(const SuiteConfig& cfg) {
    cfg.validate();
    auto selected = [&](const std::string& s) {
        return cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end();
    };
    std::vector<Task> tasks;
    if (selected("identities")) {
        auto t = identity_tasks();
        tasks.insert(tasks.end(), t.begin(), t.end());
    }
    bool needs_rep = false;
    for (auto& s : all_suites())
        if (s != "identities" && selected(s)) needs_rep = true;

    std::optional<TwoRep> rep;
    std::optional<ProductRep> P;
    std::string product_error;
    if (needs_rep) {
        rep = load_rep(cfg);
        if (selected("hecke")) {
            auto t = report_tasks("hecke", "nil affine Hecke relations on the input", check_hecke(*rep, 3));
            tasks.insert(tasks.end(), t.begin(), t.end());
        }
        if (selected("rho-input")) {
            auto t = report_tasks("rho-input", "hypotheses on the input rep", check_hypotheses(*rep, cfg.lo, cfg.hi, 3));
            tasks.insert(tasks.end(), t.begin(), t.end());
            const TwoRep* r = &*rep;
            tasks.push_back({"rho-input/lambda0-cross", "both commutator assemblies at weight 0", [r] {
                                 return matrices_equal(rho_nonneg(*r, 0), rho_nonpos(*r, 0), "rho_0");
                             }});
        }
        try {
            P.emplace(build_product(*rep, cfg.lo, cfg.hi, 3));
        } catch (const std::exception& e) {
            product_error = e.what();
        }
    }

    auto add = [&](const std::string& id, const std::string& anchor, std::function<CheckResult(const ProductRep&)> f) {
        if (!P) {
            std::string why = "product not built: " + product_error;
            tasks.push_back({id, anchor, [why] { return fail(why); }});
            return;
        }
        const ProductRep* p = &*P;
        tasks.push_back({id, anchor, [p, f] { return f(*p); }});
    };
    auto cid = [](const std::string& s, int l, Corner c) { return s + "/" + lam(l) + "/corner=" + c.str(); };

    if (selected("build-product")) {
        add("build-product/hypotheses", "hypotheses of the construction", [](const ProductRep&) { return ok(); });
        for (int l = cfg.lo; l <= cfg.hi; ++l) {
            add("build-product/c-assoc/" + lam(l), "associativity of C", [l](const ProductRep& p) { return check_c_associative(p, l); });
            add("build-product/et-actions/" + lam(l), "C actions on E~", [l](const ProductRep& p) { return check_actions(p, Bim::Et, l); });
            add("build-product/ft-actions/" + lam(l), "C actions on F~", [l](const ProductRep& p) { return check_actions(p, Bim::Ft, l); });
            add("build-product/unit/" + lam(l), "unit of the product adjunction composes to the identity",
                [l](const ProductRep& p) { return check_unit(p, l); });
        }
        unsigned long seed = cfg.seed;
        int n = cfg.triples, lo = cfg.lo, hi = cfg.hi;
        add("build-product/middle-linear", "the G2 (x) L2 Gamma map is middle-linear",
            [seed, n, lo, hi](const ProductRep& p) { return check_middle_linear(p, seed, n, lo, hi); });
    }
    if (selected("product-hecke")) {
        for (int l = cfg.lo; l <= cfg.hi; ++l)
            for (auto c : corners()) {
                if (P && P->dim(Bim::Et, c, l)) {
                    int im = cfg.i_max;
                    add(cid("product-hecke/x-powers", l, c), "powers of x~",
                        [l, c, im](const ProductRep& p) { return check_x_powers(p, c, l, im); });
                }
                if (P && !P->dim(Bim::EtEt, c, l)) continue;
                if (!P) {
                    add(cid("product-hecke", l, c), "nil affine Hecke relations on the product", nullptr);
                    continue;
                }
                for (auto& [name, res] : check_product_hecke(*P, c, l)) {
                    CheckResult r = res;
                    tasks.push_back({cid("product-hecke", l, c) + "/" + name, "nil affine Hecke relations on the product",
                                     [r] { return r; }});
                }
            }
    }
    if (selected("sigma-oracle"))
        for (int l = cfg.lo; l <= cfg.hi; ++l)
            for (auto c : corners())
                add(cid("sigma-oracle", l, c), "closed form of sigma~ against the defining composite",
                    [l, c](const ProductRep& p) { return check_sigma_oracle(p, c, l); });
    if (selected("pairing-oracle"))
        for (int l = cfg.lo; l <= cfg.hi; ++l)
            for (auto c : corners())
                for (int i = 0; i <= cfg.i_max; ++i) {
                    add(cid("pairing-oracle/eps-x-F", l, c) + "/i=" + std::to_string(i), "closed form of eps~ x~^i F~",
                        [l, c, i](const ProductRep& p) { return check_eps_x_F(p, c, l, i); });
                    add(cid("pairing-oracle/F-x-eta", l, c) + "/i=" + std::to_string(i), "closed form of F~ x~^i eta~",
                        [l, c, i](const ProductRep& p) { return check_F_x_eta(p, c, l, i); });
                }
    if (selected("rho-product")) {
        for (int l = cfg.lo; l <= cfg.hi; ++l)
            for (auto c : corners())
                add(cid("rho-product/iso", l, c), "commutator map of the product is invertible",
                    [l, c](const ProductRep& p) { return check_rho_iso(p, c, l); });
        if (cfg.lo <= 0 && 0 <= cfg.hi)
            for (auto c : corners())
                add("rho-product/lambda0-cross/corner=" + c.str(), "both product assemblies at weight 0",
                    [c](const ProductRep& p) { return check_rho_zero(p, c); });
    }
    if (selected("certificates"))
        for (int l = cfg.lo; l <= cfg.hi; ++l)
            for (auto c : corners())
                add(cid("certificates", l, c), "triangular certificate agrees with the determinant",
                    [l, c](const ProductRep& p) { return check_certificate(p, c, l); });

    // fan out; records keep task order
    std::vector<CheckRecord> records(tasks.size());
    auto exec = [&](size_t k) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = tasks[k].run ? guarded(tasks[k].run) : fail("not run");
        auto t1 = std::chrono::steady_clock::now();
        records[k] = {tasks[k].id, tasks[k].anchor, r.pass, r.witness, std::nullopt};
        if (cfg.timing) records[k].millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    };
    long n = (long)tasks.size();
#ifdef _OPENMP
    if (cfg.threads != 1) {
        int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long k = 0; k < n; ++k) exec((size_t)k);
    } else
#endif
        for (long k = 0; k < n; ++k) exec((size_t)k);

    Report rep_out;
    rep_out.version = kVersion;
    rep_out.config = cfg;
    rep_out.checks = std::move(records);
    return rep_out;
}

std::string to_json(const Report& r) {
    ojson j;
    j["version"] = r.version;
    ojson c;
    c["field"] = r.config.prime ? "F_" + std::to_string(r.config.prime) : std::string("Q");
    c["rep"] = r.config.rep;
    c["weights"] = std::to_string(r.config.lo) + ".." + std::to_string(r.config.hi);
    c["i_max"] = r.config.i_max;
    c["seed"] = r.config.seed;
    c["triples"] = r.config.triples;
    c["suites"] = r.config.suites.empty() ? all_suites() : r.config.suites;
    c["timing"] = r.config.timing;
    j["config"] = c;
    ojson checks = ojson::array();
    for (auto& k : r.checks) {
        ojson e;
        e["id"] = k.id;
        e["anchor"] = k.anchor;
        e["status"] = k.pass ? "pass" : "fail";
        if (!k.pass) e["witness"] = k.witness;
        e["millis"] = k.millis ? ojson(*k.millis) : ojson(nullptr);
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    int pass = 0;
    for (auto& k : r.checks) {
        os << (k.pass ? "PASS " : "FAIL ") << k.id;
        if (!k.pass) os << "  -- " << k.witness;
        if (k.millis) os << "  (" << *k.millis << " ms)";
        os << "\n";
        pass += k.pass;
    }
    os << pass << "/" << r.checks.size() << " checks passed\n";
    return os.str();
}

}  // namespace artifact
