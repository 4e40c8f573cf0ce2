#include "artifact/tworep.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace artifact {

using json = nlohmann::json;

Bimodule power(const Bimodule& e, int n) {
    if (n == 0) return unit_bimodule(e.alg);
    Bimodule r = e;
    for (int k = 1; k < n; ++k) r = tensor_over_A(r, e);
    return r;
}

Adjunction adjunction(const TwoRep& rep) {
    Duality d = left_dual(rep.E);
    Adjunction a;
    a.A = unit_bimodule(rep.alg);
    a.E = rep.E;
    a.F = d.F;
    a.EE = tensor_over_A(rep.E, rep.E);
    a.EF = tensor_over_A(rep.E, d.F);
    a.FE = tensor_over_A(d.F, rep.E);
    a.eta = d.eta;
    a.eps = d.eps;
    return a;
}

TwoRep make_L1(Field f) {
    auto a = std::make_shared<WeightedAlgebra>();
    a->field = f;
    a->gens[-1] = {var::u};
    a->gens[1] = {var::u};
    TwoRep r;
    r.name = "L(1)";
    r.alg = a;
    r.E = zero_bimodule(a, 2, "E");
    Component& c = r.E.comp[-1];
    c.rank = 1;
    c.basis = {"e"};
    c.left[var::u] = PolyMatrix::scalar(1, Poly::variable(var::u, f));
    r.x = identity(r.E);
    r.x.mat[-1] = PolyMatrix::scalar(1, Poly::variable(var::u, f));
    r.tau = zero_map(power(r.E, 2), power(r.E, 2));
    return r;
}

// ---- JSON

static PolyMatrix parse_matrix(const json& j, int rows, int cols, Field f, const std::string& where) {
    if (!j.is_array()) throw RepLoadError(where + ": matrix must be an array of rows");
    if ((int)j.size() != rows) throw RepLoadError(where + ": expected " + std::to_string(rows) + " rows");
    PolyMatrix m(rows, cols, f);
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || (int)j[r].size() != cols)
            throw RepLoadError(where + ": row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c) {
            try {
                m.at(r, c) = j[r][c].is_number_integer() ? Poly(j[r][c].get<long>(), f)
                                                         : Poly::parse(j[r][c].get<std::string>(), f);
            } catch (const std::exception& e) {
                throw RepLoadError(where + ": entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + e.what());
            }
        }
    }
    return m;
}

TwoRep load_rep_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw RepLoadError(std::string("invalid JSON: ") + e.what());
    }
    try {
        auto a = std::make_shared<WeightedAlgebra>();
        a->field.p = j.value("field", 0UL);
        if (!j.contains("weights") || !j["weights"].is_object()) throw RepLoadError("missing 'weights' object");
        for (auto& [w, vars] : j["weights"].items()) {
            std::vector<int> ids;
            for (auto& v : vars) ids.push_back(var::parse(v.get<std::string>()));
            a->gens[std::stoi(w)] = ids;
        }
        TwoRep r;
        r.name = j.value("name", std::string("rep"));
        r.alg = a;
        r.E = zero_bimodule(a, 2, "E");
        if (j.contains("E"))
            for (auto& [ws, cj] : j["E"].items()) {
                int w = std::stoi(ws);
                if (!a->supports(w) || !a->supports(w + 2))
                    throw RepLoadError("E component at weight " + ws + " leaves the support");
                Component& c = r.E.comp[w];
                c.rank = cj.at("rank").get<int>();
                for (int i = 0; i < c.rank; ++i) c.basis.push_back("e" + std::to_string(i));
                for (int v : a->gens.at(w + 2)) {
                    std::string vn = var::name(v);
                    if (cj.contains("left") && cj["left"].contains(vn))
                        c.left[v] = parse_matrix(cj["left"][vn], c.rank, c.rank, a->field, "E[" + ws + "].left." + vn);
                    else
                        c.left[v] = PolyMatrix::scalar(c.rank, Poly::variable(v, a->field));
                }
            }
        r.x = zero_map(r.E, r.E);
        if (j.contains("x"))
            for (auto& [ws, mj] : j["x"].items()) {
                int w = std::stoi(ws), rk = r.E.rank(w);
                r.x.mat[w] = parse_matrix(mj, rk, rk, a->field, "x[" + ws + "]");
            }
        Bimodule ee = power(r.E, 2);
        r.tau = zero_map(ee, ee);
        if (j.contains("tau"))
            for (auto& [ws, mj] : j["tau"].items()) {
                int w = std::stoi(ws), rk = ee.rank(w);
                r.tau.mat[w] = parse_matrix(mj, rk, rk, a->field, "tau[" + ws + "]");
            }
        return r;
    } catch (const RepLoadError&) {
        throw;
    } catch (const std::exception& e) {
        throw RepLoadError(std::string("malformed rep: ") + e.what());
    }
}

TwoRep load_rep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RepLoadError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_rep_json(ss.str());
}

std::string rep_to_json(const TwoRep& rep) {
    json j;
    j["name"] = rep.name;
    j["field"] = rep.alg->field.p;
    for (auto& [w, g] : rep.alg->gens) {
        json vs = json::array();
        for (int v : g) vs.push_back(var::name(v));
        j["weights"][std::to_string(w)] = vs;
    }
    for (auto& [w, c] : rep.E.comp) {
        if (!c.rank) continue;
        j["E"][std::to_string(w)]["rank"] = c.rank;
        for (auto& [v, m] : c.left) j["E"][std::to_string(w)]["left"][var::name(v)] = m.render();
        j["x"][std::to_string(w)] = rep.x.mat.at(w).render();
    }
    for (auto& [w, m] : rep.tau.mat)
        if (m.rows()) j["tau"][std::to_string(w)] = m.render();
    return j.dump(2);
}

// ---- checks

bool all_pass(const CheckReport& r) {
    for (auto& e : r)
        if (!e.pass) return false;
    return true;
}

static void record(CheckReport& rep, const std::string& name, int w, const PolyMatrix& lhs, const PolyMatrix& rhs) {
    CheckEntry e{name, w, lhs == rhs, ""};
    if (!e.pass) e.witness = "weight " + std::to_string(w) + ": lhs " + lhs.str() + " rhs " + rhs.str();
    rep.push_back(e);
}

CheckReport check_hecke(const TwoRep& rep, int n) {
    CheckReport out;
    const Bimodule& E = rep.E;
    Bimodule EE = power(E, 2);
    BimoduleMap Ex = tensor_left(E, rep.x), xE = tensor_right(rep.x, E);
    BimoduleMap id2 = identity(EE);
    const BimoduleMap& t = rep.tau;
    for (int w : rep.alg->support()) {
        const PolyMatrix& T = t.mat.at(w);
        record(out, "tau^2=0", w, T * T, PolyMatrix(T.rows(), T.cols(), rep.field()));
        if (n >= 2) {
            record(out, "tau.Ex=xE.tau+1", w, T * Ex.at(w), xE.at(w) * T + id2.at(w));
            record(out, "Ex.tau=tau.xE+1", w, Ex.at(w) * T, T * xE.at(w) + id2.at(w));
        }
    }
    if (n >= 3) {
        BimoduleMap tE = tensor_right(t, E), Et = tensor_left(E, t);
        for (int w : rep.alg->support())
            record(out, "braid", w, tE.at(w) * Et.at(w) * tE.at(w), Et.at(w) * tE.at(w) * Et.at(w));
    }
    return out;
}

BimoduleMap sigma(const TwoRep& rep) {
    Adjunction a = adjunction(rep);
    BimoduleMap etaEF = tensor_right(a.eta, a.EF);                       // EF -> FEEF
    BimoduleMap FtauF = tensor_left(a.F, tensor_right(rep.tau, a.F));   // FEEF -> FEEF
    BimoduleMap FEeps = tensor_left(a.FE, a.eps);                       // FEEF -> FE
    BimoduleMap s = compose(FEeps, compose(FtauF, etaEF));
    s.dom = a.EF;
    s.cod = a.FE;
    return s;
}

static PolyMatrix at_weight(const BimoduleMap& f, int w, int rows, int cols, Field fld) {
    auto it = f.mat.find(w);
    return it == f.mat.end() ? PolyMatrix(rows, cols, fld) : it->second;
}

PolyMatrix rho_nonneg(const TwoRep& rep, int lambda) {
    Adjunction a = adjunction(rep);
    BimoduleMap s = sigma(rep);
    Field f = rep.field();
    int ref = a.EF.rank(lambda), rfe = a.FE.rank(lambda), ra = rep.alg->supports(lambda) ? 1 : 0;
    std::vector<PolyMatrix> rows{at_weight(s, lambda, rfe, ref, f)};
    BimoduleMap xF = tensor_right(rep.x, a.F), xiF = identity(a.EF);
    for (int i = 0; i < lambda; ++i) {
        rows.push_back(at_weight(compose(a.eps, xiF), lambda, ra, ref, f));
        xiF = compose(xF, xiF);
    }
    return vstack(rows, ref);
}

PolyMatrix rho_nonpos(const TwoRep& rep, int lambda) {
    Adjunction a = adjunction(rep);
    BimoduleMap s = sigma(rep);
    Field f = rep.field();
    int ref = a.EF.rank(lambda), rfe = a.FE.rank(lambda), ra = rep.alg->supports(lambda) ? 1 : 0;
    std::vector<PolyMatrix> cols{at_weight(s, lambda, rfe, ref, f)};
    BimoduleMap Fx = tensor_left(a.F, rep.x), Fxi = identity(a.FE);
    for (int i = 0; i < -lambda; ++i) {
        cols.push_back(at_weight(compose(Fxi, a.eta), lambda, rfe, ra, f));
        Fxi = compose(Fx, Fxi);
    }
    return hstack(cols, rfe);
}

PolyMatrix rho(const TwoRep& rep, int lambda) { return lambda >= 0 ? rho_nonneg(rep, lambda) : rho_nonpos(rep, lambda); }

CheckReport check_hypotheses(const TwoRep& rep, int lo, int hi, int n_max) {
    CheckReport out;
    // (a) free finite components with commuting actions
    {
        CheckEntry e{"free-components", 0, true, ""};
        if (auto err = check_actions_commute(rep.E)) e = {"free-components", 0, false, *err};
        else if (auto err2 = check_action_commutes(rep.x)) e = {"free-components", 0, false, "x: " + *err2};
        out.push_back(e);
    }
    // (b) E^n over P_n: x_i commute and act injectively on nonzero components
    int first_zero = -1;
    for (int n = 1; n <= n_max; ++n) {
        Bimodule En = power(rep.E, n);
        if (En.is_zero()) {
            if (first_zero < 0) first_zero = n;
            out.push_back({"E^" + std::to_string(n) + " free over P_" + std::to_string(n), 0, true,
                           "E^" + std::to_string(n) + " = 0"});
            continue;
        }
        std::vector<BimoduleMap> xs;
        for (int i = 1; i <= n; ++i) {
            // x_i counts from the right: E^(i-1) on the right, E^(n-i) on the left
            BimoduleMap m = tensor_right(rep.x, power(rep.E, i - 1));
            if (i - 1 == 0) m = rep.x;
            if (n - i > 0) m = tensor_left(power(rep.E, n - i), m);
            xs.push_back(m);
        }
        CheckEntry e{"E^" + std::to_string(n) + " free over P_" + std::to_string(n), 0, true, ""};
        for (int w : rep.alg->support()) {
            if (!En.rank(w)) continue;
            for (size_t i = 0; i < xs.size() && e.pass; ++i) {
                if (determinant(xs[i].at(w)).is_zero()) {
                    e.pass = false;
                    e.witness = "weight " + std::to_string(w) + ": x" + std::to_string(i + 1) + " has torsion";
                }
                for (size_t k = i + 1; k < xs.size() && e.pass; ++k)
                    if (xs[i].at(w) * xs[k].at(w) != xs[k].at(w) * xs[i].at(w)) {
                        e.pass = false;
                        e.witness = "weight " + std::to_string(w) + ": x" + std::to_string(i + 1) + ", x" +
                                    std::to_string(k + 1) + " do not commute";
                    }
            }
        }
        out.push_back(e);
    }
    if (first_zero > 0)
        out.push_back({"first vanishing power", 0, true, "E^" + std::to_string(first_zero) + " = 0"});
    // (c) local nilpotence on the window
    int span = hi - lo + 1;
    Adjunction adj = adjunction(rep);
    for (int w = lo; w <= hi; ++w) {
        for (int which = 0; which < 2; ++which) {
            const Bimodule& B = which ? adj.F : rep.E;
            CheckEntry e{which ? "F locally nilpotent" : "E locally nilpotent", w, false, ""};
            Bimodule Bk = B;
            for (int k = 1; k <= span + 1; ++k) {
                int r = rep.alg->supports(w) ? Bk.rank(w) : 0;
                if (r == 0) {
                    e.pass = true;
                    e.witness = "power " + std::to_string(k) + " vanishes";
                    break;
                }
                Bk = tensor_over_A(B, Bk);
            }
            if (!e.pass) e.witness = "no vanishing power up to " + std::to_string(span + 1);
            out.push_back(e);
        }
    }
    // (d) rho_lambda iso on the window
    for (int w = lo; w <= hi; ++w) {
        IsoCertificate c = certify_iso(std::map<int, PolyMatrix>{{w, rho(rep, w)}});
        out.push_back({"rho iso", w, c.iso, c.witness});
    }
    return out;
}

}  // namespace artifact
