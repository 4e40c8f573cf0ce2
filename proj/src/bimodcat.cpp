#include "artifact/bimodcat.hpp"

#include <sstream>

namespace artifact {

std::vector<int> WeightedAlgebra::support() const {
    std::vector<int> s;
    for (auto& [w, g] : gens) s.push_back(w);
    return s;
}

WeightedAlgebra WeightedAlgebra::with_y() const {
    WeightedAlgebra a = *this;
    a.y_adjoined = true;
    return a;
}

int Bimodule::rank(int w) const {
    auto it = comp.find(w);
    return it == comp.end() ? 0 : it->second.rank;
}

const Component& Bimodule::at(int w) const {
    auto it = comp.find(w);
    if (it == comp.end()) throw std::out_of_range(name + ": weight " + std::to_string(w) + " outside support");
    return it->second;
}

bool Bimodule::is_zero() const {
    for (auto& [w, c] : comp)
        if (c.rank) return false;
    return true;
}

bool Bimodule::is_symmetric() const {
    for (auto& [w, c] : comp)
        for (auto& [v, m] : c.left)
            if (m != PolyMatrix::scalar(c.rank, Poly::variable(v, alg->field))) return false;
    return true;
}

std::string Bimodule::describe() const {
    std::ostringstream os;
    os << name << " (shift " << shift << "):";
    for (auto& [w, c] : comp) os << " [" << w << "]=" << c.rank;
    return os.str();
}

static Component make_component(const WeightedAlgebra& a, int target, int rank, bool symmetric_scalar) {
    Component c;
    c.rank = rank;
    if (a.supports(target))
        for (int v : a.gens.at(target))
            c.left[v] = symmetric_scalar ? PolyMatrix::scalar(rank, Poly::variable(v, a.field)) : PolyMatrix(rank, rank, a.field);
    return c;
}

Bimodule unit_bimodule(const AlgebraPtr& a) {
    Bimodule m{"A", a, 0, {}};
    for (int w : a->support()) {
        m.comp[w] = make_component(*a, w, 1, true);
        m.comp[w].basis = {"1"};
    }
    return m;
}

Bimodule zero_bimodule(const AlgebraPtr& a, int shift, const std::string& name) {
    Bimodule m{name, a, shift, {}};
    for (int w : a->support()) m.comp[w] = make_component(*a, w + shift, 0, true);
    return m;
}

static void same_algebra(const Bimodule& m, const Bimodule& n) {
    if (m.alg != n.alg && !(m.alg && n.alg && *m.alg == *n.alg))
        throw AlgebraMismatch("cannot tensor " + m.name + " with " + n.name + " over different algebras");
}

static std::vector<std::pair<int, PolyMatrix>> left_subst(const Bimodule& n, int w) {
    std::vector<std::pair<int, PolyMatrix>> s;
    auto it = n.comp.find(w);
    if (it == n.comp.end()) return s;
    for (auto& [v, m] : it->second.left) s.emplace_back(v, m);
    return s;
}

Bimodule tensor_over_A(const Bimodule& m, const Bimodule& n) {
    same_algebra(m, n);
    const WeightedAlgebra& a = *n.alg;
    Bimodule r{m.name + n.name, n.alg, m.shift + n.shift, {}};
    for (int w : a.support()) {
        int mid = w + n.shift;
        int rn = n.rank(w), rm = a.supports(mid) ? m.rank(mid) : 0;
        Component c = make_component(a, w + r.shift, rm * rn, false);
        auto subst = left_subst(n, w);
        if (rm && rn) {
            const Component& mc = m.at(mid);
            for (auto& [v, lm] : mc.left) {
                PolyMatrix big(rm * rn, rm * rn, a.field);
                for (int k = 0; k < rm; ++k)
                    for (int i = 0; i < rm; ++i)
                        if (!lm.at(k, i).is_zero()) big.set_block(k * rn, i * rn, eval_at_matrices(lm.at(k, i), subst, rn));
                c.left[v] = big;
            }
            const Component& nc = n.at(w);
            for (int i = 0; i < rm; ++i)
                for (int j = 0; j < rn; ++j)
                    c.basis.push_back((i < (int)mc.basis.size() ? mc.basis[i] : "m" + std::to_string(i)) + "*" +
                                      (j < (int)nc.basis.size() ? nc.basis[j] : "n" + std::to_string(j)));
        }
        r.comp[w] = std::move(c);
    }
    return r;
}

Bimodule direct_sum(const std::vector<Bimodule>& parts, const std::string& name) {
    if (parts.empty()) throw ShapeMismatch("empty direct sum");
    Bimodule r{name, parts[0].alg, parts[0].shift, {}};
    if (r.name.empty())
        for (size_t i = 0; i < parts.size(); ++i) r.name += (i ? "+" : "") + parts[i].name;
    for (auto& p : parts) {
        same_algebra(parts[0], p);
        if (p.shift != r.shift) throw ShapeMismatch("direct sum of different shifts");
    }
    for (int w : r.alg->support()) {
        Component c = make_component(*r.alg, w + r.shift, 0, false);
        for (auto& [v, m] : c.left) {
            std::vector<PolyMatrix> blocks;
            for (auto& p : parts) blocks.push_back(p.at(w).left.at(v));
            m = block_diag(blocks);
        }
        for (auto& p : parts) {
            c.rank += p.rank(w);
            for (auto& b : p.at(w).basis) c.basis.push_back(b);
        }
        r.comp[w] = std::move(c);
    }
    return r;
}

Duality left_dual(const Bimodule& e) {
    if (!e.is_symmetric()) throw NotSymmetric(e.name + ": dual needs a left action by scalars");
    const AlgebraPtr& a = e.alg;
    Duality d;
    d.F = Bimodule{"F", a, -e.shift, {}};
    for (int w : a->support()) {
        int src = w - e.shift;
        int r = a->supports(src) ? e.rank(src) : 0;
        d.F.comp[w] = make_component(*a, w + d.F.shift, r, true);
        for (int i = 0; i < r; ++i) d.F.comp[w].basis.push_back("f" + std::to_string(i));
    }
    Bimodule A = unit_bimodule(a);
    Bimodule fe = tensor_over_A(d.F, e), ef = tensor_over_A(e, d.F);
    d.eta = BimoduleMap{A, fe, {}};
    d.eps = BimoduleMap{ef, A, {}};
    for (int w : a->support()) {
        int r = e.rank(w);
        PolyMatrix col(r * r, 1, a->field);
        for (int i = 0; i < r; ++i) col.at(i * r + i, 0) = Poly(1, a->field);
        d.eta.mat[w] = col;
        int rr = d.F.rank(w);
        PolyMatrix row(1, rr * rr, a->field);
        for (int i = 0; i < rr; ++i) row.at(0, i * rr + i) = Poly(1, a->field);
        d.eps.mat[w] = row;
    }
    return d;
}

BimoduleMap identity(const Bimodule& m) {
    BimoduleMap f{m, m, {}};
    for (auto& [w, c] : m.comp) f.mat[w] = PolyMatrix::identity(c.rank, m.alg->field);
    return f;
}

BimoduleMap zero_map(const Bimodule& dom, const Bimodule& cod) {
    BimoduleMap f{dom, cod, {}};
    for (auto& [w, c] : dom.comp) f.mat[w] = PolyMatrix(cod.rank(w), c.rank, dom.alg->field);
    return f;
}

static void check_shapes(const BimoduleMap& f) {
    for (auto& [w, m] : f.mat)
        if (m.rows() != f.cod.rank(w) || m.cols() != f.dom.rank(w))
            throw ShapeMismatch("map matrix at weight " + std::to_string(w) + " is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " + std::to_string(f.cod.rank(w)) + "x" +
                                std::to_string(f.dom.rank(w)));
}

BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f) {
    if (g.dom.shift != f.cod.shift) throw ShapeMismatch("compose: shift mismatch");
    BimoduleMap r{f.dom, g.cod, {}};
    for (auto& [w, m] : f.mat) {
        auto it = g.mat.find(w);
        if (it == g.mat.end()) throw ShapeMismatch("compose: missing weight " + std::to_string(w));
        r.mat[w] = it->second * m;
    }
    check_shapes(r);
    return r;
}

BimoduleMap add(const BimoduleMap& a, const BimoduleMap& b) {
    BimoduleMap r = a;
    for (auto& [w, m] : r.mat) m = m + b.mat.at(w);
    return r;
}

BimoduleMap scalar_multiply(const BimoduleMap& f, const Poly& c) {
    BimoduleMap r = f;
    for (auto& [w, m] : r.mat) m = m.times(c);
    return r;
}

BimoduleMap direct_sum(const std::vector<BimoduleMap>& parts) {
    std::vector<Bimodule> doms, cods;
    for (auto& p : parts) doms.push_back(p.dom), cods.push_back(p.cod);
    BimoduleMap r{direct_sum(doms), direct_sum(cods), {}};
    for (int w : r.dom.alg->support()) {
        std::vector<PolyMatrix> blocks;
        for (auto& p : parts) blocks.push_back(p.mat.at(w));
        r.mat[w] = block_diag(blocks);
    }
    return r;
}

BimoduleMap hjoin(const std::vector<BimoduleMap>& parts, const Bimodule& dom) {
    if (parts.empty()) throw ShapeMismatch("empty hjoin");
    BimoduleMap r{dom, parts[0].cod, {}};
    for (int w : dom.alg->support()) {
        std::vector<PolyMatrix> blocks;
        for (auto& p : parts) blocks.push_back(p.mat.at(w));
        r.mat[w] = hstack(blocks);
    }
    check_shapes(r);
    return r;
}

BimoduleMap vjoin(const std::vector<BimoduleMap>& parts, const Bimodule& cod) {
    if (parts.empty()) throw ShapeMismatch("empty vjoin");
    BimoduleMap r{parts[0].dom, cod, {}};
    for (int w : cod.alg->support()) {
        std::vector<PolyMatrix> blocks;
        for (auto& p : parts) blocks.push_back(p.mat.at(w));
        r.mat[w] = vstack(blocks);
    }
    check_shapes(r);
    return r;
}

BimoduleMap tensor_left(const Bimodule& m, const BimoduleMap& g) {
    BimoduleMap r{tensor_over_A(m, g.dom), tensor_over_A(m, g.cod), {}};
    for (auto& [w, gm] : g.mat) {
        int mid = w + g.dom.shift;
        int rm = m.alg->supports(mid) ? m.rank(mid) : 0;
        r.mat[w] = kron(PolyMatrix::identity(rm, m.alg->field), gm);
    }
    check_shapes(r);
    return r;
}

BimoduleMap tensor_right(const BimoduleMap& f, const Bimodule& n) {
    BimoduleMap r{tensor_over_A(f.dom, n), tensor_over_A(f.cod, n), {}};
    const Field fld = n.alg->field;
    for (int w : n.alg->support()) {
        int mid = w + n.shift;
        int rn = n.rank(w);
        if (!n.alg->supports(mid) || rn == 0) {
            r.mat[w] = PolyMatrix(r.cod.rank(w), r.dom.rank(w), fld);
            continue;
        }
        const PolyMatrix& fm = f.mat.at(mid);
        auto subst = left_subst(n, w);
        PolyMatrix big(fm.rows() * rn, fm.cols() * rn, fld);
        for (int k = 0; k < fm.rows(); ++k)
            for (int i = 0; i < fm.cols(); ++i)
                if (!fm.at(k, i).is_zero()) big.set_block(k * rn, i * rn, eval_at_matrices(fm.at(k, i), subst, rn));
        r.mat[w] = big;
    }
    check_shapes(r);
    return r;
}

std::optional<std::string> check_action_commutes(const BimoduleMap& f) {
    for (auto& [w, m] : f.mat) {
        const Component& dc = f.dom.at(w);
        const Component& cc = f.cod.at(w);
        for (auto& [v, ld] : dc.left) {
            auto it = cc.left.find(v);
            if (it == cc.left.end()) continue;
            if (m * ld != it->second * m)
                return "weight " + std::to_string(w) + ": map does not commute with left action of " + var::name(v);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_actions_commute(const Bimodule& m) {
    for (auto& [w, c] : m.comp)
        for (auto& [v1, a] : c.left)
            for (auto& [v2, b] : c.left)
                if (v1 < v2 && a * b != b * a)
                    return "weight " + std::to_string(w) + ": left generators " + var::name(v1) + ", " + var::name(v2) +
                           " do not commute";
    return std::nullopt;
}

bool is_unit_det(const Poly& d) { return !d.is_zero() && d.is_constant(); }

IsoCertificate certify_iso(const std::map<int, PolyMatrix>& per_weight) {
    IsoCertificate cert;
    for (auto& [w, m] : per_weight) {
        if (m.rows() != m.cols()) {
            if (cert.iso)
                cert.witness = "weight " + std::to_string(w) + ": not square (" + std::to_string(m.rows()) + "x" +
                               std::to_string(m.cols()) + ")";
            cert.iso = false;
            continue;
        }
        Poly d = determinant(m);
        cert.determinants[w] = d;
        if (!is_unit_det(d)) {
            if (cert.iso) cert.witness = "weight " + std::to_string(w) + ": determinant " + d.str() + " is not a unit";
            cert.iso = false;
        }
    }
    return cert;
}

IsoCertificate certify_iso(const BimoduleMap& f) { return certify_iso(f.mat); }

}  // namespace artifact
