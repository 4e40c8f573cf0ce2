#include "artifact/product.hpp"

namespace artifact {

// ---- BlockMap

BlockMap::BlockMap(std::vector<std::string> r, std::vector<std::string> c)
    : rows(std::move(r)), cols(std::move(c)), cell(rows.size(), std::vector<std::optional<Prim>>(cols.size())) {}

void BlockMap::set(int r, int c, const Prim& p) {
    if (p.cod != rows.at(r) || p.dom != cols.at(c))
        throw ShapeMismatch("block (" + std::to_string(r) + "," + std::to_string(c) + ") expects " + cols[c] + "->" +
                            rows[r] + ", got " + p.dom + "->" + p.cod);
    cell[r][c] = p;
}

std::vector<int> BlockMap::row_sizes(const Words& w, int nu) const {
    std::vector<int> s;
    for (auto& r : rows) s.push_back(w.rank(r, nu));
    return s;
}

std::vector<int> BlockMap::col_sizes(const Words& w, int nu) const {
    std::vector<int> s;
    for (auto& c : cols) s.push_back(w.rank(c, nu));
    return s;
}

PolyMatrix BlockMap::eval(const Words& w, int nu) const {
    auto rs = row_sizes(w, nu), cs = col_sizes(w, nu);
    int R = 0, C = 0;
    for (int x : rs) R += x;
    for (int x : cs) C += x;
    PolyMatrix out(R, C, w.field());
    int r0 = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
        int c0 = 0;
        for (size_t c = 0; c < cols.size(); ++c) {
            if (cell[r][c] && rs[r] && cs[c]) {
                PolyMatrix b = cell[r][c]->at(nu);
                if (b.rows() != rs[r] || b.cols() != cs[c])
                    throw ShapeMismatch("block " + cols[c] + "->" + rows[r] + " has the wrong size at weight " +
                                        std::to_string(nu));
                out.set_block(r0, c0, b);
            }
            c0 += cs[c];
        }
        r0 += rs[r];
    }
    return out;
}

BlockMap vstack(const std::vector<BlockMap>& parts, const std::vector<std::string>& cols) {
    std::vector<std::string> rows;
    for (auto& p : parts) {
        if (p.cols != cols) throw ShapeMismatch("vstack of block maps with different columns");
        rows.insert(rows.end(), p.rows.begin(), p.rows.end());
    }
    BlockMap out(rows, cols);
    size_t r0 = 0;
    for (auto& p : parts) {
        for (size_t r = 0; r < p.rows.size(); ++r) out.cell[r0 + r] = p.cell[r];
        r0 += p.rows.size();
    }
    return out;
}

BlockMap hstack(const std::vector<BlockMap>& parts, const std::vector<std::string>& rows) {
    std::vector<std::string> cols;
    for (auto& p : parts) {
        if (p.rows != rows) throw ShapeMismatch("hstack of block maps with different rows");
        cols.insert(cols.end(), p.cols.begin(), p.cols.end());
    }
    BlockMap out(rows, cols);
    size_t c0 = 0;
    for (auto& p : parts) {
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < p.cols.size(); ++c) out.cell[r][c0 + c] = p.cell[r][c];
        c0 += p.cols.size();
    }
    return out;
}

BlockMap whisker(const Words& w, const std::string& left, const BlockMap& m, const std::string& right) {
    std::vector<std::string> rows, cols;
    for (auto& r : m.rows) rows.push_back(left + r + right);
    for (auto& c : m.cols) cols.push_back(left + c + right);
    BlockMap out(rows, cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            if (m.cell[r][c]) out.cell[r][c] = w.whisker(left, *m.cell[r][c], right);
    return out;
}

BlockMap select(const BlockMap& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<std::string> rw, cw;
    for (int r : rows) rw.push_back(m.rows.at(r));
    for (int c : cols) cw.push_back(m.cols.at(c));
    BlockMap out(rw, cw);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) out.cell[r][c] = m.cell[rows[r]][cols[c]];
    return out;
}

BlockMap scalar_blocks(const Words& w, const std::string& word, const std::vector<std::vector<Poly>>& m) {
    std::vector<std::string> ws(m.size(), word);
    BlockMap out(ws, ws);
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < m.size(); ++c)
            if (!m[r][c].is_zero()) out.cell[r][c] = w.scaled(w.ident(word), m[r][c]);
    return out;
}

// ---- corners and kinds

std::string bim_name(Bim b) {
    switch (b) {
        case Bim::C: return "C";
        case Bim::Et: return "E~";
        case Bim::Ft: return "F~";
        case Bim::FtEt: return "F~E~";
        case Bim::EtEt: return "E~E~";
    }
    return "?";
}

const std::vector<Corner>& corners() {
    static const std::vector<Corner> all = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
    return all;
}

ProductRep::ProductRep(const TwoRep& rep) : m_(rep) {}

std::optional<Kind> ProductRep::kind(Bim b, Corner c) const {
    int k = (c.i - 1) * 2 + (c.j - 1);  // 11, 12, 21, 22
    static const Kind C[] = {Kind::A, Kind::YE, Kind::F, Kind::G1};
    static const Kind Et[] = {Kind::YE, Kind::YYEE, Kind::G1, Kind::G2};
    static const Kind Ft[] = {Kind::F, Kind::G1, Kind::FF, Kind::L2};
    static const Kind FtEt[] = {Kind::G1, Kind::G2, Kind::L2, Kind::U};
    switch (b) {
        case Bim::C: return C[k];
        case Bim::Et: return Et[k];
        case Bim::Ft: return Ft[k];
        case Bim::FtEt: return FtEt[k];
        case Bim::EtEt:
            if (k == 1) return std::nullopt;
            return k == 0 ? Kind::YYEE : k == 2 ? Kind::G2 : Kind::G3;
    }
    return std::nullopt;
}

int ProductRep::nu_of(Bim, Corner c, int lambda) const { return nu(c.j, lambda); }

int ProductRep::dim(Bim b, Corner c, int lambda) const {
    auto k = kind(b, c);
    int n = nu_of(b, c, lambda);
    return k ? m_.dim(*k, n) : words().rank("EEE", n);
}

Elt ProductRep::zero(Bim b, Corner c, int lambda) const {
    auto k = kind(b, c);
    if (!k) throw Unsupported("the free corner E^3 has no model element type");
    return m_.zero(*k, nu_of(b, c, lambda));
}

Elt ProductRep::basis(Bim b, Corner c, int lambda, int idx) const {
    Elt e = zero(b, c, lambda);
    e.v.at(idx) = Poly(1, field());
    return e;
}

static int corner_j(Kind k) {
    switch (k) {
        case Kind::YE:
        case Kind::G1: return 1;
        case Kind::YYEE:
        case Kind::G2: return 2;
        default: throw ShapeMismatch(kind_name(k) + " is not a corner of E~");
    }
}

// ---- C and its actions

Elt ProductRep::c_mul(const Elt& c, Corner ci, const Elt& cp, Corner cpi, int lambda) const {
    if (ci.j != cpi.i) throw ShapeMismatch("C product of non-adjacent corners");
    Corner out{ci.i, cpi.j};
    return m_.from_morph(*kind(Bim::C, out), nu(out.j, lambda), compose(morph_of(cp), morph_of(c)));
}

std::vector<int> ProductRep::c_weights(int lo, int hi) const {
    std::vector<int> ws;
    for (int l = lo; l <= hi; ++l) {
        bool any = false;
        for (auto& c : corners()) any = any || dim(Bim::C, c, l) > 0;
        if (any) ws.push_back(l);
    }
    return ws;
}

static int lambda_from(Corner c, int nu) { return c.j == 1 ? nu - 1 : nu + 1; }

Elt ProductRep::et_right(const Elt& m, Corner mi, const Elt& c, Corner ci) const {
    if (mi.j != ci.i) throw ShapeMismatch("E~ right action: corners do not match");
    Corner out{mi.i, ci.j};
    int lambda = lambda_from(mi, m.nu);
    return m_.from_morph(*kind(Bim::Et, out), nu(out.j, lambda), compose(morph_of(m_.e_prime(c)), morph_of(m)));
}

Elt ProductRep::et_left(const Elt& c, Corner ci, const Elt& m, Corner mi) const {
    if (ci.j != mi.i) throw ShapeMismatch("E~ left action: corners do not match");
    Corner out{ci.i, mi.j};
    int lambda = lambda_from(mi, m.nu);
    return m_.from_morph(*kind(Bim::Et, out), nu(out.j, lambda), compose(morph_of(m), morph_of(c)));
}

Elt ProductRep::ft_left(const Elt& c, Corner ci, const Elt& b, Corner bi) const {
    if (ci.j != bi.i) throw ShapeMismatch("F~ left action: corners do not match");
    Corner out{ci.i, bi.j};
    int lambda = lambda_from(bi, b.nu);
    return m_.from_morph(*kind(Bim::Ft, out), nu(out.j, lambda), compose(morph_of(b), morph_of(m_.e_prime(c))));
}

Elt ProductRep::ft_right(const Elt& b, Corner bi, const Elt& c, Corner ci) const {
    if (bi.j != ci.i) throw ShapeMismatch("F~ right action: corners do not match");
    Corner out{bi.i, ci.j};
    int lambda = lambda_from(bi, b.nu);
    return m_.from_morph(*kind(Bim::Ft, out), nu(out.j, lambda), compose(morph_of(c), morph_of(b)));
}

// ---- x~ and tau~

Elt ProductRep::x_on_object(int j, int nu) const {
    const Words& w = words();
    Field f = field();
    int a = w.supports(nu) ? 1 : 0;
    if (j == 1) return m_.from_morph(Kind::G1, nu, {w.x().at(nu), PolyMatrix::scalar(a, y())});
    int q = w.rE(nu);
    PolyMatrix bottom(2 * q, 2 * q, f);
    bottom.set_block(0, 0, PolyMatrix::scalar(q, y()));
    bottom.set_block(q, 0, -PolyMatrix::identity(q, f));
    bottom.set_block(q, q, w.x().at(nu));
    return m_.from_morph(Kind::U, nu, {w.xop(2, 2, nu), bottom});
}

Elt ProductRep::tau_on_object(int nu) const {
    const Words& w = words();
    int q = w.rE(nu);
    PolyMatrix bottom(2 * q, 2 * q, field());
    bottom.set_block(0, q, PolyMatrix::identity(q, field()));
    return m_.from_morph(Kind::U, nu, {w.tau().at(nu), bottom});
}

Elt ProductRep::tilde_x(const Elt& a, int j) const {
    return m_.from_morph(a.kind, a.nu, compose(morph_of(x_on_object(j, a.nu)), morph_of(a)));
}

static Poly hpoly(int d, const std::vector<int>& vars, Field f) { return h_complete(d, vars, f); }

Elt ProductRep::tilde_x_pow(const Elt& a, int j, int i) const {
    const Words& w = words();
    Field f = field();
    int nu = a.nu;
    auto p = m_.split(a);
    Poly x1 = Poly::variable(var::x(1), f);
    Poly yi = y().pow(i);
    switch (a.kind) {
        case Kind::YE: {
            if (!w.rE(nu)) return a;
            PolyMatrix X = w.xpoly(x1.pow(i), 1).at(nu);
            return m_.join(a.kind, nu, {column(X * as_column(p[0], f))});
        }
        case Kind::YYEE: {
            if (!w.rank("EE", nu)) return a;
            PolyMatrix X2 = w.xpoly(Poly::variable(var::x(2), f).pow(i), 2).at(nu);
            return m_.join(a.kind, nu, {column(X2 * as_column(p[0], f))});
        }
        case Kind::G1: {
            if (!w.supports(nu)) return a;
            Poly th = p[0][0];
            std::vector<Poly> phi(p[1].size(), Poly(f));
            if (w.rE(nu)) {
                PolyMatrix h = w.xpoly(hpoly(i - 1, {var::x(1), var::y}, f), 1).at(nu);
                PolyMatrix Xi = w.xpoly(x1.pow(i), 1).at(nu);
                phi = w.hom_to_fw(h.times(th) + Xi * w.fw_to_hom(p[1], "E", nu), "E", nu);
            }
            return m_.join(a.kind, nu, {{yi * th}, phi});
        }
        case Kind::G2: {
            if (!w.rE(nu)) return a;
            PolyMatrix ep = as_column(p[0], f), e = as_column(p[1], f);
            PolyMatrix Xi = w.xpoly(x1.pow(i), 1).at(nu);
            PolyMatrix hxy = w.xpoly(hpoly(i - 1, {var::x(1), var::y}, f), 1).at(nu);
            PolyMatrix new_ep = Xi * ep - hxy * e;
            PolyMatrix new_e = e.times(yi);
            std::vector<Poly> xi(p[2].size(), Poly(f));
            if (w.rank("EE", nu)) {
                PolyMatrix h12 = w.xpoly(hpoly(i - 1, {var::x(1), var::x(2)}, f), 2).at(nu);
                PolyMatrix h12y = w.xpoly(hpoly(i - 2, {var::x(1), var::x(2), var::y}, f), 2).at(nu);
                PolyMatrix X2 = w.xpoly(Poly::variable(var::x(2), f).pow(i), 2).at(nu);
                PolyMatrix m = h12 * m_.tensor_with(ep, nu + 2) - h12y * m_.tensor_with(e, nu + 2) +
                               X2 * w.fw_to_hom(p[2], "EE", nu);
                xi = w.hom_to_fw(m, "EE", nu);
            }
            return m_.join(a.kind, nu, {column(new_ep), column(new_e), xi});
        }
        default: break;
    }
    (void)j;
    throw ShapeMismatch("x~ is defined on corners of E~, not " + kind_name(a.kind));
}

PolyMatrix ProductRep::tilde_x_pow_matrix(Corner c, int lambda, int i) const {
    Kind k = *kind(Bim::Et, c);
    int n = nu(c.j, lambda);
    return m_.matrix_of(k, n, k, n, [&](const Elt& a) { return tilde_x_pow(a, c.j, i); });
}

Elt ProductRep::tilde_tau(const Elt& t, Corner c) const {
    const Words& w = words();
    Field f = field();
    int nu = t.nu;
    if (c.j == 1 && c.i == 1) {
        if (!w.rank("EE", nu)) return t;
        return m_.join(t.kind, nu, {column(w.tau().at(nu) * as_column(t.v, f))});
    }
    if (c.j == 1 && c.i == 2) {
        auto p = m_.split(t);
        std::vector<Poly> xi(p[2].size(), Poly(f));
        if (w.rank("EE", nu)) xi = w.hom_to_fw(w.tau().at(nu) * w.fw_to_hom(p[2], "EE", nu), "EE", nu);
        return m_.join(t.kind, nu, {std::vector<Poly>(p[0].size(), Poly(f)), p[0], xi});
    }
    if (c.i == 2 && c.j == 2) {
        if (!m_.dim(Kind::G3, nu)) return t;
        auto p = m_.split(t);
        G3Data d = m_.to_g3(t);
        PolyMatrix tau = w.tau().at(nu);
        PolyMatrix eep = tau * as_column(p[0], f) - m_.ee_y(1, nu) * as_column(p[2], f);
        PolyMatrix chi = d.chi;
        if (chi.rows()) chi = w.place("", w.tau(), "E", nu) * chi;
        return m_.from_g3(nu, {eep, eep, tau * d.ee3, chi});
    }
    throw Unsupported("tau~ on the free corner E^3 is not modelled");
}

Elt ProductRep::tilde_tau_morph(const Elt& t) const {
    return m_.from_morph(t.kind, t.nu, compose(morph_of(tau_on_object(t.nu)), morph_of(t)));
}

Elt ProductRep::x_tilde_E(const Elt& t, Corner c) const {
    if (c.j == 2) {
        if (m_.dim(t.kind, t.nu)) throw Unsupported("x~E on [E~E~]_" + c.str() + " needs E^3 data");
        return t;
    }
    return m_.from_morph(t.kind, t.nu, compose(morph_of(x_on_object(2, t.nu)), morph_of(t)));
}

Elt ProductRep::E_x_tilde(const Elt& t, Corner c) const {
    if (c.j == 2) {
        if (m_.dim(t.kind, t.nu)) throw Unsupported("Ex~ on [E~E~]_" + c.str() + " needs E^3 data");
        return t;
    }
    return m_.from_morph(t.kind, t.nu, compose(morph_of(m_.e_prime(x_on_object(1, t.nu))), morph_of(t)));
}

PolyMatrix ProductRep::etet_matrix(Corner c, int lambda, const std::function<Elt(const Elt&)>& f) const {
    auto k = kind(Bim::EtEt, c);
    int n = nu(c.j, lambda);
    if (!k) {
        int d = words().rank("EEE", n);
        if (d) throw Unsupported("maps on the free corner E^3 are not modelled");
        return PolyMatrix(0, 0, field());
    }
    return m_.matrix_of(*k, n, *k, n, f);
}

// ---- Gamma maps

Elt ProductRep::gamma_EE(const Elt& p, const Elt& a) const {
    int m = p.kind == Kind::YE || p.kind == Kind::YYEE ? 1 : 2;
    corner_j(p.kind);
    int k = corner_j(a.kind);
    Corner out{m, k};
    auto target = kind(Bim::EtEt, out);
    if (k == 2) {
        int d = target ? m_.dim(*target, a.nu) : words().rank("EEE", a.nu);
        if (d) throw Unsupported("Gamma into [E~E~]_" + out.str() + " needs E^3 data");
        if (!target) throw Unsupported("the free corner E^3 has no model element type");
        return m_.zero(*target, a.nu);
    }
    return m_.from_morph(*target, a.nu, compose(morph_of(m_.e_prime(a)), morph_of(p)));
}

Elt ProductRep::gamma_FE(const Elt& q, const Elt& s, Kind target, int nu) const {
    return m_.from_morph(target, nu, compose(morph_of(s), morph_of(q)));
}

Prim ProductRep::zero_prim(const std::string& cod, const std::string& dom) const {
    const Words* w = &words();
    return {dom, cod, [w, cod, dom](int nu) { return w->zero(cod, dom, nu); }};
}

Prim ProductRep::ypow(const std::string& wd, int i) const { return words().scaled(words().ident(wd), y().pow(i)); }

Prim ProductRep::poly_on_E(const Poly& p) const { return words().xpoly(p, 1); }
Prim ProductRep::poly_on_EE(const Poly& p) const { return words().xpoly(p, 2); }

Prim ProductRep::y1_on(const std::string& wd) const {
    // x - y on the rightmost E of a word ending in E or in EF
    const Words& w = words();
    Poly x1 = Poly::variable(var::x(1), field());
    Prim y1 = poly_on_E(x1 - y());
    if (wd == "E") return y1;
    if (wd == "FE") return w.whisker("F", y1, "");
    if (wd == "EF") return w.whisker("", y1, "F");
    throw ShapeMismatch("y1 on word " + wd);
}

Prim ProductRep::F_h_eta(int i) const {
    const Words& w = words();
    return w.then(w.whisker("F", poly_on_E(hpoly(i - 1, {var::x(1), var::y}, field())), ""), w.eta());
}

Prim ProductRep::eps_xy1_F(int i) const {
    const Words& w = words();
    Poly x1 = Poly::variable(var::x(1), field());
    return w.then(w.eps(), w.whisker("", poly_on_E(x1.pow(i) * (x1 - y())), "F"));
}

std::vector<std::string> ProductRep::g2l2_words() {
    return {"EF", "EF", "EF", "EF", "EFFE", "EFFE", "FEEF", "FEEF", "FEEFFE"};
}
std::vector<std::string> ProductRep::g1g1_words() { return {"", "FE", "FE", "FEFE"}; }

BlockMap ProductRep::omega_11() const {
    const Words& w = words();
    BlockMap m({"EF"}, {"EEFF"});
    m.set(0, 0, w.whisker("E", w.then(w.eps(), y1_on("EF")), "F"));
    return m;
}

BlockMap ProductRep::omega3() const {
    const Words& w = words();
    BlockMap m(g1g1_words(), g2l2_words());
    Prim eps = w.eps(), sig = w.sigma();
    Prim sig_y1F = w.then(sig, y1_on("EF"));
    Prim eps_y1F = w.then(eps, y1_on("EF"));
    m.set(0, 0, eps);
    m.set(0, 3, eps);
    m.set(1, 0, sig);
    m.set(1, 5, w.whisker("", eps, "FE"));
    m.set(2, 1, w.scaled(sig_y1F, Poly(-1, field())));
    m.set(2, 3, sig);
    m.set(2, 6, w.whisker("FE", eps, ""));
    m.set(2, 7, w.whisker("FE", eps_y1F, ""));
    m.set(3, 4, w.scaled(w.whisker("", sig_y1F, "FE"), Poly(-1, field())));
    m.set(3, 5, w.whisker("", sig, "FE"));
    m.set(3, 6, w.whisker("FE", sig, ""));
    m.set(3, 8, w.whisker("FE", eps_y1F, "FE"));
    return m;
}

BlockMap ProductRep::kappa() const {
    // projection onto the copy of EF spanned by (0,e,0) (x) (f',0,0), along the
    // complement that contains the middle relations
    const Words& w = words();
    BlockMap m({"EF"}, g2l2_words());
    m.set(0, 2, w.ident("EF"));
    m.set(0, 0, w.scaled(y1_on("EF"), Poly(-1, field())));
    return m;
}

std::vector<Poly> ProductRep::g2l2_tensor(const Elt& g, const Elt& l) const {
    if (g.kind != Kind::G2 || l.kind != Kind::L2 || g.nu + 2 != l.nu)
        throw ShapeMismatch("G2 (x) L2 expects G2 at nu-2 and L2 at nu");
    auto a = m_.split(g), b = m_.split(l);
    Field f = field();
    std::vector<std::pair<int, int>> order = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};
    std::vector<Poly> out;
    for (auto [x, z] : order) {
        auto c = column(kron(as_column(a[x], f), as_column(b[z], f)));
        if (a[x].empty() || b[z].empty()) c.clear();
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

Elt ProductRep::g2_times_phi(const Elt& g, const std::vector<Poly>& phi1) const {
    const Words& w = words();
    Field f = field();
    int mu = g.nu;
    auto p = m_.split(g);
    int q = w.rE(mu);
    if (!q) return g;
    PolyMatrix M = w.fw_to_hom(phi1, "E", mu);
    PolyMatrix Y1 = m_.y1(mu);
    PolyMatrix ep = as_column(p[0], f), e = as_column(p[1], f);
    PolyMatrix pe = M * e;
    std::vector<Poly> xi(p[2].size(), Poly(f));
    if (w.rank("EE", mu)) {
        PolyMatrix I = PolyMatrix::identity(w.rE(mu + 2), f);
        PolyMatrix m = kron(I, M) * w.tau().at(mu) * m_.tensor_with(e - Y1 * ep, mu + 2) +
                       kron(I, M * Y1) * w.fw_to_hom(p[2], "EE", mu);
        xi = w.hom_to_fw(m, "EE", mu);
    }
    return m_.join(Kind::G2, mu, {column(pe), column(Y1 * pe), xi});
}

Elt ProductRep::phi_times_l2(const std::vector<Poly>& phi1, const Elt& l) const {
    const Words& w = words();
    Field f = field();
    int nu = l.nu, mu = nu - 2;
    auto p = m_.split(l);
    int q = w.rE(mu);
    if (!q) return l;
    PolyMatrix M = w.fw_to_hom(phi1, "E", mu);
    PolyMatrix Y1 = m_.y1(mu);
    PolyMatrix fr = as_column(p[1], f).transpose(), fpr = as_column(p[0], f).transpose();
    PolyMatrix nf = fr * Y1 * M + fpr * M;
    std::vector<Poly> rho(p[2].size(), Poly(f));
    if (w.rE(nu) && w.rank("EE", mu)) {
        PolyMatrix I = PolyMatrix::identity(w.rE(nu), f);
        PolyMatrix m = kron(I, fpr) * w.tau().at(mu) * kron(I, M) + w.ffw_to_hom(p[2], "E", nu) * kron(I, Y1 * M);
        rho = w.hom_to_ffw(m, "E", nu);
    }
    return m_.join(Kind::L2, nu, {std::vector<Poly>(p[0].size(), Poly(f)), column(nf.transpose()), rho});
}

static Elt g1_from_phi(const Models& m, int mu, const std::vector<Poly>& phi1) {
    Elt c = m.zero(Kind::G1, mu);
    auto p = m.split(c);
    return m.join(Kind::G1, mu, {p[0], phi1});
}

Elt ProductRep::g2_times_phi_morph(const Elt& g, const std::vector<Poly>& phi1) const {
    Elt c = g1_from_phi(m_, g.nu, phi1);
    return m_.from_morph(Kind::G2, g.nu, compose(morph_of(m_.e_prime(c)), morph_of(g)));
}

Elt ProductRep::phi_times_l2_morph(const std::vector<Poly>& phi1, const Elt& l) const {
    Elt c = g1_from_phi(m_, l.nu - 2, phi1);
    return m_.from_morph(Kind::L2, l.nu, compose(morph_of(l), morph_of(m_.e_prime(c))));
}

// ---- eta~(1) and [E~F~] lifts

std::vector<std::pair<Elt, Elt>> ProductRep::eta_one(int i, int lambda) const {
    std::vector<std::pair<Elt, Elt>> out;
    if (i == 1) {
        if (!words().supports(lambda + 1)) return out;
        out.push_back({m_.basis(Kind::G1, lambda + 1, 0), m_.basis(Kind::G1, lambda + 1, 0)});
        return out;
    }
    int r = words().rE(lambda - 1);
    for (int a = 0; a < r; ++a)
        out.push_back({m_.basis(Kind::L2, lambda + 1, a), m_.basis(Kind::G2, lambda - 1, a)});
    for (int b = 0; b < r; ++b)
        out.push_back({m_.basis(Kind::L2, lambda + 1, r + b), m_.basis(Kind::G2, lambda - 1, r + b)});
    return out;
}

Elt ProductRep::eta_one_composite(int i, int lambda) const {
    Kind k = *kind(Bim::FtEt, {i, i});
    int n = nu(i, lambda);
    Elt sum = m_.zero(k, n);
    for (auto& [q, p] : eta_one(i, lambda)) {
        Elt t = gamma_FE(q, p, k, n);
        for (size_t z = 0; z < sum.v.size(); ++z) sum.v[z] += t.v[z];
    }
    return sum;
}

std::vector<std::string> ProductRep::etft_words(Corner c) {
    if (c.i == 1 && c.j == 1) return {"EF"};
    if (c.i == 2 && c.j == 1) return {"F", "FEF"};
    if (c.i == 1 && c.j == 2) return {"E", "EFE"};
    return {"", "FE", "FE", "FEFE", "EF"};
}

std::pair<Elt, Elt> ProductRep::etft_lift(Corner c, int lambda, int idx) const {
    const Words& w = words();
    int n = nu(c.j, lambda);
    auto ws = etft_words(c);
    int k = 0, off = idx;
    while (k < (int)ws.size() && off >= w.rank(ws[k], n)) off -= w.rank(ws[k++], n);
    if (k == (int)ws.size()) throw ShapeMismatch("[E~F~] index out of range");
    int rF = w.rank("F", n), rFE = w.rank("FE", n);
    if (c.i == 1 && c.j == 1) return {m_.basis(Kind::YE, n - 2, off / rF), m_.basis(Kind::F, n, off % rF)};
    if (c.i == 2 && c.j == 1) {
        if (k == 0) return {m_.basis(Kind::G1, n - 2, 0), m_.basis(Kind::F, n, off)};
        return {m_.basis(Kind::G1, n - 2, 1 + off / rF), m_.basis(Kind::F, n, off % rF)};
    }
    if (c.i == 1 && c.j == 2) {
        if (k == 0) return {m_.basis(Kind::YE, n, off), m_.basis(Kind::G1, n, 0)};
        return {m_.basis(Kind::YE, n, off / rFE), m_.basis(Kind::G1, n, 1 + off % rFE)};
    }
    switch (k) {
        case 0: return {m_.basis(Kind::G1, n, 0), m_.basis(Kind::G1, n, 0)};
        case 1: return {m_.basis(Kind::G1, n, 0), m_.basis(Kind::G1, n, 1 + off)};
        case 2: return {m_.basis(Kind::G1, n, 1 + off), m_.basis(Kind::G1, n, 0)};
        case 3: return {m_.basis(Kind::G1, n, 1 + off / rFE), m_.basis(Kind::G1, n, 1 + off % rFE)};
        default:
            return {m_.basis(Kind::G2, n - 2, w.rE(n - 2) + off / rF), m_.basis(Kind::L2, n, off % rF)};
    }
}

// ---- closed forms

static const std::vector<std::string> kU = {"FE", "FE", "FE", "FE", "FFEE"};

BlockMap ProductRep::sigma_closed(Corner c) const {
    const Words& w = words();
    auto cols = etft_words(c);
    if (c.i == 1 && c.j == 1) {
        BlockMap m({"", "FE"}, cols);
        m.set(0, 0, w.eps());
        m.set(1, 0, w.sigma());
        return m;
    }
    if (c.i == 2 && c.j == 1) {
        BlockMap m({"F", "F", "FFE"}, cols);
        m.set(0, 0, w.ident("F"));
        m.set(1, 1, w.whisker("F", w.eps(), ""));
        m.set(2, 1, w.whisker("F", w.sigma(), ""));
        return m;
    }
    if (c.i == 1 && c.j == 2) {
        BlockMap m({"E", "E", "FEE"}, cols);
        Prim epsE = w.whisker("", w.eps(), "E");
        m.set(0, 1, epsE);
        m.set(1, 0, w.ident("E"));
        m.set(1, 1, w.then(y1_on("E"), epsE));
        m.set(2, 1, w.whisker("", w.sigma(), "E"));
        return m;
    }
    BlockMap m(kU, cols);
    Prim FepsE = w.whisker("F", w.eps(), "E");
    m.set(0, 2, w.ident("FE"));
    // phi' o phi1 with phi' = theta' + y1 phi1' also picks up y1 on FEFE
    m.set(0, 3, w.then(y1_on("FE"), FepsE));
    m.set(1, 3, FepsE);
    m.set(2, 0, w.eta());
    m.set(2, 1, y1_on("FE"));
    m.set(2, 4, w.sigma());
    m.set(3, 1, w.ident("FE"));
    m.set(4, 3, w.whisker("F", w.sigma(), "E"));
    return m;
}

// h-combination on EE: tau o h_{i-1}(x1,x2) + sign * h_{i-2}(x1,x2,y)
static Prim theta_core(const ProductRep& P, const Words& w, int i, int sign, bool tau_after) {
    Field f = P.field();
    Prim h1 = w.xpoly(h_complete(i - 1, {var::x(1), var::x(2)}, f), 2);
    Prim h2 = w.xpoly(h_complete(i - 2, {var::x(1), var::x(2), var::y}, f), 2);
    Prim th = tau_after ? w.then(w.tau(), h1) : w.then(h1, w.tau());
    return w.sum(th, w.scaled(h2, Poly(sign, f)));
}

BlockMap ProductRep::eps_x_F(Corner c, int i) const {
    const Words& w = words();
    Field f = field();
    Poly x1 = Poly::variable(var::x(1), f);
    auto cols = etft_words(c);
    if (c.i == 1 && c.j == 1) {
        BlockMap m({""}, cols);
        m.set(0, 0, eps_xy1_F(i));
        return m;
    }
    if (c.i == 2 && c.j == 1) {
        BlockMap m({"F"}, cols);
        m.set(0, 0, w.xpoly_dual(x1.pow(i)));
        m.set(0, 1, w.whisker("F", eps_xy1_F(i), ""));
        return m;
    }
    if (c.i == 1 && c.j == 2) {
        BlockMap m({"E"}, cols);
        m.set(0, 0, poly_on_E(x1.pow(i)));
        m.set(0, 1, w.whisker("", eps_xy1_F(i), "E"));
        return m;
    }
    BlockMap m({"", "FE"}, cols);
    m.set(0, 0, ypow("", i));
    m.set(0, 4, w.scaled(w.then(w.eps(), w.whisker("", poly_on_E(hpoly(i - 1, {var::x(1), var::y}, f)), "F")),
                         Poly(-1, f)));
    m.set(1, 0, F_h_eta(i));
    m.set(1, 1, w.whisker("", w.xpoly_dual(x1.pow(i)), "E"));
    m.set(1, 2, w.whisker("F", poly_on_E(x1.pow(i)), ""));
    m.set(1, 3, w.whisker("F", eps_xy1_F(i), "E"));
    Prim core = w.whisker("F", theta_core(*this, w, i, +1, true), "F");
    Prim th = w.then(w.whisker("FE", w.eps(), ""), w.then(core, w.whisker("", w.eta(), "EF")));
    m.set(1, 4, w.scaled(th, Poly(-1, f)));
    return m;
}

BlockMap ProductRep::theta_verbatim(int i) const {
    const Words& w = words();
    BlockMap m({"FE"}, {"EF"});
    Prim core = w.whisker("F", theta_core(*this, w, i, -1, true), "F");
    Prim th = w.then(w.whisker("FE", w.eps(), ""), w.then(core, w.whisker("", w.eta(), "EF")));
    m.set(0, 0, w.scaled(th, Poly(-1, field())));
    return m;
}

BlockMap ProductRep::F_x_eta(Corner c, int i) const {
    const Words& w = words();
    Field f = field();
    Poly x1 = Poly::variable(var::x(1), f);
    Poly yi = y().pow(i);
    if (c.i == 1 && c.j == 1) {
        BlockMap m({"", "FE"}, {""});
        m.set(0, 0, ypow("", i));
        m.set(1, 0, F_h_eta(i));
        return m;
    }
    if (c.i == 2 && c.j == 1) {
        BlockMap m({"F", "F", "FFE"}, {"F"});
        m.set(1, 0, ypow("F", i));
        m.set(2, 0, w.whisker("F", F_h_eta(i), ""));
        return m;
    }
    if (c.i == 1 && c.j == 2) {
        BlockMap m({"E", "E", "FEE"}, {"E"});
        m.set(0, 0, ypow("E", i));
        m.set(1, 0, w.scaled(y1_on("E"), yi));
        m.set(2, 0, w.whisker("", F_h_eta(i), "E"));
        return m;
    }
    BlockMap m(kU, {"", "FE"});
    Prim eta2 = w.then(w.whisker("F", w.eta(), "E"), w.eta());
    m.set(0, 0, w.scaled(w.eta(), yi));
    m.set(1, 0, w.scaled(F_h_eta(i), Poly(-1, f)));
    m.set(3, 0, w.then(w.whisker("F", poly_on_E(x1.pow(i)), ""), w.eta()));
    m.set(4, 0, w.then(w.whisker("FF", theta_core(*this, w, i, -1, false), ""), eta2));
    m.set(0, 1, w.scaled(y1_on("FE"), yi));
    m.set(1, 1, ypow("FE", i));
    m.set(4, 1, w.then(w.whisker("FF", poly_on_EE(hpoly(i - 1, {var::x(2), var::y}, f)), ""),
                       w.whisker("F", w.eta(), "E")));
    return m;
}

BlockMap ProductRep::tilde_rho_nonneg(Corner c, int lambda) const {
    auto cols = etft_words(c);
    std::vector<BlockMap> parts = {sigma_closed(c)};
    if (c.i == 2 && c.j == 2) {
        std::vector<BlockMap> a, fe;
        for (int i = 0; i < lambda; ++i) {
            BlockMap p = eps_x_F(c, i);
            p.cell[1][4] = theta_verbatim(i).cell[0][0];
            a.push_back(select(p, {0}, {0, 1, 2, 3, 4}));
            fe.push_back(select(p, {1}, {0, 1, 2, 3, 4}));
        }
        parts.insert(parts.end(), a.begin(), a.end());
        parts.insert(parts.end(), fe.begin(), fe.end());
    } else {
        for (int i = 0; i < lambda; ++i) parts.push_back(eps_x_F(c, i));
    }
    return vstack(parts, cols);
}

BlockMap ProductRep::tilde_rho_nonpos(Corner c, int lambda) const {
    BlockMap s = sigma_closed(c);
    std::vector<BlockMap> parts = {s};
    if (c.i == 2 && c.j == 2) {
        std::vector<BlockMap> a, fe;
        for (int i = 0; i < -lambda; ++i) {
            BlockMap p = F_x_eta(c, i);
            a.push_back(select(p, {0, 1, 2, 3, 4}, {0}));
            fe.push_back(select(p, {0, 1, 2, 3, 4}, {1}));
        }
        parts.insert(parts.end(), a.begin(), a.end());
        parts.insert(parts.end(), fe.begin(), fe.end());
    } else {
        for (int i = 0; i < -lambda; ++i) parts.push_back(F_x_eta(c, i));
    }
    return hstack(parts, s.rows);
}

BlockMap ProductRep::tilde_rho(Corner c, int lambda) const {
    return lambda >= 0 ? tilde_rho_nonneg(c, lambda) : tilde_rho_nonpos(c, lambda);
}

BlockMap ProductRep::rho_input(int mu) const {
    const Words& w = words();
    Poly x1 = Poly::variable(var::x(1), field());
    if (mu >= 0) {
        std::vector<std::string> rows = {"FE"};
        rows.insert(rows.end(), mu, "");
        BlockMap m(rows, {"EF"});
        m.set(0, 0, w.sigma());
        for (int i = 0; i < mu; ++i) m.set(1 + i, 0, w.then(w.eps(), w.whisker("", poly_on_E(x1.pow(i)), "F")));
        return m;
    }
    std::vector<std::string> cols = {"EF"};
    cols.insert(cols.end(), -mu, "");
    BlockMap m({"FE"}, cols);
    m.set(0, 0, w.sigma());
    for (int i = 0; i < -mu; ++i) m.set(0, 1 + i, w.then(w.whisker("F", poly_on_E(x1.pow(i)), ""), w.eta()));
    return m;
}

BlockMap ProductRep::claim_eps(int lambda) const {
    const Words& w = words();
    std::vector<std::string> rows = {"FE", ""};
    rows.insert(rows.end(), lambda, "");
    BlockMap m(rows, {"EF"});
    m.set(0, 0, w.sigma());
    m.set(1, 0, w.eps());
    for (int i = 0; i < lambda; ++i) m.set(2 + i, 0, eps_xy1_F(i));
    return m;
}

BlockMap ProductRep::claim_eta(int lambda) const {
    std::vector<std::string> cols = {"EF"};
    cols.insert(cols.end(), std::max(0, -lambda - 1), "");
    BlockMap m({"FE"}, cols);
    m.set(0, 0, words().sigma());
    for (int i = 1; i < -lambda; ++i) m.set(0, i, F_h_eta(i));
    return m;
}

ProductRep build_product(const TwoRep& rep, int lo, int hi, int n_max) {
    CheckReport h = check_hypotheses(rep, lo, hi, n_max);
    for (auto& e : h)
        if (!e.pass)
            throw HypothesesFailed(e.name + " at weight " + std::to_string(e.weight) +
                                   (e.witness.empty() ? "" : ": " + e.witness));
    return ProductRep(rep);
}

}  // namespace artifact
