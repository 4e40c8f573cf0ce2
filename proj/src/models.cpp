#include "artifact/models.hpp"

namespace artifact {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::A: return "A";
        case Kind::YE: return "y1E";
        case Kind::F: return "F";
        case Kind::G1: return "G1";
        case Kind::YYEE: return "y1y2EE";
        case Kind::G2: return "G2";
        case Kind::FF: return "FF";
        case Kind::L2: return "L2";
        case Kind::U: return "U";
        case Kind::G3: return "G3";
    }
    return "?";
}

Morph compose(const Morph& g, const Morph& f) {
    if (g.top.cols() != f.top.rows() || g.bottom.cols() != f.bottom.rows())
        throw ShapeMismatch("morphism composition: incompatible complexes");
    return {g.top * f.top, g.bottom * f.bottom};
}

std::vector<std::string> Models::parts(Kind k) {
    switch (k) {
        case Kind::A: return {""};
        case Kind::YE: return {"E"};
        case Kind::F: return {"F"};
        case Kind::G1: return {"", "FE"};
        case Kind::YYEE: return {"EE"};
        case Kind::G2: return {"E", "E", "FEE"};
        case Kind::FF: return {"FF"};
        case Kind::L2: return {"F", "F", "FFE"};
        case Kind::U: return {"FE", "FE", "FE", "FE", "FFEE"};
        case Kind::G3: return {"EE", "EE", "EE", "FEEE"};
    }
    return {};
}

std::vector<int> Models::part_dims(Kind k, int nu) const {
    std::vector<int> d;
    for (auto& p : parts(k)) d.push_back(w_.rank(p, nu));
    return d;
}

int Models::dim(Kind k, int nu) const {
    int s = 0;
    for (int d : part_dims(k, nu)) s += d;
    return s;
}

std::vector<std::vector<Poly>> Models::split(const Elt& e) const {
    auto d = part_dims(e.kind, e.nu);
    std::vector<std::vector<Poly>> out;
    size_t off = 0;
    for (int n : d) {
        if (off + n > e.v.size()) throw ShapeMismatch(kind_name(e.kind) + " element has too few coordinates");
        out.emplace_back(e.v.begin() + off, e.v.begin() + off + n);
        off += n;
    }
    if (off != e.v.size()) throw ShapeMismatch(kind_name(e.kind) + " element has too many coordinates");
    return out;
}

Elt Models::join(Kind k, int nu, const std::vector<std::vector<Poly>>& ps) const {
    Elt e{k, nu, {}};
    for (auto& p : ps) e.v.insert(e.v.end(), p.begin(), p.end());
    split(e);  // shape check
    return e;
}

Elt Models::zero(Kind k, int nu) const { return {k, nu, std::vector<Poly>(dim(k, nu), Poly(field()))}; }

Elt Models::basis(Kind k, int nu, int idx) const {
    Elt e = zero(k, nu);
    e.v.at(idx) = Poly(1, field());
    return e;
}

Elt Models::from_column(Kind k, int nu, const PolyMatrix& col) const {
    Elt e{k, nu, column(col)};
    if ((int)e.v.size() != dim(k, nu)) throw ShapeMismatch("column length does not match " + kind_name(k));
    return e;
}

PolyMatrix Models::tensor_with(const PolyMatrix& col, int nu_left) const {
    return kron(PolyMatrix::identity(r(nu_left), field()), col);
}

static PolyMatrix row_of(const std::vector<Poly>& v, Field f) { return as_column(v, f).transpose(); }

static PolyMatrix solve_in_model(const PolyMatrix& a, const PolyMatrix& b, const std::string& what) {
    try {
        return solve_exact(a, b);
    } catch (const NotDivisible& ex) {
        throw NotInModel(what + ": " + ex.what());
    }
}

Morph Models::to_morph(const Elt& e) const {
    auto p = split(e);
    Field f = field();
    int nu = e.nu;
    Poly y = w_.y();
    switch (e.kind) {
        case Kind::A: {
            PolyMatrix top(a(nu), a(nu), f);
            if (a(nu)) top.at(0, 0) = p[0][0];
            return {top, PolyMatrix(0, 0, f)};
        }
        case Kind::YE: {
            PolyMatrix top(r(nu), a(nu + 2), f);
            if (r(nu)) top = y1(nu) * as_column(p[0], f);
            return {top, PolyMatrix(a(nu), 0, f)};
        }
        case Kind::F: {
            PolyMatrix top(a(nu), r(nu - 2), f);
            if (r(nu - 2)) top = row_of(p[0], f);
            return {top, PolyMatrix(0, a(nu - 2), f)};
        }
        case Kind::G1: {
            PolyMatrix bottom(a(nu), a(nu), f);
            PolyMatrix top(r(nu), r(nu), f);
            if (a(nu)) {
                bottom.at(0, 0) = p[0][0];
                top = PolyMatrix::scalar(r(nu), p[0][0]) + y1(nu) * w_.fw_to_hom(p[1], "E", nu);
            }
            return {top, bottom};
        }
        case Kind::YYEE: {
            PolyMatrix top(rr(nu), a(nu + 4), f);
            if (rr(nu)) top = ee_y(1, nu) * ee_y(2, nu) * as_column(p[0], f);
            return {top, PolyMatrix(2 * r(nu), 0, f)};
        }
        case Kind::G2: {
            PolyMatrix top(rr(nu), r(nu + 2), f);
            PolyMatrix bottom(2 * r(nu), a(nu + 2), f);
            if (r(nu)) {
                bottom = vstack({as_column(p[1], f), as_column(p[0], f)});
                PolyMatrix tau = w_.tau().at(nu);
                PolyMatrix Y1 = ee_y(1, nu), Y2 = ee_y(2, nu);
                top = tau * Y1 * tensor_with(as_column(p[1], f), nu + 2) -
                      Y2 * tau * Y1 * tensor_with(as_column(p[0], f), nu + 2) +
                      Y1 * Y2 * w_.fw_to_hom(p[2], "EE", nu);
            }
            return {top, bottom};
        }
        case Kind::FF: {
            PolyMatrix top(a(nu), rr(nu - 4), f);
            if (rr(nu - 4)) top = w_.ffw_to_hom(p[0], "", nu);
            return {top, PolyMatrix(0, 2 * r(nu - 4), f)};
        }
        case Kind::L2: {
            PolyMatrix top(r(nu), rr(nu - 2), f);
            PolyMatrix bottom(a(nu), 2 * r(nu - 2), f);
            if (r(nu - 2)) {
                PolyMatrix fr = row_of(p[1], f), fpr = row_of(p[0], f);
                bottom = hstack({fr, fpr});
                if (r(nu)) {
                    PolyMatrix I = PolyMatrix::identity(r(nu), f);
                    top = kron(I, fr) + kron(I, fpr) * w_.tau().at(nu - 2) + y1(nu) * w_.ffw_to_hom(p[2], "E", nu);
                }
            }
            return {top, bottom};
        }
        case Kind::U: {
            PolyMatrix top(rr(nu), rr(nu), f);
            PolyMatrix bottom(2 * r(nu), 2 * r(nu), f);
            if (r(nu)) {
                PolyMatrix P11 = w_.fw_to_hom(p[0], "E", nu), P21 = w_.fw_to_hom(p[1], "E", nu);
                PolyMatrix P12 = w_.fw_to_hom(p[2], "E", nu), P22 = w_.fw_to_hom(p[3], "E", nu);
                bottom.set_block(0, 0, P11);
                bottom.set_block(0, r(nu), P12);
                bottom.set_block(r(nu), 0, P21);
                bottom.set_block(r(nu), r(nu), P22);
                if (rr(nu)) {
                    PolyMatrix I = PolyMatrix::identity(r(nu + 2), f);
                    PolyMatrix tau = w_.tau().at(nu), Y1 = ee_y(1, nu), Y2 = ee_y(2, nu);
                    top = tau * Y1 * (kron(I, P11) + kron(I, P12) * tau) -
                          Y2 * tau * Y1 * (kron(I, P21) + kron(I, P22) * tau) +
                          Y1 * Y2 * w_.ffw_to_hom(p[4], "EE", nu);
                }
            }
            return {top, bottom};
        }
        case Kind::G3: throw Unsupported("G3 has no two-term morphism view here; use to_g3");
    }
    return {};
}

Elt Models::from_morph(Kind k, int nu, const Morph& m) const {
    Morph shape = to_morph(zero(k, nu));
    if (m.top.rows() != shape.top.rows() || m.top.cols() != shape.top.cols() ||
        m.bottom.rows() != shape.bottom.rows() || m.bottom.cols() != shape.bottom.cols())
        throw ShapeMismatch("morphism does not have the shape of " + kind_name(k) + " at weight " + std::to_string(nu));
    Field f = field();
    std::string where = kind_name(k) + " at weight " + std::to_string(nu);
    std::vector<std::vector<Poly>> p;
    switch (k) {
        case Kind::A:
            p = {a(nu) ? std::vector<Poly>{m.top.at(0, 0)} : std::vector<Poly>{}};
            break;
        case Kind::YE:
            p = {column(solve_in_model(y1(nu), m.top, where + ", y1 e"))};
            if (m.top.cols() == 0) p = {std::vector<Poly>(r(nu), Poly(f))};
            break;
        case Kind::F: {
            std::vector<Poly> row;
            for (int c = 0; c < m.top.cols(); ++c) row.push_back(m.top.at(0, c));
            p = {row};
            break;
        }
        case Kind::G1: {
            if (!a(nu)) {
                p = {{}, {}};
                break;
            }
            Poly th = m.bottom.at(0, 0);
            PolyMatrix phi1 = solve_in_model(y1(nu), m.top - PolyMatrix::scalar(r(nu), th), where + ", phi1");
            p = {{th}, w_.hom_to_fw(phi1, "E", nu)};
            break;
        }
        case Kind::YYEE: {
            if (m.top.cols() == 0) {
                p = {std::vector<Poly>(rr(nu), Poly(f))};
                break;
            }
            p = {column(solve_in_model(ee_y(1, nu) * ee_y(2, nu), m.top, where + ", y1 y2 ee"))};
            break;
        }
        case Kind::G2: {
            if (!r(nu)) {
                p = {{}, {}, std::vector<Poly>(w_.rank("FEE", nu), Poly(f))};
                break;
            }
            PolyMatrix e = m.bottom.block(0, 0, r(nu), 1), ep = m.bottom.block(r(nu), 0, r(nu), 1);
            PolyMatrix tau = w_.tau().at(nu), Y1 = ee_y(1, nu), Y2 = ee_y(2, nu);
            PolyMatrix rest = m.top - (tau * Y1 * tensor_with(e, nu + 2) - Y2 * tau * Y1 * tensor_with(ep, nu + 2));
            PolyMatrix xi1 = solve_in_model(Y1 * Y2, rest, where + ", xi'");
            p = {column(ep), column(e), w_.hom_to_fw(xi1, "EE", nu)};
            break;
        }
        case Kind::FF:
            p = {w_.hom_to_ffw(m.top, "", nu)};
            break;
        case Kind::L2: {
            int q = r(nu - 2);
            if (!q) {
                p = {{}, {}, std::vector<Poly>(w_.rank("FFE", nu), Poly(f))};
                break;
            }
            PolyMatrix fr = m.bottom.block(0, 0, 1, q), fpr = m.bottom.block(0, q, 1, q);
            std::vector<Poly> rho1(w_.rank("FFE", nu), Poly(f));
            if (r(nu)) {
                PolyMatrix I = PolyMatrix::identity(r(nu), f);
                PolyMatrix rest = m.top - kron(I, fr) - kron(I, fpr) * w_.tau().at(nu - 2);
                rho1 = w_.hom_to_ffw(solve_in_model(y1(nu), rest, where + ", rho1"), "E", nu);
            }
            p = {column(fpr.transpose()), column(fr.transpose()), rho1};
            break;
        }
        case Kind::U: {
            int q = r(nu);
            if (!q) {
                p = {{}, {}, {}, {}, std::vector<Poly>(w_.rank("FFEE", nu), Poly(f))};
                break;
            }
            PolyMatrix P11 = m.bottom.block(0, 0, q, q), P12 = m.bottom.block(0, q, q, q);
            PolyMatrix P21 = m.bottom.block(q, 0, q, q), P22 = m.bottom.block(q, q, q, q);
            std::vector<Poly> lam0(w_.rank("FFEE", nu), Poly(f));
            if (rr(nu)) {
                PolyMatrix I = PolyMatrix::identity(r(nu + 2), f);
                PolyMatrix tau = w_.tau().at(nu), Y1 = ee_y(1, nu), Y2 = ee_y(2, nu);
                PolyMatrix rest = m.top - (tau * Y1 * (kron(I, P11) + kron(I, P12) * tau) -
                                           Y2 * tau * Y1 * (kron(I, P21) + kron(I, P22) * tau));
                lam0 = w_.hom_to_ffw(solve_in_model(Y1 * Y2, rest, where + ", Lambda0"), "EE", nu);
            }
            p = {w_.hom_to_fw(P11, "E", nu), w_.hom_to_fw(P21, "E", nu), w_.hom_to_fw(P12, "E", nu),
                 w_.hom_to_fw(P22, "E", nu), lam0};
            break;
        }
        case Kind::G3: throw Unsupported("G3 has no two-term morphism view here; use from_g3");
    }
    return join(k, nu, p);
}

// ---- G3

G3Data Models::to_g3(const Elt& e) const {
    auto p = split(e);
    Field f = field();
    int nu = e.nu;
    int n2 = rr(nu), n3 = w_.rank("EEE", nu), rl = r(nu + 4);
    G3Data d{PolyMatrix(n2, 1, f), PolyMatrix(n2, 1, f), PolyMatrix(n2, 1, f), PolyMatrix(n3, rl, f)};
    if (!n2) return d;
    PolyMatrix tau = w_.tau().at(nu);
    PolyMatrix ee3 = as_column(p[0], f), eepp = as_column(p[1], f), w = as_column(p[2], f);
    d.ee3 = ee3;
    d.ee2 = ee3 - ee_y(1, nu) * eepp;
    PolyMatrix eep = tau * ee3 - ee_y(1, nu) * w;
    d.ee1 = d.ee2 + ee_y(2, nu) * eep;
    if (n3) {
        PolyMatrix I = PolyMatrix::identity(rl, f);
        PolyMatrix tE = w_.place("", w_.tau(), "E", nu), Et = w_.place("E", w_.tau(), "", nu);
        PolyMatrix chi1p = Et * tE * kron(I, ee3) + w_.ylin(1, 3, nu) * w_.fw_to_hom(p[3], "EEE", nu);
        PolyMatrix chi1 = tE * kron(I, d.ee2) + w_.ylin(2, 3, nu) * chi1p;
        d.chi = kron(I, d.ee1) + w_.ylin(3, 3, nu) * chi1;
    }
    return d;
}

Elt Models::from_g3(int nu, const G3Data& d) const {
    Field f = field();
    int n2 = rr(nu), n3 = w_.rank("EEE", nu), rl = r(nu + 4);
    if (!n2) return zero(Kind::G3, nu);
    std::string where = "G3 at weight " + std::to_string(nu);
    PolyMatrix tau = w_.tau().at(nu), Y1 = ee_y(1, nu), Y2 = ee_y(2, nu);
    PolyMatrix eep = solve_in_model(Y2, d.ee1 - d.ee2, where + ", ee'");
    PolyMatrix eepp = solve_in_model(Y1, d.ee3 - d.ee2, where + ", ee''");
    PolyMatrix w = solve_in_model(Y1, tau * d.ee3 - eep, where + ", w");
    std::vector<Poly> chi2(w_.rank("FEEE", nu), Poly(f));
    if (n3) {
        PolyMatrix I = PolyMatrix::identity(rl, f);
        PolyMatrix tE = w_.place("", w_.tau(), "E", nu), Et = w_.place("E", w_.tau(), "", nu);
        PolyMatrix chi1 = solve_in_model(w_.ylin(3, 3, nu), d.chi - kron(I, d.ee1), where + ", chi1");
        PolyMatrix chi1p = solve_in_model(w_.ylin(2, 3, nu), chi1 - tE * kron(I, d.ee2), where + ", chi1'");
        PolyMatrix chi2m = solve_in_model(w_.ylin(1, 3, nu), chi1p - Et * tE * kron(I, d.ee3), where + ", chi''");
        chi2 = w_.hom_to_fw(chi2m, "EEE", nu);
    }
    return join(Kind::G3, nu, {column(d.ee3), column(eepp), column(w), chi2});
}

// ---- E' on C

Elt Models::e_prime(const Elt& c) const {
    auto p = split(c);
    Field f = field();
    int nu = c.nu;
    switch (c.kind) {
        case Kind::A:
            return join(Kind::G1, nu, {p[0], std::vector<Poly>(w_.rank("FE", nu), Poly(f))});
        case Kind::YE: {
            std::vector<Poly> ye = r(nu) ? column(y1(nu) * as_column(p[0], f)) : std::vector<Poly>{};
            return join(Kind::G2, nu, {p[0], ye, std::vector<Poly>(w_.rank("FEE", nu), Poly(f))});
        }
        case Kind::F:
            return join(Kind::L2, nu,
                        {std::vector<Poly>(p[0].size(), Poly(f)), p[0], std::vector<Poly>(w_.rank("FFE", nu), Poly(f))});
        case Kind::G1: {
            int q = r(nu);
            if (!q) return zero(Kind::U, nu);
            Morph g = to_morph(c);
            PolyMatrix phi1 = w_.fw_to_hom(p[1], "E", nu);
            PolyMatrix bottom(2 * q, 2 * q, f);
            bottom.set_block(0, 0, g.top);
            bottom.set_block(q, 0, phi1);
            bottom.set_block(q, q, PolyMatrix::scalar(q, p[0][0]));
            PolyMatrix top = kron(PolyMatrix::identity(r(nu + 2), f), g.top);
            return from_morph(Kind::U, nu, {top, bottom});
        }
        default: throw ShapeMismatch("E' is defined on elements of C only, not " + kind_name(c.kind));
    }
}

PolyMatrix Models::matrix_of(Kind dom, int nu_dom, Kind cod, int nu_cod,
                             const std::function<Elt(const Elt&)>& fn) const {
    int n = dim(dom, nu_dom), m = dim(cod, nu_cod);
    PolyMatrix out(m, n, field());
    for (int k = 0; k < n; ++k) {
        Elt img = fn(basis(dom, nu_dom, k));
        if (img.kind != cod || img.nu != nu_cod || (int)img.v.size() != m)
            throw ShapeMismatch("matrix_of: image is not in " + kind_name(cod));
        for (int i = 0; i < m; ++i) out.at(i, k) = img.v[i];
    }
    return out;
}

}  // namespace artifact
