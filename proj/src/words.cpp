#include "artifact/words.hpp"

namespace artifact {

static PolyMatrix lookup(const BimoduleMap& m, int w, int rows, int cols, Field f) {
    auto it = m.mat.find(w);
    return it == m.mat.end() ? PolyMatrix(rows, cols, f) : it->second;
}

Words::Words(const TwoRep& rep) : rep_(rep) {
    if (!rep.E.is_symmetric()) throw NotSymmetric("product construction needs E with scalar left action");
    adj_ = adjunction(rep);
    sigma_ = artifact::sigma(rep);
}

int Words::shift(const std::string& w) {
    int s = 0;
    for (char c : w) s += c == 'E' ? 2 : -2;
    return s;
}

int Words::rank(const std::string& w, int nu) const {
    if (!supports(nu)) return 0;
    int cur = nu, r = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it == 'E') {
            r *= rep_.E.rank(cur);
            cur += 2;
        } else {
            r *= adj_.F.rank(cur);
            cur -= 2;
        }
        if (r == 0) return 0;
    }
    return r;
}

PolyMatrix Words::id(const std::string& w, int nu) const { return PolyMatrix::identity(rank(w, nu), field()); }

PolyMatrix Words::zero(const std::string& cod, const std::string& dom, int nu) const {
    return PolyMatrix(rank(cod, nu), rank(dom, nu), field());
}

PolyMatrix Words::scalar(const std::string& w, int nu, const Poly& p) const {
    return PolyMatrix::scalar(rank(w, nu), p);
}

Prim Words::x() const {
    return {"E", "E", [this](int nu) { return lookup(rep_.x, nu, rE(nu), rE(nu), field()); }};
}

Prim Words::tau() const {
    return {"EE", "EE", [this](int nu) {
                int r = rank("EE", nu);
                return lookup(rep_.tau, nu, r, r, field());
            }};
}

Prim Words::eps() const {
    return {"EF", "", [this](int nu) { return lookup(adj_.eps, nu, rank("", nu), rank("EF", nu), field()); }};
}

Prim Words::eta() const {
    return {"", "FE", [this](int nu) { return lookup(adj_.eta, nu, rank("FE", nu), rank("", nu), field()); }};
}

Prim Words::sigma() const {
    return {"EF", "FE", [this](int nu) { return lookup(sigma_, nu, rank("FE", nu), rank("EF", nu), field()); }};
}

Prim Words::ident(const std::string& w) const {
    return {w, w, [this, w](int nu) { return id(w, nu); }};
}

Prim Words::xdual() const {
    Prim etaF = whisker("", eta(), "F");
    Prim FxF = whisker("F", x(), "F");
    Prim Feps = whisker("F", eps(), "");
    return then(Feps, then(FxF, etaF));
}

PolyMatrix Words::xop(int i, int n, int nu) const {
    return place(std::string(n - i, 'E'), x(), std::string(i - 1, 'E'), nu);
}

PolyMatrix Words::ylin(int i, int n, int nu) const {
    return xop(i, n, nu) - scalar(std::string(n, 'E'), nu, y());
}

Prim Words::xpoly(const Poly& p, int n) const {
    std::string w(n, 'E');
    return {w, w, [this, p, n, w](int nu) {
                std::vector<std::pair<int, PolyMatrix>> subst;
                for (int i = 1; i <= n; ++i) subst.push_back({var::x(i), xop(i, n, nu)});
                return eval_at_matrices(p, subst, rank(w, nu));
            }};
}

Prim Words::xpoly_dual(const Poly& p) const {
    Prim xd = xdual();
    return {"F", "F", [this, p, xd](int nu) {
                return eval_at_matrices(p, {{var::x(1), xd.at(nu)}}, rank("F", nu));
            }};
}

Prim Words::then(const Prim& second, const Prim& first) const {
    if (second.dom != first.cod)
        throw ShapeMismatch("cannot compose " + second.dom + "->" + second.cod + " after " + first.dom + "->" + first.cod);
    return {first.dom, second.cod, [second, first](int nu) { return second.at(nu) * first.at(nu); }};
}

Prim Words::sum(const Prim& a, const Prim& b) const {
    if (a.dom != b.dom || a.cod != b.cod) throw ShapeMismatch("sum of maps with different words");
    return {a.dom, a.cod, [a, b](int nu) { return a.at(nu) + b.at(nu); }};
}

Prim Words::scaled(const Prim& a, const Poly& c) const {
    return {a.dom, a.cod, [a, c](int nu) { return a.at(nu).times(c); }};
}

Prim Words::whisker(const std::string& left, const Prim& p, const std::string& right) const {
    return {left + p.dom + right, left + p.cod + right, [this, left, p, right](int nu) {
                int rows = rank(left + p.cod + right, nu), cols = rank(left + p.dom + right, nu);
                if (rows == 0 || cols == 0) return PolyMatrix(rows, cols, field());
                int inner = nu + shift(right);
                int l = rank(left, inner + shift(p.cod));
                int r = rank(right, nu);
                PolyMatrix m = kron(PolyMatrix::identity(l, field()), kron(p.at(inner), PolyMatrix::identity(r, field())));
                if (m.rows() != rows || m.cols() != cols) throw ShapeMismatch("whisker: inconsistent ranks");
                return m;
            }};
}

PolyMatrix Words::fw_to_hom(const std::vector<Poly>& v, const std::string& w, int nu) const {
    int mu = nu + shift(w);
    int rw = rank(w, nu), rf = rank("F", mu);
    if (!supports(nu)) rf = 0;
    PolyMatrix m(rw, rf, field());
    if ((int)v.size() != rw * rf) throw ShapeMismatch("F" + w + " coordinates have the wrong length");
    for (int a = 0; a < rf; ++a)
        for (int j = 0; j < rw; ++j) m.at(j, a) = v[(size_t)a * rw + j];
    return m;
}

std::vector<Poly> Words::hom_to_fw(const PolyMatrix& m, const std::string&, int) const {
    std::vector<Poly> v((size_t)m.rows() * m.cols(), Poly(field()));
    for (int a = 0; a < m.cols(); ++a)
        for (int j = 0; j < m.rows(); ++j) v[(size_t)a * m.rows() + j] = m.at(j, a);
    return v;
}

PolyMatrix Words::ffw_to_hom(const std::vector<Poly>& v, const std::string& w, int nu) const {
    int mu = nu + shift(w);
    int rw = rank(w, nu), r1 = rank("F", mu), r2 = rank("F", mu - 2);
    if (rw == 0) r1 = r2 = 0;
    if ((int)v.size() != rw * r1 * r2) throw ShapeMismatch("FF" + w + " coordinates have the wrong length");
    PolyMatrix m(rw, r1 * r2, field());
    for (int a = 0; a < r2; ++a)
        for (int b = 0; b < r1; ++b)
            for (int j = 0; j < rw; ++j) m.at(j, b * r2 + a) = v[((size_t)a * r1 + b) * rw + j];
    return m;
}

std::vector<Poly> Words::hom_to_ffw(const PolyMatrix& m, const std::string& w, int nu) const {
    int mu = nu + shift(w);
    int rw = rank(w, nu), r1 = rank("F", mu), r2 = rank("F", mu - 2);
    if (rw == 0) r1 = r2 = 0;
    if (m.rows() != rw || m.cols() != r1 * r2) throw ShapeMismatch("Hom(EE, " + w + ") has the wrong shape");
    std::vector<Poly> v((size_t)rw * r1 * r2, Poly(field()));
    for (int a = 0; a < r2; ++a)
        for (int b = 0; b < r1; ++b)
            for (int j = 0; j < rw; ++j) v[((size_t)a * r1 + b) * rw + j] = m.at(j, b * r2 + a);
    return v;
}

PolyMatrix solve_exact(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) throw ShapeMismatch("solve_exact: shapes");
    if (a.rows() == 0) return PolyMatrix(0, b.cols(), b.field());
    Poly d = determinant(a);
    if (d.is_zero()) throw NotDivisible("solve_exact: singular matrix");
    PolyMatrix num = adjugate(a) * b;
    for (int r = 0; r < num.rows(); ++r)
        for (int c = 0; c < num.cols(); ++c) num.at(r, c) = exact_divide(num.at(r, c), d);
    return num;
}

std::vector<Poly> column(const PolyMatrix& m) {
    std::vector<Poly> v;
    for (int r = 0; r < m.rows(); ++r) v.push_back(m.at(r, 0));
    return v;
}

PolyMatrix as_column(const std::vector<Poly>& v, Field f) {
    PolyMatrix m((int)v.size(), 1, v.empty() ? f : v[0].field());
    for (size_t i = 0; i < v.size(); ++i) m.at((int)i, 0) = v[i];
    return m;
}

}  // namespace artifact
