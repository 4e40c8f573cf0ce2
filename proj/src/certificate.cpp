#include "artifact/product.hpp"

#include <numeric>

namespace artifact {

namespace {

std::vector<int> offsets(const std::vector<int>& sizes) {
    std::vector<int> off(sizes.size() + 1, 0);
    for (size_t k = 0; k < sizes.size(); ++k) off[k + 1] = off[k] + sizes[k];
    return off;
}

std::vector<int> range(int a, int b) {  // a..b inclusive, empty when b < a
    std::vector<int> v;
    for (int k = a; k <= b; ++k) v.push_back(k);
    return v;
}

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> v;
    for (auto& p : parts) v.insert(v.end(), p.begin(), p.end());
    return v;
}

// lower bidiagonal, 1 on the diagonal, -y below
PolyMatrix m_minus_y(int n, const Poly& y) {
    PolyMatrix m = PolyMatrix::identity(n, y.field());
    for (int k = 1; k < n; ++k) m.at(k, k - 1) = -y;
    return m;
}

// entries y^{|i-j|} on one side of the diagonal
PolyMatrix m_h(int n, const Poly& y, bool upper) {
    PolyMatrix m(n, n, y.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (upper ? j >= i : i >= j) m.at(i, j) = y.pow(upper ? j - i : i - j);
    return m;
}

PolyMatrix diag_one_then(int first, const PolyMatrix& k, int each) {
    return block_diag({PolyMatrix::identity(first, k.field()), kron(k, PolyMatrix::identity(each, k.field()))});
}

struct Group {
    std::vector<int> rows, cols;  // positions in the new order, 0-based
};

// Works on rho~ evaluated at one weight with summand sizes.
class Reorder {
public:
    Reorder(PolyMatrix m, std::vector<int> rs, std::vector<int> cs)
        : m_(std::move(m)), rs_(std::move(rs)), cs_(std::move(cs)) {}

    // row summand r -= c * row summand s (1-based, same size)
    void row_op(int r, int s, const PolyMatrix& c) {
        auto off = offsets(rs_);
        int n = rs_[r - 1];
        if (!n) return;
        PolyMatrix src = m_.block(off[s - 1], 0, rs_[s - 1], m_.cols());
        PolyMatrix dst = m_.block(off[r - 1], 0, n, m_.cols());
        m_.set_block(off[r - 1], 0, dst - c * src);
    }

    void permute(const std::vector<int>& rows, const std::vector<int>& cols) {
        auto ro = offsets(rs_), co = offsets(cs_);
        std::vector<int> ri, ci, nrs, ncs;
        for (int r : rows) {
            for (int k = 0; k < rs_.at(r - 1); ++k) ri.push_back(ro[r - 1] + k);
            nrs.push_back(rs_[r - 1]);
        }
        for (int c : cols) {
            for (int k = 0; k < cs_.at(c - 1); ++k) ci.push_back(co[c - 1] + k);
            ncs.push_back(cs_[c - 1]);
        }
        if ((int)ri.size() != m_.rows() || (int)ci.size() != m_.cols())
            throw ShapeMismatch("summand permutation does not cover the matrix");
        m_ = m_.select_rows(ri).select_cols(ci);
        rs_ = nrs;
        cs_ = ncs;
    }

    // groups given as counts of consecutive summands
    PolyMatrix sub(const std::vector<int>& rsum, const std::vector<int>& csum) const {
        auto ro = offsets(rs_), co = offsets(cs_);
        std::vector<int> ri, ci;
        for (int r : rsum)
            for (int k = 0; k < rs_[r]; ++k) ri.push_back(ro[r] + k);
        for (int c : csum)
            for (int k = 0; k < cs_[c]; ++k) ci.push_back(co[c] + k);
        return m_.select_rows(ri).select_cols(ci);
    }

    const PolyMatrix& matrix() const { return m_; }

private:
    PolyMatrix m_;
    std::vector<int> rs_, cs_;
};

std::vector<std::vector<int>> split_groups(const std::vector<int>& counts) {
    std::vector<std::vector<int>> g;
    int at = 0;
    for (int n : counts) {
        g.push_back(range(at, at + n - 1));
        at += n;
    }
    return g;
}

struct Claim {
    std::string label;
    std::optional<PolyMatrix> expected;  // the block as produced by an auxiliary map
    std::string factorization;
    bool factorization_holds = true;
};

}  // namespace

CornerCertificate triangular_certificate(const ProductRep& P, Corner c, int lambda) {
    const Words& w = P.words();
    Field f = P.field();
    Poly y = w.y();
    int nu = ProductRep::nu(c.j, lambda);
    BlockMap rho = P.tilde_rho(c, lambda);
    Reorder R(rho.eval(w, nu), rho.row_sizes(w, nu), rho.col_sizes(w, nu));
    int nr = (int)rho.rows.size(), nc = (int)rho.cols.size();

    CornerCertificate cert;
    cert.corner = c;
    cert.lambda = lambda;
    std::vector<int> rows = range(1, nr), cols = range(1, nc);
    std::vector<int> row_counts, col_counts;
    std::vector<Claim> claims;

    auto eps_claim = [&](const std::vector<int>& row_pick, const std::string& left, const std::string& right) {
        BlockMap ce = P.claim_eps(lambda);
        std::vector<int> all = range(0, (int)ce.rows.size() - 1);
        std::vector<int> order = row_pick;
        for (size_t k = order.size(); k < all.size(); ++k) order.push_back((int)k);
        Claim cl;
        cl.label = left + "(sigma, eps, eps x^i y1 F)" + right;
        cl.expected = whisker(w, left, select(ce, order, {0}), right).eval(w, nu);
        int mu = lambda + 1, a = w.rank("", mu);
        PolyMatrix lhs = ce.eval(w, mu);
        PolyMatrix rhs = diag_one_then(w.rank("FE", mu), m_minus_y(lambda + 1, y), a) * P.rho_input(mu).eval(w, mu);
        cl.factorization = "diag(1, lower-bidiagonal(-y)) * rho(" + std::to_string(mu) + ")";
        cl.factorization_holds = lhs == rhs;
        return cl;
    };
    auto eta_claim = [&](const std::string& left, const std::string& right) {
        BlockMap ch = P.claim_eta(lambda);
        Claim cl;
        cl.label = left + "(sigma, F h(x,y) eta)" + right;
        cl.expected = whisker(w, left, ch, right).eval(w, nu);
        int mu = lambda + 1, a = w.rank("", mu);
        PolyMatrix lhs = ch.eval(w, mu);
        PolyMatrix rhs = P.rho_input(mu).eval(w, mu) * diag_one_then(w.rank("EF", mu), m_h(-lambda - 1, y, true), a);
        cl.factorization = "rho(" + std::to_string(mu) + ") * diag(1, upper(y^(j-i)))";
        cl.factorization_holds = lhs == rhs;
        return cl;
    };
    auto unit = [](const std::string& l) { return Claim{l, std::nullopt, "", true}; };

    std::string cs = c.str();
    if (cs == "11") {
        if (lambda >= 0) {
            rows = cat({{2, 1}, range(3, nr)});
            cert.lower = true;
            row_counts = {nr};
            col_counts = {1};
            claims = {eps_claim({0, 1}, "", "")};
        } else {
            cols = cat({{2, 1}, range(3, nc)});
            cert.lower = false;
            row_counts = {1, 1};
            col_counts = {1, nc - 1};
            claims = {unit("1"), eta_claim("", "")};
        }
    } else if (cs == "21") {
        if (lambda >= 0) {
            cert.lower = true;
            row_counts = {1, nr - 1};
            col_counts = {1, 1};
            claims = {unit("1"), eps_claim({1, 0}, "F", "")};
        } else {
            cols = cat({{1, 3, 2}, range(4, nc)});
            cert.lower = false;
            row_counts = {1, 1, 1};
            col_counts = {1, 1, nc - 2};
            claims = {unit("1"), unit("1"), eta_claim("F", "")};
        }
    } else if (cs == "12") {
        if (lambda >= 0) {
            R.row_op(2, 1, P.models().y1(nu));
            cert.row_operation = true;
            rows = cat({{2, 3, 1}, range(4, nr)});
            cert.lower = true;
            row_counts = {1, nr - 1};
            col_counts = {1, 1};
            claims = {unit("1"), eps_claim({0, 1}, "", "E")};
        } else {
            rows = {2, 1, 3};
            cols = cat({{1, 3, 2}, range(4, nc)});
            cert.lower = false;
            row_counts = {1, 1, 1};
            col_counts = {1, 1, nc - 2};
            claims = {unit("1"), unit("1"), eta_claim("", "E")};
        }
    } else {
        PolyMatrix y1FE = w.whisker("F", w.xpoly(Poly::variable(var::x(1), f) - y, 1), "").at(nu);
        if (lambda >= 0) {
            // clears the y1 F eps E entry of the Phi11 row against the Phi21 row
            R.row_op(1, 2, y1FE);
            cert.row_operation = true;
            cols = {2, 3, 1, 5, 4};
            cert.lower = true;
            Claim d5 = eps_claim({1, 0}, "F", "E");
            if (lambda > 0) {
                rows = cat({{4, 1, 6, 3}, range(7, lambda + 5), {2, 5}, range(lambda + 6, nr)});
                row_counts = {1, 1, 1, lambda, lambda + 2};
                col_counts = {1, 1, 1, 1, 1};
                Claim d4;
                d4.label = "(sigma, -eps h(x,y) F)";
                int mu = lambda - 1, a = w.rank("", mu);
                PolyMatrix neg = PolyMatrix::identity(lambda - 1, f).times(Poly(-1, f));
                d4.expected = diag_one_then(w.rank("FE", mu), m_h(lambda - 1, y, false) * neg, a) *
                              P.rho_input(mu).eval(w, mu);
                d4.factorization = "diag(1, lower(y^(i-j)) * -1) * rho(" + std::to_string(mu) + ")";
                claims = {unit("1"), unit("1"), unit("1"), d4, d5};
            } else {
                rows = {4, 1, 3, 2, 5};
                row_counts = {1, 1, 1, 2};
                col_counts = {1, 1, 2, 1};
                Claim d3;
                d3.label = "(eta, sigma)";
                d3.expected = select(P.rho_input(-1), {0}, {1, 0}).eval(w, nu);
                d3.factorization = "rho(-1) with columns swapped";
                claims = {unit("1"), unit("1"), d3, d5};
            }
        } else {
            R.row_op(3, 4, y1FE);
            cert.row_operation = true;
            int k = -lambda;
            cols = cat({{5, 1}, range(6, k + 5), {2, 4}, range(k + 7, 2 * k + 5), {k + 6, 3}});
            rows = {3, 4, 5, 2, 1};
            cert.lower = true;
            row_counts = {1, 1, 1, 1, 1};
            col_counts = {k + 2, 1, k, 1, 1};
            Claim d1;
            d1.label = "(sigma, eta, -F x^i y1 eta)";
            int mu = lambda - 1, a = w.rank("", mu);
            PolyMatrix K = m_minus_y(k + 1, y).transpose();
            PolyMatrix sgn = PolyMatrix::identity(k + 1, f);
            for (int t = 1; t <= k; ++t) sgn.at(t, t) = Poly(-1, f);
            d1.expected = P.rho_input(mu).eval(w, mu) * diag_one_then(w.rank("EF", mu), K * sgn, a);
            d1.factorization = "rho(" + std::to_string(mu) + ") * diag(1, upper-bidiagonal(-y) * diag(1, -1))";
            claims = {d1, unit("1"), eta_claim("F", "E"), unit("1"), unit("1")};
        }
    }

    cert.row_order = rows;
    cert.col_order = cols;
    R.permute(rows, cols);
    auto rg = split_groups(row_counts), cg = split_groups(col_counts);
    if (rg.size() != cg.size() || rg.size() != claims.size()) throw ShapeMismatch("certificate plan is inconsistent");
    for (size_t a = 0; a < rg.size(); ++a)
        for (size_t b = 0; b < cg.size(); ++b) {
            bool off = cert.lower ? b > a : b < a;
            if (off && !R.sub(rg[a], cg[b]).is_zero())
                throw NotTriangular("corner " + cs + " at lambda " + std::to_string(lambda) + ": block (" +
                                    std::to_string(a + 1) + "," + std::to_string(b + 1) + ") is nonzero");
        }
    for (size_t a = 0; a < rg.size(); ++a) {
        PolyMatrix blk = R.sub(rg[a], cg[a]);
        DiagonalBlock d;
        d.label = claims[a].label;
        d.rows = blk.rows();
        d.cols = blk.cols();
        d.det = blk.rows() == blk.cols() ? determinant(blk) : Poly(f);
        d.iso = blk.rows() == blk.cols() && (blk.rows() == 0 || is_unit_det(d.det));
        if (blk.rows() == 0 && blk.cols() == 0) d.det = Poly(1, f);
        if (!d.iso)
            throw DiagonalNotIso("corner " + cs + " at lambda " + std::to_string(lambda) + ": block " + d.label +
                                 " has determinant " + d.det.str());
        d.factorization = claims[a].factorization;
        d.factorization_holds = claims[a].factorization_holds;
        if (claims[a].expected) d.factorization_holds = d.factorization_holds && *claims[a].expected == blk;
        else d.factorization_holds = blk == PolyMatrix::identity(blk.rows(), f);
        cert.blocks.push_back(d);
    }
    return cert;
}

RhoCertificate triangular_certificate(const ProductRep& P, int lambda) {
    RhoCertificate r;
    r.lambda = lambda;
    for (auto& c : corners()) r.corners.push_back(triangular_certificate(P, c, lambda));
    return r;
}

}  // namespace artifact
