#include "artifact/matrix.hpp"

#include <sstream>

namespace artifact {

PolyMatrix::PolyMatrix(int rows, int cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_((size_t)rows * cols, Poly(f)) {}

PolyMatrix PolyMatrix::identity(int n, Field f) { return scalar(n, Poly(1, f)); }

PolyMatrix PolyMatrix::scalar(int n, const Poly& p) {
    PolyMatrix m(n, n, p.field());
    for (int i = 0; i < n; ++i) m.at(i, i) = p;
    return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<std::vector<Poly>>& rows, int cols_if_empty) {
    int nc = rows.empty() ? cols_if_empty : (int)rows[0].size();
    Field f = rows.empty() || rows[0].empty() ? Field{} : rows[0][0].field();
    PolyMatrix m((int)rows.size(), nc, f);
    for (int r = 0; r < m.rows_; ++r) {
        if ((int)rows[r].size() != nc) throw ShapeMismatch("ragged matrix rows");
        for (int c = 0; c < nc; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

bool PolyMatrix::is_zero() const {
    for (auto& p : data_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

static void same_shape(const PolyMatrix& a, const PolyMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    same_shape(*this, o, "add");
    PolyMatrix r = *this;
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    same_shape(*this, o, "subtract");
    PolyMatrix r = *this;
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r = *this;
    for (auto& p : r.data_) p = -p;
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_)
        throw ShapeMismatch("multiply: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                            std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    PolyMatrix r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Poly& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::times(const Poly& p) const {
    PolyMatrix r = *this;
    for (auto& q : r.data_) q = q * p;
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::block(int r0, int c0, int nr, int nc) const {
    if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
    PolyMatrix r(nr, nc, field_);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

void PolyMatrix::set_block(int r0, int c0, const PolyMatrix& b) {
    if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("set_block out of range");
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

PolyMatrix PolyMatrix::select_rows(const std::vector<int>& idx) const {
    PolyMatrix r((int)idx.size(), cols_, field_);
    for (size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols_; ++j) r.at((int)i, j) = at(idx[i], j);
    return r;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<int>& idx) const {
    PolyMatrix r(rows_, (int)idx.size(), field_);
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) r.at(i, (int)j) = at(i, idx[j]);
    return r;
}

std::vector<std::vector<std::string>> PolyMatrix::render() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i].push_back(at(i, j).str());
    return out;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    os << "[" << rows_ << "x" << cols_ << "]";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    }
    return os.str();
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Poly& s = a.at(i, j);
            if (s.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b.at(k, l).is_zero()) r.at(i * b.rows() + k, j * b.cols() + l) = s * b.at(k, l);
        }
    return r;
}

PolyMatrix hstack(const std::vector<PolyMatrix>& parts, int rows_if_empty) {
    int rows = parts.empty() ? rows_if_empty : parts[0].rows(), cols = 0;
    for (auto& p : parts) {
        if (p.rows() != rows) throw ShapeMismatch("hstack row mismatch");
        cols += p.cols();
    }
    PolyMatrix r(rows, cols, parts.empty() ? Field{} : parts[0].field());
    int c = 0;
    for (auto& p : parts) {
        r.set_block(0, c, p);
        c += p.cols();
    }
    return r;
}

PolyMatrix vstack(const std::vector<PolyMatrix>& parts, int cols_if_empty) {
    int cols = parts.empty() ? cols_if_empty : parts[0].cols(), rows = 0;
    for (auto& p : parts) {
        if (p.cols() != cols) throw ShapeMismatch("vstack column mismatch");
        rows += p.rows();
    }
    PolyMatrix r(rows, cols, parts.empty() ? Field{} : parts[0].field());
    int k = 0;
    for (auto& p : parts) {
        r.set_block(k, 0, p);
        k += p.rows();
    }
    return r;
}

PolyMatrix block_diag(const std::vector<PolyMatrix>& parts) {
    int rows = 0, cols = 0;
    for (auto& p : parts) rows += p.rows(), cols += p.cols();
    PolyMatrix r(rows, cols, parts.empty() ? Field{} : parts[0].field());
    int i = 0, j = 0;
    for (auto& p : parts) {
        r.set_block(i, j, p);
        i += p.rows();
        j += p.cols();
    }
    return r;
}

Poly determinant(const PolyMatrix& m0) {
    if (m0.rows() != m0.cols()) throw ShapeMismatch("determinant of non-square matrix");
    int n = m0.rows();
    if (n == 0) return Poly(1, m0.field());
    PolyMatrix m = m0;
    Poly prev(1, m0.field());
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m.at(r, k).is_zero()) { piv = r; break; }
            if (piv < 0) return Poly(m0.field());
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_divide(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    Poly d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

PolyMatrix adjugate(const PolyMatrix& m) {
    int n = m.rows();
    if (n != m.cols()) throw ShapeMismatch("adjugate of non-square matrix");
    PolyMatrix adj(n, n, m.field());
    if (n == 1) {
        adj.at(0, 0) = Poly(1, m.field());
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rs, cs;
            for (int k = 0; k < n; ++k) {
                if (k != j) rs.push_back(k);
                if (k != i) cs.push_back(k);
            }
            Poly d = determinant(m.select_rows(rs).select_cols(cs));
            adj.at(i, j) = ((i + j) % 2) ? -d : d;
        }
    return adj;
}

PolyMatrix eval_at_matrices(const Poly& p, const std::vector<std::pair<int, PolyMatrix>>& subst, int dim) {
    PolyMatrix r(dim, dim, p.field());
    for (auto& [mono, c] : p.terms()) {
        Monomial rest = mono;
        PolyMatrix term = PolyMatrix::identity(dim, p.field());
        for (auto& [id, mat] : subst) {
            if ((size_t)id < rest.size()) {
                for (int e = 0; e < rest[id]; ++e) term = term * mat;
                rest[id] = 0;
            }
        }
        r = r + term.times(Poly::monomial(rest, c, p.field()));
    }
    return r;
}

}  // namespace artifact
