#pragma once

#include "artifact/poly.hpp"

#include <string>
#include <vector>

namespace artifact {

class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dense matrix of polynomials; maps act on coordinate columns.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols, Field f = {});
    static PolyMatrix identity(int n, Field f = {});
    static PolyMatrix scalar(int n, const Poly& p);
    static PolyMatrix from_rows(const std::vector<std::vector<Poly>>& rows, int cols_if_empty = 0);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Field field() const { return field_; }
    Poly& at(int r, int c) { return data_[(size_t)r * cols_ + c]; }
    const Poly& at(int r, int c) const { return data_[(size_t)r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator-() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix times(const Poly& p) const;
    PolyMatrix transpose() const;

    PolyMatrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const PolyMatrix& b);
    PolyMatrix select_rows(const std::vector<int>& idx) const;
    PolyMatrix select_cols(const std::vector<int>& idx) const;

    std::vector<std::vector<std::string>> render() const;
    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    Field field_{};
    std::vector<Poly> data_;
};

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix hstack(const std::vector<PolyMatrix>& parts, int rows_if_empty = 0);
PolyMatrix vstack(const std::vector<PolyMatrix>& parts, int cols_if_empty = 0);
PolyMatrix block_diag(const std::vector<PolyMatrix>& parts);

// Fraction-free (Bareiss) determinant over a polynomial ring.
Poly determinant(const PolyMatrix& m);
// Adjugate, via cofactors computed with the same determinant routine.
PolyMatrix adjugate(const PolyMatrix& m);

// Evaluate p at commuting square matrices: var id -> matrix; y and
// unlisted variables stay scalar.
PolyMatrix eval_at_matrices(const Poly& p, const std::vector<std::pair<int, PolyMatrix>>& subst, int dim);

}  // namespace artifact
