#pragma once

#include "artifact/models.hpp"

#include <optional>
#include <string>
#include <vector>

namespace artifact {

class HypothesesFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NotTriangular : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class DiagonalNotIso : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A matrix of word maps: cell (r, c) sends word cols[c] to word rows[r].
// Empty cells are zero.
struct BlockMap {
    std::vector<std::string> rows, cols;
    std::vector<std::vector<std::optional<Prim>>> cell;

    BlockMap() = default;
    BlockMap(std::vector<std::string> r, std::vector<std::string> c);
    void set(int r, int c, const Prim& p);
    // sizes of the row / column summands at nu
    std::vector<int> row_sizes(const Words& w, int nu) const;
    std::vector<int> col_sizes(const Words& w, int nu) const;
    PolyMatrix eval(const Words& w, int nu) const;
};
BlockMap vstack(const std::vector<BlockMap>& parts, const std::vector<std::string>& cols);
BlockMap hstack(const std::vector<BlockMap>& parts, const std::vector<std::string>& rows);
BlockMap whisker(const Words& w, const std::string& left, const BlockMap& m, const std::string& right);
BlockMap select(const BlockMap& m, const std::vector<int>& rows, const std::vector<int>& cols);
// square matrix of scalar multiples of the identity on a word
BlockMap scalar_blocks(const Words& w, const std::string& word, const std::vector<std::vector<Poly>>& m);

// Which matrix of bimodules over C.
enum class Bim { C, Et, Ft, FtEt, EtEt };
std::string bim_name(Bim b);

struct Corner {
    int i, j;
    std::string str() const { return std::to_string(i) + std::to_string(j); }
};
const std::vector<Corner>& corners();

class ProductRep {
public:
    explicit ProductRep(const TwoRep& rep);

    const Models& models() const { return m_; }
    const Words& words() const { return m_.words(); }
    Field field() const { return m_.field(); }

    // weight of the underlying words for a corner of C at product weight lambda
    static int nu(int j, int lambda) { return j == 1 ? lambda + 1 : lambda - 1; }
    // kind and word weight of [B]_{ij} at source weight lambda. EtEt corner 12
    // is the free word EEE (kind is nullopt).
    std::optional<Kind> kind(Bim b, Corner c) const;
    int nu_of(Bim b, Corner c, int lambda) const;
    int dim(Bim b, Corner c, int lambda) const;
    Elt zero(Bim b, Corner c, int lambda) const;
    Elt basis(Bim b, Corner c, int lambda, int idx) const;

    // C: product c.c' = c' o c
    Elt c_mul(const Elt& c, Corner ci, const Elt& cp, Corner cpi, int lambda) const;
    std::vector<int> c_weights(int lo, int hi) const;
    // actions on E~ and F~
    Elt et_right(const Elt& m, Corner mi, const Elt& c, Corner ci) const;  // m.c = E'(c) o m
    Elt et_left(const Elt& c, Corner ci, const Elt& m, Corner mi) const;   // c.m = m o c
    Elt ft_left(const Elt& c, Corner ci, const Elt& b, Corner bi) const;   // c.b = b o E'(c)
    Elt ft_right(const Elt& b, Corner bi, const Elt& c, Corner ci) const;  // b.c = c o b

    // x~ as an endomorphism of E'X_j (G1 for j = 1, U for j = 2), at the given word weight
    Elt x_on_object(int j, int nu) const;
    // tau~ as an endomorphism of E'E'X_1 (in U)
    Elt tau_on_object(int nu) const;

    // x~ on [E~]_{ij}: one step by post-composition, and the closed i-th power
    Elt tilde_x(const Elt& a, int j) const;
    Elt tilde_x_pow(const Elt& a, int j, int i) const;
    PolyMatrix tilde_x_pow_matrix(Corner c, int lambda, int i) const;

    // maps on [E~^2]_{ij}: closed tau~ and the two x~ whiskerings
    Elt tilde_tau(const Elt& t, Corner c) const;
    Elt tilde_tau_morph(const Elt& t) const;  // via post-composition, corners with j = 1
    Elt x_tilde_E(const Elt& t, Corner c) const;
    Elt E_x_tilde(const Elt& t, Corner c) const;
    PolyMatrix etet_matrix(Corner c, int lambda, const std::function<Elt(const Elt&)>& f) const;

    // Gamma maps
    Elt gamma_EE(const Elt& p, const Elt& a) const;   // E'(a) o p
    Elt gamma_FE(const Elt& q, const Elt& s, Kind target, int nu) const;  // s o q
    BlockMap omega_11() const;  // E^2 F^2 -> EF
    BlockMap omega3() const;    // G2 (x)_A L2 -> G1 G1, nine summands
    BlockMap kappa() const;     // G2 (x)_A L2 -> EF
    static std::vector<std::string> g2l2_words();
    static std::vector<std::string> g1g1_words();
    std::vector<Poly> g2l2_tensor(const Elt& g, const Elt& l) const;
    // middle actions of phi1 in FE c G1^op, in bimodule form and by composition
    Elt g2_times_phi(const Elt& g, const std::vector<Poly>& phi1) const;
    Elt phi_times_l2(const std::vector<Poly>& phi1, const Elt& l) const;
    Elt g2_times_phi_morph(const Elt& g, const std::vector<Poly>& phi1) const;
    Elt phi_times_l2_morph(const std::vector<Poly>& phi1, const Elt& l) const;

    // eta~(1_i) as a list of simple tensors q (x) p at product weight lambda
    std::vector<std::pair<Elt, Elt>> eta_one(int i, int lambda) const;
    // words of [E~F~]_{ij} at nu(j, lambda)
    static std::vector<std::string> etft_words(Corner c);
    // a basis vector of [E~F~]_{ij} as a simple tensor a (x) b
    std::pair<Elt, Elt> etft_lift(Corner c, int lambda, int idx) const;

    // closed forms
    BlockMap sigma_closed(Corner c) const;
    BlockMap eps_x_F(Corner c, int i) const;
    BlockMap F_x_eta(Corner c, int i) const;
    BlockMap theta_verbatim(int i) const;  // the lambda >= 0 corner-22 entry as printed
    BlockMap tilde_rho(Corner c, int lambda) const;
    BlockMap tilde_rho_nonneg(Corner c, int lambda) const;
    BlockMap tilde_rho_nonpos(Corner c, int lambda) const;

    // oracles: composites of morphisms
    PolyMatrix sigma_oracle(Corner c, int lambda) const;
    PolyMatrix eps_x_F_oracle(Corner c, int lambda, int i) const;
    PolyMatrix F_x_eta_oracle(Corner c, int lambda, int i) const;
    Elt eta_one_composite(int i, int lambda) const;

    // input rho_mu as a word block map: rows (sigma, eps x^i F) for mu >= 0,
    // columns (sigma, F x^i eta) for mu <= 0
    BlockMap rho_input(int mu) const;
    // the two auxiliary isomorphisms used by the certificates
    BlockMap claim_eps(int lambda) const;  // sigma, eps, eps x^i y1 F (i < lambda)
    BlockMap claim_eta(int lambda) const;  // sigma, F h_{i-1}(x,y) eta (1 <= i < -lambda)

private:
    Models m_;
    Poly y() const { return words().y(); }
    Prim zero_prim(const std::string& cod, const std::string& dom) const;
    Prim ypow(const std::string& w, int i) const;
    Prim y1_on(const std::string& w) const;  // x on the last E of w, minus y
    Prim poly_on_E(const Poly& p) const;     // polynomial in x1, y on E
    Prim poly_on_EE(const Poly& p) const;    // polynomial in x1, x2, y on EE
    Prim F_h_eta(int i) const;               // F h_{i-1}(x,y) o eta
    Prim eps_xy1_F(int i) const;             // eps o x^i y1 F
    Morph morph_of(const Elt& e) const { return m_.to_morph(e); }
};

// Certificates for rho~_lambda following the triangular argument.
struct DiagonalBlock {
    std::string label;
    int rows = 0, cols = 0;
    Poly det;
    bool iso = false;
    std::string factorization;  // empty when no factorization is claimed
    bool factorization_holds = true;
};
struct CornerCertificate {
    Corner corner{1, 1};
    int lambda = 0;
    std::vector<int> row_order, col_order;  // old summand numbers, 1-based, in new order
    bool row_operation = false;
    bool lower = true;
    std::vector<DiagonalBlock> blocks;
};
struct RhoCertificate {
    int lambda = 0;
    std::vector<CornerCertificate> corners;
};
CornerCertificate triangular_certificate(const ProductRep& P, Corner c, int lambda);
RhoCertificate triangular_certificate(const ProductRep& P, int lambda);

ProductRep build_product(const TwoRep& rep, int lo = -4, int hi = 4, int n_max = 3);

}  // namespace artifact
