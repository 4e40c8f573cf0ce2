#pragma once

#include "artifact/words.hpp"

#include <string>
#include <vector>

namespace artifact {

class NotInModel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Element kinds. Plain word kinds carry free coordinates; G1/G2/L2/U/G3 are
// model bimodules stored in bimodule form.
//   A    : A[y]                      (corner 11 of C)
//   YE   : y1 E[y]                   (corner 12 of C, corner 11 of E~)
//   F    : F[y]                      (corner 21 of C, corner 11 of F~)
//   G1   : (theta, phi1)
//   YYEE : y1 y2 E^2[y]              (corner 12 of E~)
//   G2   : (e', e, xi')
//   FF   : F^2[y]                    (corner 21 of F~)
//   L2   : (f', f, rho1)
//   U    : (Phi11, Phi21, Phi12, Phi22, Lambda0)
//   G3   : free coordinates (ee3, ee'', w, chi'') with ee' = tau ee3 - y1 w
enum class Kind { A, YE, F, G1, YYEE, G2, FF, L2, U, G3 };
std::string kind_name(Kind k);

struct Elt {
    Kind kind = Kind::A;
    int nu = 0;  // source weight of the underlying words
    std::vector<Poly> v;
    bool operator==(const Elt& o) const { return kind == o.kind && nu == o.nu && v == o.v; }
};

// A morphism of two-term complexes: top and bottom components as matrices.
struct Morph {
    PolyMatrix top, bottom;
    bool operator==(const Morph& o) const { return top == o.top && bottom == o.bottom; }
};
Morph compose(const Morph& g, const Morph& f);  // g after f

// G3 in submodule form.
struct G3Data {
    PolyMatrix ee1, ee2, ee3, chi;
};

class Models {
public:
    explicit Models(const TwoRep& rep) : w_(rep) {}
    const Words& words() const { return w_; }
    Field field() const { return w_.field(); }

    static std::vector<std::string> parts(Kind k);
    std::vector<int> part_dims(Kind k, int nu) const;
    int dim(Kind k, int nu) const;
    std::vector<std::vector<Poly>> split(const Elt& e) const;
    Elt join(Kind k, int nu, const std::vector<std::vector<Poly>>& ps) const;
    Elt zero(Kind k, int nu) const;
    Elt basis(Kind k, int nu, int idx) const;
    Elt from_column(Kind k, int nu, const PolyMatrix& col) const;

    // submodule views
    Morph to_morph(const Elt& e) const;
    Elt from_morph(Kind k, int nu, const Morph& m) const;  // throws NotInModel
    G3Data to_g3(const Elt& e) const;
    Elt from_g3(int nu, const G3Data& d) const;  // throws NotInModel

    // E' applied to an element of C: A->G1, YE->G2, F->L2, G1->U
    Elt e_prime(const Elt& c) const;

    // matrix of a coordinate-linear map given on basis elements
    PolyMatrix matrix_of(Kind dom, int nu_dom, Kind cod, int nu_cod, const std::function<Elt(const Elt&)>& f) const;

    // helpers on E^n at nu
    PolyMatrix y1(int nu) const { return w_.ylin(1, 1, nu); }
    PolyMatrix ee_y(int i, int nu) const { return w_.ylin(i, 2, nu); }
    PolyMatrix tensor_with(const PolyMatrix& col, int nu_left) const;  // _ (x) e : E_{nu_left} -> E_{nu_left} (x) E

private:
    Words w_;
    int a(int t) const { return w_.supports(t) ? 1 : 0; }
    int r(int t) const { return w_.rE(t); }
    int rr(int t) const { return w_.rank("EE", t); }
};

}  // namespace artifact
