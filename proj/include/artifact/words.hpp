#pragma once

#include "artifact/tworep.hpp"

#include <functional>
#include <string>

namespace artifact {

class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A bimodule map between words in E and F, given per source weight.
struct Prim {
    std::string dom, cod;
    std::function<PolyMatrix(int)> at;
};

// Matrices of whiskered maps between tensor words of a symmetric rep.
// A word is read left to right as tensor factors; its source weight is
// the source of the rightmost letter.
class Words {
public:
    explicit Words(const TwoRep& rep);

    const TwoRep& rep() const { return rep_; }
    Field field() const { return rep_.field(); }
    bool supports(int w) const { return rep_.alg->supports(w); }

    static int shift(const std::string& w);
    int rank(const std::string& w, int nu) const;
    int rE(int nu) const { return rank("E", nu); }

    PolyMatrix id(const std::string& w, int nu) const;
    PolyMatrix zero(const std::string& cod, const std::string& dom, int nu) const;
    PolyMatrix scalar(const std::string& w, int nu, const Poly& p) const;
    Poly y() const { return Poly::variable(var::y, field()); }

    // primitive maps
    Prim x() const;      // E -> E
    Prim tau() const;    // EE -> EE
    Prim eps() const;    // EF -> ""
    Prim eta() const;    // "" -> FE
    Prim sigma() const;  // EF -> FE
    Prim xdual() const;  // F -> F, f -> f o x
    Prim ident(const std::string& w) const;
    // polynomial in x1..xn (counted from the right) and y acting on E^n
    Prim xpoly(const Poly& p, int n) const;
    Prim xpoly_dual(const Poly& p) const;  // polynomial in the dual x on F (one variable x1)

    Prim then(const Prim& second, const Prim& first) const;  // second after first
    Prim sum(const Prim& a, const Prim& b) const;
    Prim scaled(const Prim& a, const Poly& c) const;

    // left word, prim, right word
    Prim whisker(const std::string& left, const Prim& p, const std::string& right) const;
    PolyMatrix place(const std::string& left, const Prim& p, const std::string& right, int nu) const {
        return whisker(left, p, right).at(nu);
    }

    // Hom identifications used by the model bimodules.
    // F W at nu  <->  Hom(E_{mu-2}, W) with mu the target of W.
    PolyMatrix fw_to_hom(const std::vector<Poly>& v, const std::string& w, int nu) const;
    std::vector<Poly> hom_to_fw(const PolyMatrix& m, const std::string& w, int nu) const;
    // F F W at nu <-> Hom(E E, W)
    PolyMatrix ffw_to_hom(const std::vector<Poly>& v, const std::string& w, int nu) const;
    std::vector<Poly> hom_to_ffw(const PolyMatrix& m, const std::string& w, int nu) const;

    // x_i - y on E^n at nu
    PolyMatrix ylin(int i, int n, int nu) const;
    PolyMatrix xop(int i, int n, int nu) const;

private:
    TwoRep rep_;
    Adjunction adj_;
    BimoduleMap sigma_;
};

// Solve a * X = b exactly; throws NotDivisible when X is not polynomial.
PolyMatrix solve_exact(const PolyMatrix& a, const PolyMatrix& b);
std::vector<Poly> column(const PolyMatrix& m);
PolyMatrix as_column(const std::vector<Poly>& v, Field f = {});

}  // namespace artifact
