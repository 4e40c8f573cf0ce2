#pragma once

#include "artifact/bimodcat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace artifact {

class RepLoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TwoRep {
    std::string name;
    AlgebraPtr alg;
    Bimodule E;
    BimoduleMap x;    // End(E)
    BimoduleMap tau;  // End(E E)

    Field field() const { return alg->field; }
};

// Derived adjunction data for a rep with symmetric E.
struct Adjunction {
    Bimodule A, E, F, EE, EF, FE;
    BimoduleMap eta, eps;
};
Adjunction adjunction(const TwoRep& rep);

Bimodule power(const Bimodule& e, int n);

TwoRep make_L1(Field f = {});
TwoRep load_rep_json(const std::string& text);
TwoRep load_rep_file(const std::string& path);
std::string rep_to_json(const TwoRep& rep);

struct CheckEntry {
    std::string name;
    int weight = 0;
    bool pass = true;
    std::string witness;
};
using CheckReport = std::vector<CheckEntry>;
bool all_pass(const CheckReport& r);

CheckReport check_hecke(const TwoRep& rep, int n = 3);

BimoduleMap sigma(const TwoRep& rep);

// rho_lambda at weight lambda, summands in the order sigma first.
PolyMatrix rho(const TwoRep& rep, int lambda);
// the lambda>=0 or lambda<=0 assembly explicitly (used for the lambda=0 cross-check)
PolyMatrix rho_nonneg(const TwoRep& rep, int lambda);
PolyMatrix rho_nonpos(const TwoRep& rep, int lambda);

CheckReport check_hypotheses(const TwoRep& rep, int lo, int hi, int n_max);

}  // namespace artifact
