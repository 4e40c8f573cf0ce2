#pragma once

#include "artifact/matrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace artifact {

class AlgebraMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotSymmetric : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A = prod over weights of commutative polynomial rings.
struct WeightedAlgebra {
    Field field{};
    std::map<int, std::vector<int>> gens;  // weight -> generator variable ids
    bool y_adjoined = false;

    bool supports(int w) const { return gens.count(w) > 0; }
    std::vector<int> support() const;
    WeightedAlgebra with_y() const;
    bool operator==(const WeightedAlgebra& o) const = default;
};

using AlgebraPtr = std::shared_ptr<const WeightedAlgebra>;

// One weight component: free right module K^rank over the source ring;
// left generators act by the given matrices.
struct Component {
    int rank = 0;
    std::vector<std::string> basis;
    std::map<int, PolyMatrix> left;  // target-ring generator id -> rank x rank
};

struct Bimodule {
    std::string name;
    AlgebraPtr alg;
    int shift = 0;
    std::map<int, Component> comp;  // every source weight in the support

    int rank(int w) const;
    const Component& at(int w) const;
    bool is_zero() const;
    // left action of every generator is the same variable times identity
    bool is_symmetric() const;
    std::string describe() const;
};

struct BimoduleMap {
    Bimodule dom, cod;
    std::map<int, PolyMatrix> mat;  // source weight -> cod.rank x dom.rank

    const PolyMatrix& at(int w) const { return mat.at(w); }
    bool operator==(const BimoduleMap& o) const { return mat == o.mat; }
};

Bimodule unit_bimodule(const AlgebraPtr& a);  // A itself
Bimodule zero_bimodule(const AlgebraPtr& a, int shift, const std::string& name = "0");

Bimodule tensor_over_A(const Bimodule& m, const Bimodule& n);
Bimodule direct_sum(const std::vector<Bimodule>& parts, const std::string& name = "");

struct Duality {
    Bimodule F;
    BimoduleMap eta;  // A -> F E
    BimoduleMap eps;  // E F -> A
};
Duality left_dual(const Bimodule& e);

BimoduleMap identity(const Bimodule& m);
BimoduleMap zero_map(const Bimodule& dom, const Bimodule& cod);
BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f);  // g after f
BimoduleMap add(const BimoduleMap& a, const BimoduleMap& b);
BimoduleMap scalar_multiply(const BimoduleMap& f, const Poly& c);
BimoduleMap direct_sum(const std::vector<BimoduleMap>& parts);
// columns side by side (common codomain) / rows stacked (common domain)
BimoduleMap hjoin(const std::vector<BimoduleMap>& parts, const Bimodule& dom);
BimoduleMap vjoin(const std::vector<BimoduleMap>& parts, const Bimodule& cod);
BimoduleMap tensor_left(const Bimodule& m, const BimoduleMap& g);   // M g
BimoduleMap tensor_right(const BimoduleMap& f, const Bimodule& n);  // f N

// Left-action commutation; returns an explanation on failure.
std::optional<std::string> check_action_commutes(const BimoduleMap& f);
std::optional<std::string> check_actions_commute(const Bimodule& m);

struct IsoCertificate {
    bool iso = true;
    std::map<int, Poly> determinants;
    std::string witness;  // first failing weight
};
IsoCertificate certify_iso(const BimoduleMap& f);
IsoCertificate certify_iso(const std::map<int, PolyMatrix>& per_weight);
bool is_unit_det(const Poly& d);

}  // namespace artifact
