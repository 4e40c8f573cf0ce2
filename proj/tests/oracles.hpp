#pragma once
// Independent reference computations used only by tests.

#include "artifact/poly.hpp"

#include <functional>
#include <map>
#include <random>

namespace oracle {

using artifact::Poly;

// evaluate at rational values per variable id (missing ids -> 0)
inline mpq_class eval(const Poly& p, const std::map<int, mpq_class>& at) {
    mpq_class r = 0;
    for (auto& [m, c] : p.terms()) {
        mpq_class t = c;
        for (size_t k = 0; k < m.size(); ++k) {
            auto it = at.find((int)k);
            mpq_class v = it == at.end() ? mpq_class(0) : it->second;
            for (int e = 0; e < m[k]; ++e) t *= v;
        }
        r += t;
    }
    return r;
}

// sum of all monomials of degree d in the listed variables, by enumeration
inline Poly h_by_enumeration(int d, const std::vector<int>& vars) {
    Poly r;
    if (d < 0) return r;
    std::function<void(size_t, int, artifact::Monomial)> rec = [&](size_t k, int left, artifact::Monomial m) {
        if (k + 1 == vars.size()) {
            if ((size_t)vars[k] >= m.size()) m.resize(vars[k] + 1, 0);
            m[vars[k]] += left;
            r.add_term(m, 1);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            artifact::Monomial mm = m;
            if ((size_t)vars[k] >= mm.size()) mm.resize(vars[k] + 1, 0);
            mm[vars[k]] += e;
            rec(k + 1, left - e, mm);
        }
    };
    rec(0, d, {});
    return r;
}

inline Poly random_poly(std::mt19937_64& rng, const std::vector<int>& vars, int max_deg, int terms) {
    Poly r;
    std::uniform_int_distribution<int> c(-3, 3), e(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        artifact::Monomial m;
        int budget = e(rng);
        for (int v : vars) {
            std::uniform_int_distribution<int> ev(0, budget);
            int k = ev(rng);
            budget -= k;
            if ((size_t)v >= m.size()) m.resize(v + 1, 0);
            m[v] = (uint16_t)k;
        }
        r.add_term(m, c(rng));
    }
    return r;
}

}  // namespace oracle
