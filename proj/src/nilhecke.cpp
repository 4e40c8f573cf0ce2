#include "artifact/nilhecke.hpp"

#include <numeric>
#include <sstream>

namespace artifact {

std::vector<int> perm_of_word(int n, const Word& w) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i : w) std::swap(p[i - 1], p[i]);  // right multiplication by s_i
    return p;
}

Word shortlex_word(const std::vector<int>& perm) {
    // greedy smallest left descent
    std::vector<int> p = perm;
    int n = (int)p.size();
    std::vector<int> pos(n);
    Word w;
    for (;;) {
        for (int k = 0; k < n; ++k) pos[p[k]] = k;
        int found = -1;
        for (int i = 0; i + 1 < n; ++i)
            if (pos[i] > pos[i + 1]) { found = i; break; }
        if (found < 0) break;
        w.push_back(found + 1);
        std::swap(p[pos[found]], p[pos[found + 1]]);  // s_i * p
    }
    return w;
}

static void check_index(int n, int i, int hi, const char* what) {
    if (i < 1 || i > hi)
        throw IndexOutOfRange(std::string(what) + std::to_string(i) + " out of range for n=" + std::to_string(n));
}

void NilHeckeElt::add(const Word& w, const Poly& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
}

NilHeckeElt NilHeckeElt::scalar(int n, const Poly& p) {
    NilHeckeElt e(n, p.field());
    e.add({}, p);
    return e;
}

NilHeckeElt NilHeckeElt::tau(int n, int i, Field f) {
    check_index(n, i, n - 1, "tau");
    NilHeckeElt e(n, f);
    e.add({i}, Poly(1, f));
    return e;
}

NilHeckeElt NilHeckeElt::tau_word(int n, const Word& w, Field f) {
    NilHeckeElt e = scalar(n, Poly(1, f));
    for (int i : w) e = e.times_tau(i);
    return e;
}

NilHeckeElt NilHeckeElt::operator+(const NilHeckeElt& o) const {
    NilHeckeElt r = *this;
    for (auto& [w, p] : o.terms_) r.add(w, p);
    return r;
}

NilHeckeElt NilHeckeElt::operator-() const {
    NilHeckeElt r(n_, field_);
    for (auto& [w, p] : terms_) r.add(w, -p);
    return r;
}

NilHeckeElt NilHeckeElt::operator-(const NilHeckeElt& o) const { return *this + (-o); }

NilHeckeElt NilHeckeElt::times_poly(const Poly& q) const {
    NilHeckeElt r(n_, field_);
    for (auto& [w, p] : terms_) r.add(w, p * q);
    return r;
}

NilHeckeElt NilHeckeElt::times_tau(int i) const {
    check_index(n_, i, n_ - 1, "tau");
    // p tau_i = tau_i s_i(p) + d_i(p)
    NilHeckeElt r(n_, field_);
    for (auto& [w, p] : terms_) {
        auto perm = perm_of_word(n_, w);
        if (perm[i - 1] < perm[i]) {
            std::swap(perm[i - 1], perm[i]);
            r.add(shortlex_word(perm), p.swap_x(i));
        }
        r.add(w, divided_difference(p, i));
    }
    return r;
}

NilHeckeElt NilHeckeElt::operator*(const NilHeckeElt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("strand count mismatch");
    NilHeckeElt r(n_, field_);
    for (auto& [w, q] : o.terms_) {
        NilHeckeElt t = *this;
        for (int i : w) t = t.times_tau(i);
        r = r + t.times_poly(q);
    }
    return r;
}

std::string NilHeckeElt::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, p] : terms_) {
        if (!first) os << " + ";
        first = false;
        for (int i : w) os << "tau" << i << "*";
        os << "(" << p.str() << ")";
    }
    return os.str();
}

static Poly gen_poly(int n, const Gen& g, Field f) {
    switch (g.kind) {
    case Gen::X: check_index(n, g.index, n, "x"); return Poly::variable(var::x(g.index), f);
    case Gen::Y: return Poly::variable(var::y, f);
    case Gen::YLin: check_index(n, g.index, n, "y"); return ylin(g.index, f);
    case Gen::Coef: return g.coef;
    case Gen::Tau: break;
    }
    throw std::logic_error("tau is not a scalar generator");
}

static NilHeckeElt gen_elt(int n, const Gen& g, Field f) {
    if (g.kind == Gen::Tau) return NilHeckeElt::tau(n, g.index, f);
    return NilHeckeElt::scalar(n, gen_poly(n, g, f));
}

NilHeckeElt normalize(int n, const std::vector<Gen>& word, bool right_to_left, Field f) {
    NilHeckeElt acc = NilHeckeElt::scalar(n, Poly(1, f));
    if (!right_to_left) {
        for (auto& g : word) {
            if (g.kind == Gen::Tau) acc = acc.times_tau((check_index(n, g.index, n - 1, "tau"), g.index));
            else acc = acc.times_poly(gen_poly(n, g, f));
        }
    } else {
        for (size_t k = word.size(); k-- > 0;) {
            NilHeckeElt g = gen_elt(n, word[k], f);
            acc = g * acc;
        }
    }
    return acc;
}

static Poly apply_gen(int n, const Gen& g, const Poly& f) {
    if (g.kind == Gen::Tau) {
        check_index(n, g.index, n - 1, "tau");
        return divided_difference(f, g.index);
    }
    return gen_poly(n, g, f.field()) * f;
}

Poly act_on_poly(int n, const std::vector<Gen>& word, const Poly& f) {
    Poly r = f;
    for (size_t k = word.size(); k-- > 0;) r = apply_gen(n, word[k], r);
    return r;
}

Poly act_on_poly(const NilHeckeElt& e, const Poly& f) {
    Poly r(f.field());
    for (auto& [w, p] : e.terms()) {
        Poly t = p * f;
        for (size_t k = w.size(); k-- > 0;) t = divided_difference(t, w[k]);
        r += t;
    }
    return r;
}

std::pair<NilHeckeElt, NilHeckeElt> divided_power_idempotents(int n, Field f) {
    if (n != 2) throw std::invalid_argument("divided power idempotents implemented for n = 2");
    NilHeckeElt plus = normalize(2, {Gen::tau(1), Gen::ylin(1)}, false, f);
    NilHeckeElt minus = normalize(2, {Gen::scalar(Poly(-1, f)), Gen::ylin(2), Gen::tau(1)}, false, f);
    return {plus, minus};
}

}  // namespace artifact
