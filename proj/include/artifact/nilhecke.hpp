#pragma once

#include "artifact/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace artifact {

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

using Word = std::vector<int>;  // generator indices of tau_i, 1-based

struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Element of the nil affine Hecke algebra on n strands with central y,
// stored as sum of tau_w * coefficient (coefficients on the right).
class NilHeckeElt {
public:
    explicit NilHeckeElt(int n = 1, Field f = {}) : n_(n), field_(f) {}
    static NilHeckeElt scalar(int n, const Poly& p);
    static NilHeckeElt tau(int n, int i, Field f = {});
    static NilHeckeElt tau_word(int n, const Word& w, Field f = {});

    int strands() const { return n_; }
    const std::map<Word, Poly, ShortLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    NilHeckeElt operator+(const NilHeckeElt& o) const;
    NilHeckeElt operator-(const NilHeckeElt& o) const;
    NilHeckeElt operator-() const;
    NilHeckeElt operator*(const NilHeckeElt& o) const;
    NilHeckeElt times_tau(int i) const;           // this * tau_i
    NilHeckeElt times_poly(const Poly& p) const;  // this * p
    bool operator==(const NilHeckeElt& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    std::string str() const;
    void add(const Word& w, const Poly& p);

private:
    int n_;
    Field field_;
    std::map<Word, Poly, ShortLex> terms_;
};

// A generator of a word to be normalized.
struct Gen {
    enum Kind { Tau, X, Y, YLin, Coef } kind;
    int index = 0;  // tau_i, x_i, y_i
    Poly coef{};    // for Coef
    static Gen tau(int i) { return {Tau, i, {}}; }
    static Gen x(int i) { return {X, i, {}}; }
    static Gen y() { return {Y, 0, {}}; }
    static Gen ylin(int i) { return {YLin, i, {}}; }
    static Gen scalar(const Poly& p) { return {Coef, 0, p}; }
};

// Left-to-right normalization (default) or right-to-left.
NilHeckeElt normalize(int n, const std::vector<Gen>& word, bool right_to_left = false, Field f = {});
Poly act_on_poly(const NilHeckeElt& e, const Poly& f);
// Unnormalized action: generators applied right to left.
Poly act_on_poly(int n, const std::vector<Gen>& word, const Poly& f);
std::pair<NilHeckeElt, NilHeckeElt> divided_power_idempotents(int n = 2, Field f = {});

// Permutation helpers (one-line notation, values 0..n-1).
std::vector<int> perm_of_word(int n, const Word& w);
Word shortlex_word(const std::vector<int>& perm);

}  // namespace artifact
