#include "artifact/product.hpp"

namespace artifact {

namespace {

int etft_dim(const ProductRep& P, Corner c, int lambda) {
    int n = ProductRep::nu(c.j, lambda), d = 0;
    for (auto& w : ProductRep::etft_words(c)) d += P.words().rank(w, n);
    return d;
}

void add_into(Elt& acc, const Elt& t) {
    if (acc.v.size() != t.v.size()) throw ShapeMismatch("sum of elements of different shapes");
    for (size_t z = 0; z < acc.v.size(); ++z) acc.v[z] += t.v[z];
}

void set_column(PolyMatrix& m, int c, const Elt& e) {
    for (size_t r = 0; r < e.v.size(); ++r) m.at((int)r, c) = e.v[r];
}

int et_target(Kind k) { return k == Kind::YE || k == Kind::G1 ? 1 : 2; }

}  // namespace

PolyMatrix ProductRep::sigma_oracle(Corner c, int lambda) const {
    Kind target = *kind(Bim::FtEt, c);
    int n = nu(c.j, lambda);
    int cols = etft_dim(*this, c, lambda);
    PolyMatrix out(m_.dim(target, n), cols, field());
    auto unit = eta_one(c.i, lambda);
    for (int idx = 0; idx < cols; ++idx) {
        auto [a, b] = etft_lift(c, lambda, idx);
        Elt acc = m_.zero(target, n);
        if (et_target(a.kind) == 2) {
            // lands in [E~E~]_{22}; only the zero module is modelled
            if (m_.dim(Kind::G3, a.nu) && !unit.empty()) throw Unsupported("sigma~ through [E~E~]_22 needs E^3 data");
            set_column(out, idx, acc);
            continue;
        }
        Morph eb = morph_of(m_.e_prime(b));
        for (auto& [q, p] : unit) {
            Elt t = tilde_tau_morph(gamma_EE(p, a));
            add_into(acc, m_.from_morph(target, n, compose(compose(eb, morph_of(t)), morph_of(q))));
        }
        set_column(out, idx, acc);
    }
    return out;
}

PolyMatrix ProductRep::eps_x_F_oracle(Corner c, int lambda, int i) const {
    Kind target = *kind(Bim::C, c);
    int n = nu(c.j, lambda);
    int cols = etft_dim(*this, c, lambda);
    PolyMatrix out(m_.dim(target, n), cols, field());
    for (int idx = 0; idx < cols; ++idx) {
        auto [a, b] = etft_lift(c, lambda, idx);
        int k = et_target(a.kind);
        Elt xa = a;
        for (int s = 0; s < i; ++s) xa = tilde_x(xa, k);
        set_column(out, idx, m_.from_morph(target, n, compose(morph_of(b), morph_of(xa))));
    }
    return out;
}

PolyMatrix ProductRep::F_x_eta_oracle(Corner c, int lambda, int i) const {
    Kind src = *kind(Bim::C, c), target = *kind(Bim::FtEt, c);
    Kind mid = *kind(Bim::Et, {2, c.j});
    int n = nu(c.j, lambda);
    int cols = m_.dim(src, n);
    PolyMatrix out(m_.dim(target, n), cols, field());
    auto unit = eta_one(c.i, lambda);
    for (int idx = 0; idx < cols; ++idx) {
        Morph ec = morph_of(m_.e_prime(m_.basis(src, n, idx)));
        Elt acc = m_.zero(target, n);
        for (auto& [q, p] : unit) {
            Elt pc = m_.from_morph(mid, n, compose(ec, morph_of(p)));
            for (int s = 0; s < i; ++s) pc = tilde_x(pc, c.j);
            add_into(acc, m_.from_morph(target, n, compose(morph_of(pc), morph_of(q))));
        }
        set_column(out, idx, acc);
    }
    return out;
}

}  // namespace artifact
