#include "artifact/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace artifact {

mpq_class Field::reduce(const mpq_class& c) const {
    if (p == 0) return c;
    mpz_class m(p), num = c.get_num() % m, den = c.get_den() % m;
    if (num < 0) num += m;
    if (den == 0) throw std::domain_error("denominator divisible by field characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    mpz_class r = (num * inv) % m;
    return mpq_class(r);
}

mpq_class Field::inverse(const mpq_class& c) const {
    if (c == 0) throw std::domain_error("inverse of zero");
    if (p == 0) return 1 / c;
    mpz_class m(p), inv, v = reduce(c).get_num();
    mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return mpq_class(inv);
}

namespace var {
std::string name(int id) {
    if (id == u) return "u";
    if (id == y) return "y";
    return "x" + std::to_string(id - 1);
}
int parse(const std::string& s) {
    if (s == "u") return u;
    if (s == "y") return y;
    if (s.size() >= 2 && s[0] == 'x' &&
        std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit((unsigned char)c); })) {
        int i = std::stoi(s.substr(1));
        if (i >= 1 && i <= 60) return x(i);
    }
    throw std::invalid_argument("unknown variable '" + s + "'");
}
}  // namespace var

int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t k = n; k-- > 0;) {
        int ea = k < a.size() ? a[k] : 0, eb = k < b.size() ? b[k] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

static void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

static uint64_t mask_of(const Monomial& m) {
    uint64_t r = 0;
    for (size_t k = 0; k < m.size(); ++k)
        if (m[k]) r |= uint64_t(1) << k;
    return r;
}

static Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(std::max(a.size(), b.size()), 0);
    for (size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    return r;
}

Field Poly::unify(const Field& a, const Field& b) {
    if (a.p != b.p) throw std::invalid_argument("mixed coefficient fields");
    return a;
}

Poly::Poly(long c, Field f) : field_(f) {
    if (c != 0) add_term({}, mpq_class(c));
}

Poly Poly::constant(const mpq_class& c, Field f) {
    Poly p(f);
    p.add_term({}, c);
    return p;
}

Poly Poly::variable(int id, Field f) {
    Monomial m(id + 1, 0);
    m[id] = 1;
    return monomial(m, 1, f);
}

Poly Poly::monomial(const Monomial& m, const mpq_class& c, Field f) {
    Poly p(f);
    p.add_term(m, c);
    return p;
}

void Poly::add_term(const Monomial& m0, const mpq_class& c) {
    Monomial m = m0;
    trim(m);
    vars_ |= mask_of(m);
    mpq_class v = field_.reduce(c);
    if (v == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), v);
        return;
    }
    it->second = field_.reduce(it->second + v);
    if (it->second == 0) terms_.erase(it);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

mpq_class Poly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int Poly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

int Poly::degree_in(int id) const {
    int d = terms_.empty() ? -1 : 0;
    for (auto& [m, c] : terms_)
        if ((size_t)id < m.size()) d = std::max(d, (int)m[id]);
    return d;
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.vars_ = vars_;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, field_.reduce(-c));
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    field_ = unify(field_, o.field_);
    vars_ |= o.vars_;
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    field_ = unify(field_, o.field_);
    vars_ |= o.vars_;
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(Poly::unify(a.field_, b.field_));
    r.vars_ = a.vars_ | b.vars_;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(unsigned k) const {
    Poly r = Poly(1, field_), b = *this;
    r.vars_ = vars_;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

Poly Poly::scaled(const mpq_class& c) const {
    Poly r(field_);
    r.vars_ = vars_;
    for (auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

bool Poly::operator<(const Poly& o) const {
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return grlex_less(b->first, a->first);
        if (a->second != b->second) return a->second < b->second;
    }
    return a == terms_.end() && b != o.terms_.end();
}

Poly Poly::swap_x(int i) const {
    int a = var::x(i), b = var::x(i + 1);
    Poly r(field_);
    r.vars_ = vars_;
    for (auto& [m0, c] : terms_) {
        Monomial m = m0;
        m.resize(std::max<size_t>(m.size(), b + 1), 0);
        std::swap(m[a], m[b]);
        r.add_term(m, c);
    }
    return r;
}

Poly Poly::substitute(int id, const Poly& value) const {
    Poly r(field_);
    r.vars_ = (vars_ & ~(uint64_t(1) << id)) | value.vars_;
    for (auto& [m0, c] : terms_) {
        Monomial m = m0;
        unsigned e = 0;
        if ((size_t)id < m.size()) {
            e = m[id];
            m[id] = 0;
        }
        r += Poly::monomial(m, c, field_) * value.pow(e);
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        os << a.get_str();
        for (size_t k = 0; k < m.size(); ++k) {
            if (!m[k]) continue;
            os << "*" << var::name((int)k);
            if (m[k] > 1) os << "^" << m[k];
        }
    }
    return os.str();
}

// ---- parsing: sums of products of factors with ^, parentheses, rationals

namespace {
struct Parser {
    const std::string& s;
    Field f;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("cannot parse polynomial '" + s + "' at " + std::to_string(i) + ": " + why);
    }
    Poly expr() {
        ws();
        Poly r(f);
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        Poly t = term();
        r = neg ? -t : t;
        for (;;) {
            ws();
            if (i >= s.size() || (s[i] != '+' && s[i] != '-')) break;
            bool minus = s[i++] == '-';
            Poly t2 = term();
            if (minus) r -= t2; else r += t2;
        }
        return r;
    }
    Poly term() {
        Poly r = power();
        for (;;) {
            ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                r *= power();
            } else if (i < s.size() && (std::isalpha((unsigned char)s[i]) || s[i] == '(')) {
                r *= power();
            } else {
                break;
            }
        }
        return r;
    }
    Poly power() {
        Poly b = atom();
        ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            ws();
            size_t st = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            if (st == i) fail("exponent expected");
            b = b.pow((unsigned)std::stoul(s.substr(st, i - st)));
        }
        return b;
    }
    Poly atom() {
        ws();
        if (i >= s.size()) fail("unexpected end");
        char c = s[i];
        if (c == '(') {
            ++i;
            Poly r = expr();
            ws();
            if (i >= s.size() || s[i] != ')') fail("')' expected");
            ++i;
            return r;
        }
        if (c == '-') {
            ++i;
            return -power();
        }
        if (std::isdigit((unsigned char)c)) {
            size_t st = i;
            while (i < s.size() && (std::isdigit((unsigned char)s[i]) || s[i] == '/')) ++i;
            mpq_class q(s.substr(st, i - st));
            q.canonicalize();
            return Poly::constant(q, f);
        }
        if (std::isalpha((unsigned char)c)) {
            size_t st = i;
            ++i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            try {
                return Poly::variable(var::parse(s.substr(st, i - st)), f);
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
        }
        fail(std::string("unexpected '") + c + "'");
    }
};
}  // namespace

Poly Poly::parse(const std::string& text, Field f) {
    Parser p{text, f};
    Poly r = p.expr();
    p.ws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

// ---- division

static bool mono_divides(const Monomial& g, const Monomial& f, Monomial& q) {
    if (g.size() > f.size()) {
        for (size_t k = f.size(); k < g.size(); ++k)
            if (g[k]) return false;
    }
    q = f;
    for (size_t k = 0; k < g.size(); ++k) {
        if (k >= q.size()) return false;
        if (q[k] < g[k]) return false;
        q[k] -= g[k];
    }
    trim(q);
    return true;
}

bool try_divide(const Poly& f, const Poly& g, Poly& q) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    const Field& fld = f.field();
    q = Poly(fld);
    q.declare(f.vars());
    Poly r = f;
    mpq_class lc_inv = fld.inverse(g.leading_coeff());
    const Monomial& lg = g.leading_monomial();
    while (!r.is_zero()) {
        Monomial qm;
        if (!mono_divides(lg, r.leading_monomial(), qm)) return false;
        Poly t = Poly::monomial(qm, r.leading_coeff() * lc_inv, fld);
        q += t;
        r -= t * g;
    }
    return true;
}

Poly exact_divide(const Poly& f, const Poly& g) {
    Poly q;
    if (!try_divide(f, g, q)) throw NotDivisible("(" + f.str() + ") is not divisible by (" + g.str() + ")");
    return q;
}

Poly divided_difference(const Poly& f, int i) {
    Poly num = f - f.swap_x(i);
    Poly den = Poly::variable(var::x(i), f.field()) - Poly::variable(var::x(i + 1), f.field());
    return exact_divide(num, den);
}

Poly h_complete(int i, const std::vector<int>& vars, Field f) {
    if (vars.empty()) throw std::invalid_argument("h_complete needs variables");
    if (i < 0) return Poly(f);
    // h_i(z1..zn) = sum_{k} z_n^k h_{i-k}(z1..z_{n-1})
    std::vector<Poly> h(i + 1, Poly(f));
    Poly zero_var = Poly::variable(vars[0], f);
    for (int d = 0; d <= i; ++d) h[d] = zero_var.pow(d);
    for (size_t v = 1; v < vars.size(); ++v) {
        Poly z = Poly::variable(vars[v], f);
        for (int d = 1; d <= i; ++d) h[d] += z * h[d - 1];
    }
    return h[i];
}

Poly ylin(int i, Field f) { return Poly::variable(var::x(i), f) - Poly::variable(var::y, f); }

}  // namespace artifact
