#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace artifact {

// Coefficient field: rationals, or Z/p when p > 0.
struct Field {
    unsigned long p = 0;
    bool operator==(const Field&) const = default;
    bool is_rational() const { return p == 0; }
    mpq_class reduce(const mpq_class& c) const;
    mpq_class inverse(const mpq_class& c) const;
};

// Global variable ids in grlex priority order: u < y < x1 < x2 < ...
namespace var {
constexpr int u = 0;
constexpr int y = 1;
inline int x(int i) { return 1 + i; }
std::string name(int id);
int parse(const std::string& name);  // throws std::invalid_argument
}  // namespace var

// Exponent vector indexed by global variable id, trailing zeros trimmed.
using Monomial = std::vector<uint16_t>;

int total_degree(const Monomial& m);
// true when a is strictly smaller than b in graded lex (higher ids dominate).
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

class NotDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Poly {
public:
    using Terms = std::map<Monomial, mpq_class, GrlexGreater>;

    Poly() = default;
    explicit Poly(Field f) : field_(f) {}
    Poly(long c, Field f = {});
    static Poly constant(const mpq_class& c, Field f = {});
    static Poly variable(int id, Field f = {});
    static Poly monomial(const Monomial& m, const mpq_class& c, Field f = {});
    static Poly parse(const std::string& text, Field f = {});

    const Field& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    // bitmask of variable ids the polynomial is declared over
    uint64_t vars() const { return vars_; }
    Poly& declare(uint64_t mask) { vars_ |= mask; return *this; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    mpq_class constant_term() const;
    int degree() const;
    int degree_in(int id) const;
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const mpq_class& leading_coeff() const { return terms_.begin()->second; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly pow(unsigned k) const;
    Poly scaled(const mpq_class& c) const;

    // Structural equality; the declared variable set is not compared.
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;

    // swap x_i and x_{i+1}
    Poly swap_x(int i) const;
    // substitute variable id by a polynomial
    Poly substitute(int id, const Poly& value) const;

    std::string str() const;

    void add_term(const Monomial& m, const mpq_class& c);

private:
    Field field_{};
    uint64_t vars_ = 0;
    Terms terms_;
    static Field unify(const Field& a, const Field& b);
};

Poly exact_divide(const Poly& f, const Poly& g);
// divides and returns std::nullopt-like flag instead of throwing
bool try_divide(const Poly& f, const Poly& g, Poly& q);
Poly divided_difference(const Poly& f, int i);
Poly h_complete(int i, const std::vector<int>& vars, Field f = {});

// y_i = x_i - y
Poly ylin(int i, Field f = {});

}  // namespace artifact
