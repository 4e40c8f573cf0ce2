#include "artifact/poly.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace artifact;

static Poly P(const char* s) { return Poly::parse(s); }
static Poly X(int i) { return Poly::variable(var::x(i)); }
static const Poly Y = Poly::variable(var::y);

TEST_CASE("render is canonical with explicit coefficients") {
    CHECK(P("y + x1^2 - 3/2*u").str() == "1*x1^2 + 1*y - 3/2*u");
    CHECK(P("0").str() == "0");
    CHECK(P("(x1 - y)*(x1 + y)") == P("x1^2 - y^2"));
    CHECK(Poly::parse(P("x2*x1 - 7*u^3 + 2").str()) == P("x1*x2 - 7*u^3 + 2"));
    CHECK_THROWS_AS(P("x1 +"), std::invalid_argument);
    CHECK_THROWS_AS(P("z"), std::invalid_argument);
}

TEST_CASE("grlex order puts higher x first") {
    auto t = P("u^2 + y*u + x1 + x2").terms();
    std::vector<std::string> order;
    for (auto& [m, c] : t) order.push_back(Poly::monomial(m, 1).str());
    CHECK(order == std::vector<std::string>{"1*u*y", "1*u^2", "1*x2", "1*x1"});
}

TEST_CASE("h_complete small cases") {
    std::vector<int> xy{var::x(1), var::y};
    CHECK(h_complete(-1, xy).is_zero());
    CHECK(h_complete(0, xy) == Poly(1));
    CHECK(h_complete(1, xy) == X(1) + Y);
    CHECK(h_complete(2, xy) == X(1) * X(1) + X(1) * Y + Y * Y);
}

TEST_CASE("h_complete matches monomial enumeration") {
    std::vector<int> v3{var::x(1), var::x(2), var::y};
    for (int d = 0; d <= 8; ++d) CHECK(h_complete(d, v3) == oracle::h_by_enumeration(d, v3));
}

TEST_CASE("exact_divide") {
    CHECK(exact_divide(P("x1^2 - y^2"), P("x1 - y")) == P("x1 + y"));
    CHECK(exact_divide(Poly(), P("x1 - y")).is_zero());
    Poly h2 = h_complete(2, {var::x(1), var::y});
    CHECK(exact_divide((X(1) - Y) * h2, X(1) - Y) == h2);
    CHECK_THROWS_AS(exact_divide(P("x1 + 1"), P("x1 - y")), NotDivisible);
}

TEST_CASE("exact_divide round trip, seeded") {
    std::mt19937_64 rng(7);
    std::vector<int> vars{var::u, var::y, var::x(1), var::x(2)};
    for (int t = 0; t < 200; ++t) {
        Poly f = oracle::random_poly(rng, vars, 3, 4), g = oracle::random_poly(rng, vars, 2, 3);
        if (g.is_zero()) continue;
        CHECK(exact_divide(f * g, g) == f);
    }
}

TEST_CASE("divided_difference examples") {
    CHECK(divided_difference(Poly(1), 1).is_zero());
    CHECK(divided_difference(X(1), 1) == Poly(1));
    CHECK(divided_difference(X(1) * X(2), 1).is_zero());
}

TEST_CASE("divided_difference agrees with pointwise formula") {
    std::mt19937_64 rng(11);
    std::vector<int> vars{var::y, var::x(1), var::x(2), var::x(3)};
    std::uniform_int_distribution<int> pt(-9, 9);
    for (int t = 0; t < 100; ++t) {
        Poly f = oracle::random_poly(rng, vars, 4, 4);
        for (int i = 1; i <= 2; ++i) {
            std::map<int, mpq_class> at{{var::y, pt(rng)}, {var::x(1), pt(rng)}, {var::x(2), pt(rng)}, {var::x(3), pt(rng)}};
            if (at[var::x(i)] == at[var::x(i + 1)]) at[var::x(i + 1)] += 1;
            auto sw = at;
            std::swap(sw[var::x(i)], sw[var::x(i + 1)]);
            mpq_class expect = (oracle::eval(f, at) - oracle::eval(f, sw)) / (at[var::x(i)] - at[var::x(i + 1)]);
            CHECK(oracle::eval(divided_difference(f, i), at) == expect);
        }
    }
}

TEST_CASE("divided differences satisfy nil Hecke relations, seeded") {
    std::mt19937_64 rng(3);
    std::vector<int> vars{var::y, var::x(1), var::x(2), var::x(3)};
    for (int t = 0; t < 100; ++t) {
        Poly f = oracle::random_poly(rng, vars, 5, 5);
        CHECK(divided_difference(divided_difference(f, 1), 1).is_zero());
        CHECK(divided_difference(divided_difference(divided_difference(f, 1), 2), 1) ==
              divided_difference(divided_difference(divided_difference(f, 2), 1), 2));
        for (int i = 1; i <= 2; ++i)
            CHECK(divided_difference(X(i) * f, i) - X(i + 1) * divided_difference(f, i) == f);
    }
}

TEST_CASE("symmetric polynomial facts for i <= 8") {
    for (int i = 0; i <= 8; ++i) {
        CAPTURE(i);
        Poly h12 = h_complete(i - 1, {var::x(1), var::x(2)});
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; a + b <= 6; ++b) {
                Poly f = X(1).pow(a) * X(2).pow(b);
                CHECK(X(2).pow(i) * divided_difference(f, 1) == divided_difference(X(1).pow(i) * f, 1) - h12 * f);
            }
        CHECK(X(2).pow(i) - Y.pow(i) == (X(2) - Y) * h_complete(i - 1, {var::x(2), var::y}));
        Poly sum;
        for (int j = 0; j <= i - 1; ++j) sum += X(1).pow(j) * h_complete(i - 1 - j - 1, {var::x(2), var::y});
        CHECK(sum == h_complete(i - 2, {var::x(1), var::x(2), var::y}));
        CHECK((X(2) - Y) * h_complete(i - 2, {var::x(1), var::x(2), var::y}) ==
              h_complete(i - 1, {var::x(1), var::x(2)}) - h_complete(i - 1, {var::x(1), var::y}));
    }
}

TEST_CASE("prime field arithmetic") {
    Field f7{7};
    Poly a = Poly::parse("3*x1 + 5", f7), b = Poly::parse("4*x1 + 2", f7);
    CHECK((a + b) == Poly::parse("0", f7));
    CHECK(exact_divide(a * b, b) == a);
    CHECK(Poly::parse("1/2", f7) == Poly::parse("4", f7));
}
