#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicoeff/multipoly.hpp"

#include <random>

using namespace bicoeff;

namespace {

MultiPoly v(Symbol s) { return MultiPoly::variable(s); }

MultiPoly random_poly(std::mt19937_64& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 4);
    MultiPoly p;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        MultiPoly term(Rational(num(rng), den(rng)));
        for (std::size_t i = 0; i < kSymbolCount; ++i) {
            const int e = exp(rng);
            if (e > 0) term *= MultiPoly::variable(static_cast<Symbol>(i), static_cast<unsigned>(e));
        }
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic in canonical form") {
    CHECK(v(Symbol::a2) * v(Symbol::a2) == MultiPoly::variable(Symbol::a2, 2));
    CHECK((v(Symbol::a2) + v(Symbol::a3)) * (v(Symbol::a2) - v(Symbol::a3)) ==
          MultiPoly::variable(Symbol::a2, 2) - MultiPoly::variable(Symbol::a3, 2));

    const MultiPoly prod = v(Symbol::a2) * v(Symbol::a3);
    CHECK((prod.scaled(5) - prod.scaled(5)).is_zero());
    CHECK((prod.scaled(5) - prod.scaled(5)).terms().empty());
}

TEST_CASE("zero detection") {
    CHECK(MultiPoly().is_zero());
    CHECK((v(Symbol::a2) - v(Symbol::a2)).is_zero());
    CHECK((v(Symbol::a2) * v(Symbol::a3) - v(Symbol::a3) * v(Symbol::a2)).is_zero());
    CHECK_FALSE(v(Symbol::q2).is_zero());
}

TEST_CASE("substitution") {
    const MultiPoly p1 = v(Symbol::p1), q1 = v(Symbol::q1);
    CHECK((p1 * p1 - q1 * q1).substituted({{Symbol::q1, -p1}}).is_zero());

    CHECK(v(Symbol::a2).substituted({{Symbol::a2, v(Symbol::a2)}}) == v(Symbol::a2));

    const MultiPoly expr = v(Symbol::a2) * v(Symbol::a2) * MultiPoly(Rational(2)) - v(Symbol::a3);
    CHECK(expr.substituted({{Symbol::a2, MultiPoly(Rational(1))}, {Symbol::a3, MultiPoly(Rational(1))}}) ==
          MultiPoly(Rational(1)));
}

TEST_CASE("substitution distributes over sum and product") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        const MultiPoly p = random_poly(rng), q = random_poly(rng);
        const std::map<Symbol, MultiPoly> bind = {{Symbol::a2, random_poly(rng, 2)},
                                                  {Symbol::q1, random_poly(rng, 2)}};
        CHECK((p + q).substituted(bind) == p.substituted(bind) + q.substituted(bind));
        CHECK((p * q).substituted(bind) == p.substituted(bind) * q.substituted(bind));
    }
}

TEST_CASE("canonical equality is a congruence") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 40; ++rep) {
        const MultiPoly r = random_poly(rng);
        const MultiPoly p = random_poly(rng);
        // same value reached by different routes
        const MultiPoly q = (p + r) - r;
        CHECK(p == q);
        const MultiPoly s = random_poly(rng);
        CHECK(p * s == q * s);
    }
}

TEST_CASE("full evaluation requires bindings for used symbols") {
    const MultiPoly expr = v(Symbol::a2) * v(Symbol::p1);
    CHECK(expr.evaluate({{Symbol::a2, Rational(2)}, {Symbol::p1, Rational(1, 3)}}) ==
          Rational(2, 3));
    CHECK_THROWS_AS(expr.evaluate({{Symbol::a2, Rational(2)}}), std::domain_error);
}

TEST_CASE("rational scalars stay reduced") {
    Rational q(6, 4);
    CHECK(numerator(q) == 3);
    CHECK(denominator(q) == 2);
    q *= Rational(2, 3);
    CHECK(q == 1);

    // big enough to overflow 64-bit if the arithmetic were fixed-width
    Rational big(1);
    for (int i = 0; i < 40; ++i) big *= Rational(1000000, 7);
    CHECK(denominator(big) > 0);

    const Rational neg = Rational(3) / Rational(-6);
    CHECK(denominator(neg) == 2);
    CHECK(numerator(neg) == -1);
}

TEST_CASE("rational parsing") {
    CHECK(rational_from_string("1/3") == Rational(1, 3));
    CHECK(rational_from_string("-3/4") == Rational(-3, 4));
    CHECK(rational_from_string("0.25") == Rational(1, 4));
    CHECK(rational_from_string("-1.5") == Rational(-3, 2));
    CHECK(rational_from_string("2.5e-3") == Rational(1, 400));
    CHECK(rational_from_string("1e3") == 1000);
    CHECK(rational_from_string("42") == 42);
    CHECK(rational_from_string(".5") == Rational(1, 2));
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1.2.3"), std::invalid_argument);
}

TEST_CASE("rendering") {
    CHECK(MultiPoly().to_string() == "0");
    CHECK((v(Symbol::a2).scaled(Rational(-5, 3)) * v(Symbol::q1)).to_string() == "-5/3*a2*q1");
    const MultiPoly two_terms = MultiPoly::variable(Symbol::a2, 2) - v(Symbol::a3);
    CHECK(two_terms.to_string() == "-a3 + a2^2");
}
