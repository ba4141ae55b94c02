#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicoeff/series.hpp"

#include <complex>
#include <random>

using namespace bicoeff;
using C = std::complex<double>;

namespace {

RationalSeries rs(std::vector<long> ints) {
    std::vector<Rational> c;
    for (long v : ints) c.emplace_back(v);
    return RationalSeries(std::move(c));
}

MultiPoly sym(Symbol s) { return MultiPoly::variable(s); }

Rational random_rational(std::mt19937_64& rng, long lo_num, long hi_num, long max_den) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(lo_num * d, hi_num * d);
    return Rational(num(rng), d);
}

ComplexSeries random_unit_series(std::mt19937_64& rng, int order) {
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    std::vector<C> c(static_cast<std::size_t>(order) + 1);
    c[0] = C(1.0, 0.0);
    for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = C(u(rng), u(rng));
    return ComplexSeries(std::move(c));
}

}  // namespace

TEST_CASE("cauchy product") {
    CHECK(series_equal(rs({1, 1, 0}) * rs({1, -1, 0}), rs({1, 0, -1})));
    CHECK(series_equal(rs({0, 1, 1, 0}) * rs({0, 1, 1, 0}), rs({0, 0, 1, 2})));

    // symbolic: (1 + a2 z)(1 + a3 z^2) = 1 + a2 z + a3 z^2 + a2 a3 z^3
    SymbolicSeries lhs({MultiPoly(Rational(1)), sym(Symbol::a2), MultiPoly(), MultiPoly()});
    SymbolicSeries rhs({MultiPoly(Rational(1)), MultiPoly(), sym(Symbol::a3), MultiPoly()});
    SymbolicSeries expected(
        {MultiPoly(Rational(1)), sym(Symbol::a2), sym(Symbol::a3), sym(Symbol::a2) * sym(Symbol::a3)});
    CHECK(series_equal(lhs * rhs, expected));

    CHECK_THROWS_AS(rs({1, 1}) * rs({1, 1, 1}), structural_error);
}

TEST_CASE("product is commutative and associative under truncation") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<Rational> a, b, c;
        for (int n = 0; n <= 6; ++n) {
            a.push_back(random_rational(rng, -3, 3, 5));
            b.push_back(random_rational(rng, -3, 3, 5));
            c.push_back(random_rational(rng, -3, 3, 5));
        }
        RationalSeries sa(a), sb(b), sc(c);
        CHECK(series_equal(sa * sb, sb * sa));
        CHECK(series_equal((sa * sb) * sc, sa * (sb * sc)));
    }
}

TEST_CASE("derivative") {
    auto d = derivative(rs({0, 1, 1, 1}));
    CHECK(d.valid_order() == 2);
    CHECK(d.coeff(0) == 1);
    CHECK(d.coeff(1) == 2);
    CHECK(d.coeff(2) == 3);

    auto zero = derivative(rs({1, 0, 0}));
    for (int n = 0; n <= zero.valid_order(); ++n) CHECK(zero.coeff(n) == 0);

    SymbolicSeries f({MultiPoly(), MultiPoly(Rational(1)), sym(Symbol::a2)});
    auto df = derivative(f);
    CHECK(df.coeff(0) == MultiPoly(Rational(1)));
    CHECK(df.coeff(1) == sym(Symbol::a2).scaled(2));
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<Rational> a, b;
        for (int n = 0; n <= 6; ++n) {
            a.push_back(random_rational(rng, -3, 3, 4));
            b.push_back(random_rational(rng, -3, 3, 4));
        }
        RationalSeries sa(a), sb(b);
        const Rational k = random_rational(rng, -2, 2, 3);
        CHECK(series_equal(derivative(sa + sb), derivative(sa) + derivative(sb)));
        CHECK(series_equal(derivative(scale_rational(sa, k)), scale_rational(derivative(sa), k)));
        CHECK(series_equal(derivative(sa * sb), derivative(sa) * sb + sa * derivative(sb)));
    }
}

TEST_CASE("compose") {
    // outer(w) = w + w^2 substituted with the identity
    CHECK(series_equal(compose(rs({0, 1, 1}), RationalSeries::identity(2)), rs({0, 1, 1})));

    // w^2 at z + z^2: z^2 + 2 z^3 + z^4
    CHECK(series_equal(compose(rs({0, 0, 1, 0, 0}), rs({0, 1, 1, 0, 0})), rs({0, 0, 1, 2, 1})));

    CHECK_THROWS_AS(compose(rs({0, 1, 0}), rs({1, 1, 0})), std::domain_error);
}

TEST_CASE("reversion matches the two-sided inverse and the closed-form pair") {
    // z/(1-z) truncates to z + z^2 + z^3 + z^4 and its inverse w/(1+w)
    // truncates to w - w^2 + w^3 - w^4.
    auto f = NormalizedSeries<Rational>(rs({0, 1, 1, 1, 1}));
    auto g = reversion(f);
    CHECK(g.series().coeffs() == rs({0, 1, -1, 1, -1}).coeffs());

    CHECK(series_equal(compose(g.series(), f.series()), RationalSeries::identity(4)));
    CHECK(series_equal(compose(f.series(), g.series()), RationalSeries::identity(4)));

    auto id = NormalizedSeries<Rational>(rs({0, 1}));
    CHECK(reversion(id).series().coeffs() == rs({0, 1}).coeffs());
}

TEST_CASE("reversion tail coefficients in closed form") {
    const MultiPoly a2 = sym(Symbol::a2), a3 = sym(Symbol::a3), a4 = sym(Symbol::a4);
    auto f = NormalizedSeries<MultiPoly>::from_tail({a2, a3, a4}, 4);
    auto g = reversion(f);

    CHECK(g.coeff(2) == -a2);
    CHECK(g.coeff(3) == a2 * a2 * MultiPoly(Rational(2)) - a3);
    CHECK(g.coeff(4) ==
          -(a2 * a2 * a2 * MultiPoly(Rational(5)) - a2 * a3 * MultiPoly(Rational(5)) + a4));

    CHECK(series_equal(compose(g.series(), f.series()), SymbolicSeries::identity(4)));
    CHECK(series_equal(compose(f.series(), g.series()), SymbolicSeries::identity(4)));
}

TEST_CASE("reversion round trip at random rational coefficients") {
    std::mt19937_64 rng(47);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Rational> tail;
        for (int n = 0; n < 5; ++n) tail.push_back(random_rational(rng, -2, 2, 6));
        auto f = NormalizedSeries<Rational>::from_tail(tail, 6);
        auto g = reversion(f);
        CHECK(series_equal(compose(g.series(), f.series()), RationalSeries::identity(6)));
        CHECK(series_equal(compose(f.series(), g.series()), RationalSeries::identity(6)));
    }
}

TEST_CASE("fractional power structure on a generic kernel head") {
    const MultiPoly p1 = sym(Symbol::p1), p2 = sym(Symbol::p2);
    SymbolicSeries p({MultiPoly(Rational(1)), p1, p2});

    const Rational alpha(2, 5);
    auto powered = pow_fractional(p, alpha);
    CHECK(powered.coeff(0) == MultiPoly(Rational(1)));
    CHECK(powered.coeff(1) == p1.scaled(alpha));
    // alpha p2 + alpha(alpha-1)/2 p1^2
    CHECK(powered.coeff(2) == p2.scaled(alpha) + (p1 * p1).scaled(alpha * (alpha - 1) / 2));
}

TEST_CASE("fractional power special cases") {
    CHECK(series_equal(pow_fractional(rs({1, 1}), Rational(1)), rs({1, 1})));

    auto root = pow_fractional(rs({1, 2, 1}), Rational(1, 2));
    CHECK(series_equal(root, rs({1, 1, 0})));
    CHECK(series_equal(root * root, rs({1, 2, 1})));

    CHECK_THROWS_AS(pow_fractional(rs({2, 1}), Rational(1, 2)), std::domain_error);
}

TEST_CASE("fractional power exponent additivity") {
    const MultiPoly p1 = sym(Symbol::p1), p2 = sym(Symbol::p2);
    SymbolicSeries p({MultiPoly(Rational(1)), p1, p2, MultiPoly()});
    const Rational e1(1, 3), e2(-3, 7);
    CHECK(series_equal(pow_fractional(p, e1 + e2),
                       pow_fractional(p, e1) * pow_fractional(p, e2)));

    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 20; ++rep) {
        auto s = random_unit_series(rng, 8);
        auto both = pow_fractional(s, e1) * pow_fractional(s, e2);
        CHECK(series_equal(pow_fractional(s, e1 + e2), both, 1e-12));
    }
}

TEST_CASE("exp and log expansions") {
    auto lg = log_series(rs({1, 1, 0, 0}));
    CHECK(lg.coeff(1) == 1);
    CHECK(lg.coeff(2) == Rational(-1, 2));
    CHECK(lg.coeff(3) == Rational(1, 3));

    auto ex = exp_series(RationalSeries(0));
    CHECK(ex.coeff(0) == 1);

    CHECK_THROWS_AS(log_series(rs({0, 1})), std::domain_error);
    CHECK_THROWS_AS(exp_series(rs({1, 1})), std::domain_error);
}

TEST_CASE("fractional power agrees with exp(e log s) numerically") {
    std::mt19937_64 rng(59);
    const Rational e(3, 4);
    for (int rep = 0; rep < 30; ++rep) {
        auto s = random_unit_series(rng, 10);
        auto direct = pow_fractional(s, e);
        auto via_log = exp_series(scale_rational(log_series(s), e));
        CHECK(series_equal(direct, via_log, 1e-12));
    }
}

TEST_CASE("point evaluation") {
    ComplexSeries linear({C(1, 0), C(1, 0)});
    CHECK(eval_at(linear, C(0.5, 0)) == C(1.5, 0));
    CHECK(eval_at(linear, C(0, 0)) == C(1, 0));

    std::vector<C> geo(65, C(1, 0));
    ComplexSeries geometric(std::move(geo));
    CHECK(std::abs(eval_at(geometric, C(0.5, 0)) - C(2.0, 0)) <= 1e-12);

    CHECK_THROWS_AS(eval_at(linear, C(1.0, 0)), std::domain_error);
}

TEST_CASE("validity bookkeeping") {
    auto f = rs({0, 1, 1, 1});
    CHECK(f.valid_order() == 3);
    auto d = derivative(f);
    CHECK(d.valid_order() == 2);
    auto dd = derivative(d);
    CHECK(dd.valid_order() == 1);
    CHECK((d * f).valid_order() == 2);
    CHECK(f.shifted_down().valid_order() == 2);
    CHECK(dd.shifted_up().valid_order() == 2);
    CHECK_THROWS_AS(series_equal(d, f, 0.0, 3), structural_error);
}

TEST_CASE("normalization is enforced") {
    CHECK_THROWS_AS(NormalizedSeries<Rational>(rs({1, 1})), std::domain_error);
    CHECK_THROWS_AS(NormalizedSeries<Rational>(rs({0, 2})), std::domain_error);
    CHECK_NOTHROW(NormalizedSeries<Rational>(rs({0, 1, 7})));
}
