#ifndef BICOEFF_SERIES_HPP
#define BICOEFF_SERIES_HPP

#include "bicoeff/multipoly.hpp"
#include "bicoeff/rational.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bicoeff {

/// Structural misuse: mixed truncation orders, untrusted coefficients.
class structural_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Coefficient-ring contract. Exact rings compare exactly (tolerance 0);
/// the complex ring declares a comparison tolerance.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& x) { return x == 0; }
    static bool equal(const Rational& x, const Rational& y, double /*tol*/ = 0.0) {
        return x == y;
    }
    static constexpr double default_tolerance = 0.0;
};

template <>
struct ring_traits<MultiPoly> {
    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return MultiPoly(Rational(1)); }
    static MultiPoly from_rational(const Rational& q) { return MultiPoly(q); }
    static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
    static bool equal(const MultiPoly& x, const MultiPoly& y, double /*tol*/ = 0.0) {
        return x == y;
    }
    static constexpr double default_tolerance = 0.0;
};

template <>
struct ring_traits<std::complex<double>> {
    using C = std::complex<double>;
    static C zero() { return C(0.0, 0.0); }
    static C one() { return C(1.0, 0.0); }
    static C from_rational(const Rational& q) { return C(to_double(q), 0.0); }
    static bool is_zero(const C& x) { return x == C(0.0, 0.0); }
    static bool equal(const C& x, const C& y, double tol = default_tolerance) {
        return std::abs(x - y) <= tol;
    }
    static constexpr double default_tolerance = 1e-12;
};

/// Formal power series truncated at a fixed, explicit order N (inclusive).
///
/// Always stores exactly N+1 coefficients. valid_order() tracks how many of
/// them are trustworthy: differentiating loses the top coefficient, dividing
/// by z loses one more, and binary operations trust only what both operands
/// trust. Coefficients above valid_order() are deterministic arithmetic
/// artifacts, never series data.
///
/// Values are immutable after construction; every operation returns a new
/// series. Mixing truncation orders is a structural_error, not a silent
/// re-truncation.
template <class R>
class TruncatedSeries {
  public:
    using traits = ring_traits<R>;

    explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1, traits::zero()), valid_(order) {}

    explicit TruncatedSeries(std::vector<R> coeffs)
        : coeffs_(std::move(coeffs)), valid_(static_cast<int>(coeffs_.size()) - 1) {
        if (coeffs_.empty()) throw structural_error("series needs at least the constant term");
    }

    TruncatedSeries(std::vector<R> coeffs, int valid) : coeffs_(std::move(coeffs)), valid_(valid) {
        if (coeffs_.empty()) throw structural_error("series needs at least the constant term");
        if (valid_ > order()) throw structural_error("valid order exceeds truncation order");
    }

    static TruncatedSeries constant(const R& value, int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = value;
        return s;
    }
    static TruncatedSeries one(int order) { return constant(traits::one(), order); }

    /// The series z (requires order >= 1).
    static TruncatedSeries identity(int order) {
        TruncatedSeries s(order);
        if (order < 1) throw structural_error("identity series needs order >= 1");
        s.coeffs_[1] = traits::one();
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    int valid_order() const { return valid_; }
    bool fully_valid() const { return valid_ == order(); }

    const R& coeff(int n) const {
        if (n < 0 || n > order()) throw structural_error("coefficient index out of range");
        return coeffs_[static_cast<std::size_t>(n)];
    }
    const std::vector<R>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& other) const {
        require_same_order(other);
        std::vector<R> c(coeffs_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + other.coeffs_[i];
        return TruncatedSeries(std::move(c), std::min(valid_, other.valid_));
    }

    TruncatedSeries operator-(const TruncatedSeries& other) const {
        require_same_order(other);
        std::vector<R> c(coeffs_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] - other.coeffs_[i];
        return TruncatedSeries(std::move(c), std::min(valid_, other.valid_));
    }

    TruncatedSeries operator-() const {
        std::vector<R> c(coeffs_);
        for (auto& x : c) x = traits::zero() - x;
        return TruncatedSeries(std::move(c), valid_);
    }

    /// Cauchy product truncated at the common order.
    TruncatedSeries operator*(const TruncatedSeries& other) const {
        require_same_order(other);
        const int N = order();
        std::vector<R> c(static_cast<std::size_t>(N) + 1, traits::zero());
        for (int i = 0; i <= N; ++i) {
            if (traits::is_zero(coeffs_[i])) continue;
            for (int j = 0; i + j <= N; ++j)
                c[i + j] = c[i + j] + coeffs_[i] * other.coeffs_[j];
        }
        return TruncatedSeries(std::move(c), std::min(valid_, other.valid_));
    }

    TruncatedSeries scaled(const R& factor) const {
        std::vector<R> c(coeffs_);
        for (auto& x : c) x = x * factor;
        return TruncatedSeries(std::move(c), valid_);
    }

    /// Multiplication by z; the old top coefficient falls off the truncation.
    TruncatedSeries shifted_up() const {
        std::vector<R> c(coeffs_.size(), traits::zero());
        for (std::size_t i = 1; i < c.size(); ++i) c[i] = coeffs_[i - 1];
        return TruncatedSeries(std::move(c), std::min(valid_ + 1, order()));
    }

    /// Division by z; requires a vanishing constant term. The top slot is not
    /// recoverable, so the result is valid one order lower.
    TruncatedSeries shifted_down() const {
        if (!traits::is_zero(coeffs_[0]))
            throw std::domain_error("shifted_down: constant term must be zero");
        std::vector<R> c(coeffs_.size(), traits::zero());
        for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] = coeffs_[i + 1];
        return TruncatedSeries(std::move(c), valid_ - 1);
    }

  private:
    static int check_order(int order) {
        if (order < 0) throw structural_error("truncation order must be >= 0");
        return order;
    }
    void require_same_order(const TruncatedSeries& other) const {
        if (order() != other.order())
            throw structural_error("mixed truncation orders: " + std::to_string(order()) +
                                   " vs " + std::to_string(other.order()));
    }

    std::vector<R> coeffs_;
    int valid_;
};

/// Term-wise n*c_n shift. The top coefficient is lost; the result keeps the
/// same storage order with validity reduced by one instead of fabricating a
/// top term.
template <class R>
TruncatedSeries<R> derivative(const TruncatedSeries<R>& s) {
    using traits = ring_traits<R>;
    const int N = s.order();
    if (N < 1) throw structural_error("derivative needs order >= 1");
    std::vector<R> c(static_cast<std::size_t>(N) + 1, traits::zero());
    for (int n = 1; n <= N; ++n)
        c[n - 1] = s.coeff(n) * traits::from_rational(Rational(n));
    return TruncatedSeries<R>(std::move(c), s.valid_order() - 1);
}

/// Horner-style substitution outer(inner), truncated at the common order.
/// inner must have zero constant term, otherwise the substitution would need
/// infinitely many terms of outer.
template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
    using traits = ring_traits<R>;
    if (outer.order() != inner.order())
        throw structural_error("compose: mixed truncation orders");
    if (!traits::is_zero(inner.coeff(0)))
        throw std::domain_error("compose: inner constant term must be zero");
    const int N = outer.order();
    TruncatedSeries<R> acc = TruncatedSeries<R>::constant(outer.coeff(N), N);
    for (int k = N - 1; k >= 0; --k)
        acc = acc * inner + TruncatedSeries<R>::constant(outer.coeff(k), N);
    return TruncatedSeries<R>(acc.coeffs(), std::min(outer.valid_order(), inner.valid_order()));
}

/// Binomial series (1+u)^e with u = s - 1, truncated at the storage order.
/// Requires constant term exactly 1 (principal branch anchored at 1).
/// Binomial coefficients are computed exactly in rationals whatever the ring.
template <class R>
TruncatedSeries<R> pow_fractional(const TruncatedSeries<R>& s, const Rational& exponent) {
    using traits = ring_traits<R>;
    if (!traits::equal(s.coeff(0), traits::one(), 0.0))
        throw std::domain_error("pow_fractional: constant term must be 1");
    const int N = s.order();
    TruncatedSeries<R> u = s - TruncatedSeries<R>::one(N);
    TruncatedSeries<R> result(N);
    TruncatedSeries<R> upow = TruncatedSeries<R>::one(N);
    Rational binom = 1;  // C(e, 0)
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            binom *= (exponent - Rational(k - 1));
            binom /= Rational(k);
            upow = upow * u;
        }
        if (binom != 0) result = result + upow.scaled(traits::from_rational(binom));
    }
    return TruncatedSeries<R>(result.coeffs(), std::min(s.valid_order(), N));
}

/// Scales a series by an exact rational, mapped into the coefficient ring.
template <class R>
TruncatedSeries<R> scale_rational(const TruncatedSeries<R>& s, const Rational& q) {
    return s.scaled(ring_traits<R>::from_rational(q));
}

/// exp of a series with zero constant term.
template <class R>
TruncatedSeries<R> exp_series(const TruncatedSeries<R>& s) {
    using traits = ring_traits<R>;
    if (!traits::is_zero(s.coeff(0)))
        throw std::domain_error("exp_series: constant term must be zero");
    const int N = s.order();
    TruncatedSeries<R> result = TruncatedSeries<R>::one(N);
    TruncatedSeries<R> upow = TruncatedSeries<R>::one(N);
    Rational inv_factorial = 1;
    for (int k = 1; k <= N; ++k) {
        upow = upow * s;
        inv_factorial /= Rational(k);
        result = result + upow.scaled(traits::from_rational(inv_factorial));
    }
    return TruncatedSeries<R>(result.coeffs(), s.valid_order());
}

/// log of a series with constant term 1 (Mercator expansion of log(1+u)).
template <class R>
TruncatedSeries<R> log_series(const TruncatedSeries<R>& s) {
    using traits = ring_traits<R>;
    if (!traits::equal(s.coeff(0), traits::one(), 0.0))
        throw std::domain_error("log_series: constant term must be 1");
    const int N = s.order();
    TruncatedSeries<R> u = s - TruncatedSeries<R>::one(N);
    TruncatedSeries<R> result(N);
    TruncatedSeries<R> upow = TruncatedSeries<R>::one(N);
    for (int k = 1; k <= N; ++k) {
        upow = upow * u;
        Rational c = (k % 2 == 1) ? Rational(1, k) : Rational(-1, k);
        result = result + upow.scaled(traits::from_rational(c));
    }
    return TruncatedSeries<R>(result.coeffs(), s.valid_order());
}

/// Coefficient-wise comparison up to `upto` (default: the shared valid order).
template <class R>
bool series_equal(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b,
                  double tol = ring_traits<R>::default_tolerance, int upto = -1) {
    if (a.order() != b.order()) throw structural_error("series_equal: mixed truncation orders");
    if (upto < 0) upto = std::min(a.valid_order(), b.valid_order());
    if (upto > std::min(a.valid_order(), b.valid_order()))
        throw structural_error("series_equal: comparison beyond trusted coefficients");
    for (int n = 0; n <= upto; ++n)
        if (!ring_traits<R>::equal(a.coeff(n), b.coeff(n), tol)) return false;
    return true;
}

/// Series normalized so that c0 = 0 and c1 = 1 (the class-A normalization).
template <class R>
class NormalizedSeries {
  public:
    using traits = ring_traits<R>;

    explicit NormalizedSeries(TruncatedSeries<R> s) : series_(std::move(s)) {
        if (series_.order() < 1)
            throw std::domain_error("normalized series needs order >= 1");
        if (!traits::is_zero(series_.coeff(0)) ||
            !traits::equal(series_.coeff(1), traits::one(), 0.0))
            throw std::domain_error("normalized series requires c0 = 0 and c1 = 1");
    }

    /// Builds z + tail[0]*z^2 + tail[1]*z^3 + ... at the given order.
    static NormalizedSeries from_tail(const std::vector<R>& tail, int order) {
        if (order < 1) throw std::domain_error("normalized series needs order >= 1");
        if (tail.size() + 1 > static_cast<std::size_t>(order))
            throw structural_error("tail does not fit the truncation order");
        std::vector<R> c(static_cast<std::size_t>(order) + 1, traits::zero());
        c[1] = traits::one();
        for (std::size_t i = 0; i < tail.size(); ++i) c[i + 2] = tail[i];
        return NormalizedSeries(TruncatedSeries<R>(std::move(c)));
    }

    const TruncatedSeries<R>& series() const { return series_; }
    int order() const { return series_.order(); }
    const R& coeff(int n) const { return series_.coeff(n); }

  private:
    TruncatedSeries<R> series_;
};

/// Compositional inverse of a normalized series: the unique normalized g with
/// compose(g, f) = z up to the truncation order. Solved triangularly; the
/// normalization makes every pivot 1, so no ring division is needed.
template <class R>
NormalizedSeries<R> reversion(const NormalizedSeries<R>& f) {
    using traits = ring_traits<R>;
    const int N = f.order();
    if (!f.series().fully_valid())
        throw structural_error("reversion requires a fully trusted series");

    // fpow[k] = f^k for k = 1..N; [z^n] f^n = 1 because c1 = 1.
    std::vector<TruncatedSeries<R>> fpow;
    fpow.reserve(static_cast<std::size_t>(N));
    fpow.push_back(f.series());
    for (int k = 2; k <= N; ++k) fpow.push_back(fpow.back() * f.series());

    std::vector<R> b(static_cast<std::size_t>(N) + 1, traits::zero());
    b[1] = traits::one();
    for (int n = 2; n <= N; ++n) {
        R acc = traits::zero();
        for (int k = 1; k < n; ++k)
            acc = acc + b[static_cast<std::size_t>(k)] * fpow[static_cast<std::size_t>(k - 1)].coeff(n);
        b[static_cast<std::size_t>(n)] = traits::zero() - acc;
    }
    return NormalizedSeries<R>(TruncatedSeries<R>(std::move(b)));
}

/// Horner evaluation of the trusted part of a complex series at |z| < 1.
inline std::complex<double> eval_at(const TruncatedSeries<std::complex<double>>& s,
                                    std::complex<double> z) {
    if (std::abs(z) >= 1.0)
        throw std::domain_error("eval_at: point must satisfy |z| < 1");
    const int top = s.valid_order();
    std::complex<double> acc(0.0, 0.0);
    for (int n = top; n >= 0; --n) acc = acc * z + s.coeff(n);
    return acc;
}

using ComplexSeries = TruncatedSeries<std::complex<double>>;
using RationalSeries = TruncatedSeries<Rational>;
using SymbolicSeries = TruncatedSeries<MultiPoly>;

}  // namespace bicoeff

#endif
