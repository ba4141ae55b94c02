#ifndef BICOEFF_MULTIPOLY_HPP
#define BICOEFF_MULTIPOLY_HPP

#include "bicoeff/rational.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <string>

namespace bicoeff {

/// The closed symbol set for derivation checking: the first three unknown
/// series coefficients and the first two coefficients of each of the two
/// positive-real-part functions in play.
enum class Symbol : int { a2 = 0, a3, a4, p1, p2, q1, q2 };

inline constexpr std::size_t kSymbolCount = 7;

std::string_view symbol_name(Symbol s);

/// Dense exponent vector, one slot per symbol.
using ExpVec = std::array<unsigned, kSymbolCount>;

/// Multivariate polynomial over exact rationals in the fixed symbol set.
/// Canonical form: no stored zero coefficients, so equality is map equality
/// and is_zero() is an emptiness test.
class MultiPoly {
  public:
    MultiPoly() = default;  // zero polynomial
    explicit MultiPoly(Rational constant);

    static MultiPoly constant(Rational c) { return MultiPoly(std::move(c)); }
    static MultiPoly variable(Symbol s, unsigned power = 1);

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const MultiPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const MultiPoly& other) const { return !(*this == other); }

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly operator-() const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);

    MultiPoly scaled(const Rational& factor) const;
    MultiPoly pow(unsigned exponent) const;

    /// Replaces each bound symbol by its polynomial; unbound symbols survive.
    MultiPoly substituted(const std::map<Symbol, MultiPoly>& bindings) const;

    /// Full evaluation. Throws std::domain_error if the polynomial uses a
    /// symbol with no binding.
    Rational evaluate(const std::map<Symbol, Rational>& values) const;
    std::complex<double> evaluate_complex(const std::map<Symbol, std::complex<double>>& values) const;

    unsigned total_degree() const;
    const std::map<ExpVec, Rational>& terms() const { return terms_; }

    std::string to_string() const;

  private:
    void add_term(const ExpVec& exps, const Rational& coeff);

    std::map<ExpVec, Rational> terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p.scaled(c); }

}  // namespace bicoeff

#endif
