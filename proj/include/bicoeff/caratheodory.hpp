#ifndef BICOEFF_CARATHEODORY_HPP
#define BICOEFF_CARATHEODORY_HPP

#include "bicoeff/series.hpp"

#include <complex>
#include <random>
#include <string>

namespace bicoeff {

/// A sampled Schwarz function phi (phi(0) = 0, |phi| < 1 on the disk).
/// Two constructions:
///   blaschke:  phi(z) = eta * z * (z + c) / (1 + conj(c) z),   |eta| <= 1, |c| < 1
///   monomial:  phi(z) = eta * z^power,                          |eta| <= 1, power 1..3
/// Both are Schwarz by construction, so (1 + phi)/(1 - phi) lands in the
/// positive-real-part class.
struct SchwarzSpec {
    enum class Kind { blaschke, monomial };

    Kind kind = Kind::monomial;
    std::complex<double> eta{0.0, 0.0};
    std::complex<double> c{0.0, 0.0};  // blaschke only
    int power = 1;                     // monomial only

    static SchwarzSpec zero() { return SchwarzSpec{}; }
    static SchwarzSpec rotation(std::complex<double> eta, int power = 1) {
        SchwarzSpec s;
        s.kind = Kind::monomial;
        s.eta = eta;
        s.power = power;
        return s;
    }
    static SchwarzSpec blaschke(std::complex<double> eta, std::complex<double> c) {
        SchwarzSpec s;
        s.kind = Kind::blaschke;
        s.eta = eta;
        s.c = c;
        return s;
    }

    void validate() const;
    std::string describe() const;
};

/// Truncated expansion of phi.
ComplexSeries schwarz_series(const SchwarzSpec& spec, int order);

/// A positive-real-part function built as p = (1 + phi)/(1 - phi).
/// Constant term exactly 1; coefficients obey |c_k| <= 2.
struct CaratheodoryFunction {
    SchwarzSpec schwarz;
    ComplexSeries series;

    std::complex<double> coefficient(int k) const { return series.coeff(k); }
};

CaratheodoryFunction caratheodory_from_schwarz(const SchwarzSpec& spec, int order);

/// Uniform double in [0, 1) from the raw engine (portable across standard
/// libraries, unlike std::uniform_real_distribution).
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Engine for a (seed, trial) pair: splitmix64-mixed so streams are
/// independent and results do not depend on trial execution order.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

/// Random Schwarz spec: mostly Blaschke-type with interior parameters, a
/// share of monomial rotations, and occasional unit-modulus (extremal) draws.
SchwarzSpec draw_schwarz(std::mt19937_64& rng);

}  // namespace bicoeff

#endif
