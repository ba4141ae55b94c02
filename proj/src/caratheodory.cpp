#include "bicoeff/caratheodory.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bicoeff {

namespace {
using C = std::complex<double>;
}

void SchwarzSpec::validate() const {
    if (std::abs(eta) > 1.0 + 1e-12) throw std::domain_error("schwarz eta must satisfy |eta| <= 1");
    if (kind == Kind::blaschke && std::abs(c) >= 1.0)
        throw std::domain_error("schwarz c must satisfy |c| < 1");
    if (kind == Kind::monomial && (power < 1 || power > 3))
        throw std::domain_error("schwarz monomial power must be 1..3");
}

std::string SchwarzSpec::describe() const {
    std::ostringstream out;
    if (kind == Kind::blaschke)
        out << "blaschke eta=(" << eta.real() << "," << eta.imag() << ") c=(" << c.real() << ","
            << c.imag() << ")";
    else
        out << "monomial eta=(" << eta.real() << "," << eta.imag() << ") power=" << power;
    return out.str();
}

ComplexSeries schwarz_series(const SchwarzSpec& spec, int order) {
    spec.validate();
    if (order < 1) throw structural_error("schwarz series needs order >= 1");

    if (spec.kind == SchwarzSpec::Kind::monomial) {
        ComplexSeries phi(order);
        if (spec.power <= order) {
            std::vector<C> c(static_cast<std::size_t>(order) + 1, C(0.0, 0.0));
            c[static_cast<std::size_t>(spec.power)] = spec.eta;
            return ComplexSeries(std::move(c));
        }
        return phi;
    }

    // eta * z * (z + c) / (1 + conj(c) z)
    std::vector<C> denom_c(static_cast<std::size_t>(order) + 1, C(0.0, 0.0));
    denom_c[0] = C(1.0, 0.0);
    if (order >= 1) denom_c[1] = std::conj(spec.c);
    const ComplexSeries reciprocal = pow_fractional(ComplexSeries(std::move(denom_c)), Rational(-1));

    std::vector<C> numer_c(static_cast<std::size_t>(order) + 1, C(0.0, 0.0));
    numer_c[0] = spec.c;
    if (order >= 1) numer_c[1] = C(1.0, 0.0);
    const ComplexSeries moebius = ComplexSeries(std::move(numer_c)) * reciprocal;

    return moebius.shifted_up().scaled(spec.eta);
}

CaratheodoryFunction caratheodory_from_schwarz(const SchwarzSpec& spec, int order) {
    const ComplexSeries phi = schwarz_series(spec, order);
    const ComplexSeries one = ComplexSeries::one(order);
    const ComplexSeries p = (one + phi) * pow_fractional(one - phi, Rational(-1));
    return CaratheodoryFunction{spec, p};
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    // splitmix64 of (seed, trial) -> engine seed
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return std::mt19937_64(x);
}

SchwarzSpec draw_schwarz(std::mt19937_64& rng) {
    const double pick = uniform_unit(rng);
    const double phase = 2.0 * std::numbers::pi * uniform_unit(rng);
    if (pick < 0.70) {
        const double eta_mag = uniform_unit(rng);
        const double c_mag = 0.85 * uniform_unit(rng);
        const double c_phase = 2.0 * std::numbers::pi * uniform_unit(rng);
        return SchwarzSpec::blaschke(std::polar(eta_mag, phase), std::polar(c_mag, c_phase));
    }
    const int power = std::min(1 + static_cast<int>(uniform_unit(rng) * 3.0), 3);
    // beyond 0.90: unit-modulus rotation, the extremal edge of the family
    const double magnitude = pick < 0.90 ? uniform_unit(rng) : 1.0;
    return SchwarzSpec::rotation(std::polar(magnitude, phase), power);
}

}  // namespace bicoeff
