#ifndef BICOEFF_CLASS_PARAMS_HPP
#define BICOEFF_CLASS_PARAMS_HPP

#include "bicoeff/rational.hpp"

#include <stdexcept>
#include <string>

namespace bicoeff {

/// Shape parameters of the defining operator
///   (1-lambda)(f/z)^mu + lambda f'(z)(f/z)^(mu-1) + xi delta z f''(z)
/// with xi = (2 lambda + mu)/(2 lambda + 1) always derived, never stored.
struct ClassParams {
    Rational lambda;
    Rational mu;
    Rational delta;

    static ClassParams checked(Rational lambda, Rational mu, Rational delta) {
        if (lambda < 1) throw std::domain_error("lambda must be >= 1");
        if (mu < 0) throw std::domain_error("mu must be >= 0");
        if (delta < 0) throw std::domain_error("delta must be >= 0");
        return ClassParams{std::move(lambda), std::move(mu), std::move(delta)};
    }

    Rational xi() const { return (2 * lambda + mu) / (2 * lambda + 1); }

    std::string describe() const {
        return "lambda=" + to_string(lambda) + " mu=" + to_string(mu) +
               " delta=" + to_string(delta);
    }
};

enum class FamilyKind { Arg, Re };

/// Which membership condition applies: the argument family bounds
/// |arg L[f]| by alpha*pi/2, the real-part family bounds Re L[f] below
/// by beta.
struct FamilySpec {
    FamilyKind kind;
    Rational order;  // alpha in (0, 1] or beta in [0, 1)

    static FamilySpec arg_family(Rational alpha) {
        if (!(alpha > 0 && alpha <= 1))
            throw std::domain_error("alpha must satisfy 0 < alpha <= 1");
        return FamilySpec{FamilyKind::Arg, std::move(alpha)};
    }

    static FamilySpec re_family(Rational beta) {
        if (!(beta >= 0 && beta < 1))
            throw std::domain_error("beta must satisfy 0 <= beta < 1");
        return FamilySpec{FamilyKind::Re, std::move(beta)};
    }

    std::string_view name() const { return kind == FamilyKind::Arg ? "alpha" : "beta"; }

    std::string describe() const {
        return std::string(name()) + "=" + to_string(order);
    }
};

}  // namespace bicoeff

#endif
