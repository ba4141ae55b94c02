#include "bicoeff/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace bicoeff {

namespace {

struct Derived {
    double S;   // lambda + mu + 2 xi delta
    double T;   // 2 lambda + mu
    double W;   // 2 lambda + mu + 6 xi delta
    double M;   // 1 + mu + 12 delta/(2 lambda + 1)
    double L2X; // lambda + 2 xi delta
    double xd;  // xi delta
};

Derived derive(const ClassParams& p) {
    const Rational xd = p.xi() * p.delta;
    Derived d;
    d.S = to_double(p.lambda + p.mu + 2 * xd);
    d.T = to_double(2 * p.lambda + p.mu);
    d.W = to_double(2 * p.lambda + p.mu + 6 * xd);
    d.M = to_double(1 + p.mu + 12 * p.delta / (2 * p.lambda + 1));
    d.L2X = to_double(p.lambda + 2 * xd);
    d.xd = to_double(xd);
    return d;
}

void require_alpha(const Rational& alpha) {
    if (!(alpha > 0 && alpha <= 1)) throw std::domain_error("alpha must satisfy 0 < alpha <= 1");
}

void require_beta(const Rational& beta) {
    if (!(beta >= 0 && beta < 1)) throw std::domain_error("beta must satisfy 0 <= beta < 1");
}

BranchedBound pick_min(double first, double second, BranchTag first_tag, BranchTag second_tag,
                       BranchTag tie_tag) {
    if (first < second) return {first, first_tag};
    if (second < first) return {second, second_tag};
    return {first, tie_tag};
}

}  // namespace

std::string_view branch_name(BranchTag tag) {
    switch (tag) {
        case BranchTag::theorem: return "theorem";
        case BranchTag::sqrt_form: return "sqrt-form";
        case BranchTag::linear_form: return "linear-form";
        case BranchTag::equal: return "equal";
        case BranchTag::mu_ge_1: return "mu-ge-1";
        case BranchTag::min_first: return "min-first";
        case BranchTag::min_second: return "min-second";
    }
    return "unknown";
}

Alpha2Bound bound_a2_alpha(const ClassParams& params, const Rational& alpha) {
    require_alpha(alpha);
    const Derived d = derive(params);
    const double a = to_double(alpha);
    const double radicand =
        d.S * d.S + a * (d.T - d.L2X * d.L2X + (12.0 - 4.0 * to_double(params.mu)) * d.xd);
    // Provably positive for lambda >= 1, mu, delta >= 0, 0 < alpha <= 1;
    // guards out-of-contract parameters.
    if (!(radicand > 0.0)) throw std::domain_error("a2 bound radicand is not positive");
    return {2.0 * a / std::sqrt(radicand), radicand};
}

double bound_a3_alpha(const ClassParams& params, const Rational& alpha) {
    require_alpha(alpha);
    const Derived d = derive(params);
    const double a = to_double(alpha);
    return 4.0 * a * a / (d.S * d.S) + 2.0 * a / d.W;
}

BranchedBound bound_a2_beta(const ClassParams& params, const Rational& beta) {
    require_beta(beta);
    const Derived d = derive(params);
    const double one_minus_b = to_double(1 - beta);
    const double sqrt_form = std::sqrt(4.0 * one_minus_b / (d.T * d.M));
    const double linear_form = 2.0 * one_minus_b / d.S;
    return pick_min(sqrt_form, linear_form, BranchTag::sqrt_form, BranchTag::linear_form,
                    BranchTag::equal);
}

BranchedBound bound_a3_beta(const ClassParams& params, const Rational& beta) {
    require_beta(beta);
    const Derived d = derive(params);
    const double one_minus_b = to_double(1 - beta);
    if (params.mu >= 1) return {2.0 * one_minus_b / d.W, BranchTag::mu_ge_1};
    const double first =
        one_minus_b * (4.0 + 24.0 * to_double(params.delta / (2 * params.lambda + 1))) /
        (d.W * d.M);
    const double second =
        4.0 * one_minus_b * one_minus_b / (d.S * d.S) + 2.0 * one_minus_b / d.W;
    return pick_min(first, second, BranchTag::min_first, BranchTag::min_second,
                    BranchTag::min_first);
}

BoundReport evaluate_bounds(const ClassParams& params, const FamilySpec& family) {
    BoundReport report{family, params, 0.0, 0.0, "", 0.0};
    if (family.kind == FamilyKind::Arg) {
        const Alpha2Bound a2 = bound_a2_alpha(params, family.order);
        report.a2_bound = a2.value;
        report.radicand = a2.radicand;
        report.a3_bound = bound_a3_alpha(params, family.order);
        report.branch_taken = "theorem";
    } else {
        const BranchedBound a2 = bound_a2_beta(params, family.order);
        const BranchedBound a3 = bound_a3_beta(params, family.order);
        report.a2_bound = a2.value;
        report.a3_bound = a3.value;
        report.branch_taken = "a2:" + std::string(branch_name(a2.branch)) +
                              "|a3:" + std::string(branch_name(a3.branch));
        const Derived d = derive(params);
        report.radicand = 4.0 * to_double(1 - family.order) / (d.T * d.M);
    }
    return report;
}

std::string_view corollary_name(CorollaryId id) {
    switch (id) {
        case CorollaryId::alpha_srivastava: return "alpha-srivastava";
        case CorollaryId::alpha_frasin: return "alpha-frasin";
        case CorollaryId::alpha_caglar: return "alpha-caglar";
        case CorollaryId::alpha_strongly_bistarlike: return "alpha-strongly-bistarlike";
        case CorollaryId::beta_srivastava: return "beta-srivastava";
        case CorollaryId::beta_frasin: return "beta-frasin";
        case CorollaryId::beta_caglar: return "beta-caglar";
        case CorollaryId::beta_bistarlike: return "beta-bistarlike";
    }
    return "unknown";
}

CorollaryId corollary_from_name(std::string_view name) {
    for (CorollaryId id :
         {CorollaryId::alpha_srivastava, CorollaryId::alpha_frasin, CorollaryId::alpha_caglar,
          CorollaryId::alpha_strongly_bistarlike, CorollaryId::beta_srivastava,
          CorollaryId::beta_frasin, CorollaryId::beta_caglar, CorollaryId::beta_bistarlike}) {
        if (corollary_name(id) == name) return id;
    }
    throw std::domain_error("unknown corollary id: '" + std::string(name) + "'");
}

bool corollary_is_alpha(CorollaryId id) {
    switch (id) {
        case CorollaryId::alpha_srivastava:
        case CorollaryId::alpha_frasin:
        case CorollaryId::alpha_caglar:
        case CorollaryId::alpha_strongly_bistarlike: return true;
        default: return false;
    }
}

ClassParams corollary_params(CorollaryId id, const Rational& lambda, const Rational& mu) {
    switch (id) {
        case CorollaryId::alpha_srivastava:
        case CorollaryId::beta_srivastava:
            return ClassParams::checked(1, 1, 0);
        case CorollaryId::alpha_frasin:
        case CorollaryId::beta_frasin:
            return ClassParams::checked(lambda, 1, 0);
        case CorollaryId::alpha_caglar:
        case CorollaryId::beta_caglar:
            return ClassParams::checked(lambda, mu, 0);
        case CorollaryId::alpha_strongly_bistarlike:
        case CorollaryId::beta_bistarlike:
            return ClassParams::checked(1, 0, 0);
    }
    throw std::domain_error("unknown corollary id");
}

CorollaryValues corollary_formula(CorollaryId id, const Rational& order_param,
                                  const Rational& lambda, const Rational& mu) {
    const double l = to_double(lambda);
    const double m = to_double(mu);
    switch (id) {
        case CorollaryId::alpha_srivastava: {
            require_alpha(order_param);
            const double a = to_double(order_param);
            return {a * std::sqrt(2.0 / (a + 2.0)), a * (3.0 * a + 2.0) / 3.0};
        }
        case CorollaryId::alpha_frasin: {
            require_alpha(order_param);
            const double a = to_double(order_param);
            return {2.0 * a / std::sqrt((l + 1.0) * (l + 1.0) + a * (1.0 + 2.0 * l - l * l)),
                    4.0 * a * a / ((l + 1.0) * (l + 1.0)) + 2.0 * a / (2.0 * l + 1.0)};
        }
        case CorollaryId::alpha_caglar: {
            require_alpha(order_param);
            const double a = to_double(order_param);
            return {2.0 * a / std::sqrt((l + m) * (l + m) + a * (2.0 * l + m - l * l)),
                    4.0 * a * a / ((l + m) * (l + m)) + 2.0 * a / (2.0 * l + m)};
        }
        case CorollaryId::alpha_strongly_bistarlike: {
            require_alpha(order_param);
            const double a = to_double(order_param);
            return {2.0 * a / std::sqrt(1.0 + a), a * (4.0 * a + 1.0)};
        }
        case CorollaryId::beta_srivastava: {
            require_beta(order_param);
            const double b = to_double(order_param);
            const double a2 = order_param < Rational(1, 3)
                                  ? std::sqrt(2.0 * (1.0 - b) / 3.0)
                                  : 1.0 - b;
            return {a2, 2.0 * (1.0 - b) / 3.0};
        }
        case CorollaryId::beta_frasin: {
            require_beta(order_param);
            const double b = to_double(order_param);
            return {std::min(std::sqrt(2.0 * (1.0 - b) / (2.0 * l + 1.0)),
                             2.0 * (1.0 - b) / (l + 1.0)),
                    2.0 * (1.0 - b) / (2.0 * l + 1.0)};
        }
        case CorollaryId::beta_caglar: {
            require_beta(order_param);
            const double b = to_double(order_param);
            const double a2 = std::min(std::sqrt(4.0 * (1.0 - b) / ((2.0 * l + m) * (m + 1.0))),
                                       2.0 * (1.0 - b) / (l + m));
            double a3;
            if (mu >= 1) {
                a3 = 2.0 * (1.0 - b) / (2.0 * l + m);
            } else {
                a3 = std::min(4.0 * (1.0 - b) / ((2.0 * l + m) * (m + 1.0)),
                              4.0 * (1.0 - b) * (1.0 - b) / ((l + m) * (l + m)) +
                                  2.0 * (1.0 - b) / (2.0 * l + m));
            }
            return {a2, a3};
        }
        case CorollaryId::beta_bistarlike: {
            require_beta(order_param);
            const double b = to_double(order_param);
            const double a3 = order_param < Rational(3, 4) ? 2.0 * (1.0 - b)
                                                           : (1.0 - b) * (5.0 - 4.0 * b);
            return {std::sqrt(2.0 * (1.0 - b)), a3};
        }
    }
    throw std::domain_error("unknown corollary id");
}

}  // namespace bicoeff
