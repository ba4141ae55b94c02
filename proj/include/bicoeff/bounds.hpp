#ifndef BICOEFF_BOUNDS_HPP
#define BICOEFF_BOUNDS_HPP

#include "bicoeff/class_params.hpp"

#include <string>
#include <string_view>

namespace bicoeff {

enum class BranchTag { theorem, sqrt_form, linear_form, equal, mu_ge_1, min_first, min_second };

std::string_view branch_name(BranchTag tag);

struct Alpha2Bound {
    double value;
    double radicand;  // strictly positive on the valid parameter domain
};

/// |a2| bound for the argument family:
///   2a / sqrt((l+m+2xd)^2 + a [2l+m - (l+2xd)^2 + (12-4m) xd]).
Alpha2Bound bound_a2_alpha(const ClassParams& params, const Rational& alpha);

/// |a3| bound for the argument family: 4a^2/(l+m+2xd)^2 + 2a/(2l+m+6xd).
double bound_a3_alpha(const ClassParams& params, const Rational& alpha);

struct BranchedBound {
    double value;
    BranchTag branch;
};

/// |a2| bound for the real-part family: the smaller of
///   sqrt(4(1-b) / ((2l+m)(1+m+12d/(2l+1)))) and 2(1-b)/(l+m+2xd).
BranchedBound bound_a2_beta(const ClassParams& params, const Rational& beta);

/// |a3| bound for the real-part family. For mu >= 1 it is 2(1-b)/(2l+m+6xd);
/// for mu < 1 it is the smaller of the two routes through the proof.
BranchedBound bound_a3_beta(const ClassParams& params, const Rational& beta);

struct BoundReport {
    FamilySpec family;
    ClassParams params;
    double a2_bound = 0.0;
    double a3_bound = 0.0;
    std::string branch_taken;
    double radicand = 0.0;
};

BoundReport evaluate_bounds(const ClassParams& params, const FamilySpec& family);

/// The eight published specializations. The lambda/mu arguments matter only
/// for the frasin (lambda) and caglar (lambda, mu) reductions; the others fix
/// them by definition.
enum class CorollaryId {
    alpha_srivastava,
    alpha_frasin,
    alpha_caglar,
    alpha_strongly_bistarlike,
    beta_srivastava,
    beta_frasin,
    beta_caglar,
    beta_bistarlike,
};

std::string_view corollary_name(CorollaryId id);
CorollaryId corollary_from_name(std::string_view name);

/// Parameters of the specialization a corollary evaluates at.
ClassParams corollary_params(CorollaryId id, const Rational& lambda, const Rational& mu);

bool corollary_is_alpha(CorollaryId id);

struct CorollaryValues {
    double a2;
    double a3;
};

/// Evaluates the corollary's published formula verbatim, piecewise cases
/// included.
CorollaryValues corollary_formula(CorollaryId id, const Rational& order_param,
                                  const Rational& lambda = Rational(1),
                                  const Rational& mu = Rational(1));

}  // namespace bicoeff

#endif
