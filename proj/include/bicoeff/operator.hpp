#ifndef BICOEFF_OPERATOR_HPP
#define BICOEFF_OPERATOR_HPP

#include "bicoeff/class_params.hpp"
#include "bicoeff/multipoly.hpp"
#include "bicoeff/series.hpp"

#include <complex>
#include <vector>

namespace bicoeff {

/// L[f] = (1-lambda)(f/z)^mu + lambda f'(z)(f/z)^(mu-1) + xi delta z f''(z),
/// truncated at f's storage order and trusted one order lower (f'' costs two
/// orders, the z-shift gives one back).
///
/// Evaluated as (f/z)^mu + lambda [f'(f/z)^(mu-1) - (f/z)^mu] + xi delta z f''
/// which is the same expression but keeps the constant term exactly 1 in the
/// floating ring.
template <class R>
TruncatedSeries<R> operator_series(const NormalizedSeries<R>& f, const ClassParams& params) {
    const auto& fs = f.series();
    const TruncatedSeries<R> f_over_z = fs.shifted_down();
    const TruncatedSeries<R> f1 = derivative(fs);
    const TruncatedSeries<R> f2 = derivative(f1);

    const TruncatedSeries<R> base = pow_fractional(f_over_z, params.mu);
    const TruncatedSeries<R> convective = f1 * pow_fractional(f_over_z, params.mu - 1);
    const TruncatedSeries<R> curvature = f2.shifted_up();

    return base + scale_rational(convective - base, params.lambda) +
           scale_rational(curvature, params.xi() * params.delta);
}

struct SymbolicOperatorCoeffs {
    std::vector<MultiPoly> f_side;  // coefficient polynomials of L[f], index = power of z
    std::vector<MultiPoly> g_side;  // same for L[g], g the compositional inverse of f
};

/// Coefficient polynomials of the operator applied to the generic normalized
/// series z + a2 z^2 + a3 z^3 + a4 z^4 and to its inverse, up to z^upto
/// (upto <= 3; beyond that the symbol set runs out).
SymbolicOperatorCoeffs operator_coefficients_symbolic(const ClassParams& params, int upto);

/// Evaluation grid on the disk: concentric circles, equally spaced angles.
struct DiskGrid {
    std::vector<double> radii;
    int angles = 720;

    /// radii 0.1 .. 0.9 step 0.1, plus 0.95; 720 angles.
    static DiskGrid standard();
    static DiskGrid with_max_radius(double rmax, int rings = 10, int angles = 720);

    void validate() const;
};

/// Outcome of a pointwise membership-condition scan. "satisfied" means the
/// degree-N truncation satisfies the condition on this grid; the tail beyond
/// the truncation is not certified.
struct ConditionReport {
    bool satisfied = false;
    double worst_margin = 0.0;          // min over grid of (alpha*pi/2 - |arg h|) or (Re h - beta)
    std::complex<double> worst_point{0.0, 0.0};
    std::vector<double> grid_radii;
    int grid_angles = 0;
    int truncation_order = 0;
};

/// Scans h over the grid. Arg family: margin = alpha*pi/2 - |arg h(z)| with
/// the principal argument; Re family: margin = Re h(z) - beta. Non-finite
/// evaluations (overflowing truncations) count as margin -inf.
ConditionReport check_condition(const ComplexSeries& h, const FamilySpec& spec,
                                const DiskGrid& grid);

}  // namespace bicoeff

#endif
