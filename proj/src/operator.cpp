#include "bicoeff/operator.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace bicoeff {

SymbolicOperatorCoeffs operator_coefficients_symbolic(const ClassParams& params, int upto) {
    if (upto < 1 || upto > 3)
        throw std::domain_error("symbolic operator coefficients support orders 1..3 only");

    const int N = upto + 1;
    std::vector<MultiPoly> tail = {MultiPoly::variable(Symbol::a2), MultiPoly::variable(Symbol::a3),
                                   MultiPoly::variable(Symbol::a4)};
    tail.resize(static_cast<std::size_t>(N - 1));
    const auto f = NormalizedSeries<MultiPoly>::from_tail(tail, N);
    const auto g = reversion(f);

    const SymbolicSeries lf = operator_series(f, params);
    const SymbolicSeries lg = operator_series(g, params);

    SymbolicOperatorCoeffs out;
    for (int n = 0; n <= upto; ++n) {
        out.f_side.push_back(lf.coeff(n));
        out.g_side.push_back(lg.coeff(n));
    }
    return out;
}

DiskGrid DiskGrid::standard() {
    DiskGrid g;
    for (int i = 1; i <= 9; ++i) g.radii.push_back(0.1 * i);
    g.radii.push_back(0.95);
    g.angles = 720;
    return g;
}

DiskGrid DiskGrid::with_max_radius(double rmax, int rings, int angles) {
    DiskGrid g;
    g.angles = angles;
    for (int i = 1; i <= rings; ++i) g.radii.push_back(rmax * i / rings);
    return g;
}

void DiskGrid::validate() const {
    if (radii.empty() || angles < 1) throw std::domain_error("grid needs radii and angles");
    for (double r : radii)
        if (!(r > 0.0 && r <= 0.95))
            throw std::domain_error("grid radius must satisfy 0 < r <= 0.95 "
                                    "(truncation tail untrusted beyond)");
}

ConditionReport check_condition(const ComplexSeries& h, const FamilySpec& spec,
                                const DiskGrid& grid) {
    grid.validate();
    if (std::abs(h.coeff(0) - std::complex<double>(1.0, 0.0)) > 1e-9)
        throw std::domain_error("check_condition: series must have constant term 1");

    const double threshold = spec.kind == FamilyKind::Arg
                                 ? to_double(spec.order) * std::numbers::pi / 2.0
                                 : to_double(spec.order);

    ConditionReport report;
    report.grid_radii = grid.radii;
    report.grid_angles = grid.angles;
    report.truncation_order = h.valid_order();
    report.worst_margin = std::numeric_limits<double>::infinity();

    // Serial scan in (radius, angle) order: a strict '<' update makes the
    // reported worst point the lexicographically first minimizer.
    for (double r : grid.radii) {
        for (int j = 0; j < grid.angles; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / grid.angles;
            const std::complex<double> z = std::polar(r, theta);
            const std::complex<double> value = eval_at(h, z);
            double margin;
            if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
                margin = -std::numeric_limits<double>::infinity();
            } else if (spec.kind == FamilyKind::Arg) {
                margin = threshold - std::abs(std::arg(value));
            } else {
                margin = value.real() - threshold;
            }
            if (margin < report.worst_margin) {
                report.worst_margin = margin;
                report.worst_point = z;
            }
        }
    }
    report.satisfied = report.worst_margin > 0.0;
    return report;
}

}  // namespace bicoeff
