#ifndef BICOEFF_VERIFY_HPP
#define BICOEFF_VERIFY_HPP

#include "bicoeff/bounds.hpp"
#include "bicoeff/caratheodory.hpp"
#include "bicoeff/class_params.hpp"
#include "bicoeff/operator.hpp"
#include "bicoeff/series.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace bicoeff {

struct IdentityFailure {
    std::string point;     // which parameter sample broke
    std::string residual;  // the nonzero residual polynomial (or numeric gap)
};

struct IdentityVerdict {
    std::string id;
    int samples = 0;
    std::vector<IdentityFailure> failures;

    bool passed() const { return failures.empty(); }
};

bool all_passed(const std::vector<IdentityVerdict>& verdicts);

/// Exact symbolic check that the order-4 compositional inverse has tail
/// coefficients -a2, 2 a2^2 - a3, -(5 a2^3 - 5 a2 a3 + a4).
std::vector<IdentityVerdict> verify_inverse_expansion();

/// At `trials` random rational parameter points: the z^1 and z^2 coefficient
/// polynomials of the operator on f and on g match their closed forms, and
/// the expanded right-hand sides ([p]^alpha resp. beta + (1-beta) p) match
/// theirs. Exact polynomial identities in {a2, a3, p1, p2, q1, q2}.
std::vector<IdentityVerdict> verify_coefficient_equations(FamilyKind family, int trials,
                                                          std::uint64_t seed);

/// The chained consequences of the coefficient equations, each verified as a
/// zero residual after performing the stated eliminations exactly.
std::vector<IdentityVerdict> verify_derived_identities(FamilyKind family, int trials,
                                                       std::uint64_t seed);

/// Sampled kernels p = (1+phi)/(1-phi) obey |c_k| <= 2 + 1e-9 for k <= upto_k.
IdentityVerdict verify_caratheodory(int trials, std::uint64_t seed, int upto_k = 8);

/// General-theorem bounds against every published specialization on a grid
/// of the order parameter: equality for the reductions, the improvement
/// inequality for the real-part bi-starlike case, and piecewise-joint
/// agreement at the crossovers.
std::vector<IdentityVerdict> verify_corollary_reductions(int grid_points = 101);

/// Order-by-order solve of L[f] = target for the tail coefficients a2..aN.
/// target is [p]^alpha or beta + (1-beta) p with p built from the Schwarz
/// draw; the linear solve pivot mu + lambda n + xi delta n(n+1) is positive
/// for the whole valid parameter domain.
NormalizedSeries<std::complex<double>> solve_candidate(const FamilySpec& family,
                                                       const ClassParams& params,
                                                       const SchwarzSpec& schwarz, int order);

/// The target series the candidate is solved against.
ComplexSeries membership_target(const FamilySpec& family, const SchwarzSpec& schwarz, int order);

enum class TrialStatus { accepted, rejected, inconclusive };

std::string_view trial_status_name(TrialStatus s);

/// One Monte-Carlo membership trial. The z-side holds by construction (up to
/// truncation); acceptance additionally needs the w-side margin, computed on
/// the reversion, to clear +1e-6. Margins inside [-1e-6, 1e-6] are recorded
/// as inconclusive rather than trusted.
struct SampleRecord {
    int trial = 0;
    FamilySpec family{FamilyKind::Arg, Rational(1)};
    ClassParams params{Rational(1), Rational(1), Rational(0)};
    SchwarzSpec schwarz;
    int solve_order = 8;
    std::vector<std::complex<double>> coefficients;  // solved a2..aN
    ConditionReport condition_z;
    ConditionReport condition_w;
    TrialStatus status = TrialStatus::inconclusive;
    double a2_abs = 0.0;
    double a3_abs = 0.0;
    double a2_bound = 0.0;
    double a3_bound = 0.0;
    bool violation = false;

    bool accepted() const { return status == TrialStatus::accepted; }
};

struct SampleSummary {
    int trials = 0;
    int accepted = 0;
    int rejected = 0;
    int inconclusive = 0;
    int violations = 0;
};

inline constexpr double kAcceptanceMarginFloor = 1e-6;
inline constexpr double kViolationGuard = 1e-9;

SampleRecord run_trial(const FamilySpec& family, const ClassParams& params,
                       const SchwarzSpec& schwarz, int trial, const DiskGrid& grid,
                       int solve_order = 8, int condition_order = 32);

/// Trials are independent (per-trial engines derived from (seed, trial)) and
/// run in parallel up to BICOEFF_THREADS. If forced is non-null, every trial
/// uses that Schwarz spec instead of drawing one.
std::vector<SampleRecord> sample_members(const FamilySpec& family, const ClassParams& params,
                                         int trials, std::uint64_t seed, const DiskGrid& grid,
                                         int solve_order = 8, int condition_order = 32,
                                         const SchwarzSpec* forced = nullptr);

SampleSummary summarize(const std::vector<SampleRecord>& records);

}  // namespace bicoeff

#endif
