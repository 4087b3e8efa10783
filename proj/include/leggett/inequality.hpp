// inequality.hpp
// Leggett bound evaluation with margins, the underlying +/-1 identities, and
// angle sweeps that test the quantum correlations of the canonical states
// against the bounds.

#pragma once

#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "leggett/canonical.hpp"
#include "leggett/qcore.hpp"

namespace leggett {

// Default satisfaction tolerance for analytically exact inputs. Monte Carlo
// callers pass a statistical tolerance instead.
inline constexpr double kDefaultTolerance = 1e-9;

// The three subensemble averages entering the bounds.
struct AverageTriple {
  double av_a;
  double av_b;
  double av_ab;
};

// Result of checking av_ab against 1 - |av_a - av_b| >= av_ab >= -1 + |av_a + av_b|.
struct InequalityReport {
  double lower;          // -1 + |av_a + av_b|
  double upper;          //  1 - |av_a - av_b|
  double value;          // av_ab
  double margin_lower;   // value - lower
  double margin_upper;   // upper - value
  bool satisfied;        // both margins >= -tolerance
  double tolerance;
};

// One sweep sample at relative angle delta. av_ab_paper carries the
// closed-form correlation, av_ab_oracle the full-trace cross-check; the two
// reports grade each against the same bounds.
struct SweepRow {
  double delta;
  double av_a;
  double av_b;
  double av_ab_paper;
  double av_ab_oracle;
  InequalityReport report_paper;
  InequalityReport report_oracle;
};

// 1 - |A - B| = AB = -1 + |A + B| for A, B in {-1, +1}, in exact integer
// arithmetic.
inline bool pm_identity_check(int a, int b) {
  if (a != 1 && a != -1) throw DomainError("first argument must be +1 or -1");
  if (b != 1 && b != -1) throw DomainError("second argument must be +1 or -1");
  const int ab = a * b;
  return (1 - std::abs(a - b)) == ab && ab == (-1 + std::abs(a + b));
}

inline std::pair<double, double> leggett_bounds(double av_a, double av_b) {
  if (std::abs(av_a) > 1.0 + kEps || std::abs(av_b) > 1.0 + kEps)
    throw DomainError("averages must lie in [-1, 1]");
  const double lower = -1.0 + std::abs(av_a + av_b);
  const double upper = 1.0 - std::abs(av_a - av_b);
  return {lower, upper};
}

inline InequalityReport leggett_check(const AverageTriple& t,
                                      double tolerance = kDefaultTolerance) {
  if (std::abs(t.av_ab) > 1.0 + kEps)
    throw DomainError("pair average must lie in [-1, 1]");
  const auto [lower, upper] = leggett_bounds(t.av_a, t.av_b);
  InequalityReport r;
  r.lower = lower;
  r.upper = upper;
  r.value = t.av_ab;
  r.margin_lower = t.av_ab - lower;
  r.margin_upper = upper - t.av_ab;
  r.tolerance = tolerance;
  r.satisfied = r.margin_lower >= -tolerance && r.margin_upper >= -tolerance;
  return r;
}

// The bound in the quadratic form 1.5 >= (a.b)^2 >= -0.5, which is what the
// photon-pair correlations reduce to when the single-side averages vanish.
// Cross-checked on the fly against leggett_check on (0, 0, +/-corr).
inline bool quadratic_form_check(const MeasurementSetting& a, const MeasurementSetting& b) {
  const double dot = setting_dot(a, b);
  const double dot2 = dot * dot;
  const bool quad = dot2 <= 1.5 && dot2 >= -0.5;
  const double corr = 0.5 * (2.0 * dot2 - 1.0);
  const bool via_bounds = leggett_check({0.0, 0.0, corr}).satisfied &&
                          leggett_check({0.0, 0.0, -corr}).satisfied;
  if (quad != via_bounds)
    throw DomainError("quadratic form and bound check disagree");
  return quad;
}

namespace detail {

inline PairSetting sweep_settings(CanonicalState kind, double delta, double base) {
  if (kind == CanonicalState::Singlet) {
    // Unit vectors in the xz-plane separated by delta; arccos(a.b) == delta
    // up to the 2*pi wrap.
    return PairSetting(
        MeasurementSetting::bloch_vector(std::sin(base + delta), 0.0, std::cos(base + delta)),
        MeasurementSetting::bloch_vector(std::sin(base), 0.0, std::cos(base)));
  }
  return PairSetting(MeasurementSetting::photon_angle(base + delta),
                     MeasurementSetting::photon_angle(base));
}

}  // namespace detail

// Sweeps the relative angle delta over [0, 2*pi). The single-side averages
// are recomputed per row through the reduced-density-matrix pipeline rather
// than assumed zero, so every row exercises the full operator chain. `base`
// rotates both settings rigidly; the rotation invariance of all reported
// quantities makes the default 0 representative.
inline std::vector<SweepRow> quantum_sweep(CanonicalState kind, std::size_t grid_points,
                                           double base = 0.0,
                                           double tolerance = kDefaultTolerance) {
  if (grid_points < 2) throw DomainError("sweep needs at least two grid points");

  const DensityOperator rho = make_density(kind);
  const DensityOperator reduced_a = partial_trace(rho, Subsystem::First);
  const DensityOperator reduced_b = partial_trace(rho, Subsystem::Second);
  const bool spin = kind == CanonicalState::Singlet;

  std::vector<SweepRow> rows;
  rows.reserve(grid_points);
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double delta = kTwoPi * static_cast<double>(k) / static_cast<double>(grid_points);
    const PairSetting s = detail::sweep_settings(kind, delta, base);
    const Observable obs_a = spin ? spin_observable(s.a) : photon_observable(s.a);
    const Observable obs_b = spin ? spin_observable(s.b) : photon_observable(s.b);

    SweepRow row;
    row.delta = delta;
    row.av_a = expectation(reduced_a, obs_a);
    row.av_b = expectation(reduced_b, obs_b);
    row.av_ab_paper = spin ? singlet_correlation(s.a, s.b)
                           : paper_pair_correlation(kind, s.a, s.b);
    row.av_ab_oracle = joint_expectation(rho, obs_a, obs_b);
    row.report_paper = leggett_check({row.av_a, row.av_b, row.av_ab_paper}, tolerance);
    row.report_oracle = leggett_check({row.av_a, row.av_b, row.av_ab_oracle}, tolerance);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace leggett
