// hvt.hpp
// Hidden-variable subensemble models: a duck-typed model concept for Monte
// Carlo estimation, a discrete exactly-enumerable model, and the built-in
// Malus product model. Estimators accumulate +/-1 responses in integers, so
// results are exact, order-independent and safely parallelizable.

#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leggett/canonical.hpp"
#include "leggett/inequality.hpp"
#include "leggett/qcore.hpp"
#include "leggett/rng.hpp"

namespace leggett {

// A subensemble model carries an opaque hidden-variable type Lambda, a
// sampler for it, and two +/-1 response procedures. Non-locality is
// permitted: response_a may read b and response_b may read a.
template <typename M>
concept SubensembleModel =
    requires(const M& m, SampleStream& stream, const MeasurementSetting& a,
             const MeasurementSetting& b, const typename M::Lambda& lambda) {
      { m.sample_lambda(stream) } -> std::same_as<typename M::Lambda>;
      { m.response_a(a, b, lambda) } -> std::same_as<int>;
      { m.response_b(b, a, lambda) } -> std::same_as<int>;
    };

struct EstimateReport {
  AverageTriple triple;
  double stderr_a;
  double stderr_b;
  double stderr_ab;
  std::int64_t samples;
  std::uint64_t seed;
};

namespace detail {

inline int require_pm(int r) {
  if (r != 1 && r != -1) throw DomainError("response functions must return +1 or -1");
  return r;
}

// Standard error of the mean for +/-1 data, from the exact integer sum.
inline double pm_stderr(std::int64_t sum, std::int64_t n) {
  if (n < 2) return 0.0;
  const double nn = static_cast<double>(n);
  const double mean = static_cast<double>(sum) / nn;
  const double sample_var = nn * (1.0 - mean * mean) / (nn - 1.0);
  return std::sqrt(std::max(0.0, sample_var) / nn);
}

}  // namespace detail

// Empirical averages of A, B and AB over `samples` independent lambda draws.
// Each draw uses the substream derived from (seed, sample index), so the same
// arguments always reproduce the same report bit for bit.
template <SubensembleModel M>
EstimateReport mc_averages(const M& m, const MeasurementSetting& a, const MeasurementSetting& b,
                           std::int64_t samples, std::uint64_t seed) {
  if (samples < 100) throw DomainError("Monte Carlo estimation needs at least 100 samples");
  std::int64_t sum_a = 0;
  std::int64_t sum_b = 0;
  std::int64_t sum_ab = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    SampleStream stream = SampleStream::for_sample(seed, static_cast<std::uint64_t>(i));
    const typename M::Lambda lambda = m.sample_lambda(stream);
    const int ra = detail::require_pm(m.response_a(a, b, lambda));
    const int rb = detail::require_pm(m.response_b(b, a, lambda));
    sum_a += ra;
    sum_b += rb;
    sum_ab += ra * rb;
  }
  const double n = static_cast<double>(samples);
  EstimateReport report;
  report.triple = {static_cast<double>(sum_a) / n, static_cast<double>(sum_b) / n,
                   static_cast<double>(sum_ab) / n};
  report.stderr_a = detail::pm_stderr(sum_a, samples);
  report.stderr_b = detail::pm_stderr(sum_b, samples);
  report.stderr_ab = detail::pm_stderr(sum_ab, samples);
  report.samples = samples;
  report.seed = seed;
  return report;
}

// Finite lambda domain with explicit weights. Responses may depend on the
// analyzer settings, realizing a (settings, lambda-label) -> +/-1 table.
struct DiscretePoint {
  std::string label;
  double weight;
  std::function<int(const MeasurementSetting&, const MeasurementSetting&)> response_a;  // (a, b)
  std::function<int(const MeasurementSetting&, const MeasurementSetting&)> response_b;  // (b, a)
};

class DiscreteModel {
 public:
  explicit DiscreteModel(std::vector<DiscretePoint> points) : points_(std::move(points)) {
    double total = 0.0;
    for (const DiscretePoint& p : points_) {
      if (p.weight < 0.0) throw NormalizationError("point weights must be non-negative");
      total += p.weight;
    }
    if (std::abs(total - 1.0) > kEps)
      throw NormalizationError("point weights must sum to one");
  }

  // Setting-independent table given as one (+/-1, +/-1) row per point.
  static DiscreteModel from_table(const std::vector<double>& weights,
                                  const std::vector<std::pair<int, int>>& responses) {
    if (weights.size() != responses.size())
      throw StructureError("weights and response rows differ in length");
    std::vector<DiscretePoint> points;
    points.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const auto [ra, rb] = responses[i];
      points.push_back({std::to_string(i), weights[i],
                        [ra](const MeasurementSetting&, const MeasurementSetting&) { return ra; },
                        [rb](const MeasurementSetting&, const MeasurementSetting&) { return rb; }});
    }
    return DiscreteModel(std::move(points));
  }

  const std::vector<DiscretePoint>& points() const { return points_; }

 private:
  std::vector<DiscretePoint> points_;
};

// Exact weighted averages over the discrete lambda domain.
inline AverageTriple exact_averages(const DiscreteModel& m, const MeasurementSetting& a,
                                    const MeasurementSetting& b) {
  double av_a = 0.0;
  double av_b = 0.0;
  double av_ab = 0.0;
  for (const DiscretePoint& p : m.points()) {
    const int ra = detail::require_pm(p.response_a(a, b));
    const int rb = detail::require_pm(p.response_b(b, a));
    av_a += p.weight * ra;
    av_b += p.weight * rb;
    av_ab += p.weight * (ra * rb);
  }
  return {av_a, av_b, av_ab};
}

// Pairs of photons with definite polarizations u and v whose analyzers fire
// independently with Malus-law probabilities: the hidden variable is a pair
// of uniform thresholds on [0,1), and side A passes iff lambda1 < (u.a)^2.
class MalusProductModel {
 public:
  struct Lambda {
    double lambda1;
    double lambda2;
  };

  MalusProductModel(MeasurementSetting u, MeasurementSetting v)
      : u_(std::move(u)), v_(std::move(v)) {
    if (u_.kind() != MeasurementSetting::Kind::PhotonAngle ||
        v_.kind() != MeasurementSetting::Kind::PhotonAngle)
      throw KindError("Malus product model takes photon polarization angles");
  }

  Lambda sample_lambda(SampleStream& stream) const {
    const double l1 = stream.uniform();
    const double l2 = stream.uniform();
    return {l1, l2};
  }

  int response_a(const MeasurementSetting& a, const MeasurementSetting&, const Lambda& l) const {
    return l.lambda1 < pass_probability(u_, a) ? 1 : -1;
  }

  int response_b(const MeasurementSetting& b, const MeasurementSetting&, const Lambda& l) const {
    return l.lambda2 < pass_probability(v_, b) ? 1 : -1;
  }

  // Closed forms: av(A) = 2 (u.a)^2 - 1, av(B) = 2 (v.b)^2 - 1, and the
  // responses are independent so av(AB) is their product.
  double exact_av_a(const MeasurementSetting& a) const {
    return 2.0 * pass_probability(u_, a) - 1.0;
  }

  double exact_av_b(const MeasurementSetting& b) const {
    return 2.0 * pass_probability(v_, b) - 1.0;
  }

  AverageTriple exact_triple(const MeasurementSetting& a, const MeasurementSetting& b) const {
    const double av_a = exact_av_a(a);
    const double av_b = exact_av_b(b);
    return {av_a, av_b, av_a * av_b};
  }

  const MeasurementSetting& u() const { return u_; }
  const MeasurementSetting& v() const { return v_; }

 private:
  static double pass_probability(const MeasurementSetting& pol, const MeasurementSetting& analyzer) {
    const double dot = setting_dot(pol, analyzer);
    return dot * dot;
  }

  MeasurementSetting u_;
  MeasurementSetting v_;
};

static_assert(SubensembleModel<MalusProductModel>);

inline MalusProductModel malus_product_model(const MeasurementSetting& u,
                                             const MeasurementSetting& v) {
  return MalusProductModel(u, v);
}

inline MalusProductModel malus_product_model(double u_angle, double v_angle) {
  return MalusProductModel(MeasurementSetting::photon_angle(u_angle),
                           MeasurementSetting::photon_angle(v_angle));
}

// Exact bound checks, one report per setting pair, in input order.
inline std::vector<InequalityReport> model_leggett_check(const DiscreteModel& m,
                                                         std::span<const PairSetting> settings) {
  std::vector<InequalityReport> reports;
  reports.reserve(settings.size());
  for (const PairSetting& s : settings)
    reports.push_back(leggett_check(exact_averages(m, s.a, s.b)));
  return reports;
}

// Monte Carlo bound checks with tolerance max(1e-9, 3 * max stderr); each
// pair estimates on its own derived substream.
template <SubensembleModel M>
std::vector<InequalityReport> model_leggett_check(const M& m,
                                                  std::span<const PairSetting> settings,
                                                  std::int64_t samples, std::uint64_t seed) {
  std::vector<InequalityReport> reports;
  reports.reserve(settings.size());
  for (std::size_t i = 0; i < settings.size(); ++i) {
    const PairSetting& s = settings[i];
    const EstimateReport est = mc_averages(m, s.a, s.b, samples, derive_seed(seed, i));
    const double stat = 3.0 * std::max({est.stderr_a, est.stderr_b, est.stderr_ab});
    reports.push_back(leggett_check(est.triple, std::max(kDefaultTolerance, stat)));
  }
  return reports;
}

// Delta sweep of the Malus product model with both analyzers at the same
// angle delta. The paper slot carries the Monte Carlo estimate, the oracle
// slot the model's closed-form averages.
inline std::vector<SweepRow> malus_sweep(const MalusProductModel& m, std::size_t grid_points,
                                         std::int64_t samples, std::uint64_t seed) {
  if (grid_points < 2) throw DomainError("sweep needs at least two grid points");
  std::vector<SweepRow> rows;
  rows.reserve(grid_points);
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double delta = kTwoPi * static_cast<double>(k) / static_cast<double>(grid_points);
    const MeasurementSetting analyzer = MeasurementSetting::photon_angle(delta);
    const EstimateReport est = mc_averages(m, analyzer, analyzer, samples, derive_seed(seed, k));
    const AverageTriple exact = m.exact_triple(analyzer, analyzer);
    const double stat = 3.0 * std::max({est.stderr_a, est.stderr_b, est.stderr_ab});

    SweepRow row;
    row.delta = delta;
    row.av_a = est.triple.av_a;
    row.av_b = est.triple.av_b;
    row.av_ab_paper = est.triple.av_ab;
    row.av_ab_oracle = exact.av_ab;
    row.report_paper = leggett_check(est.triple, std::max(kDefaultTolerance, stat));
    row.report_oracle = leggett_check(exact);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace leggett
