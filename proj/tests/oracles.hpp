// oracles.hpp
// Test-only reference computations, kept independent of the library paths
// they are used to check: naive matrix algebra on nested vectors, spinor
// projector construction, outcome-enumeration averages, and random input
// generators.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "leggett/canonical.hpp"
#include "leggett/hvt.hpp"
#include "leggett/qcore.hpp"

namespace oracles {

using Complex = std::complex<double>;
using NaiveMatrix = std::vector<std::vector<Complex>>;

inline NaiveMatrix naive_from(const leggett::CplxMatrix& m) {
  NaiveMatrix out(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline NaiveMatrix naive_mult(const NaiveMatrix& a, const NaiveMatrix& b) {
  NaiveMatrix out(a.size(), std::vector<Complex>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Complex naive_trace(const NaiveMatrix& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

// Spin-up spinor along the Bloch direction (x, y, z), and its antipode.
inline std::array<Complex, 2> bloch_spinor(double x, double y, double z) {
  const double polar = std::acos(std::clamp(z, -1.0, 1.0));
  const double azimuth = std::atan2(y, x);
  return {Complex(std::cos(polar / 2.0), 0.0),
          std::polar(std::sin(polar / 2.0), azimuth)};
}

inline leggett::CplxMatrix outer_product(const std::array<Complex, 2>& v) {
  leggett::CplxMatrix m(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

// |a><a| - |-a><-a| built from spinors, the projector route to a Stern-
// Gerlach observable.
inline leggett::CplxMatrix spin_observable_from_projectors(double x, double y, double z) {
  const auto up = bloch_spinor(x, y, z);
  const auto down = bloch_spinor(-x, -y, -z);
  return outer_product(up) - outer_product(down);
}

// Two-outcome average of an analyzer at `analyzer` on a photon polarized at
// `state`: Malus pass probability minus the complementary absorb probability.
inline double malus_two_outcome_average(double state_angle, double analyzer_angle) {
  const double pass = std::cos(analyzer_angle - state_angle) * std::cos(analyzer_angle - state_angle);
  return pass - (1.0 - pass);
}

// Four-outcome correlation sum_{o1,o2} o1 o2 P(o1, o2) with the joint outcome
// probabilities evaluated as traces against projector pairs.
inline double four_outcome_correlation(const leggett::DensityOperator& rho,
                                       const leggett::Observable& obs_a,
                                       const leggett::Observable& obs_b) {
  const leggett::CplxMatrix identity = leggett::CplxMatrix::identity(2);
  const auto projector = [&](const leggett::Observable& o, int outcome) {
    return Complex(0.5) * (identity + Complex(outcome) * o.matrix());
  };
  double corr = 0.0;
  for (int o1 : {-1, 1})
    for (int o2 : {-1, 1}) {
      const double p =
          leggett::trace_product(rho.matrix(),
                                 leggett::kron(projector(obs_a, o1), projector(obs_b, o2)))
              .real();
      corr += o1 * o2 * p;
    }
  return corr;
}

inline double random_angle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, leggett::kTwoPi);
  return dist(rng);
}

inline leggett::MeasurementSetting random_photon_setting(std::mt19937_64& rng) {
  return leggett::MeasurementSetting::photon_angle(random_angle(rng));
}

inline std::array<double, 3> random_unit_vector(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const double z = dist(rng);
  const double phi = random_angle(rng);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

inline leggett::MeasurementSetting random_bloch_setting(std::mt19937_64& rng) {
  const auto d = random_unit_vector(rng);
  return leggett::MeasurementSetting::bloch_vector(d[0], d[1], d[2]);
}

inline leggett::Ket random_ket(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(dim);
  for (Complex& a : amps) a = Complex(gauss(rng), gauss(rng));
  return leggett::Ket::normalized(std::move(amps));
}

// Random mixed bipartite state: a convex mixture of a few random pure states.
inline leggett::DensityOperator random_density4(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int terms = 1 + static_cast<int>(rng() % 4);
  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) {
    w = unit(rng) + 1e-3;
    total += w;
  }
  leggett::CplxMatrix m(4, 4);
  for (double w : weights) {
    const leggett::Ket k = random_ket(4, rng);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) += Complex(w / total) * k[i] * std::conj(k[j]);
  }
  return leggett::DensityOperator(std::move(m), std::make_pair<std::size_t, std::size_t>(2, 2));
}

// Rotation of v about a random axis by a random angle (Rodrigues).
inline std::array<double, 3> rotate(const std::array<double, 3>& v,
                                    const std::array<double, 3>& axis, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double dot = axis[0] * v[0] + axis[1] * v[1] + axis[2] * v[2];
  const std::array<double, 3> cross = {axis[1] * v[2] - axis[2] * v[1],
                                       axis[2] * v[0] - axis[0] * v[2],
                                       axis[0] * v[1] - axis[1] * v[0]};
  std::array<double, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = v[i] * c + cross[i] * s + axis[i] * dot * (1.0 - c);
  return out;
}

inline leggett::DiscreteModel random_discrete_model(std::mt19937_64& rng,
                                                    std::size_t max_points = 32) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = 1 + rng() % max_points;
  std::vector<double> weights(n);
  std::vector<std::pair<int, int>> responses(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] = unit(rng) + 1e-3;
    total += weights[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    weights[i] /= total;
    responses[i] = {rng() % 2 ? 1 : -1, rng() % 2 ? 1 : -1};
  }
  return leggett::DiscreteModel::from_table(weights, responses);
}

}  // namespace oracles
