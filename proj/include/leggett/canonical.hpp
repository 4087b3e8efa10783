// canonical.hpp
// The three canonical entangled pair states (positive/negative parity photon
// pairs and the spin singlet) together with their closed-form joint
// probabilities and pair correlations.

#pragma once

#include <cmath>

#include "leggett/qcore.hpp"

namespace leggett {

enum class CanonicalState { PsiPlus, PsiMinus, Singlet };

// A pair of analyzer settings, one per side. Both must share a kind.
struct PairSetting {
  PairSetting(MeasurementSetting a_in, MeasurementSetting b_in)
      : a(std::move(a_in)), b(std::move(b_in)) {
    if (a.kind() != b.kind()) throw KindError("pair settings have different kinds");
  }

  MeasurementSetting a;
  MeasurementSetting b;
};

// Basis ordering: |x> = |up> = (1,0), |y> = |down> = (0,1); composite index
// = iA * 2 + iB.
inline Ket make_state(CanonicalState kind) {
  const double r = std::sqrt(0.5);
  switch (kind) {
    case CanonicalState::PsiPlus:
      return Ket({r, 0.0, 0.0, r});        // (|xx> + |yy>) / sqrt(2)
    case CanonicalState::PsiMinus:
      return Ket({0.0, r, -r, 0.0});       // (|xy> - |yx>) / sqrt(2)
    case CanonicalState::Singlet:
      return Ket({0.0, r, -r, 0.0});       // (|ud> - |du>) / sqrt(2)
  }
  throw DomainError("unknown canonical state");
}

inline DensityOperator make_density(CanonicalState kind) {
  return density_from_pure(make_state(kind), std::make_pair<std::size_t, std::size_t>(2, 2));
}

inline void require_photon_pair(CanonicalState kind, const MeasurementSetting& a,
                                const MeasurementSetting& b) {
  if (kind != CanonicalState::PsiPlus && kind != CanonicalState::PsiMinus)
    throw KindError("joint photon formulas apply to the parity states only");
  if (a.kind() != MeasurementSetting::Kind::PhotonAngle ||
      b.kind() != MeasurementSetting::Kind::PhotonAngle)
    throw KindError("parity states take photon analyzer angles");
}

// Coincidence detection probability for both analyzers firing on their
// ordinary ray: (a.b)^2 / 2 for the positive parity state and
// (1 - (a.b)^2) / 2 for the negative one.
inline double joint_probability(CanonicalState kind, const MeasurementSetting& a,
                                const MeasurementSetting& b) {
  require_photon_pair(kind, a, b);
  const double dot = setting_dot(a, b);
  const double dot2 = dot * dot;
  return kind == CanonicalState::PsiPlus ? 0.5 * dot2 : 0.5 * (1.0 - dot2);
}

// Pair correlation (2 (a.b)^2 - 1) / 2, negated for the negative parity
// state. Numerically equal to joint_probability(PsiPlus) -
// joint_probability(PsiMinus).
inline double paper_pair_correlation(CanonicalState kind, const MeasurementSetting& a,
                                     const MeasurementSetting& b) {
  require_photon_pair(kind, a, b);
  const double dot = setting_dot(a, b);
  const double value = 0.5 * (2.0 * dot * dot - 1.0);
  return kind == CanonicalState::PsiPlus ? value : -value;
}

// Spin correlation -a.b of the singlet state.
inline double singlet_correlation(const MeasurementSetting& a, const MeasurementSetting& b) {
  if (a.kind() != MeasurementSetting::Kind::BlochVector ||
      b.kind() != MeasurementSetting::Kind::BlochVector)
    throw KindError("singlet correlation takes Bloch vector settings");
  return -setting_dot(a, b);
}

}  // namespace leggett
