// verify.hpp
// Self-contained verification of the exact identities behind the library:
// maximally mixed reductions, vanishing single-side averages, closed-form
// correlations against full traces, and the +/-1 bound identities. Everything
// here is analytic, so it runs in well under a second.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "leggett/canonical.hpp"
#include "leggett/hvt.hpp"
#include "leggett/inequality.hpp"
#include "leggett/qcore.hpp"
#include "leggett/rng.hpp"

namespace leggett {

struct VerificationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

namespace detail {

inline std::string deviation_detail(double dev, double tol) {
  std::ostringstream os;
  os << "max deviation " << dev << " (tolerance " << tol << ")";
  return os.str();
}

inline MeasurementSetting random_bloch(SampleStream& stream) {
  // Uniform on the sphere: z uniform in [-1, 1], azimuth uniform.
  const double z = 2.0 * stream.uniform() - 1.0;
  const double phi = kTwoPi * stream.uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return MeasurementSetting::bloch_vector(r * std::cos(phi), r * std::sin(phi), z);
}

inline const std::vector<CanonicalState>& all_states() {
  static const std::vector<CanonicalState> states{
      CanonicalState::PsiPlus, CanonicalState::PsiMinus, CanonicalState::Singlet};
  return states;
}

}  // namespace detail

inline std::vector<VerificationCheck> run_verification(std::uint64_t seed = 20240229ULL) {
  std::vector<VerificationCheck> checks;
  const auto& states = detail::all_states();

  {  // Both reductions of every canonical state equal I/2.
    const CplxMatrix half_identity = Complex(0.5) * CplxMatrix::identity(2);
    double dev = 0.0;
    for (CanonicalState kind : states) {
      const DensityOperator rho = make_density(kind);
      dev = std::max(dev, max_abs_diff(partial_trace(rho, Subsystem::First).matrix(), half_identity));
      dev = std::max(dev, max_abs_diff(partial_trace(rho, Subsystem::Second).matrix(), half_identity));
    }
    checks.push_back({"reduced-density-matrices-half-identity", dev <= kEps,
                      detail::deviation_detail(dev, kEps)});
  }

  {  // Every reduction is maximally mixed: Tr(rho_red^2) = 1/2.
    double dev = 0.0;
    for (CanonicalState kind : states) {
      const DensityOperator rho = make_density(kind);
      dev = std::max(dev, std::abs(purity(partial_trace(rho, Subsystem::First)) - 0.5));
      dev = std::max(dev, std::abs(purity(partial_trace(rho, Subsystem::Second)) - 0.5));
    }
    checks.push_back({"reduced-purity-one-half", dev <= kEps, detail::deviation_detail(dev, kEps)});
  }

  {  // Single-side averages vanish for random analyzer settings.
    SampleStream stream(derive_seed(seed, 1));
    double dev = 0.0;
    for (CanonicalState kind : states) {
      const DensityOperator rho = make_density(kind);
      const DensityOperator red_a = partial_trace(rho, Subsystem::First);
      const DensityOperator red_b = partial_trace(rho, Subsystem::Second);
      const bool spin = kind == CanonicalState::Singlet;
      for (int i = 0; i < 1000; ++i) {
        const MeasurementSetting s =
            spin ? detail::random_bloch(stream)
                 : MeasurementSetting::photon_angle(kTwoPi * stream.uniform());
        const Observable obs = spin ? spin_observable(s) : photon_observable(s);
        dev = std::max(dev, std::abs(expectation(red_a, obs)));
        dev = std::max(dev, std::abs(expectation(red_b, obs)));
      }
    }
    checks.push_back({"single-side-averages-vanish", dev <= kEps,
                      detail::deviation_detail(dev, kEps)});
  }

  {  // Closed-form joint probabilities match the full-trace projector route.
    double dev = 0.0;
    for (CanonicalState kind : {CanonicalState::PsiPlus, CanonicalState::PsiMinus}) {
      const DensityOperator rho = make_density(kind);
      for (int k = 0; k < 1000; ++k) {
        const double delta = kTwoPi * k / 1000.0;
        const MeasurementSetting a = MeasurementSetting::photon_angle(delta);
        const MeasurementSetting b = MeasurementSetting::photon_angle(0.0);
        const double closed = joint_probability(kind, a, b);
        // Pass projector on each side: (I + P)/2.
        const CplxMatrix pa =
            Complex(0.5) * (CplxMatrix::identity(2) + photon_observable(a).matrix());
        const CplxMatrix pb =
            Complex(0.5) * (CplxMatrix::identity(2) + photon_observable(b).matrix());
        const double traced = trace_product(rho.matrix(), kron(pa, pb)).real();
        dev = std::max(dev, std::abs(closed - traced));
      }
    }
    checks.push_back({"joint-probabilities-match-full-trace", dev <= kEps,
                      detail::deviation_detail(dev, kEps)});
  }

  {  // Pair correlation equals the difference of the two joint probabilities,
     // and the full-trace correlation is exactly twice it.
    const DensityOperator rho_plus = make_density(CanonicalState::PsiPlus);
    double dev_diff = 0.0;
    double dev_factor = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double delta = kTwoPi * k / 1000.0;
      const MeasurementSetting a = MeasurementSetting::photon_angle(delta);
      const MeasurementSetting b = MeasurementSetting::photon_angle(0.0);
      const double corr = paper_pair_correlation(CanonicalState::PsiPlus, a, b);
      const double diff = joint_probability(CanonicalState::PsiPlus, a, b) -
                          joint_probability(CanonicalState::PsiMinus, a, b);
      dev_diff = std::max(dev_diff, std::abs(corr - diff));
      const double traced = joint_expectation(rho_plus, photon_observable(a), photon_observable(b));
      dev_factor = std::max(dev_factor, std::abs(traced - 2.0 * corr));
    }
    checks.push_back({"pair-correlation-difference-identity", dev_diff <= kEps,
                      detail::deviation_detail(dev_diff, kEps)});
    checks.push_back({"full-trace-correlation-factor-two", dev_factor <= kEps,
                      detail::deviation_detail(dev_factor, kEps)});
  }

  {  // Singlet correlation is -a.b via the full trace.
    const DensityOperator rho = make_density(CanonicalState::Singlet);
    SampleStream stream(derive_seed(seed, 2));
    double dev = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const MeasurementSetting a = detail::random_bloch(stream);
      const MeasurementSetting b = detail::random_bloch(stream);
      const double traced = joint_expectation(rho, spin_observable(a), spin_observable(b));
      dev = std::max(dev, std::abs(traced - singlet_correlation(a, b)));
    }
    checks.push_back({"singlet-correlation-minus-a-dot-b", dev <= kEps,
                      detail::deviation_detail(dev, kEps)});
  }

  {  // The +/-1 identity behind the bounds, exhaustively.
    bool ok = true;
    for (int a : {-1, 1})
      for (int b : {-1, 1}) ok = ok && pm_identity_check(a, b);
    checks.push_back({"pm-identities-exhaustive", ok, ok ? "all four sign pairs" : "failed"});
  }

  {  // Random discrete hidden-variable models always satisfy the bounds.
    SampleStream stream(derive_seed(seed, 3));
    const MeasurementSetting a = MeasurementSetting::photon_angle(0.0);
    const MeasurementSetting b = MeasurementSetting::photon_angle(0.0);
    double worst_margin = 2.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(stream.next_u64() % 32);
      std::vector<double> weights(n);
      std::vector<std::pair<int, int>> responses(n);
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        weights[i] = stream.uniform() + 1e-3;
        total += weights[i];
      }
      for (std::size_t i = 0; i < n; ++i) {
        weights[i] /= total;
        responses[i] = {stream.next_u64() % 2 ? 1 : -1, stream.next_u64() % 2 ? 1 : -1};
      }
      const DiscreteModel model = DiscreteModel::from_table(weights, responses);
      const InequalityReport r = leggett_check(exact_averages(model, a, b), kEps);
      worst_margin = std::min({worst_margin, r.margin_lower, r.margin_upper});
    }
    std::ostringstream os;
    os << "worst margin " << worst_margin << " over 1000 random models";
    checks.push_back({"random-discrete-models-satisfy-bounds", worst_margin >= -kEps, os.str()});
  }

  {  // Quantum sweeps of all three states satisfy the bounds on every row.
    double worst_margin = 2.0;
    for (CanonicalState kind : states) {
      for (const SweepRow& row : quantum_sweep(kind, 1000)) {
        worst_margin = std::min({worst_margin, row.report_paper.margin_lower,
                                 row.report_paper.margin_upper, row.report_oracle.margin_lower,
                                 row.report_oracle.margin_upper});
      }
    }
    std::ostringstream os;
    os << "worst margin " << worst_margin << " over 3000 sweep rows";
    checks.push_back({"quantum-sweeps-satisfy-bounds", worst_margin >= -kDefaultTolerance, os.str()});
  }

  {  // The quadratic form 1.5 >= (a.b)^2 >= -0.5 holds on a dense grid.
    bool ok = true;
    for (int i = 0; ok && i < 1000; ++i)
      for (int j = 0; ok && j < 1000; ++j)
        ok = quadratic_form_check(MeasurementSetting::photon_angle(kTwoPi * i / 1000.0),
                                  MeasurementSetting::photon_angle(kTwoPi * j / 1000.0));
    checks.push_back({"quadratic-form-bound", ok, ok ? "1e6 grid pairs" : "failed"});
  }

  return checks;
}

inline bool all_passed(const std::vector<VerificationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerificationCheck& c) { return c.passed; });
}

}  // namespace leggett
