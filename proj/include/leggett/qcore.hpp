// qcore.hpp
// Dense complex linear algebra for 2- and 4-dimensional quantum systems:
// kets, density operators, tensor products, partial traces, projective
// +/-1 observables and their expectation values.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace leggett {

using Complex = std::complex<double>;

// Absolute entrywise tolerance for all exact identities. Every quantity in
// this library is O(1) and computed in double precision with a handful of
// flops, so 1e-12 leaves orders of magnitude of headroom.
inline constexpr double kEps = 1e-12;

// Tolerance applied when normalizing user-supplied directions.
inline constexpr double kDirectionEps = 1e-9;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// A value that should be normalized (state norm, weight sum, direction) is not.
class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Shapes or factor structure of operands do not line up.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A measurement setting of the wrong kind (photon angle vs Bloch vector).
class KindError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A scalar argument lies outside its documented domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Dense row-major complex matrix. Small and value-semantic; the library only
// ever builds 2x2 and 4x4 instances.
class CplxMatrix {
 public:
  CplxMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw StructureError("matrix dimensions must be positive");
  }

  CplxMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw StructureError("matrix dimensions must be positive");
    if (entries_.size() != rows * cols)
      throw StructureError("entry count does not match matrix shape");
  }

  static CplxMatrix identity(std::size_t n) {
    CplxMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Complex>& entries() const { return entries_; }

  CplxMatrix adjoint() const {
    CplxMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  Complex trace() const {
    if (rows_ != cols_) throw StructureError("trace requires a square matrix");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  friend CplxMatrix operator+(const CplxMatrix& a, const CplxMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw StructureError("matrix addition shape mismatch");
    CplxMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
  }

  friend CplxMatrix operator-(const CplxMatrix& a, const CplxMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw StructureError("matrix subtraction shape mismatch");
    CplxMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] - b.entries_[k];
    return out;
  }

  friend CplxMatrix operator*(const Complex& s, const CplxMatrix& a) {
    CplxMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = s * a.entries_[k];
    return out;
  }

  friend CplxMatrix operator*(const CplxMatrix& a, const CplxMatrix& b) {
    if (a.cols_ != b.rows_) throw StructureError("matrix product shape mismatch");
    CplxMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

inline double max_abs_diff(const CplxMatrix& a, const CplxMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw StructureError("matrix comparison shape mismatch");
  double dev = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    dev = std::max(dev, std::abs(a.entries()[k] - b.entries()[k]));
  return dev;
}

// Entrywise comparison at absolute tolerance; this is the library's notion of
// matrix equality.
inline bool approx_equal(const CplxMatrix& a, const CplxMatrix& b, double tol = kEps) {
  return max_abs_diff(a, b) <= tol;
}

inline bool is_hermitian(const CplxMatrix& m, double tol = kEps) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

// Kronecker product. Composite row index = i1 * rows(m2) + i2, so the first
// factor owns the high-order part of the index.
inline CplxMatrix kron(const CplxMatrix& m1, const CplxMatrix& m2) {
  CplxMatrix out(m1.rows() * m2.rows(), m1.cols() * m2.cols());
  for (std::size_t i1 = 0; i1 < m1.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < m1.cols(); ++j1) {
      const Complex v = m1(i1, j1);
      for (std::size_t i2 = 0; i2 < m2.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < m2.cols(); ++j2)
          out(i1 * m2.rows() + i2, j1 * m2.cols() + j2) = v * m2(i2, j2);
    }
  return out;
}

// Tr(a b) without forming the product.
inline Complex trace_product(const CplxMatrix& a, const CplxMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw StructureError("trace product shape mismatch");
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  return t;
}

// Normalized state vector. Construction rejects amplitudes whose squared norm
// deviates from one by more than kEps; use Ket::normalized to rescale
// arbitrary amplitudes.
class Ket {
 public:
  explicit Ket(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw StructureError("ket must have positive dimension");
    if (std::abs(squared_norm() - 1.0) > kEps)
      throw NormalizationError("ket amplitudes are not normalized");
  }

  static Ket normalized(std::vector<Complex> amplitudes) {
    double n2 = 0.0;
    for (const Complex& a : amplitudes) n2 += std::norm(a);
    if (n2 <= 0.0) throw NormalizationError("cannot normalize a zero vector");
    const double inv = 1.0 / std::sqrt(n2);
    for (Complex& a : amplitudes) a *= inv;
    return Ket(std::move(amplitudes));
  }

  static Ket basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw StructureError("basis index out of range");
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return Ket(std::move(amps));
  }

  std::size_t dim() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

  double squared_norm() const {
    double n2 = 0.0;
    for (const Complex& a : amplitudes_) n2 += std::norm(a);
    return n2;
  }

  Ket tensor(const Ket& other) const {
    std::vector<Complex> amps(dim() * other.dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < other.dim(); ++j)
        amps[i * other.dim() + j] = amplitudes_[i] * other.amplitudes_[j];
    return Ket(std::move(amps));
  }

 private:
  std::vector<Complex> amplitudes_;
};

// Analyzer orientation: either a polarization analyzer angle in the xy-plane
// (photons) or a unit direction in ordinary space (Stern-Gerlach).
class MeasurementSetting {
 public:
  enum class Kind { PhotonAngle, BlochVector };

  static MeasurementSetting photon_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;  // fmod can land on 2*pi after the wrap
    MeasurementSetting s;
    s.kind_ = Kind::PhotonAngle;
    s.angle_ = t;
    return s;
  }

  static MeasurementSetting bloch_vector(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > kDirectionEps)) throw NormalizationError("Bloch direction has (near-)zero norm");
    MeasurementSetting s;
    s.kind_ = Kind::BlochVector;
    s.direction_ = {x / n, y / n, z / n};
    return s;
  }

  static MeasurementSetting bloch_vector(const std::array<double, 3>& d) {
    return bloch_vector(d[0], d[1], d[2]);
  }

  Kind kind() const { return kind_; }

  double angle() const {
    if (kind_ != Kind::PhotonAngle) throw KindError("setting is not a photon angle");
    return angle_;
  }

  const std::array<double, 3>& direction() const {
    if (kind_ != Kind::BlochVector) throw KindError("setting is not a Bloch vector");
    return direction_;
  }

 private:
  MeasurementSetting() = default;

  Kind kind_ = Kind::PhotonAngle;
  double angle_ = 0.0;
  std::array<double, 3> direction_{0.0, 0.0, 1.0};
};

// Inner product of the unit vectors behind two settings of the same kind.
inline double setting_dot(const MeasurementSetting& a, const MeasurementSetting& b) {
  if (a.kind() != b.kind()) throw KindError("settings have different kinds");
  if (a.kind() == MeasurementSetting::Kind::PhotonAngle) return std::cos(a.angle() - b.angle());
  const auto& da = a.direction();
  const auto& db = b.direction();
  return da[0] * db[0] + da[1] * db[1] + da[2] * db[2];
}

enum class Subsystem { First, Second };

// Hermitian, trace-one, positive-semidefinite operator. factor_dims records
// the bipartite tensor structure (dA, dB) when there is one; partial traces
// require it.
class DensityOperator {
 public:
  explicit DensityOperator(CplxMatrix matrix,
                           std::optional<std::pair<std::size_t, std::size_t>> factor_dims = {})
      : matrix_(std::move(matrix)), factor_dims_(factor_dims) {
    if (matrix_.rows() != matrix_.cols()) throw StructureError("density operator must be square");
    if (factor_dims_ && factor_dims_->first * factor_dims_->second != matrix_.rows())
      throw StructureError("factor dimensions do not multiply to the operator dimension");
    if (!is_hermitian(matrix_)) throw StructureError("density operator is not Hermitian");
    if (std::abs(matrix_.trace() - Complex(1.0)) > kEps)
      throw NormalizationError("density operator trace is not one");
    check_positive();
  }

  std::size_t dim() const { return matrix_.rows(); }
  const CplxMatrix& matrix() const { return matrix_; }
  std::optional<std::pair<std::size_t, std::size_t>> factor_dims() const { return factor_dims_; }

  DensityOperator with_factor_dims(std::size_t da, std::size_t db) const {
    return DensityOperator(matrix_, std::make_pair(da, db));
  }

 private:
  // PSD screen: closed-form eigenvalues for dim 2; for larger dims all
  // in-scope operators are convex mixtures of outer products, so a
  // non-negative diagonal plus Tr(rho^2) <= 1 is checked instead of running
  // an eigensolver.
  void check_positive() const {
    const std::size_t n = matrix_.rows();
    if (n == 2) {
      const double t = matrix_.trace().real();
      const Complex det =
          matrix_(0, 0) * matrix_(1, 1) - matrix_(0, 1) * matrix_(1, 0);
      const double disc = std::max(0.0, t * t - 4.0 * det.real());
      const double lambda_min = 0.5 * (t - std::sqrt(disc));
      if (lambda_min < -kEps) throw StructureError("density operator has a negative eigenvalue");
      return;
    }
    double p = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (matrix_(i, i).real() < -kEps)
        throw StructureError("density operator has a negative diagonal entry");
      for (std::size_t j = 0; j < n; ++j) p += std::norm(matrix_(i, j));
    }
    if (p > 1.0 + kEps) throw StructureError("density operator purity exceeds one");
  }

  CplxMatrix matrix_;
  std::optional<std::pair<std::size_t, std::size_t>> factor_dims_;
};

// Hermitian operator with eigenvalues +/-1 (difference of two orthogonal
// rank-1 projectors).
class Observable {
 public:
  explicit Observable(CplxMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw StructureError("observable must be square");
    if (!is_hermitian(matrix_)) throw StructureError("observable is not Hermitian");
    if (!approx_equal(matrix_ * matrix_, CplxMatrix::identity(matrix_.rows())))
      throw StructureError("observable does not square to the identity");
  }

  std::size_t dim() const { return matrix_.rows(); }
  const CplxMatrix& matrix() const { return matrix_; }

 private:
  CplxMatrix matrix_;
};

// |k><k|, optionally tagged with the bipartite factor structure of k.
inline DensityOperator density_from_pure(
    const Ket& k, std::optional<std::pair<std::size_t, std::size_t>> factor_dims = {}) {
  if (std::abs(k.squared_norm() - 1.0) > kEps)
    throw NormalizationError("state is not normalized");
  CplxMatrix m(k.dim(), k.dim());
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (std::size_t j = 0; j < k.dim(); ++j) m(i, j) = k[i] * std::conj(k[j]);
  return DensityOperator(std::move(m), factor_dims);
}

// Reduced density operator of the kept subsystem.
inline DensityOperator partial_trace(const DensityOperator& rho, Subsystem keep) {
  const auto dims = rho.factor_dims();
  if (!dims) throw StructureError("partial trace requires bipartite factor dimensions");
  const auto [da, db] = *dims;
  const CplxMatrix& m = rho.matrix();
  if (keep == Subsystem::First) {
    CplxMatrix out(da, da);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return DensityOperator(std::move(out));
  }
  CplxMatrix out(db, db);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l)
      for (std::size_t i = 0; i < da; ++i) out(k, l) += m(i * db + k, i * db + l);
  return DensityOperator(std::move(out));
}

// Tr(rho^2); 1 for pure states, 1/dim for maximally mixed ones. Equals the
// squared Frobenius norm because rho is Hermitian.
inline double purity(const DensityOperator& rho) {
  double p = 0.0;
  for (const Complex& e : rho.matrix().entries()) p += std::norm(e);
  return p;
}

// |a><a| - |a_perp><a_perp| for the analyzer direction a = (cos t, sin t),
// with a_perp at t + pi/2. The result does not depend on the orientation
// chosen for a_perp.
inline Observable photon_observable(const MeasurementSetting& s) {
  const double t = s.angle();  // KindError for Bloch settings
  const double c = std::cos(t);
  const double sn = std::sin(t);
  CplxMatrix m(2, 2);
  m(0, 0) = c * c - sn * sn;
  m(0, 1) = 2.0 * c * sn;
  m(1, 0) = 2.0 * c * sn;
  m(1, 1) = sn * sn - c * c;
  return Observable(std::move(m));
}

// |a><a| - |-a><-a| = a . sigma for the unit Bloch direction a.
inline Observable spin_observable(const MeasurementSetting& s) {
  const auto& d = s.direction();  // KindError for photon settings
  CplxMatrix m(2, 2);
  m(0, 0) = d[2];
  m(0, 1) = Complex(d[0], -d[1]);
  m(1, 0) = Complex(d[0], d[1]);
  m(1, 1) = -d[2];
  return Observable(std::move(m));
}

// Tr(rho obs). The trace of a product of Hermitian operators is real; any
// imaginary residue beyond kEps indicates corrupted inputs.
inline double expectation(const DensityOperator& rho, const Observable& obs) {
  if (rho.dim() != obs.dim()) throw StructureError("expectation dimension mismatch");
  const Complex t = trace_product(rho.matrix(), obs.matrix());
  if (std::abs(t.imag()) > kEps)
    throw DomainError("expectation value has a non-negligible imaginary part");
  return t.real();
}

// Tr(rho (obsA x obsB)) on a bipartite state.
inline double joint_expectation(const DensityOperator& rho, const Observable& obs_a,
                                const Observable& obs_b) {
  const auto dims = rho.factor_dims();
  if (!dims) throw StructureError("joint expectation requires bipartite factor dimensions");
  if (dims->first != obs_a.dim() || dims->second != obs_b.dim())
    throw StructureError("joint expectation dimension mismatch");
  const Complex t = trace_product(rho.matrix(), kron(obs_a.matrix(), obs_b.matrix()));
  if (std::abs(t.imag()) > kEps)
    throw DomainError("joint expectation value has a non-negligible imaginary part");
  return t.real();
}

}  // namespace leggett
