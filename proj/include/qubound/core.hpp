#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qubound {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Bra-ket convention used throughout this library: inner(x, y) = <x|y> is
// conjugate-linear in the FIRST argument, so inner(c*x, y) == conj(c)*inner(x, y)
// and inner(x, x) is real and nonnegative.

inline constexpr double kNormTolerance = 1e-9;        // unit-norm acceptance window
inline constexpr double kHermitianTolerance = 1e-10;  // relative to the largest entry

/// Complex column vector of arbitrary norm (deviation vectors, operator images).
class Ket {
 public:
  explicit Ket(Vector amplitudes);

  static Ket zero(int dim);
  static Ket basis(int dim, int index);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](int i) const { return amplitudes_(i); }

  double norm() const { return amplitudes_.norm(); }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

 private:
  Vector amplitudes_;
};

Ket operator+(const Ket& x, const Ket& y);
Ket operator-(const Ket& x, const Ket& y);
Ket operator*(const Complex& c, const Ket& x);

/// Unit-norm state. Construction accepts kets within 1e-9 of unit norm and
/// rescales, so downstream arithmetic sees ||psi|| = 1 to machine precision.
class StateVector {
 public:
  explicit StateVector(Ket ket);
  explicit StateVector(Vector amplitudes) : StateVector(Ket(std::move(amplitudes))) {}

  int dim() const { return ket_.dim(); }
  const Ket& ket() const { return ket_; }
  const Vector& amplitudes() const { return ket_.amplitudes(); }

 private:
  Ket ket_;
};

/// Dense Hermitian matrix. Construction rejects inputs whose entrywise
/// deviation from the conjugate transpose exceeds 1e-10 times the largest
/// entry magnitude, then stores the exactly symmetrized (M + M^dagger)/2.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix entries);

  static HermitianOperator identity(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Complex entry(int row, int col) const { return entries_(row, col); }

  /// Largest entry magnitude, the scale against which residue checks run.
  double entry_scale() const { return entry_scale_; }

 private:
  Matrix entries_;
  double entry_scale_;
};

HermitianOperator operator*(double c, const HermitianOperator& op);

/// <x|y>, conjugate-linear in the first argument.
Complex inner(const Ket& x, const Ket& y);

/// O|x>.
Ket apply(const HermitianOperator& op, const Ket& x);

/// <psi|O|psi>. The imaginary residue must stay below 1e-12 x entry scale
/// (a larger residue means a non-Hermitian matrix escaped validation) and is
/// discarded.
double expectation(const HermitianOperator& op, const StateVector& psi);

/// <O^2> - <O>^2, clamped to 0 when within -1e-12 of zero. A more negative
/// value throws: it signals broken input validation, not roundoff.
double variance(const HermitianOperator& op, const StateVector& psi);

/// (O - <O>)|psi>; its norm-square equals variance(O, psi).
Ket deviation_vector(const HermitianOperator& op, const StateVector& psi);

/// <psi|AB - BA|psi>. Purely imaginary for Hermitian inputs; both parts are
/// returned so callers can check the residue.
Complex commutator_expectation(const HermitianOperator& a, const HermitianOperator& b,
                               const StateVector& psi);

/// <psi|AB + BA|psi>, real for Hermitian inputs; imaginary residue is checked
/// against 1e-12 x scale and discarded.
double anticommutator_expectation(const HermitianOperator& a, const HermitianOperator& b,
                                  const StateVector& psi);

/// d-1 orthonormal states spanning the orthogonal complement of psi, built by
/// completing psi to a unitary with a single Householder reflector. Fully
/// deterministic for a given psi.
std::vector<StateVector> orthonormal_complement_basis(const StateVector& psi);

/// Same complement basis as a d x (d-1) matrix, one state per column.
Matrix complement_matrix(const StateVector& psi);

}  // namespace qubound
