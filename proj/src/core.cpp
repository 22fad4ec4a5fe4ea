#include "qubound/core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qubound {

namespace {

void require_same_dim(int lhs, int rhs, const char* what) {
  if (lhs != rhs) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(lhs) + " vs " + std::to_string(rhs) + ")");
  }
}

double residue_scale(const HermitianOperator& op) {
  return std::max(1.0, op.entry_scale());
}

double residue_scale(const HermitianOperator& a, const HermitianOperator& b) {
  return std::max(1.0, a.entry_scale() * b.entry_scale());
}

}  // namespace

Ket::Ket(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) {
    throw std::invalid_argument("Ket: dimension must be positive");
  }
  if (!amplitudes_.allFinite()) {
    throw std::invalid_argument("Ket: amplitudes must be finite");
  }
}

Ket Ket::zero(int dim) { return Ket(Vector::Zero(dim)); }

Ket Ket::basis(int dim, int index) {
  if (index < 0 || index >= dim) {
    throw std::invalid_argument("Ket::basis: index out of range");
  }
  Vector v = Vector::Zero(dim);
  v(index) = Complex(1.0, 0.0);
  return Ket(std::move(v));
}

Ket operator+(const Ket& x, const Ket& y) {
  require_same_dim(x.dim(), y.dim(), "Ket addition");
  return Ket(x.amplitudes() + y.amplitudes());
}

Ket operator-(const Ket& x, const Ket& y) {
  require_same_dim(x.dim(), y.dim(), "Ket subtraction");
  return Ket(x.amplitudes() - y.amplitudes());
}

Ket operator*(const Complex& c, const Ket& x) { return Ket(c * x.amplitudes()); }

StateVector::StateVector(Ket ket) : ket_(std::move(ket)) {
  const double n = ket_.norm();
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw std::invalid_argument("StateVector: norm " + std::to_string(n) +
                                " differs from 1 by more than 1e-9");
  }
  // Skip the rescale once the norm sits at the representable fixed point; dividing
  // again would perturb low bits, and construction must be idempotent so that a
  // state written out and re-read reproduces the same amplitudes.
  const double fixed_point = (4.0 * ket_.dim() + 16.0) * std::numeric_limits<double>::epsilon();
  if (std::abs(n - 1.0) > fixed_point) {
    ket_ = Ket(ket_.amplitudes() / n);
  }
}

HermitianOperator::HermitianOperator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("HermitianOperator: matrix must be square and nonempty");
  }
  if (!entries_.allFinite()) {
    throw std::invalid_argument("HermitianOperator: entries must be finite");
  }
  const double scale = entries_.cwiseAbs().maxCoeff();
  const double deviation = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (deviation > kHermitianTolerance * scale) {
    throw std::invalid_argument("HermitianOperator: deviation from conjugate transpose " +
                                std::to_string(deviation) + " exceeds tolerance for scale " +
                                std::to_string(scale));
  }
  entries_ = ((entries_ + entries_.adjoint()) / 2.0).eval();
  entry_scale_ = entries_.cwiseAbs().maxCoeff();
}

HermitianOperator HermitianOperator::identity(int dim) {
  return HermitianOperator(Matrix::Identity(dim, dim));
}

HermitianOperator operator*(double c, const HermitianOperator& op) {
  return HermitianOperator(c * op.matrix());
}

Complex inner(const Ket& x, const Ket& y) {
  require_same_dim(x.dim(), y.dim(), "inner");
  return x.amplitudes().dot(y.amplitudes());  // Eigen's dot conjugates the first factor
}

Ket apply(const HermitianOperator& op, const Ket& x) {
  require_same_dim(op.dim(), x.dim(), "apply");
  return Ket(op.matrix() * x.amplitudes());
}

double expectation(const HermitianOperator& op, const StateVector& psi) {
  const Complex value = inner(psi.ket(), apply(op, psi.ket()));
  if (std::abs(value.imag()) > 1e-12 * residue_scale(op)) {
    throw std::runtime_error("expectation: imaginary residue " + std::to_string(value.imag()) +
                             " (non-Hermitian input escaped validation?)");
  }
  return value.real();
}

double variance(const HermitianOperator& op, const StateVector& psi) {
  const double mean = expectation(op, psi);
  const double second_moment = apply(op, psi.ket()).norm_squared();
  const double var = second_moment - mean * mean;
  if (var < 0.0) {
    if (var >= -1e-12) return 0.0;
    throw std::runtime_error("variance: value " + std::to_string(var) +
                             " below the roundoff clamp (broken input validation?)");
  }
  return var;
}

Ket deviation_vector(const HermitianOperator& op, const StateVector& psi) {
  const double mean = expectation(op, psi);
  return Ket(op.matrix() * psi.amplitudes() - mean * psi.amplitudes());
}

Complex commutator_expectation(const HermitianOperator& a, const HermitianOperator& b,
                               const StateVector& psi) {
  require_same_dim(a.dim(), b.dim(), "commutator_expectation");
  const Ket b_psi = apply(b, psi.ket());
  const Ket a_psi = apply(a, psi.ket());
  return inner(psi.ket(), apply(a, b_psi)) - inner(psi.ket(), apply(b, a_psi));
}

double anticommutator_expectation(const HermitianOperator& a, const HermitianOperator& b,
                                  const StateVector& psi) {
  require_same_dim(a.dim(), b.dim(), "anticommutator_expectation");
  const Ket b_psi = apply(b, psi.ket());
  const Ket a_psi = apply(a, psi.ket());
  const Complex value = inner(psi.ket(), apply(a, b_psi)) + inner(psi.ket(), apply(b, a_psi));
  if (std::abs(value.imag()) > 1e-12 * residue_scale(a, b)) {
    throw std::runtime_error("anticommutator_expectation: imaginary residue " +
                             std::to_string(value.imag()));
  }
  return value.real();
}

Matrix complement_matrix(const StateVector& psi) {
  const int d = psi.dim();
  if (d < 2) {
    throw std::invalid_argument("complement_matrix: dimension must be at least 2");
  }
  const Vector& a = psi.amplitudes();
  // Householder reflector H = I - 2 v v^dagger / <v|v> with v = psi + s e_0
  // maps e_0 onto -conj(s) psi, so columns 1..d-1 of H span the complement.
  const double head = std::abs(a(0));
  const Complex s = head > 0.0 ? a(0) / head : Complex(1.0, 0.0);
  Vector v = a;
  v(0) += s;
  const double vsq = v.squaredNorm();
  Matrix q(d, d - 1);
  for (int k = 1; k < d; ++k) {
    Vector col = (-2.0 * std::conj(v(k)) / vsq) * v;
    col(k) += 1.0;
    q.col(k - 1) = col;
  }
  return q;
}

std::vector<StateVector> orthonormal_complement_basis(const StateVector& psi) {
  const Matrix q = complement_matrix(psi);
  std::vector<StateVector> basis;
  basis.reserve(q.cols());
  for (int k = 0; k < q.cols(); ++k) {
    basis.emplace_back(Ket(q.col(k)));
  }
  return basis;
}

}  // namespace qubound
