#include "qubound/operators.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace qubound {

namespace {

// doubled value of a half-integer, or nullopt when x is not one
std::optional<long long> doubled_half_integer(double x) {
  const double twice = 2.0 * x;
  const double rounded = std::round(twice);
  if (std::abs(twice - rounded) > 1e-9 || std::abs(rounded) > 1e15) return std::nullopt;
  return static_cast<long long>(rounded);
}

Matrix raising_matrix(double j, double hbar) {
  const int d = spin_dimension(j);
  Matrix up = Matrix::Zero(d, d);
  for (int k = 1; k < d; ++k) {
    const double m = j - k;  // column state |j,m>
    up(k - 1, k) = hbar * std::sqrt(j * (j + 1) - m * (m + 1));
  }
  return up;
}

}  // namespace

int spin_dimension(double j) {
  const auto twice = doubled_half_integer(j);
  if (!twice || *twice < 1) {
    throw std::invalid_argument("spin_dimension: j must be a half-integer >= 1/2, got " +
                                std::to_string(j));
  }
  return static_cast<int>(*twice) + 1;
}

HermitianOperator spin_operator(const SpinLabel& label) {
  if (label.hbar <= 0.0) {
    throw std::invalid_argument("spin_operator: hbar must be positive");
  }
  const int d = spin_dimension(label.j);
  switch (label.component) {
    case SpinComponent::X: {
      const Matrix up = raising_matrix(label.j, label.hbar);
      return HermitianOperator(Matrix((up + up.adjoint()) / 2.0));
    }
    case SpinComponent::Y: {
      const Matrix up = raising_matrix(label.j, label.hbar);
      return HermitianOperator(Matrix((up - up.adjoint()) / Complex(0.0, 2.0)));
    }
    case SpinComponent::Z: {
      Matrix z = Matrix::Zero(d, d);
      for (int k = 0; k < d; ++k) z(k, k) = label.hbar * (label.j - k);
      return HermitianOperator(std::move(z));
    }
  }
  throw std::logic_error("spin_operator: unreachable");
}

StateVector spin_basis_state(double j, double m) {
  const int d = spin_dimension(j);
  const long long twice_j = *doubled_half_integer(j);
  const auto twice_m = doubled_half_integer(m);
  const bool integer_offset = twice_m && (twice_j - *twice_m) % 2 == 0;
  if (!integer_offset || *twice_m < -twice_j || *twice_m > twice_j) {
    throw std::invalid_argument("spin_basis_state: m = " + std::to_string(m) +
                                " is not an allowed projection for j = " + std::to_string(j));
  }
  const int index = static_cast<int>((twice_j - *twice_m) / 2);
  return StateVector(Ket::basis(d, index));
}

StateVector spin1_theta_state(double theta) {
  Vector v = Vector::Zero(3);
  v(0) = std::cos(theta);
  v(2) = std::sin(theta);
  return StateVector(Ket(std::move(v)));
}

HermitianOperator oscillator_operator(const OscillatorLabel& label) {
  if (label.dim < 2) {
    throw std::invalid_argument("oscillator_operator: dim must be at least 2");
  }
  if (label.hbar <= 0.0) {
    throw std::invalid_argument("oscillator_operator: hbar must be positive");
  }
  Matrix lower = Matrix::Zero(label.dim, label.dim);
  for (int n = 0; n + 1 < label.dim; ++n) lower(n, n + 1) = std::sqrt(n + 1.0);
  const double scale = std::sqrt(label.hbar / 2.0);
  if (label.component == OscillatorComponent::X) {
    return HermitianOperator(Matrix(scale * (lower.adjoint() + lower)));
  }
  return HermitianOperator(Matrix(Complex(0.0, scale) * (lower.adjoint() - lower)));
}

}  // namespace qubound
