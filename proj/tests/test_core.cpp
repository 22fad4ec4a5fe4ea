#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qubound/core.hpp"
#include "qubound/random.hpp"

using namespace qubound;

namespace {

const Complex I{0.0, 1.0};

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

StateVector random_state(int dim, std::uint64_t seed) {
  GaussianStream g(seed);
  Vector v(dim);
  for (int k = 0; k < dim; ++k) v(k) = Complex(g.next(), g.next());
  return StateVector(Ket(v / v.norm()));
}

}  // namespace

TEST_CASE("ket construction and arithmetic") {
  Ket e0 = Ket::basis(3, 0);
  Ket e2 = Ket::basis(3, 2);
  CHECK(e0.dim() == 3);
  CHECK(e0[0] == Complex(1, 0));
  CHECK(e0[1] == Complex(0, 0));

  Ket sum = e0 + Complex(0, 2) * e2;
  CHECK(sum[2] == Complex(0, 2));
  CHECK(sum.norm_squared() == doctest::Approx(5.0));
  CHECK((sum - e0).norm() == doctest::Approx(2.0));

  CHECK(Ket::zero(4).norm() == 0.0);
  CHECK_THROWS_AS(Ket::basis(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(Ket::basis(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(Ket{Vector::Zero(0)}, std::invalid_argument);

  Vector bad(2);
  bad << Complex(std::nan(""), 0), Complex(0, 0);
  CHECK_THROWS_AS(Ket{bad}, std::invalid_argument);

  CHECK_THROWS_AS(Ket::basis(2, 0) + Ket::basis(3, 0), std::invalid_argument);
}

TEST_CASE("state vector accepts near-unit norm and stores exact unit norm") {
  Vector v(2);
  v << Complex(1.0 + 4e-10, 0), Complex(0, 0);
  StateVector psi{Ket(v)};
  CHECK(psi.ket().norm() == 1.0);  // rescaled exactly

  Vector off(2);
  off << Complex(1.0 + 1e-6, 0), Complex(0, 0);
  CHECK_THROWS_AS(StateVector{Ket(off)}, std::invalid_argument);
  CHECK_THROWS_AS(StateVector{Ket::zero(2)}, std::invalid_argument);
}

TEST_CASE("hermitian operator validation and symmetrization") {
  HermitianOperator z{pauli_z()};
  CHECK(z.dim() == 2);
  CHECK(z.entry(0, 0) == Complex(1, 0));
  CHECK(z.entry_scale() == 1.0);

  // asymmetry below tolerance is symmetrized away exactly
  Matrix near = pauli_x();
  near(0, 1) += Complex(0, 4e-11);
  HermitianOperator fixed{near};
  CHECK(fixed.entry(0, 1) == std::conj(fixed.entry(1, 0)));

  Matrix off = pauli_x();
  off(0, 1) = Complex(0, 1);  // conjugate-transpose mismatch of order one
  CHECK_THROWS_AS(HermitianOperator{off}, std::invalid_argument);

  CHECK_THROWS_AS(HermitianOperator{Matrix::Zero(2, 3)}, std::invalid_argument);

  HermitianOperator id = HermitianOperator::identity(3);
  CHECK(id.matrix().isIdentity(0.0));

  HermitianOperator scaled = 2.5 * z;
  CHECK(scaled.entry(1, 1) == Complex(-2.5, 0));
}

TEST_CASE("inner product conjugates the first argument") {
  Vector x(2), y(2);
  x << Complex(1, 2), Complex(3, 0);
  y << Complex(0, 1), Complex(1, 0);
  // conj(1+2i)*i + conj(3)*1 = (1-2i)i + 3 = 5 + i
  Complex v = inner(Ket(x), Ket(y));
  CHECK(v.real() == doctest::Approx(5.0));
  CHECK(v.imag() == doctest::Approx(1.0));
  CHECK(inner(Ket(y), Ket(x)) == std::conj(v));
  CHECK_THROWS_AS(inner(Ket::basis(2, 0), Ket::basis(3, 0)), std::invalid_argument);
}

TEST_CASE("expectation and variance on a rotated qubit") {
  const double theta = 0.3;
  Vector v(2);
  v << Complex(std::cos(theta), 0), Complex(std::sin(theta), 0);
  StateVector psi{Ket(v)};
  HermitianOperator z{pauli_z()};

  // <Z> = cos^2 - sin^2 = cos 2theta, Var Z = 1 - cos^2 2theta
  CHECK(expectation(z, psi) == doctest::Approx(std::cos(2 * theta)).epsilon(1e-12));
  const double var = variance(z, psi);
  CHECK(var == doctest::Approx(1.0 - std::pow(std::cos(2 * theta), 2)).epsilon(1e-12));

  // variance of the identity clamps to exactly zero
  CHECK(variance(HermitianOperator::identity(2), psi) == 0.0);
}

TEST_CASE("deviation vector carries the variance and is orthogonal to the state") {
  StateVector psi = random_state(5, 77);
  GaussianStream g(123);
  Matrix m(5, 5);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) m(r, c) = Complex(g.next(), g.next());
  HermitianOperator op{Matrix(m + m.adjoint())};

  Ket dev = deviation_vector(op, psi);
  CHECK(std::abs(inner(psi.ket(), dev)) < 1e-12);
  // second route to the variance: squared norm of the deviation vector
  CHECK(dev.norm_squared() == doctest::Approx(variance(op, psi)).epsilon(1e-12));
}

TEST_CASE("commutator and anticommutator expectations on pauli pairs") {
  HermitianOperator x{pauli_x()}, y{pauli_y()}, z{pauli_z()};
  StateVector up{Ket::basis(2, 0)};

  // [X,Y] = 2iZ so <up|[X,Y]|up> = 2i; {X,Y} = 0
  Complex comm = commutator_expectation(x, y, up);
  CHECK(comm.real() == doctest::Approx(0.0));
  CHECK(comm.imag() == doctest::Approx(2.0));
  CHECK(anticommutator_expectation(x, y, up) == doctest::Approx(0.0));
  // <up|{X,X}|up> = 2<X^2> = 2
  CHECK(anticommutator_expectation(x, x, up) == doctest::Approx(2.0));

  // commutator expectation is purely imaginary for any state
  StateVector psi = random_state(2, 5);
  CHECK(commutator_expectation(x, z, psi).real() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("complement basis is orthonormal, orthogonal to the state, deterministic") {
  for (int dim : {2, 3, 4, 6, 8}) {
    for (std::uint64_t seed : {1ULL, 2ULL, 9ULL}) {
      StateVector psi = random_state(dim, mix_seed(400, dim, seed));
      auto basis = orthonormal_complement_basis(psi);
      REQUIRE(static_cast<int>(basis.size()) == dim - 1);
      for (int a = 0; a < dim - 1; ++a) {
        CHECK(std::abs(inner(psi.ket(), basis[a].ket())) < 1e-12);
        for (int b = 0; b < dim - 1; ++b) {
          const Complex g = inner(basis[a].ket(), basis[b].ket());
          CHECK(std::abs(g - (a == b ? Complex(1, 0) : Complex(0, 0))) < 1e-12);
        }
      }
      // byte-identical on repeat evaluation
      Matrix q1 = complement_matrix(psi);
      Matrix q2 = complement_matrix(psi);
      CHECK((q1 - q2).cwiseAbs().maxCoeff() == 0.0);
    }
  }

  // for a basis state the complement is the remaining basis states
  StateVector e0{Ket::basis(3, 0)};
  Matrix q = complement_matrix(e0);
  CHECK((q.col(0) - Ket::basis(3, 1).amplitudes()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((q.col(1) - Ket::basis(3, 2).amplitudes()).cwiseAbs().maxCoeff() < 1e-15);

  // leading amplitude zero exercises the s = 1 branch
  Vector v(3);
  v << Complex(0, 0), Complex(0.6, 0), Complex(0, 0.8);
  StateVector psi{Ket(v)};
  auto basis = orthonormal_complement_basis(psi);
  for (const auto& b : basis) CHECK(std::abs(inner(psi.ket(), b.ket())) < 1e-12);

  CHECK_THROWS_AS(orthonormal_complement_basis(StateVector{Ket::basis(1, 0)}),
                  std::invalid_argument);
}

TEST_CASE("gaussian stream is reproducible and roughly standard normal") {
  GaussianStream a(42), b(42), c(43);
  bool all_equal = true, any_differ = false;
  double sum = 0.0, sum_sq = 0.0;
  const int n = 100000;
  GaussianStream big(42);
  for (int k = 0; k < 64; ++k) {
    const double va = a.next(), vb = b.next();
    all_equal = all_equal && (va == vb);
    any_differ = any_differ || (va != c.next());
  }
  CHECK(all_equal);
  CHECK(any_differ);
  for (int k = 0; k < n; ++k) {
    const double v = big.next();
    sum += v;
    sum_sq += v * v;
  }
  CHECK(std::abs(sum / n) < 0.02);
  CHECK(sum_sq / n == doctest::Approx(1.0).epsilon(0.02));

  CHECK(mix_seed(1, 2, 3) != mix_seed(1, 3, 2));
  CHECK(mix_seed(7, 0) == mix_seed(7, 0));
}
