#pragma once

// Preset operators and states: spin-j angular momentum components, spin
// basis states, the rotated spin-1 state, and a truncated harmonic
// oscillator x,p pair.
//
// Spin matrices live in the |j,m> basis ordered m = +j ... -j, so the
// spin-1 basis reads |+>, |0>, |->. The oscillator presets act on the
// number basis |0> ... |dim-1>; at finite dim the canonical commutator
// [x,p] = ih only holds away from the truncation corner, which is fine
// here because every bound applies to arbitrary Hermitian matrices.

#include "qubound/core.hpp"

namespace qubound {

enum class SpinComponent { X, Y, Z };
enum class OscillatorComponent { X, P };

struct SpinLabel {
  double j;  // half-integer, j >= 1/2
  SpinComponent component;
  double hbar = 1.0;
};

struct OscillatorLabel {
  int dim;  // >= 2
  OscillatorComponent component;
  double hbar = 1.0;
};

/// 2j+1 for a valid half-integer j >= 1/2; throws std::invalid_argument otherwise.
int spin_dimension(double j);

/// Angular momentum component matrix built from the ladder elements
/// h*sqrt(j(j+1) - m(m+1)).
HermitianOperator spin_operator(const SpinLabel& label);

/// Basis vector |j,m> at position j-m; throws on m outside -j..+j or
/// m not differing from j by an integer.
StateVector spin_basis_state(double j, double m);

/// cos(theta)|+> + sin(theta)|-> in the spin-1 basis.
StateVector spin1_theta_state(double theta);

/// Truncated x = sqrt(h/2)(a^dag + a) or p = i*sqrt(h/2)(a^dag - a).
HermitianOperator oscillator_operator(const OscillatorLabel& label);

}  // namespace qubound
