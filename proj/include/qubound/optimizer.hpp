#pragma once

// Search over the orthogonal complement of the state for the psi_perp that
// maximizes a bound family's RHS, plus the theta sweeps for the two spin-1
// worked examples.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qubound/bounds.hpp"
#include "qubound/core.hpp"

namespace qubound {

struct OptimizeConfig {
  BoundFamily objective = BoundFamily::GenSumHRS;  // must be a sum or product perp family
  int restarts = 32;
  double initial_step = 0.3;
  double shrink_factor = 0.5;
  double step_floor = 1e-8;
  std::uint64_t seed = 0;

  bool operator==(const OptimizeConfig&) const = default;
};

struct OptimizeResult {
  StateVector best_perp;
  double best_rhs = 0.0;
  BoundReport report;  // full report at best_perp
  long long evaluations = 0;
  bool converged = false;  // every restart ran down to the step floor
};

/// Multistart pattern search. psi_perp is parametrized as Q*u with Q the
/// orthonormal complement basis and u a unit vector of 2(d-1) real
/// coordinates (re/im interleaved). Each restart perturbs one coordinate at
/// a time by +-step, renormalizes, accepts improvements, and halves the
/// step when a full pass yields none. Restart starts are drawn from
/// counter-based seeds, and ties across restarts go to the lowest restart
/// index, so results are deterministic for a fixed config.
/// Throws std::invalid_argument on d = 1, an objective without a psi_perp
/// (or the alpha family, whose RHS is identically zero), or a malformed
/// config.
OptimizeResult optimize_perp(const HermitianOperator& a, const HermitianOperator& b,
                             const StateVector& psi, const OptimizeConfig& config);

// Spin-1 sweep presets (A = Jx, B = Jy, hbar = 1):
//   Example1: psi = cos(theta)|+> + sin(theta)|->, psi_perp = |0>
//   Example2: psi = |0>,  psi_perp = cos(theta)|+> + sin(theta)|->
enum class SweepPreset { Example1, Example2 };

std::string_view sweep_preset_name(SweepPreset preset);
std::optional<SweepPreset> sweep_preset_from_name(std::string_view name);

struct SweepRow {
  double theta = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  BoundFamily family = BoundFamily::Schwarz;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool satisfied = false;
};

struct SweepTable {
  std::vector<SweepRow> rows;  // ordered by (theta, family)
};

/// Evaluates each requested family on the preset pair at every grid angle.
/// Throws std::invalid_argument on an empty grid.
SweepTable sweep_theta(SweepPreset preset, const std::vector<BoundFamily>& families,
                       const std::vector<double>& grid);

}  // namespace qubound
