#include "qubound/optimizer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qubound/operators.hpp"
#include "qubound/random.hpp"

namespace qubound {

namespace {

// global safety valve; never reached for the intended d <= 8 workloads
constexpr long long kEvaluationCap = 2'000'000;

void validate_config(const OptimizeConfig& config) {
  if (!family_needs_perp(config.objective) || config.objective == BoundFamily::GeneralAlpha) {
    throw std::invalid_argument("optimize_perp: objective \"" +
                                std::string(family_name(config.objective)) +
                                "\" is not a psi_perp-dependent sum or product family");
  }
  if (config.restarts < 1) throw std::invalid_argument("optimize_perp: restarts must be >= 1");
  if (config.initial_step <= 0.0) {
    throw std::invalid_argument("optimize_perp: initial_step must be positive");
  }
  if (config.shrink_factor <= 0.0 || config.shrink_factor >= 1.0) {
    throw std::invalid_argument("optimize_perp: shrink_factor must be in (0, 1)");
  }
  if (config.step_floor <= 0.0 || config.step_floor >= config.initial_step) {
    throw std::invalid_argument("optimize_perp: step_floor must be in (0, initial_step)");
  }
}

}  // namespace

OptimizeResult optimize_perp(const HermitianOperator& a, const HermitianOperator& b,
                             const StateVector& psi, const OptimizeConfig& config) {
  validate_config(config);
  if (a.dim() != b.dim() || a.dim() != psi.dim()) {
    throw std::invalid_argument("optimize_perp: dimension mismatch");
  }
  const int d = psi.dim();
  if (d < 2) {
    throw std::invalid_argument("optimize_perp: the complement of a 1-dimensional state is empty");
  }

  const Matrix q = complement_matrix(psi);
  const int n = 2 * (d - 1);  // real search coordinates, re/im interleaved

  auto to_perp = [&](const Eigen::VectorXd& u) {
    Vector coeffs(d - 1);
    for (int k = 0; k + 1 < n; k += 2) coeffs(k / 2) = Complex(u(k), u(k + 1));
    Vector amplitudes = q * coeffs;
    return StateVector(Ket(amplitudes / amplitudes.norm()));
  };

  long long evaluations = 0;
  auto rhs_at = [&](const Eigen::VectorXd& u) {
    ++evaluations;
    return family_report(config.objective, perp_context(a, b, psi, to_perp(u))).rhs;
  };

  double best_value = 0.0;
  Eigen::VectorXd best_u;
  bool converged = true;

  for (int restart = 0; restart < config.restarts; ++restart) {
    GaussianStream stream(mix_seed(config.seed, static_cast<std::uint64_t>(restart)));
    Eigen::VectorXd u(n);
    for (int k = 0; k < n; ++k) u(k) = stream.next();
    u.normalize();

    double value = rhs_at(u);
    double step = config.initial_step;
    while (step > config.step_floor) {
      if (evaluations >= kEvaluationCap) {
        converged = false;
        break;
      }
      bool improved = false;
      for (int i = 0; i < n; ++i) {
        for (double delta : {step, -step}) {
          Eigen::VectorXd candidate = u;
          candidate(i) += delta;
          candidate.normalize();
          const double candidate_value = rhs_at(candidate);
          if (candidate_value > value) {
            u = candidate;
            value = candidate_value;
            improved = true;
          }
        }
      }
      if (!improved) step *= config.shrink_factor;
    }

    // strict improvement keeps the lowest restart index on ties
    if (best_u.size() == 0 || value > best_value) {
      best_value = value;
      best_u = u;
    }
  }

  OptimizeResult result{to_perp(best_u)};
  result.report = family_report(config.objective, perp_context(a, b, psi, result.best_perp));
  result.best_rhs = result.report.rhs;
  result.evaluations = evaluations;
  result.converged = converged;
  return result;
}

std::string_view sweep_preset_name(SweepPreset preset) {
  switch (preset) {
    case SweepPreset::Example1: return "example-1";
    case SweepPreset::Example2: return "example-2";
  }
  throw std::logic_error("sweep_preset_name: unreachable");
}

std::optional<SweepPreset> sweep_preset_from_name(std::string_view name) {
  if (name == "example-1") return SweepPreset::Example1;
  if (name == "example-2") return SweepPreset::Example2;
  return std::nullopt;
}

SweepTable sweep_theta(SweepPreset preset, const std::vector<BoundFamily>& families,
                       const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("sweep_theta: grid must be nonempty");

  const HermitianOperator a = spin_operator({1.0, SpinComponent::X});
  const HermitianOperator b = spin_operator({1.0, SpinComponent::Y});
  const StateVector middle = spin_basis_state(1, 0);

  SweepTable table;
  table.rows.reserve(grid.size() * families.size());
  for (double theta : grid) {
    const StateVector rotated = spin1_theta_state(theta);
    const StateVector& psi = preset == SweepPreset::Example1 ? rotated : middle;
    const StateVector& perp = preset == SweepPreset::Example1 ? middle : rotated;
    const double var_a = variance(a, psi);
    const double var_b = variance(b, psi);
    for (BoundFamily family : families) {
      const BoundReport report = evaluate(family, a, b, psi, &perp);
      SweepRow row;
      row.theta = theta;
      row.var_a = var_a;
      row.var_b = var_b;
      row.family = family;
      row.lhs = report.lhs;
      row.rhs = report.rhs;
      row.slack = report.slack;
      row.satisfied = report.satisfied;
      table.rows.push_back(row);
    }
  }
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const SweepRow& lhs, const SweepRow& rhs) {
                     if (lhs.theta != rhs.theta) return lhs.theta < rhs.theta;
                     return lhs.family < rhs.family;
                   });
  return table;
}

}  // namespace qubound
