// Acceptance gate: one line per criterion, nonzero exit if any fail.
// Each criterion drives the public library surface and checks against
// closed forms or independent oracles with the stated tolerances.

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "qubound/bounds.hpp"
#include "qubound/operators.hpp"
#include "qubound/optimizer.hpp"
#include "qubound/random.hpp"
#include "qubound/verify.hpp"

using namespace qubound;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Check {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::vector<double> theta_grid() {
  std::vector<double> grid(17);
  for (int k = 0; k < 17; ++k) grid[k] = static_cast<double>(k) * (kPi / 2.0) / 16.0;
  return grid;
}

// Walks attempt seeds until the drawn instance satisfies `keep`. Dimension 2
// never has a non-degenerate perp context (the complement of psi is a single
// direction, which the B deviation always fills), so callers that need the
// alpha machinery pass dims >= 3.
template <typename Predicate>
RandomInstance draw_instance(const std::vector<int>& dims, std::uint64_t base, int index,
                             Predicate keep) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int dim = dims[static_cast<std::size_t>(index) % dims.size()];
    RandomInstance inst = random_instance(dim, mix_seed(base, index, attempt));
    if (keep(inst)) return inst;
  }
  std::fprintf(stderr, "could not draw a usable instance\n");
  std::exit(1);
}

// 1. Rotated spin-1 state against |0>: both MP bounds, the generalized sum
//    bound, and the ladder matrix elements on a 17-point grid.
Check criterion1() {
  Check c;
  const HermitianOperator jx = spin_operator({1.0, SpinComponent::X, 1.0});
  const HermitianOperator jy = spin_operator({1.0, SpinComponent::Y, 1.0});
  const StateVector perp = spin_basis_state(1, 0);
  for (double theta : theta_grid()) {
    const StateVector psi = spin1_theta_state(theta);
    const double mp_plus = evaluate(BoundFamily::MpPlus, jx, jy, psi, &perp).rhs;
    const double mp_minus = evaluate(BoundFamily::MpMinus, jx, jy, psi, &perp).rhs;
    const double sum_hrs = evaluate(BoundFamily::GenSumHRS, jx, jy, psi, &perp).rhs;
    c.require(std::abs(mp_plus - 1.0) <= 1e-9, "mp-plus rhs " + num(mp_plus));
    c.require(std::abs(mp_minus - 1.0) <= 1e-9, "mp-minus rhs " + num(mp_minus));
    c.require(std::abs(sum_hrs - 1.0) <= 1e-9, "gen-sum-hrs rhs " + num(sum_hrs));

    // |<psi|Jx +- i Jy|perp>| = sqrt(2) cos(theta), sqrt(2) sin(theta)
    const Complex i(0.0, 1.0);
    const Matrix raise = jx.matrix() + i * jy.matrix();
    const Matrix lower = jx.matrix() - i * jy.matrix();
    const double el_plus = std::abs(psi.amplitudes().dot(raise * perp.amplitudes()));
    const double el_minus = std::abs(psi.amplitudes().dot(lower * perp.amplitudes()));
    c.require(std::abs(el_plus - std::sqrt(2.0) * std::cos(theta)) <= 1e-9,
              "raising element " + num(el_plus) + " at theta " + num(theta));
    c.require(std::abs(el_minus - std::sqrt(2.0) * std::sin(theta)) <= 1e-9,
              "lowering element " + num(el_minus) + " at theta " + num(theta));
  }
  return c;
}

// 2. Variance adjudication on the rotated state: the halved closed form
//    (1 +- sin 2 theta)/2 holds, and the variance sum saturates the MP
//    bound of 1.
Check criterion2() {
  Check c;
  const HermitianOperator jx = spin_operator({1.0, SpinComponent::X, 1.0});
  const HermitianOperator jy = spin_operator({1.0, SpinComponent::Y, 1.0});
  const StateVector perp = spin_basis_state(1, 0);
  for (double theta : theta_grid()) {
    const StateVector psi = spin1_theta_state(theta);
    const double var_x = variance(jx, psi);
    const double var_y = variance(jy, psi);
    const double s2 = std::sin(2.0 * theta);
    c.require(std::abs(var_x - 0.5 * (1.0 + s2)) <= 1e-10,
              "var(Jx) " + num(var_x) + " vs (1+sin2t)/2 at theta " + num(theta));
    c.require(std::abs(var_y - 0.5 * (1.0 - s2)) <= 1e-10,
              "var(Jy) " + num(var_y) + " vs (1-sin2t)/2 at theta " + num(theta));
    const double mp = evaluate(BoundFamily::MpPlus, jx, jy, psi, &perp).rhs;
    c.require(std::abs((var_x + var_y) - mp) <= 1e-10,
              "variance sum " + num(var_x + var_y) + " vs mp bound " + num(mp));
  }
  return c;
}

// 3. |0> against the rotated perp: MP pair {2cos^2, 2sin^2}, the sum bound
//    2cos^2(theta) on the quarter turn where that form is valid (the
//    evaluated formula gives 1 + |cos 2 theta| everywhere), the product
//    equality with its bracket form, and unit variances.
Check criterion3() {
  Check c;
  const HermitianOperator jx = spin_operator({1.0, SpinComponent::X, 1.0});
  const HermitianOperator jy = spin_operator({1.0, SpinComponent::Y, 1.0});
  const StateVector psi = spin_basis_state(1, 0);
  for (double theta : theta_grid()) {
    const StateVector perp = spin1_theta_state(theta);
    const double cos2 = std::cos(2.0 * theta);
    const double s2 = std::sin(2.0 * theta);

    const double sum_hrs = evaluate(BoundFamily::GenSumHRS, jx, jy, psi, &perp).rhs;
    c.require(std::abs(sum_hrs - (1.0 + std::abs(cos2))) <= 1e-9,
              "gen-sum-hrs rhs " + num(sum_hrs) + " vs 1+|cos2t| at theta " + num(theta));
    if (cos2 >= 0.0) {
      const double closed = 2.0 * std::cos(theta) * std::cos(theta);
      c.require(std::abs(sum_hrs - closed) <= 1e-9,
                "gen-sum-hrs rhs " + num(sum_hrs) + " vs 2cos^2 at theta " + num(theta));
    }

    const double mp_minus = evaluate(BoundFamily::MpMinus, jx, jy, psi, &perp).rhs;
    const double mp_plus = evaluate(BoundFamily::MpPlus, jx, jy, psi, &perp).rhs;
    c.require(std::abs(mp_minus - 2.0 * std::cos(theta) * std::cos(theta)) <= 1e-9,
              "mp-minus rhs " + num(mp_minus) + " at theta " + num(theta));
    c.require(std::abs(mp_plus - 2.0 * std::sin(theta) * std::sin(theta)) <= 1e-9,
              "mp-plus rhs " + num(mp_plus) + " at theta " + num(theta));

    const BoundReport product = evaluate(BoundFamily::GenProductHR, jx, jy, psi, &perp);
    const double brackets = (1.0 - 0.5 * (1.0 + s2)) * (1.0 - 0.5 * (1.0 - s2));
    c.require(std::abs(product.lhs - brackets) <= 1e-9,
              "gen-product-hr lhs " + num(product.lhs) + " vs brackets " + num(brackets));
    c.require(std::abs(product.rhs - 0.25 * cos2 * cos2) <= 1e-9,
              "gen-product-hr rhs " + num(product.rhs) + " vs cos^2(2t)/4");
    c.require(std::abs(product.slack) <= 1e-9, "gen-product-hr equality slack " +
                                                   num(product.slack) + " at theta " +
                                                   num(theta));

    c.require(std::abs(variance(jx, psi) - 1.0) <= 1e-10, "var(Jx) not 1");
    c.require(std::abs(variance(jy, psi) - 1.0) <= 1e-10, "var(Jy) not 1");
  }
  return c;
}

// 4. Random-ensemble property suite at the default configuration: 1000
//    instances per d in {2,3,4,6,8}; bound validity, the rhs identities,
//    and alpha-grid nonnegativity are all enforced inside the suite.
Check criterion4() {
  Check c;
  const SuiteConfig config;
  const SuiteReport report = run_suite(config);
  c.require(report.instances_run == 5000,
            "expected 5000 instances, ran " + std::to_string(report.instances_run));
  c.require(report.passed(), report.failures.empty()
                                 ? std::string("suite failed")
                                 : "first failure: " + report.failures.front().invariant +
                                       " seed " + std::to_string(report.failures.front().seed));
  c.require(report.worst_slack >= -1e-9, "worst slack " + num(report.worst_slack));
  for (const ClaimResult& claim : report.claims) {
    if (claim.name == "alpha-min-matches-grid" || claim.name == "null-perp-reduces-to-hrs") {
      c.require(claim.verdict == ClaimVerdict::Confirmed, claim.name + " not confirmed");
    }
  }
  return c;
}

// 5. Limit recovery: psi_perp along the B deviation collapses gen-sum-hr to
//    var_b + |<psi_A|psi_B>|^2 / var_b with the degenerate flag raised, and
//    an absent perp reproduces the plain HRS report exactly.
Check criterion5() {
  Check c;
  const std::vector<int> dims = {2, 3, 4, 6, 8};
  for (int k = 0; k < 200; ++k) {
    const RandomInstance inst = draw_instance(dims, 52001, k, [](const RandomInstance& r) {
      return variance(r.b, r.psi) > 1e-8;
    });
    const Ket dev_b = deviation_vector(inst.b, inst.psi);
    const double db = dev_b.norm();
    const StateVector perp_b{Ket((1.0 / db) * dev_b.amplitudes())};

    const BoundReport sum_hr =
        evaluate(BoundFamily::GenSumHR, inst.a, inst.b, inst.psi, &perp_b);
    const Ket dev_a = deviation_vector(inst.a, inst.psi);
    const double var_b = db * db;
    const double cross = std::norm(inner(dev_a, dev_b));
    const double expected = var_b + cross / var_b;
    const double scale = std::max(1.0, std::abs(expected));
    c.require(std::abs(sum_hr.rhs - expected) <= 1e-9 * scale,
              "gen-sum-hr rhs " + num(sum_hr.rhs) + " vs schwarz form " + num(expected));
    c.require(sum_hr.degenerate, "degenerate flag not raised at perp = psi_B");

    const PerpContext ctx = perp_context(inst.a, inst.b, inst.psi, perp_b);
    c.require(!optimal_alpha(ctx).has_value(), "optimal_alpha defined in the degenerate limit");

    const BoundReport hrs = hrs_report(inst.a, inst.b, inst.psi);
    for (BoundFamily family : {BoundFamily::GenSumHRS, BoundFamily::GenProductHRS}) {
      const BoundReport fallback = evaluate(family, inst.a, inst.b, inst.psi, nullptr);
      const bool exact = fallback.family == hrs.family && fallback.lhs == hrs.lhs &&
                         fallback.rhs == hrs.rhs && fallback.slack == hrs.slack &&
                         fallback.satisfied == hrs.satisfied && !fallback.context &&
                         !fallback.alpha;
      c.require(exact, "null-perp fallback differs from the hrs report");
    }
  }
  return c;
}

// 6. The analytic alpha minimizer against a 2001-point grid scan.
Check criterion6() {
  Check c;
  const std::vector<int> dims = {3, 4, 6, 8};
  for (int k = 0; k < 200; ++k) {
    const RandomInstance inst = draw_instance(dims, 67001, k, [](const RandomInstance& r) {
      return !perp_context(r.a, r.b, r.psi, r.psi_perp).degenerate;
    });
    const PerpContext ctx = perp_context(inst.a, inst.b, inst.psi, inst.psi_perp);
    const auto alpha = optimal_alpha(ctx);
    c.require(alpha.has_value(), "optimal_alpha undefined on a non-degenerate instance");
    if (!alpha) continue;

    const AlphaGridResult grid = alpha_grid_oracle(ctx, -10.0, 10.0, 2001);
    const double step = 20.0 / 2000.0;
    const double clamped = std::min(10.0, std::max(-10.0, *alpha));
    c.require(std::abs(clamped - grid.alpha_min) <= step + 1e-12,
              "alpha* " + num(*alpha) + " vs grid minimum " + num(grid.alpha_min));

    const double best = general_alpha_value(ctx, *alpha);
    const double scale = std::max(1.0, std::abs(grid.value_min));
    c.require(best <= grid.value_min + 1e-12 * scale,
              "analytic minimum " + num(best) + " above grid value " + num(grid.value_min));
  }
  return c;
}

// 7. Optimizer quality: the spin-1 envelope, then dominance over plain
//    random sampling with the rhs <= lhs sanity bracket.
Check criterion7() {
  Check c;
  const HermitianOperator jx = spin_operator({1.0, SpinComponent::X, 1.0});
  const HermitianOperator jy = spin_operator({1.0, SpinComponent::Y, 1.0});
  const StateVector psi0 = spin_basis_state(1, 0);
  OptimizeConfig config;
  const OptimizeResult envelope = optimize_perp(jx, jy, psi0, config);
  c.require(std::abs(envelope.best_rhs - 2.0) <= 1e-6,
            "spin-1 envelope best_rhs " + num(envelope.best_rhs));

  for (int k = 0; k < 50; ++k) {
    RandomInstance inst = random_instance(3, mix_seed(71001, k));
    config.seed = mix_seed(71002, k);
    const OptimizeResult result = optimize_perp(inst.a, inst.b, inst.psi, config);

    // 100 random perp directions drawn in the complement basis
    const Matrix q = complement_matrix(inst.psi);
    GaussianStream gauss(mix_seed(71003, k));
    double best_sample = 0.0;
    for (int s = 0; s < 100; ++s) {
      Vector coeff(q.cols());
      for (Eigen::Index i = 0; i < coeff.size(); ++i) {
        coeff(i) = Complex(gauss.next(), gauss.next());
      }
      Vector dir = q * coeff;
      const StateVector perp{Ket(dir / dir.norm())};
      const double rhs =
          evaluate(BoundFamily::GenSumHRS, inst.a, inst.b, inst.psi, &perp).rhs;
      best_sample = std::max(best_sample, rhs);
    }
    c.require(result.best_rhs >= best_sample - 1e-6,
              "optimizer " + num(result.best_rhs) + " below sampled " + num(best_sample));
    c.require(result.best_rhs <= result.report.lhs + 1e-9,
              "optimizer rhs " + num(result.best_rhs) + " above lhs " +
                  num(result.report.lhs));
  }
  return c;
}

// 8. Eigenstate triviality: |1,1> with (Jz, Jx) zeroes both HR sides, while
//    the transverse pair (Jx, Jy) keeps rhs = 1/4.
Check criterion8() {
  Check c;
  const HermitianOperator jx = spin_operator({1.0, SpinComponent::X, 1.0});
  const HermitianOperator jy = spin_operator({1.0, SpinComponent::Y, 1.0});
  const HermitianOperator jz = spin_operator({1.0, SpinComponent::Z, 1.0});
  const StateVector top = spin_basis_state(1, 1);

  const BoundReport trivial = hr_report(jz, jx, top);
  c.require(trivial.lhs <= 1e-12, "hr lhs " + num(trivial.lhs) + " on the Jz eigenstate");
  c.require(trivial.rhs <= 1e-12, "hr rhs " + num(trivial.rhs) + " on the Jz eigenstate");

  const BoundReport transverse = hr_report(jx, jy, top);
  c.require(std::abs(transverse.rhs - 0.25) <= 1e-12,
            "transverse hr rhs " + num(transverse.rhs) + " vs 1/4");
  c.require(transverse.rhs > 1e-3, "transverse hr rhs not positive");
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    Check (*fn)();
  };
  const Entry entries[] = {
      {"1: rotated-state bounds and ladder matrix elements", criterion1},
      {"2: variance closed forms and mp-bound saturation", criterion2},
      {"3: |0>-state closed forms, product equality, unit variances", criterion3},
      {"4: random-ensemble suite (5000 instances, identities, alpha grid)", criterion4},
      {"5: limit recovery (perp = psi_B and null-perp fallback)", criterion5},
      {"6: analytic alpha minimizer vs 2001-point grid", criterion6},
      {"7: optimizer envelope and sampling dominance", criterion7},
      {"8: eigenstate triviality and transverse rhs = 1/4", criterion8},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    const Check result = entry.fn();
    if (result.pass) {
      std::printf("PASS  %s\n", entry.label);
    } else {
      ++failures;
      std::printf("FAIL  %s  [%s]\n", entry.label, result.detail.c_str());
    }
  }
  return failures == 0 ? 0 : 1;
}
