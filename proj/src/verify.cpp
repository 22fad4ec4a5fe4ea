#include "qubound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "qubound/operators.hpp"
#include "qubound/random.hpp"

namespace qubound {

namespace {

constexpr double kIdentityTolerance = 1e-10;
constexpr std::size_t kFailureCap = 1000;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<double> theta_grid_17() {
  std::vector<double> grid;
  grid.reserve(17);
  for (int k = 0; k <= 16; ++k) grid.push_back(k * (M_PI / 2) / 16);
  return grid;
}

bool wants(const SuiteConfig& config, BoundFamily family) {
  return std::find(config.families.begin(), config.families.end(), family) !=
         config.families.end();
}

struct Collector {
  SuiteReport report;
  double min_slack = std::numeric_limits<double>::infinity();

  void fail(std::string invariant, std::uint64_t seed, int dim, double slack) {
    if (report.failures.size() < kFailureCap) {
      report.failures.push_back({std::move(invariant), seed, dim, slack});
    }
  }

  // checks a signed margin that must stay >= -tolerance
  void margin(const std::string& invariant, double value, double tolerance,
              std::uint64_t seed, int dim) {
    if (!(value >= -tolerance)) fail(invariant, seed, dim, value);
  }

  // checks agreement of two routes to the same number
  void agree(const std::string& invariant, double got, double want, double tolerance,
             std::uint64_t seed, int dim) {
    const double diff = std::abs(got - want);
    if (!(diff <= tolerance)) fail(invariant, seed, dim, -diff);
  }
};

// tracks the worst deviation seen while measuring a claim over many points
struct ClaimProbe {
  double worst = 0.0;
  std::string at;

  void sample(double deviation, const std::string& where) {
    if (deviation > worst) {
      worst = deviation;
      at = where;
    }
  }

  ClaimResult result(std::string name, double tolerance, const std::string& statement) const {
    if (worst <= tolerance) {
      return {std::move(name), ClaimVerdict::Confirmed,
              statement + "; worst deviation " + num(worst)};
    }
    return {std::move(name), ClaimVerdict::Refuted,
            statement + "; fails with deviation " + num(worst) + " at " + at};
  }
};

void check_instance(const RandomInstance& inst, const SuiteConfig& config, Collector& out) {
  const PerpContext ctx = perp_context(inst.a, inst.b, inst.psi, inst.psi_perp);
  const BoundReport schwarz = schwarz_report(inst.a, inst.b, inst.psi);
  const BoundReport hr = hr_report(inst.a, inst.b, inst.psi);
  const BoundReport hrs = hrs_report(inst.a, inst.b, inst.psi);

  auto report_for = [&](BoundFamily family) {
    switch (family) {
      case BoundFamily::Schwarz: return schwarz;
      case BoundFamily::HR: return hr;
      case BoundFamily::HRS: return hrs;
      default: return family_report(family, ctx);
    }
  };

  for (BoundFamily family : config.families) {
    const BoundReport report = report_for(family);
    out.min_slack = std::min(out.min_slack, report.slack);
    if (!report.satisfied) {
      out.fail(std::string(family_name(family)) + "-validity", inst.seed, inst.dim,
               report.slack);
    }
  }

  // residual nonnegativity is a property of the context itself
  out.margin("residual-nonnegative-a", ctx.a_residual, 1e-10, inst.seed, inst.dim);
  out.margin("residual-nonnegative-b", ctx.b_residual, 1e-10, inst.seed, inst.dim);

  // two independent routes through the core layer
  const double mean_a = expectation(inst.a, inst.psi);
  out.agree("core-variance-route", variance(inst.a, inst.psi), ctx.var_a,
            1e-11 * std::max(1.0, ctx.var_a + mean_a * mean_a), inst.seed, inst.dim);
  const Complex comm_via_dev = ctx.dev_inner - std::conj(ctx.dev_inner);
  if (std::abs(ctx.commutator - comm_via_dev) >
      kIdentityTolerance * std::max(1.0, std::abs(ctx.commutator))) {
    out.fail("core-commutator-route", inst.seed, inst.dim,
             -std::abs(ctx.commutator - comm_via_dev));
  }

  // identity chain and dominance between families
  if (wants(config, BoundFamily::HRS)) {
    out.agree("identity-hrs-schwarz", hrs.rhs, schwarz.rhs,
              kIdentityTolerance * std::max(1.0, std::abs(schwarz.rhs)), inst.seed, inst.dim);
    out.margin("dominance-hrs-hr", hrs.rhs - hr.rhs, 0.0, inst.seed, inst.dim);
  }
  if (wants(config, BoundFamily::GenProductHR)) {
    const double im_w_sq = ctx.w.imag() * ctx.w.imag();
    out.agree("identity-gen-product-hr", report_for(BoundFamily::GenProductHR).rhs, im_w_sq,
              kIdentityTolerance * std::max(1.0, im_w_sq), inst.seed, inst.dim);
  }
  if (wants(config, BoundFamily::GenProductHRS)) {
    const double w_sq = std::norm(ctx.w);
    out.agree("identity-gen-product-hrs", report_for(BoundFamily::GenProductHRS).rhs, w_sq,
              kIdentityTolerance * std::max(1.0, w_sq), inst.seed, inst.dim);
    out.margin("dominance-gen-product",
               report_for(BoundFamily::GenProductHRS).rhs -
                   report_for(BoundFamily::GenProductHR).rhs,
               0.0, inst.seed, inst.dim);
  }
  if (wants(config, BoundFamily::GenSumHR)) {
    const double closed = std::norm(ctx.overlap_a) + std::norm(ctx.overlap_b) +
                          2.0 * std::abs(ctx.w.imag());
    out.agree("identity-gen-sum-hr", report_for(BoundFamily::GenSumHR).rhs, closed,
              kIdentityTolerance * std::max(1.0, closed), inst.seed, inst.dim);
  }
  if (wants(config, BoundFamily::GenSumHRS)) {
    const double closed =
        std::norm(ctx.overlap_a) + std::norm(ctx.overlap_b) + 2.0 * std::abs(ctx.w);
    out.agree("identity-gen-sum-hrs", report_for(BoundFamily::GenSumHRS).rhs, closed,
              kIdentityTolerance * std::max(1.0, closed), inst.seed, inst.dim);
  }

  // mp reports against the direct matrix-element formula
  for (BoundFamily family : {BoundFamily::MpPlus, BoundFamily::MpMinus}) {
    if (!wants(config, family)) continue;
    const int sign = family == BoundFamily::MpPlus ? 1 : -1;
    const Complex element = inner(inst.psi.ket(), apply(inst.a, inst.psi_perp.ket())) +
                            Complex(0, sign) * inner(inst.psi.ket(), apply(inst.b, inst.psi_perp.ket()));
    const double direct = (Complex(0, sign) * ctx.commutator).real() + std::norm(element);
    out.agree(std::string(family_name(family)) + "-direct-route", report_for(family).rhs,
              direct, kIdentityTolerance * std::max(1.0, std::abs(direct)), inst.seed,
              inst.dim);
  }

  // quadratic in alpha: grid nonnegativity and the analytic minimizer
  if (wants(config, BoundFamily::GeneralAlpha)) {
    double grid_min = std::numeric_limits<double>::infinity();
    double grid_argmin = 0.0;
    for (int k = 0; k <= 100; ++k) {
      const double alpha = -10.0 + 0.2 * k;
      const double value = general_alpha_value(ctx, alpha);
      out.margin("alpha-grid-nonnegative", value, 1e-9 * std::max(1.0, std::abs(value)),
                 inst.seed, inst.dim);
      if (value < grid_min) {
        grid_min = value;
        grid_argmin = alpha;
      }
    }
    if (const auto alpha_star = optimal_alpha(ctx)) {
      const double at_star = general_alpha_value(ctx, *alpha_star);
      out.margin("alpha-analytic-minimum", grid_min - at_star,
                 1e-12 * std::max(1.0, std::abs(grid_min)), inst.seed, inst.dim);
      const double clamped = std::clamp(*alpha_star, -10.0, 10.0);
      out.margin("alpha-minimizer-location", 0.2 - std::abs(clamped - grid_argmin), 1e-12,
                 inst.seed, inst.dim);
    }
  }

  // unit phase on psi_perp must not move any report
  {
    const Complex phase = std::exp(Complex(0.0, 0.7));
    const StateVector rotated{Ket(phase * inst.psi_perp.amplitudes())};
    const PerpContext rotated_ctx = perp_context(inst.a, inst.b, inst.psi, rotated);
    for (BoundFamily family : config.families) {
      if (!family_needs_perp(family)) continue;
      const BoundReport before = family_report(family, ctx);
      const BoundReport after = family_report(family, rotated_ctx);
      out.agree(std::string(family_name(family)) + "-phase-invariance", after.rhs, before.rhs,
                kIdentityTolerance * std::max(1.0, std::abs(before.rhs)), inst.seed, inst.dim);
      out.agree(std::string(family_name(family)) + "-phase-invariance-lhs", after.lhs,
                before.lhs, kIdentityTolerance * std::max(1.0, std::abs(before.lhs)),
                inst.seed, inst.dim);
    }
  }

  // scaling the operator pair by c: products go as c^4, sums as c^2
  {
    const double c = 1.7;
    const HermitianOperator ca = c * inst.a;
    const HermitianOperator cb = c * inst.b;
    const PerpContext scaled_ctx = perp_context(ca, cb, inst.psi, inst.psi_perp);
    for (BoundFamily family : config.families) {
      if (family == BoundFamily::GeneralAlpha) continue;  // alpha itself rescales
      const BoundReport base = report_for(family);
      const BoundReport scaled = family_needs_perp(family)
                                     ? family_report(family, scaled_ctx)
                                     : evaluate(family, ca, cb, inst.psi);
      const bool product = family == BoundFamily::Schwarz || family == BoundFamily::HR ||
                           family == BoundFamily::HRS ||
                           family == BoundFamily::GenProductHR ||
                           family == BoundFamily::GenProductHRS;
      const double factor = product ? c * c * c * c : c * c;
      out.agree("scaling-" + std::string(family_name(family)), scaled.rhs,
                factor * base.rhs, 1e-9 * std::max(1.0, std::abs(factor * base.rhs)),
                inst.seed, inst.dim);
      out.agree("scaling-" + std::string(family_name(family)) + "-lhs", scaled.lhs,
                factor * base.lhs, 1e-9 * std::max(1.0, std::abs(factor * base.lhs)),
                inst.seed, inst.dim);
    }
  }

  // absent psi_perp falls back to the hrs report, field for field
  for (BoundFamily family : {BoundFamily::GenSumHRS, BoundFamily::GenProductHRS}) {
    if (!wants(config, family)) continue;
    const BoundReport fallback = evaluate(family, inst.a, inst.b, inst.psi, nullptr);
    const bool exact = fallback.family == BoundFamily::HRS && fallback.lhs == hrs.lhs &&
                       fallback.rhs == hrs.rhs && fallback.slack == hrs.slack &&
                       fallback.satisfied == hrs.satisfied;
    if (!exact) out.fail("null-fallback-exact", inst.seed, inst.dim, 0.0);
  }
}

StateVector unit_deviation(const HermitianOperator& op, const StateVector& psi) {
  const Ket dev = deviation_vector(op, psi);
  return StateVector(Ket(dev.amplitudes() / dev.norm()));
}

// claims about the rotated-state example (psi = cos|+> + sin|->, perp = |0>)
void example1_claims(std::vector<ClaimResult>& claims) {
  const HermitianOperator a = spin_operator({1.0, SpinComponent::X});
  const HermitianOperator b = spin_operator({1.0, SpinComponent::Y});
  const StateVector perp = spin_basis_state(1, 0);
  const Complex i{0.0, 1.0};

  ClaimProbe sums, elements;
  for (double theta : theta_grid_17()) {
    const StateVector psi = spin1_theta_state(theta);
    const std::string at = "theta=" + num(theta);
    sums.sample(std::abs(mp_report(a, b, psi, perp, +1).rhs - 1.0), at);
    sums.sample(std::abs(mp_report(a, b, psi, perp, -1).rhs - 1.0), at);
    sums.sample(std::abs(gen_sum_hrs_report(a, b, psi, perp).rhs - 1.0), at);

    const Complex ex = inner(psi.ket(), apply(a, perp.ket()));
    const Complex ey = inner(psi.ket(), apply(b, perp.ket()));
    elements.sample(std::abs(std::abs(ex + i * ey) - std::sqrt(2.0) * std::cos(theta)), at);
    elements.sample(std::abs(std::abs(ex - i * ey) - std::sqrt(2.0) * std::sin(theta)), at);
  }
  claims.push_back(sums.result("example1-sum-bounds-constant", 1e-9,
                               "mp-plus, mp-minus and gen-sum-hrs all bound the sum by 1"));
  claims.push_back(elements.result("example1-matrix-elements", 1e-9,
                                   "|<psi|Jx +- i Jy|perp>| = sqrt(2) cos/sin theta"));

  for (ClaimResult& claim : variance_claim_oracle()) claims.push_back(std::move(claim));
}

// claims about the rotated-perp example (psi = |0>, perp = cos|+> + sin|->)
void example2_claims(std::vector<ClaimResult>& claims) {
  const HermitianOperator a = spin_operator({1.0, SpinComponent::X});
  const HermitianOperator b = spin_operator({1.0, SpinComponent::Y});
  const StateVector psi = spin_basis_state(1, 0);

  ClaimProbe mp, small_angle, all_angles, product;
  for (double theta : theta_grid_17()) {
    const StateVector perp = spin1_theta_state(theta);
    const std::string at = "theta=" + num(theta);
    const double cos_sq = std::pow(std::cos(theta), 2);
    const double sin_sq = std::pow(std::sin(theta), 2);
    const double s2 = std::sin(2 * theta);
    const double c2 = std::cos(2 * theta);

    mp.sample(std::abs(mp_report(a, b, psi, perp, -1).rhs - 2 * cos_sq), at);
    mp.sample(std::abs(mp_report(a, b, psi, perp, +1).rhs - 2 * sin_sq), at);

    const double sum_rhs = gen_sum_hrs_report(a, b, psi, perp).rhs;
    if (c2 >= 0.0) small_angle.sample(std::abs(sum_rhs - 2 * cos_sq), at);
    all_angles.sample(std::abs(sum_rhs - 2 * cos_sq), at);

    const BoundReport phr = gen_product_hr_report(a, b, psi, perp);
    product.sample(std::abs(phr.lhs - (1 - s2) / 2 * ((1 + s2) / 2)), at);
    product.sample(std::abs(phr.rhs - 0.25 * c2 * c2), at);
    product.sample(std::abs(phr.slack), at);
  }
  claims.push_back(mp.result("example2-mp-bounds", 1e-9,
                             "mp-minus rhs = 2cos^2(theta), mp-plus rhs = 2sin^2(theta)"));
  claims.push_back(small_angle.result(
      "example2-sum-bound-small-angle", 1e-9,
      "gen-sum-hrs rhs = 2cos^2(theta) on grid angles with cos(2 theta) >= 0"));
  claims.push_back(all_angles.result(
      "example2-sum-closed-form-all-angles", 1e-9,
      "gen-sum-hrs rhs = 2cos^2(theta) at every grid angle (measured rhs is "
      "1 + |cos 2 theta|, which exceeds 2cos^2(theta) past the quarter turn)"));
  claims.push_back(product.result(
      "example2-product-equality", 1e-9,
      "gen-product-hr saturates with lhs = (1 - sin 2 theta)(1 + sin 2 theta)/4 "
      "and rhs = cos^2(2 theta)/4"));
}

void limit_claims(const SuiteConfig& config, std::vector<ClaimResult>& claims) {
  ClaimProbe alpha_match, psi_b_limit, psi_a_limit, mp_limit, null_limit;
  bool degenerate_flag_ok = true;
  const std::vector<int>& dims = config.dims;

  int collected = 0;
  for (int attempt = 0; attempt < 1000 && collected < 200; ++attempt) {
    const int dim = dims[attempt % dims.size()];
    const RandomInstance inst = random_instance(dim, mix_seed(config.seed, 9001, attempt));
    const PerpContext ctx = perp_context(inst.a, inst.b, inst.psi, inst.psi_perp);
    if (ctx.degenerate) continue;
    ++collected;
    const std::string at = "dim=" + std::to_string(dim) + " seed=" + std::to_string(inst.seed);

    // analytic alpha versus the brute-force grid
    const AlphaGridResult grid = alpha_grid_oracle(ctx, -10.0, 10.0, 2001);
    const double alpha_star = *optimal_alpha(ctx);
    const double clamped = std::clamp(alpha_star, -10.0, 10.0);
    alpha_match.sample(std::max(0.0, std::abs(clamped - grid.alpha_min) - 0.01), at);
    alpha_match.sample(std::max(0.0, general_alpha_value(ctx, alpha_star) - grid.value_min),
                       at);

    // psi_perp along each deviation vector collapses to the schwarz content
    const double var_a = ctx.var_a;
    const double var_b = ctx.var_b;
    const double cross = std::norm(ctx.dev_inner);
    if (var_b > 1e-9) {
      const StateVector along_b = unit_deviation(inst.b, inst.psi);
      const PerpContext bctx = perp_context(inst.a, inst.b, inst.psi, along_b);
      if (!bctx.degenerate || optimal_alpha(bctx).has_value()) degenerate_flag_ok = false;
      const double expected = var_b + cross / var_b;
      const double tol_scale = std::max(1.0, expected);
      psi_b_limit.sample(
          std::abs(family_report(BoundFamily::GenSumHR, bctx).rhs - expected) / tol_scale, at);
      for (BoundFamily family : {BoundFamily::MpPlus, BoundFamily::MpMinus}) {
        mp_limit.sample(std::abs(family_report(family, bctx).rhs - expected) / tol_scale, at);
      }
    }
    if (var_a > 1e-9) {
      const StateVector along_a = unit_deviation(inst.a, inst.psi);
      const PerpContext actx = perp_context(inst.a, inst.b, inst.psi, along_a);
      const double expected = var_a + cross / var_a;
      psi_a_limit.sample(
          std::abs(family_report(BoundFamily::GenSumHR, actx).rhs - expected) /
              std::max(1.0, expected),
          at);
    }

    // absent perp: identical to the hrs report
    const BoundReport hrs = hrs_report(inst.a, inst.b, inst.psi);
    for (BoundFamily family : {BoundFamily::GenSumHRS, BoundFamily::GenProductHRS}) {
      const BoundReport fallback = evaluate(family, inst.a, inst.b, inst.psi, nullptr);
      const bool exact = fallback.family == BoundFamily::HRS && fallback.lhs == hrs.lhs &&
                         fallback.rhs == hrs.rhs;
      null_limit.sample(exact ? 0.0 : 1.0, at);
    }
  }

  claims.push_back(alpha_match.result(
      "alpha-min-matches-grid", 1e-9,
      "optimal alpha agrees with a 2001-point grid scan within one grid step on 200 "
      "non-degenerate instances"));
  ClaimResult psi_b = psi_b_limit.result(
      "perp-psiB-reduces-to-schwarz", 1e-9,
      "psi_perp along the B deviation turns gen-sum-hr into var_b + |<psi_A|psi_B>|^2/var_b");
  if (!degenerate_flag_ok) {
    psi_b.verdict = ClaimVerdict::Refuted;
    psi_b.detail += "; degenerate flag missing on some instance";
  }
  claims.push_back(std::move(psi_b));
  claims.push_back(psi_a_limit.result(
      "perp-psiA-reduces-to-schwarz", 1e-9,
      "psi_perp along the A deviation turns gen-sum-hr into var_a + |<psi_A|psi_B>|^2/var_a"));
  claims.push_back(mp_limit.result(
      "mp-reduces-to-hrs-at-perp=psiB", 1e-9,
      "both mp bounds carry the schwarz content at psi_perp along the B deviation"));
  claims.push_back(null_limit.result("null-perp-reduces-to-hrs", 0.0,
                                     "absent psi_perp reproduces the hrs report exactly"));
}

void eigenstate_claims(std::vector<ClaimResult>& claims) {
  ClaimProbe trivial;
  bool transverse_ok = true;
  std::string transverse_detail = "hr rhs = j^2/4 > 0 at hbar = 1 for the (Jx, Jy) pair:";
  for (double j : {0.5, 1.0, 1.5}) {
    const StateVector top = spin_basis_state(j, j);
    const HermitianOperator jx = spin_operator({j, SpinComponent::X});
    const HermitianOperator jy = spin_operator({j, SpinComponent::Y});
    const HermitianOperator jz = spin_operator({j, SpinComponent::Z});
    const std::string at = "j=" + num(j);

    const BoundReport aligned = hr_report(jz, jx, top);
    trivial.sample(std::abs(aligned.lhs), at);
    trivial.sample(std::abs(aligned.rhs), at);

    const BoundReport transverse = hr_report(jx, jy, top);
    transverse_detail += " " + num(transverse.rhs);
    if (std::abs(transverse.rhs - 0.25 * j * j) > 1e-9 || transverse.rhs < 1e-3) {
      transverse_ok = false;
    }
  }
  claims.push_back(trivial.result(
      "eigenstate-hr-triviality", 1e-12,
      "hr is 0 >= 0 on Jz eigenstates paired with Jx for j in {1/2, 1, 3/2}"));
  claims.push_back({"hr-nontrivial-on-transverse-pair",
                    transverse_ok ? ClaimVerdict::Confirmed : ClaimVerdict::Refuted,
                    transverse_detail});
}

}  // namespace

RandomInstance random_instance(int dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("random_instance: dim must be at least 2");
  GaussianStream g(mix_seed(seed, static_cast<std::uint64_t>(dim)));

  Vector state(dim);
  for (int k = 0; k < dim; ++k) state(k) = Complex(g.next(), g.next());
  StateVector psi{Ket(state / state.norm())};

  auto gaussian_hermitian = [&] {
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m(r, c) = Complex(g.next(), g.next());
    return HermitianOperator(Matrix((m + m.adjoint()) / 2.0));
  };
  HermitianOperator a = gaussian_hermitian();
  HermitianOperator b = gaussian_hermitian();

  const Matrix q = complement_matrix(psi);
  Vector coeffs(dim - 1);
  for (int k = 0; k + 1 < dim; ++k) coeffs(k) = Complex(g.next(), g.next());
  Vector perp = q * coeffs;
  StateVector psi_perp{Ket(perp / perp.norm())};

  return RandomInstance{std::move(a), std::move(b), std::move(psi), std::move(psi_perp), dim,
                        seed};
}

AlphaGridResult alpha_grid_oracle(const PerpContext& ctx, double lo, double hi, int points) {
  if (points < 3) throw std::invalid_argument("alpha_grid_oracle: need at least 3 points");
  if (!(lo < hi)) throw std::invalid_argument("alpha_grid_oracle: lo must be below hi");
  AlphaGridResult best{lo, general_alpha_value(ctx, lo)};
  const double step = (hi - lo) / (points - 1);
  for (int k = 1; k < points; ++k) {
    const double alpha = lo + step * k;
    const double value = general_alpha_value(ctx, alpha);
    if (value < best.value_min) best = {alpha, value};
  }
  return best;
}

AlphaGridResult alpha_grid_oracle(const HermitianOperator& a, const HermitianOperator& b,
                                  const StateVector& psi, const StateVector& psi_perp,
                                  double lo, double hi, int points) {
  return alpha_grid_oracle(perp_context(a, b, psi, psi_perp), lo, hi, points);
}

std::string_view claim_verdict_name(ClaimVerdict verdict) {
  switch (verdict) {
    case ClaimVerdict::Confirmed: return "confirmed";
    case ClaimVerdict::Refuted: return "refuted";
    case ClaimVerdict::Degenerate: return "degenerate";
  }
  throw std::logic_error("claim_verdict_name: unreachable");
}

std::vector<ClaimResult> variance_claim_oracle() {
  const HermitianOperator a = spin_operator({1.0, SpinComponent::X});
  const HermitianOperator b = spin_operator({1.0, SpinComponent::Y});
  const StateVector perp = spin_basis_state(1, 0);

  ClaimProbe halved, doubled, equality;
  for (double theta : theta_grid_17()) {
    const StateVector psi = spin1_theta_state(theta);
    const double var_x = variance(a, psi);
    const double var_y = variance(b, psi);
    const double s2 = std::sin(2 * theta);
    const std::string at = "theta=" + num(theta) + " measured (" + num(var_x) + ", " +
                           num(var_y) + ")";

    halved.sample(std::abs(var_x - (1 + s2) / 2), at);
    halved.sample(std::abs(var_y - (1 - s2) / 2), at);
    doubled.sample(std::abs(var_x - (1 + s2)), at);
    doubled.sample(std::abs(var_y - (1 - s2)), at);

    for (int sign : {+1, -1}) {
      const BoundReport mp = mp_report(a, b, psi, perp, sign);
      equality.sample(std::abs((var_x + var_y) - mp.rhs), at);
    }
  }

  std::vector<ClaimResult> claims;
  claims.push_back(halved.result("example1-variance-halved-form", 1e-10,
                                 "measured variances equal (1 +- sin 2 theta)/2 at hbar = 1"));
  claims.push_back(doubled.result(
      "example1-variance-doubled-form", 1e-10,
      "the doubled closed form (1 +- sin 2 theta) matches the measured variances"));
  claims.push_back(equality.result(
      "example1-mp-equality", 1e-10,
      "measured variance sum saturates both mp bounds at every grid angle"));
  return claims;
}

SuiteReport run_suite(const SuiteConfig& config) {
  if (config.dims.empty()) throw std::invalid_argument("run_suite: dims must be nonempty");
  for (int dim : config.dims) {
    if (dim < 2) throw std::invalid_argument("run_suite: every dim must be at least 2");
  }
  if (config.count < 0) throw std::invalid_argument("run_suite: count must be nonnegative");

  Collector out;
  for (int dim : config.dims) {
    for (int k = 0; k < config.count; ++k) {
      const RandomInstance inst = random_instance(dim, mix_seed(config.seed, dim, k));
      check_instance(inst, config, out);
      ++out.report.instances_run;
    }
  }
  out.report.worst_slack = std::isfinite(out.min_slack) ? out.min_slack : 0.0;

  example1_claims(out.report.claims);
  example2_claims(out.report.claims);
  limit_claims(config, out.report.claims);
  eigenstate_claims(out.report.claims);
  return out.report;
}

std::string suite_report_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["instances_run"] = report.instances_run;
  j["passed"] = report.passed();
  j["worst_slack"] = report.worst_slack;
  j["failures"] = nlohmann::ordered_json::array();
  for (const SuiteFailure& failure : report.failures) {
    j["failures"].push_back({{"invariant", failure.invariant},
                             {"seed", failure.seed},
                             {"dim", failure.dim},
                             {"slack", failure.slack}});
  }
  j["claims"] = nlohmann::ordered_json::array();
  for (const ClaimResult& claim : report.claims) {
    j["claims"].push_back({{"name", claim.name},
                           {"verdict", std::string(claim_verdict_name(claim.verdict))},
                           {"detail", claim.detail}});
  }
  return j.dump(2);
}

}  // namespace qubound
