#include "qubound/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qubound {

namespace {

BoundReport make_report(BoundFamily family, double lhs, double rhs) {
  BoundReport report;
  report.family = family;
  report.lhs = lhs;
  report.rhs = rhs;
  report.slack = lhs - rhs;
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  report.satisfied = report.slack >= -kSlackTolerance * scale;
  return report;
}

// modulus squared of <[A,B]> - (z - z*), shared by the generalized product
// and sum forms so their dominance relations hold exactly in floating point
double commutator_term(const PerpContext& ctx) {
  return std::norm(ctx.commutator - (ctx.z - std::conj(ctx.z)));
}

// modulus squared of <{A,B}> - 2<A><B> - (z + z*), a real quantity
double anticommutator_term(const PerpContext& ctx) {
  const double shifted = ctx.anticomm_centered - 2.0 * ctx.z.real();
  return shifted * shifted;
}

double overlap_weight(const PerpContext& ctx) {
  return std::norm(ctx.overlap_a) + std::norm(ctx.overlap_b);
}

BoundReport attach(BoundReport report, const PerpContext& ctx) {
  report.degenerate = ctx.degenerate;
  report.context = ctx;
  return report;
}

}  // namespace

std::string_view family_name(BoundFamily family) {
  switch (family) {
    case BoundFamily::Schwarz: return "schwarz";
    case BoundFamily::HR: return "hr";
    case BoundFamily::HRS: return "hrs";
    case BoundFamily::GeneralAlpha: return "general-alpha";
    case BoundFamily::GenProductHR: return "gen-product-hr";
    case BoundFamily::GenSumHR: return "gen-sum-hr";
    case BoundFamily::GenProductHRS: return "gen-product-hrs";
    case BoundFamily::GenSumHRS: return "gen-sum-hrs";
    case BoundFamily::MpPlus: return "mp-plus";
    case BoundFamily::MpMinus: return "mp-minus";
  }
  throw std::logic_error("family_name: unreachable");
}

std::optional<BoundFamily> family_from_name(std::string_view name) {
  for (BoundFamily family : kAllFamilies) {
    if (family_name(family) == name) return family;
  }
  return std::nullopt;
}

bool family_needs_perp(BoundFamily family) {
  switch (family) {
    case BoundFamily::Schwarz:
    case BoundFamily::HR:
    case BoundFamily::HRS:
      return false;
    default:
      return true;
  }
}

bool family_has_null_fallback(BoundFamily family) {
  return family == BoundFamily::GenProductHRS || family == BoundFamily::GenSumHRS;
}

PerpContext perp_context(const HermitianOperator& a, const HermitianOperator& b,
                         const StateVector& psi, const StateVector& psi_perp) {
  if (a.dim() != b.dim() || a.dim() != psi.dim() || a.dim() != psi_perp.dim()) {
    throw std::invalid_argument("perp_context: dimension mismatch");
  }
  const double overlap_with_state = std::abs(inner(psi_perp.ket(), psi.ket()));
  if (overlap_with_state > kPerpTolerance) {
    throw std::invalid_argument("perp_context: psi_perp is not orthogonal to the state, |<perp|psi>| = " +
                                std::to_string(overlap_with_state));
  }

  const Ket dev_a = deviation_vector(a, psi);
  const Ket dev_b = deviation_vector(b, psi);

  PerpContext ctx{psi_perp};
  ctx.var_a = dev_a.norm_squared();
  ctx.var_b = dev_b.norm_squared();
  ctx.overlap_a = inner(psi_perp.ket(), dev_a);
  ctx.overlap_b = inner(psi_perp.ket(), dev_b);
  ctx.a_residual = ctx.var_a - std::norm(ctx.overlap_a);
  ctx.b_residual = ctx.var_b - std::norm(ctx.overlap_b);
  ctx.dev_inner = inner(dev_a, dev_b);
  ctx.z = ctx.overlap_b * std::conj(ctx.overlap_a);
  ctx.w = ctx.dev_inner - ctx.z;
  ctx.commutator = commutator_expectation(a, b, psi);
  ctx.anticomm_centered =
      anticommutator_expectation(a, b, psi) - 2.0 * expectation(a, psi) * expectation(b, psi);
  ctx.degenerate = ctx.b_residual <= kDegenerateTolerance * std::max(1.0, ctx.var_b);

  // <perp|psi_A> should collapse to <perp|A|psi>; the analytic gap is
  // <A> <perp|psi>, so allow exactly that plus roundoff.
  const Complex direct = inner(psi_perp.ket(), apply(a, psi.ket()));
  const double gap_allowance = std::abs(expectation(a, psi)) * overlap_with_state;
  if (std::abs(ctx.overlap_a - direct) >
      1e-10 * std::max(1.0, std::abs(direct)) + gap_allowance) {
    throw std::runtime_error("perp_context: overlap shortcut check failed (core plumbing bug)");
  }

  return ctx;
}

BoundReport schwarz_report(const HermitianOperator& a, const HermitianOperator& b,
                           const StateVector& psi) {
  const double lhs = variance(a, psi) * variance(b, psi);
  const Ket dev_a = deviation_vector(a, psi);
  const Ket dev_b = deviation_vector(b, psi);
  return make_report(BoundFamily::Schwarz, lhs, std::norm(inner(dev_a, dev_b)));
}

BoundReport hr_report(const HermitianOperator& a, const HermitianOperator& b,
                      const StateVector& psi) {
  const double lhs = variance(a, psi) * variance(b, psi);
  const double rhs = 0.25 * std::norm(commutator_expectation(a, b, psi));
  return make_report(BoundFamily::HR, lhs, rhs);
}

BoundReport hrs_report(const HermitianOperator& a, const HermitianOperator& b,
                       const StateVector& psi) {
  const double lhs = variance(a, psi) * variance(b, psi);
  const double centered =
      anticommutator_expectation(a, b, psi) - 2.0 * expectation(a, psi) * expectation(b, psi);
  const double rhs =
      0.25 * std::norm(commutator_expectation(a, b, psi)) + 0.25 * centered * centered;
  return make_report(BoundFamily::HRS, lhs, rhs);
}

double general_alpha_value(const PerpContext& ctx, double alpha) {
  return ctx.a_residual + alpha * alpha * ctx.b_residual - 2.0 * alpha * ctx.w.imag();
}

double general_alpha_value(const HermitianOperator& a, const HermitianOperator& b,
                           const StateVector& psi, const StateVector& psi_perp, double alpha) {
  return general_alpha_value(perp_context(a, b, psi, psi_perp), alpha);
}

std::optional<double> optimal_alpha(const PerpContext& ctx) {
  if (ctx.degenerate) return std::nullopt;
  return ctx.w.imag() / ctx.b_residual;
}

std::optional<double> optimal_alpha(const HermitianOperator& a, const HermitianOperator& b,
                                    const StateVector& psi, const StateVector& psi_perp) {
  return optimal_alpha(perp_context(a, b, psi, psi_perp));
}

BoundReport family_report(BoundFamily family, const PerpContext& ctx) {
  switch (family) {
    case BoundFamily::GeneralAlpha: {
      const std::optional<double> alpha = optimal_alpha(ctx);
      BoundReport report =
          make_report(family, general_alpha_value(ctx, alpha.value_or(0.0)), 0.0);
      report.alpha = alpha.value_or(0.0);
      return attach(report, ctx);
    }
    case BoundFamily::GenProductHR:
      return attach(make_report(family, ctx.a_residual * ctx.b_residual,
                                0.25 * commutator_term(ctx)),
                    ctx);
    case BoundFamily::GenSumHR:
      return attach(make_report(family, ctx.var_a + ctx.var_b,
                                std::sqrt(commutator_term(ctx)) + overlap_weight(ctx)),
                    ctx);
    case BoundFamily::GenProductHRS:
      return attach(make_report(family, ctx.a_residual * ctx.b_residual,
                                0.25 * commutator_term(ctx) + 0.25 * anticommutator_term(ctx)),
                    ctx);
    case BoundFamily::GenSumHRS:
      return attach(make_report(family, ctx.var_a + ctx.var_b,
                                overlap_weight(ctx) +
                                    std::sqrt(commutator_term(ctx) + anticommutator_term(ctx))),
                    ctx);
    case BoundFamily::MpPlus:
    case BoundFamily::MpMinus: {
      const double sign = family == BoundFamily::MpPlus ? 1.0 : -1.0;
      const double rhs = overlap_weight(ctx) - 2.0 * sign * ctx.w.imag();
      return attach(make_report(family, ctx.var_a + ctx.var_b, rhs), ctx);
    }
    default:
      throw std::invalid_argument("family_report: family \"" +
                                  std::string(family_name(family)) +
                                  "\" does not take a psi_perp");
  }
}

BoundReport general_alpha_report(const HermitianOperator& a, const HermitianOperator& b,
                                 const StateVector& psi, const StateVector& psi_perp) {
  return family_report(BoundFamily::GeneralAlpha, perp_context(a, b, psi, psi_perp));
}

BoundReport gen_product_hr_report(const HermitianOperator& a, const HermitianOperator& b,
                                  const StateVector& psi, const StateVector& psi_perp) {
  return family_report(BoundFamily::GenProductHR, perp_context(a, b, psi, psi_perp));
}

BoundReport gen_sum_hr_report(const HermitianOperator& a, const HermitianOperator& b,
                              const StateVector& psi, const StateVector& psi_perp) {
  return family_report(BoundFamily::GenSumHR, perp_context(a, b, psi, psi_perp));
}

BoundReport gen_product_hrs_report(const HermitianOperator& a, const HermitianOperator& b,
                                   const StateVector& psi, const StateVector& psi_perp) {
  return family_report(BoundFamily::GenProductHRS, perp_context(a, b, psi, psi_perp));
}

BoundReport gen_sum_hrs_report(const HermitianOperator& a, const HermitianOperator& b,
                               const StateVector& psi, const StateVector& psi_perp) {
  return family_report(BoundFamily::GenSumHRS, perp_context(a, b, psi, psi_perp));
}

BoundReport mp_report(const HermitianOperator& a, const HermitianOperator& b,
                      const StateVector& psi, const StateVector& psi_perp, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("mp_report: sign must be +1 or -1");
  }
  return family_report(sign == 1 ? BoundFamily::MpPlus : BoundFamily::MpMinus,
                       perp_context(a, b, psi, psi_perp));
}

BoundReport evaluate(BoundFamily family, const HermitianOperator& a,
                     const HermitianOperator& b, const StateVector& psi,
                     const StateVector* psi_perp) {
  switch (family) {
    case BoundFamily::Schwarz:
      return schwarz_report(a, b, psi);
    case BoundFamily::HR:
      return hr_report(a, b, psi);
    case BoundFamily::HRS:
      return hrs_report(a, b, psi);
    default:
      break;
  }
  if (psi_perp != nullptr) {
    return family_report(family, perp_context(a, b, psi, *psi_perp));
  }
  if (family_has_null_fallback(family)) {
    // with psi_perp the null vector every overlap vanishes and the
    // generalized relation collapses to the plain HRS report
    return hrs_report(a, b, psi);
  }
  throw std::invalid_argument("evaluate: family \"" + std::string(family_name(family)) +
                              "\" requires a psi_perp");
}

}  // namespace qubound
