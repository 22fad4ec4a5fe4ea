#pragma once

// Uncertainty-relation bounds for a Hermitian pair (A, B) and a pure state.
// Each evaluator returns a BoundReport with both sides of the inequality,
// the slack, and the intermediates it was computed from.
//
// The generalized families take an extra unit vector psi_perp orthogonal to
// the state. Everything they need funnels through one PerpContext holding
// the overlaps of psi_perp with the deviation vectors, so each bound is a
// few arithmetic steps away and the algebraic identities between families
// stay cheap to cross-check.

#include <array>
#include <optional>
#include <string_view>

#include "qubound/core.hpp"

namespace qubound {

/// Slack acceptance: satisfied <=> slack >= -kSlackTolerance * max(1, |lhs|, |rhs|).
inline constexpr double kSlackTolerance = 1e-9;

/// Orthogonality requirement on psi_perp.
inline constexpr double kPerpTolerance = 1e-9;

/// b_residual at or below kDegenerateTolerance * max(1, var_b) means the
/// quadratic in alpha has lost its minimum (the psi_perp = psi_B / dB limit).
inline constexpr double kDegenerateTolerance = 1e-12;

// Declaration order fixes the canonical row order in tables and CSV output.
enum class BoundFamily {
  Schwarz,
  HR,
  HRS,
  GeneralAlpha,
  GenProductHR,
  GenSumHR,
  GenProductHRS,
  GenSumHRS,
  MpPlus,
  MpMinus,
};

inline constexpr std::array<BoundFamily, 10> kAllFamilies = {
    BoundFamily::Schwarz,      BoundFamily::HR,         BoundFamily::HRS,
    BoundFamily::GeneralAlpha, BoundFamily::GenProductHR, BoundFamily::GenSumHR,
    BoundFamily::GenProductHRS, BoundFamily::GenSumHRS, BoundFamily::MpPlus,
    BoundFamily::MpMinus,
};

std::string_view family_name(BoundFamily family);
std::optional<BoundFamily> family_from_name(std::string_view name);

/// Families that evaluate a psi_perp.
bool family_needs_perp(BoundFamily family);

/// Perp families that degrade gracefully to the plain HRS report when
/// psi_perp is absent (treated as the null vector).
bool family_has_null_fallback(BoundFamily family);

/// Shared intermediates for the generalized bounds. overlap_a/overlap_b are
/// the projections of the deviation vectors psi_A, psi_B onto psi_perp;
/// the residuals are what Cauchy-Schwarz leaves of the variances after
/// removing those projections, hence nonnegative up to roundoff.
struct PerpContext {
  StateVector psi_perp;
  double var_a = 0.0;  // |psi_A|^2
  double var_b = 0.0;  // |psi_B|^2
  Complex overlap_a;   // <psi_perp|psi_A>
  Complex overlap_b;   // <psi_perp|psi_B>
  double a_residual = 0.0;  // var_a - |overlap_a|^2
  double b_residual = 0.0;  // var_b - |overlap_b|^2
  Complex dev_inner;        // <psi_A|psi_B>
  Complex z;                // overlap_b * conj(overlap_a)
  Complex w;                // dev_inner - z
  Complex commutator;       // <[A,B]>
  double anticomm_centered = 0.0;  // <{A,B}> - 2<A><B>
  bool degenerate = false;         // b_residual below the degeneracy cutoff
};

struct BoundReport {
  BoundFamily family;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // lhs - rhs
  bool satisfied = false;
  bool degenerate = false;
  std::optional<double> alpha;        // parameter used by the alpha family
  std::optional<PerpContext> context;  // present for the perp families
};

/// Builds the shared intermediates. Throws std::invalid_argument when
/// |<psi_perp|psi>| exceeds kPerpTolerance (the message reports the overlap
/// magnitude) or on dimension mismatch. Internally asserts the shortcut
/// <psi_perp|psi_A> = <psi_perp|A|psi> to guard the core plumbing.
PerpContext perp_context(const HermitianOperator& a, const HermitianOperator& b,
                         const StateVector& psi, const StateVector& psi_perp);

// Perp-free relations: product of variances against the Cauchy-Schwarz,
// commutator-only, and commutator-plus-covariance bounds.
BoundReport schwarz_report(const HermitianOperator& a, const HermitianOperator& b,
                           const StateVector& psi);
BoundReport hr_report(const HermitianOperator& a, const HermitianOperator& b,
                      const StateVector& psi);
BoundReport hrs_report(const HermitianOperator& a, const HermitianOperator& b,
                       const StateVector& psi);

/// Value of the nonnegative quadratic a_residual + alpha^2 b_residual
/// - 2 alpha Im(w) that generates the product bounds.
double general_alpha_value(const PerpContext& ctx, double alpha);
double general_alpha_value(const HermitianOperator& a, const HermitianOperator& b,
                           const StateVector& psi, const StateVector& psi_perp, double alpha);

/// Minimizer Im(w) / b_residual of the quadratic, or nullopt in the
/// degenerate limit where no finite minimizer exists.
std::optional<double> optimal_alpha(const PerpContext& ctx);
std::optional<double> optimal_alpha(const HermitianOperator& a, const HermitianOperator& b,
                                    const StateVector& psi, const StateVector& psi_perp);

// Generalized relations at a fixed psi_perp. Product forms bound the
// residual product; sum forms bound var_a + var_b.
BoundReport general_alpha_report(const HermitianOperator& a, const HermitianOperator& b,
                                 const StateVector& psi, const StateVector& psi_perp);
BoundReport gen_product_hr_report(const HermitianOperator& a, const HermitianOperator& b,
                                  const StateVector& psi, const StateVector& psi_perp);
BoundReport gen_sum_hr_report(const HermitianOperator& a, const HermitianOperator& b,
                              const StateVector& psi, const StateVector& psi_perp);
BoundReport gen_product_hrs_report(const HermitianOperator& a, const HermitianOperator& b,
                                   const StateVector& psi, const StateVector& psi_perp);
BoundReport gen_sum_hrs_report(const HermitianOperator& a, const HermitianOperator& b,
                               const StateVector& psi, const StateVector& psi_perp);

/// Variance-sum bound with the sign choice s in <psi|A + s*iB|psi_perp>;
/// sign must be +1 or -1 (families "mp-plus"/"mp-minus").
BoundReport mp_report(const HermitianOperator& a, const HermitianOperator& b,
                      const StateVector& psi, const StateVector& psi_perp, int sign);

/// Report for a perp family straight from a prepared context (used by the
/// optimizer to avoid rebuilding intermediates); family must need a perp.
BoundReport family_report(BoundFamily family, const PerpContext& ctx);

/// Uniform entry point. Families that need psi_perp receive it through the
/// pointer; passing nullptr selects the null-vector fallback where one
/// exists and throws std::invalid_argument otherwise.
BoundReport evaluate(BoundFamily family, const HermitianOperator& a,
                     const HermitianOperator& b, const StateVector& psi,
                     const StateVector* psi_perp = nullptr);

}  // namespace qubound
