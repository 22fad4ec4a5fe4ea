#pragma once

// Scenario files: a JSON document describing one bound-evaluation problem.
// Complex numbers are [re, im] pairs, vectors are arrays of pairs, matrices
// nested arrays of pairs. Operators and states may also be preset
// references ({"preset": "spin", ...}); the perp entry additionally accepts
// "none" and "optimize". print_scenario emits a document with every preset
// resolved to literals, and parsing that document yields an equal Scenario.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qubound/bounds.hpp"
#include "qubound/core.hpp"
#include "qubound/optimizer.hpp"

namespace qubound {

/// Parse/validation failure; field() names the offending entry, e.g.
/// "state" or "perp.restarts".
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string& message);

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class PerpMode { None, Explicit, Optimize };

struct Scenario {
  int dimension;
  double hbar;
  StateVector state;
  HermitianOperator operator_a;
  HermitianOperator operator_b;
  PerpMode perp_mode;
  std::optional<StateVector> perp;  // engaged iff perp_mode == Explicit
  OptimizeConfig optimize;          // meaningful iff perp_mode == Optimize
  std::vector<BoundFamily> families;
};

bool operator==(const Scenario& lhs, const Scenario& rhs);

/// Parse and fully validate a scenario document. Throws ScenarioError with
/// the offending field name on any schema violation, dimension mismatch,
/// non-Hermitian matrix literal, non-normalized state (the message reports
/// the norm), or non-orthogonal explicit perp (the message reports the
/// overlap).
Scenario parse_scenario(const std::string& text);

/// Render a scenario as a JSON document with all presets resolved to
/// literals. parse_scenario(print_scenario(s)) == s.
std::string print_scenario(const Scenario& scenario);

}  // namespace qubound
