#include "qubound/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "qubound/operators.hpp"

namespace qubound {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Large enough for any truncated-oscillator study, small enough that a typo
// in "dimension" cannot ask a preset to allocate gigabytes.
constexpr int kMaxDimension = 512;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ScenarioError(field, message);
}

std::string subfield(const std::string& prefix, std::string_view name) {
  return prefix.empty() ? std::string(name) : prefix + "." + std::string(name);
}

void check_keys(const json& obj, const std::string& prefix,
                std::initializer_list<std::string_view> allowed) {
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      fail(subfield(prefix, item.key()), "unrecognized field");
    }
  }
}

const json& require_field(const json& obj, const std::string& prefix, std::string_view name) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    fail(subfield(prefix, name), "missing required field");
  }
  return *it;
}

double require_number(const json& node, const std::string& field) {
  if (!node.is_number()) {
    fail(field, "must be a number");
  }
  return node.get<double>();
}

Complex parse_complex(const json& node, const std::string& field) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
    fail(field, "expected a [re, im] pair");
  }
  return {node[0].get<double>(), node[1].get<double>()};
}

Vector parse_vector_literal(const json& node, int dim, const std::string& field) {
  if (static_cast<int>(node.size()) != dim) {
    fail(field, "expected " + std::to_string(dim) + " amplitudes, got " +
                    std::to_string(node.size()));
  }
  Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = parse_complex(node[i], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

Matrix parse_matrix_literal(const json& node, int dim, const std::string& field) {
  if (static_cast<int>(node.size()) != dim) {
    fail(field, "expected " + std::to_string(dim) + " rows, got " + std::to_string(node.size()));
  }
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = node[r];
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      fail(row_field, "expected a row of " + std::to_string(dim) + " [re, im] pairs");
    }
    for (int c = 0; c < dim; ++c) {
      m(r, c) = parse_complex(row[c], row_field + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

StateVector make_state(const Vector& v, const std::string& field) {
  const double n = v.norm();
  if (std::abs(n - 1.0) > kNormTolerance) {
    fail(field, "norm is " + fmt(n) + "; states must be unit within 1e-9");
  }
  return StateVector(v);
}

std::string require_preset_name(const json& node, const std::string& field) {
  const json& name = require_field(node, field, "preset");
  if (!name.is_string()) {
    fail(field + ".preset", "must be a string");
  }
  return name.get<std::string>();
}

StateVector resolve_state_preset(const json& node, int dim, const std::string& field) {
  const std::string preset = require_preset_name(node, field);
  if (preset == "spin-basis") {
    check_keys(node, field, {"preset", "j", "m"});
    const double j = require_number(require_field(node, field, "j"), field + ".j");
    const double m = require_number(require_field(node, field, "m"), field + ".m");
    try {
      if (spin_dimension(j) != dim) {
        fail(field, "spin dimension " + std::to_string(spin_dimension(j)) +
                        " does not match scenario dimension " + std::to_string(dim));
      }
      return spin_basis_state(j, m);
    } catch (const std::invalid_argument& e) {
      fail(field, e.what());
    }
  }
  if (preset == "spin1-theta") {
    check_keys(node, field, {"preset", "theta"});
    const double theta = require_number(require_field(node, field, "theta"), field + ".theta");
    if (dim != 3) {
      fail(field, "spin1-theta needs scenario dimension 3, got " + std::to_string(dim));
    }
    return spin1_theta_state(theta);
  }
  if (preset == "spin" || preset == "oscillator") {
    fail(field + ".preset", "'" + preset + "' builds an operator, not a state");
  }
  fail(field + ".preset", "unknown state preset '" + preset + "'");
}

StateVector resolve_state(const json& node, int dim, const std::string& field) {
  if (node.is_array()) {
    return make_state(parse_vector_literal(node, dim, field), field);
  }
  if (node.is_object() && node.contains("preset")) {
    return resolve_state_preset(node, dim, field);
  }
  fail(field, "must be an amplitude array or a preset object");
}

SpinComponent parse_spin_component(const json& node, const std::string& field) {
  if (node.is_string()) {
    const std::string s = node.get<std::string>();
    if (s == "x") return SpinComponent::X;
    if (s == "y") return SpinComponent::Y;
    if (s == "z") return SpinComponent::Z;
  }
  fail(field, "must be \"x\", \"y\", or \"z\"");
}

OscillatorComponent parse_oscillator_component(const json& node, const std::string& field) {
  if (node.is_string()) {
    const std::string s = node.get<std::string>();
    if (s == "x") return OscillatorComponent::X;
    if (s == "p") return OscillatorComponent::P;
  }
  fail(field, "must be \"x\" or \"p\"");
}

double preset_hbar(const json& node, double scenario_hbar, const std::string& field) {
  auto it = node.find("hbar");
  if (it == node.end()) {
    return scenario_hbar;
  }
  return require_number(*it, field + ".hbar");
}

HermitianOperator resolve_operator_preset(const json& node, int dim, double scenario_hbar,
                                          const std::string& field) {
  const std::string preset = require_preset_name(node, field);
  if (preset == "spin") {
    check_keys(node, field, {"preset", "j", "component", "hbar"});
    const double j = require_number(require_field(node, field, "j"), field + ".j");
    const SpinComponent component =
        parse_spin_component(require_field(node, field, "component"), field + ".component");
    const double hbar = preset_hbar(node, scenario_hbar, field);
    try {
      if (spin_dimension(j) != dim) {
        fail(field, "spin dimension " + std::to_string(spin_dimension(j)) +
                        " does not match scenario dimension " + std::to_string(dim));
      }
      return spin_operator({j, component, hbar});
    } catch (const std::invalid_argument& e) {
      fail(field, e.what());
    }
  }
  if (preset == "oscillator") {
    check_keys(node, field, {"preset", "dim", "component", "hbar"});
    if (auto it = node.find("dim"); it != node.end()) {
      if (!it->is_number_integer()) {
        fail(field + ".dim", "must be an integer");
      }
      const long long given = it->get<long long>();
      if (given != dim) {
        fail(field + ".dim", "oscillator dimension " + std::to_string(given) +
                                 " does not match scenario dimension " + std::to_string(dim));
      }
    }
    const OscillatorComponent component = parse_oscillator_component(
        require_field(node, field, "component"), field + ".component");
    const double hbar = preset_hbar(node, scenario_hbar, field);
    try {
      return oscillator_operator({dim, component, hbar});
    } catch (const std::invalid_argument& e) {
      fail(field, e.what());
    }
  }
  if (preset == "spin-basis" || preset == "spin1-theta") {
    fail(field + ".preset", "'" + preset + "' builds a state, not an operator");
  }
  fail(field + ".preset", "unknown operator preset '" + preset + "'");
}

HermitianOperator resolve_operator(const json& node, int dim, double scenario_hbar,
                                   const std::string& field) {
  if (node.is_array()) {
    Matrix m = parse_matrix_literal(node, dim, field);
    try {
      return HermitianOperator(std::move(m));
    } catch (const std::invalid_argument& e) {
      fail(field, e.what());
    }
  }
  if (node.is_object() && node.contains("preset")) {
    return resolve_operator_preset(node, dim, scenario_hbar, field);
  }
  fail(field, "must be a matrix literal or a preset object");
}

OptimizeConfig parse_optimize_settings(const json& outer, const std::string& field) {
  check_keys(outer, field, {"optimize"});
  const json& node = outer.at("optimize");
  const std::string prefix = field + ".optimize";
  if (!node.is_object()) {
    fail(prefix, "must be an object of optimizer settings");
  }
  check_keys(node, prefix,
             {"objective", "restarts", "initial_step", "shrink_factor", "step_floor", "seed"});

  OptimizeConfig config;
  if (auto it = node.find("objective"); it != node.end()) {
    if (!it->is_string()) {
      fail(prefix + ".objective", "must be a bound family name");
    }
    const std::string name = it->get<std::string>();
    const auto family = family_from_name(name);
    if (!family) {
      fail(prefix + ".objective", "unknown bound family '" + name + "'");
    }
    config.objective = *family;
  }
  if (!family_needs_perp(config.objective) || config.objective == BoundFamily::GeneralAlpha) {
    fail(prefix + ".objective",
         "objective must be a perp-dependent family: gen-product-hr, gen-sum-hr, "
         "gen-product-hrs, gen-sum-hrs, mp-plus, or mp-minus");
  }
  if (auto it = node.find("restarts"); it != node.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 1 ||
        it->get<long long>() > 1'000'000) {
      fail(prefix + ".restarts", "must be an integer in [1, 1000000]");
    }
    config.restarts = it->get<int>();
  }
  if (auto it = node.find("initial_step"); it != node.end()) {
    config.initial_step = require_number(*it, prefix + ".initial_step");
  }
  if (auto it = node.find("shrink_factor"); it != node.end()) {
    config.shrink_factor = require_number(*it, prefix + ".shrink_factor");
  }
  if (auto it = node.find("step_floor"); it != node.end()) {
    config.step_floor = require_number(*it, prefix + ".step_floor");
  }
  if (auto it = node.find("seed"); it != node.end()) {
    if (!it->is_number_unsigned()) {
      fail(prefix + ".seed", "must be a nonnegative integer");
    }
    config.seed = it->get<std::uint64_t>();
  }
  if (!(config.initial_step > 0.0) || !std::isfinite(config.initial_step)) {
    fail(prefix + ".initial_step", "must be a positive number");
  }
  if (!(config.shrink_factor > 0.0 && config.shrink_factor < 1.0)) {
    fail(prefix + ".shrink_factor", "must lie strictly between 0 and 1");
  }
  if (!(config.step_floor > 0.0 && config.step_floor < config.initial_step)) {
    fail(prefix + ".step_floor", "must be positive and smaller than initial_step");
  }
  return config;
}

ordered_json complex_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json vector_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(complex_json(v(i)));
  }
  return out;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_json(m(r, c)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

bool bitwise_equal(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

bool bitwise_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (a(r, c) != b(r, c)) return false;
    }
  }
  return true;
}

}  // namespace

ScenarioError::ScenarioError(std::string field, const std::string& message)
    : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

bool operator==(const Scenario& lhs, const Scenario& rhs) {
  if (lhs.dimension != rhs.dimension || lhs.hbar != rhs.hbar) return false;
  if (!bitwise_equal(lhs.state.amplitudes(), rhs.state.amplitudes())) return false;
  if (!bitwise_equal(lhs.operator_a.matrix(), rhs.operator_a.matrix())) return false;
  if (!bitwise_equal(lhs.operator_b.matrix(), rhs.operator_b.matrix())) return false;
  if (lhs.perp_mode != rhs.perp_mode) return false;
  if (lhs.perp.has_value() != rhs.perp.has_value()) return false;
  if (lhs.perp && !bitwise_equal(lhs.perp->amplitudes(), rhs.perp->amplitudes())) return false;
  return lhs.optimize == rhs.optimize && lhs.families == rhs.families;
}

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("document", e.what());
  }
  if (!doc.is_object()) {
    throw ScenarioError("document", "top level must be an object");
  }
  check_keys(doc, "",
             {"dimension", "hbar", "state", "operator_a", "operator_b", "perp", "bounds"});

  const json& dj = require_field(doc, "", "dimension");
  if (!dj.is_number_integer() || dj.get<long long>() < 1) {
    fail("dimension", "must be an integer >= 1");
  }
  if (dj.get<long long>() > kMaxDimension) {
    fail("dimension", "must be at most " + std::to_string(kMaxDimension));
  }
  const int dim = dj.get<int>();

  double hbar = 1.0;
  if (auto it = doc.find("hbar"); it != doc.end()) {
    hbar = require_number(*it, "hbar");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
      fail("hbar", "must be a positive number");
    }
  }

  StateVector state = resolve_state(require_field(doc, "", "state"), dim, "state");
  HermitianOperator op_a =
      resolve_operator(require_field(doc, "", "operator_a"), dim, hbar, "operator_a");
  HermitianOperator op_b =
      resolve_operator(require_field(doc, "", "operator_b"), dim, hbar, "operator_b");

  const json& pj = require_field(doc, "", "perp");
  PerpMode mode = PerpMode::None;
  std::optional<StateVector> perp;
  OptimizeConfig config;
  if (pj.is_string()) {
    const std::string s = pj.get<std::string>();
    if (s == "optimize") {
      mode = PerpMode::Optimize;
    } else if (s != "none") {
      fail("perp", "string form must be \"none\" or \"optimize\"");
    }
  } else if (pj.is_array()) {
    mode = PerpMode::Explicit;
    perp = make_state(parse_vector_literal(pj, dim, "perp"), "perp");
  } else if (pj.is_object() && pj.contains("optimize")) {
    mode = PerpMode::Optimize;
    config = parse_optimize_settings(pj, "perp");
  } else if (pj.is_object() && pj.contains("preset")) {
    mode = PerpMode::Explicit;
    perp = resolve_state_preset(pj, dim, "perp");
  } else {
    fail("perp", "must be an amplitude array, a preset object, \"none\", or \"optimize\"");
  }
  if (perp) {
    const double overlap = std::abs(inner(perp->ket(), state.ket()));
    if (overlap > kPerpTolerance) {
      fail("perp", "overlap with state has magnitude " + fmt(overlap) +
                       "; perp must be orthogonal within 1e-9");
    }
  }

  const json& bj = require_field(doc, "", "bounds");
  if (!bj.is_array() || bj.empty()) {
    fail("bounds", "must be a nonempty array of family names");
  }
  std::vector<BoundFamily> families;
  families.reserve(bj.size());
  for (std::size_t i = 0; i < bj.size(); ++i) {
    const std::string where = "bounds[" + std::to_string(i) + "]";
    if (!bj[i].is_string()) {
      fail(where, "must be a family name string");
    }
    const std::string name = bj[i].get<std::string>();
    const auto family = family_from_name(name);
    if (!family) {
      fail(where, "unknown bound family '" + name + "'");
    }
    if (mode == PerpMode::None && family_needs_perp(*family) &&
        !family_has_null_fallback(*family)) {
      fail(where, "family '" + name + "' needs a perp vector but perp is \"none\"");
    }
    families.push_back(*family);
  }

  return Scenario{dim,  hbar,            std::move(state), std::move(op_a), std::move(op_b),
                  mode, std::move(perp), config,           std::move(families)};
}

std::string print_scenario(const Scenario& scenario) {
  ordered_json doc;
  doc["dimension"] = scenario.dimension;
  doc["hbar"] = scenario.hbar;
  doc["state"] = vector_json(scenario.state.amplitudes());
  doc["operator_a"] = matrix_json(scenario.operator_a.matrix());
  doc["operator_b"] = matrix_json(scenario.operator_b.matrix());
  switch (scenario.perp_mode) {
    case PerpMode::None:
      doc["perp"] = "none";
      break;
    case PerpMode::Explicit:
      doc["perp"] = vector_json(scenario.perp->amplitudes());
      break;
    case PerpMode::Optimize: {
      ordered_json settings;
      settings["objective"] = std::string(family_name(scenario.optimize.objective));
      settings["restarts"] = scenario.optimize.restarts;
      settings["initial_step"] = scenario.optimize.initial_step;
      settings["shrink_factor"] = scenario.optimize.shrink_factor;
      settings["step_floor"] = scenario.optimize.step_floor;
      settings["seed"] = scenario.optimize.seed;
      doc["perp"] = ordered_json{{"optimize", std::move(settings)}};
      break;
    }
  }
  ordered_json names = ordered_json::array();
  for (BoundFamily family : scenario.families) {
    names.push_back(std::string(family_name(family)));
  }
  doc["bounds"] = std::move(names);
  return doc.dump(2) + "\n";
}

}  // namespace qubound
