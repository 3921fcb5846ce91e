// SPDX-License-Identifier: Apache-2.0
//
// JSON serialization of the analysis reports.
//
// Schema (keys are stable):
//   NegativityReport: {"min_value", "argmin": {"q", "p"}, "negative_mass",
//                      "tolerances": {"negativity"}}
//   PropernessReport: {"spectrum", "max_distance", "verdict",
//                      "witness": {"q", "p"}, "tolerances": {"properness"}}
//   MomentReport:     {"mean_q", "mean_p", "var_q", "var_p",
//                      "uncertainty_product", "caveat_grid_truncation"}
//   IntegralEstimate: {"value", "error_bound"}
//   HudsonVerdict:    {"gaussian_class", "fit_residual", "negativity",
//                      "verdict"}
#pragma once

#include <json.hpp>

#include "wigner/analysis.hpp"

namespace wigner {

inline nlohmann::json to_json(const NegativityReport& r) {
  return {{"min_value", r.min_value},
          {"argmin", {{"q", r.argmin_q}, {"p", r.argmin_p}}},
          {"negative_mass", r.negative_mass},
          {"tolerances", {{"negativity", r.tol}}}};
}

inline nlohmann::json to_json(const PropernessReport& r) {
  return {{"spectrum", r.spectrum},
          {"max_distance", r.max_distance},
          {"verdict", r.proper ? "proper" : "improper"},
          {"witness", {{"q", r.witness_q}, {"p", r.witness_p}}},
          {"tolerances", {{"properness", r.tolerance}}}};
}

inline nlohmann::json to_json(const MomentReport& r) {
  return {{"mean_q", r.mean_q},
          {"mean_p", r.mean_p},
          {"var_q", r.var_q},
          {"var_p", r.var_p},
          {"uncertainty_product", r.uncertainty_product},
          {"caveat_grid_truncation", r.caveat_grid_truncation}};
}

inline nlohmann::json to_json(const IntegralEstimate& r) {
  return {{"value", r.value}, {"error_bound", r.error_bound}};
}

inline nlohmann::json to_json(const HudsonVerdict& r) {
  return {{"gaussian_class", r.gaussian_class},
          {"fit_residual", std::isfinite(r.fit_residual) ? nlohmann::json(r.fit_residual)
                                                         : nlohmann::json("infinite")},
          {"negativity", to_json(r.negativity)},
          {"verdict", r.consistent ? "consistent" : "inconsistent"}};
}

}  // namespace wigner
