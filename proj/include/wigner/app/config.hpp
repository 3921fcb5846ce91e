// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "wigner/grid.hpp"

namespace wigner::app {

// Batch-run configuration: a single JSON file plus command-line overrides,
// with the command line winning.
struct RunConfig {
  double sigma = 1.0;
  double a = 3.0;
  Index n_q = 301;
  Index n_p = 351;
  std::string out_dir = ".";
  bool quick = false;
  double tolerance_scale = 1.0;
};

// Unset fields fall back to the config file, then to the defaults above.
struct ConfigOverrides {
  std::optional<double> sigma;
  std::optional<double> a;
  std::optional<std::string> grid;  // "NxM"
  std::optional<std::string> out_dir;
  std::optional<bool> quick;
  std::optional<double> tolerance_scale;
};

// Parses "NxM" into (n_q, n_p); throws ConfigInvalid on malformed input.
void parse_grid_spec(const std::string& spec, Index& n_q, Index& n_p);

// Loads the JSON config (all keys optional: sigma, a, grid, out, quick,
// tolerance_scale) and applies the overrides.  Throws ConfigInvalid with a
// line/field diagnostic on parse or validation failure.
RunConfig resolve_config(const std::optional<std::string>& config_path,
                         const ConfigOverrides& overrides);

}  // namespace wigner::app
