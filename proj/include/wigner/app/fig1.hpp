// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "wigner/analysis.hpp"
#include "wigner/app/config.hpp"

namespace wigner::app {

struct Fig1Result {
  NegativityReport report;
  std::string csv_path;
  std::string json_path;
  std::string gp_path;
};

// Evaluates the projected-Gaussian Wigner function on the demonstration
// viewport q in [-a/2, a/2], p in [1.5, 5] and writes fig1.csv,
// fig1_report.json and fig1.gp into cfg.out_dir.
Fig1Result run_fig1(const RunConfig& cfg);

}  // namespace wigner::app
