// SPDX-License-Identifier: Apache-2.0
#include "wigner/app/fig1.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

#include "wigner/app/csv.hpp"
#include "wigner/measurement.hpp"
#include "wigner/report_json.hpp"

namespace wigner::app {

Fig1Result run_fig1(const RunConfig& cfg) {
  const double half = cfg.a / 2;
  const PhaseSpaceGrid viewport(-half, half, cfg.n_q, 1.5, 5.0, cfg.n_p);
  const auto field =
      projected_wigner_analytic(ProjectedGaussianParams(cfg.sigma, cfg.a), viewport);
  const auto report = negativity_report(field);

  std::filesystem::create_directories(cfg.out_dir);
  Fig1Result result{report,
                    (std::filesystem::path(cfg.out_dir) / "fig1.csv").string(),
                    (std::filesystem::path(cfg.out_dir) / "fig1_report.json").string(),
                    (std::filesystem::path(cfg.out_dir) / "fig1.gp").string()};

  write_field_csv(result.csv_path, field);

  nlohmann::json j;
  j["inputs"] = {{"sigma", cfg.sigma},
                 {"a", cfg.a},
                 {"grid", std::to_string(cfg.n_q) + "x" + std::to_string(cfg.n_p)},
                 {"q_range", {-half, half}},
                 {"p_range", {1.5, 5.0}}};
  j["negativity"] = to_json(report);
  j["normalization_convention"] = WignerField::normalization_convention;
  std::ofstream(result.json_path) << j.dump(2) << "\n";

  std::ofstream gp(result.gp_path);
  gp << "# surface plot of the projected-state Wigner function\n"
     << "set datafile separator comma\n"
     << "set xlabel 'q'\nset ylabel 'p'\nset zlabel 'W'\n"
     << "set xrange [" << -half << ":" << half << "]\n"
     << "set yrange [1.5:5]\n"
     << "set dgrid3d " << cfg.n_q << "," << cfg.n_p << "\n"
     << "set hidden3d\n"
     << "splot 'fig1.csv' every ::1 using 1:2:3 with lines notitle\n"
     << "pause -1\n";

  return result;
}

}  // namespace wigner::app
