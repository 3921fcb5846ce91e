// SPDX-License-Identifier: Apache-2.0
//
// The invariant suite behind `wigner-lab verify`.  Each check measures one
// module-level property and compares it against a pinned tolerance; the
// tolerance_scale knob multiplies every tolerance (values below 1 tighten the
// suite, which is also how the harness itself is exercised in tests).
#include "wigner/app/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wigner/analysis.hpp"
#include "wigner/measurement.hpp"
#include "wigner/special.hpp"
#include "wigner/transform.hpp"

namespace wigner::app {

namespace {

using Clock = std::chrono::steady_clock;

struct CheckOutcome {
  double measured;
  std::string details;
};

struct Check {
  std::string name;
  double tolerance;
  bool quick;
  std::function<CheckOutcome()> run;
};

// Regression margin for the non-factorization gap: 90% of the dense-scan
// maximum 0.37688053521565448 obtained from a 50-digit evaluation of the
// closed-form fields over the 301x351 demonstration viewport.
constexpr double kNonfactorMargin = 0.33919248169408903;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

CheckOutcome special_symmetries() {
  double worst = 0;
  for (double a : {1e-9, 1e-4, 0.3, 1.0, 2.5, 7.0}) {
    for (double b : {0.0, 0.5, 2.0, 5.0, 40.0, 150.0}) {
      const double g = scaled_erf_re(a, b);
      worst = std::max(worst, std::abs(scaled_erf_re(a, -b) - g));
      worst = std::max(worst, std::abs(scaled_erf_re(-a, b) + g));
    }
  }
  for (double x : {0.3, 1.0, 2.4}) {
    for (double y : {0.2, 1.5, 6.0}) {
      const std::complex<double> z(x, y);
      const auto v = cerf(z);
      worst = std::max(worst, std::abs(cerf(-z) + v));
      worst = std::max(worst, std::abs(cerf(std::conj(z)) - std::conj(v)));
    }
  }
  return {worst, "max symmetry deviation " + fmt(worst)};
}

CheckOutcome special_consistency() {
  double worst = 0;
  for (double a = 0.05; a <= 8.0; a += 0.175) {
    for (double b = 0.0; b <= 6.0; b += 0.13) {
      const double g = scaled_erf_re(a, b);
      const double via = cerf(std::complex<double>(a, b)).real() * std::exp(-b * b);
      worst = std::max(worst, std::abs(g - via) / (1.0 + std::abs(g)));
    }
  }
  return {worst, "max |g - Re(erf) e^{-b^2}| / (1+|g|) = " + fmt(worst)};
}

CheckOutcome special_asymptotic_tail() {
  double worst = 0;
  for (double a : {0.25, 1.0, 2.0})
    for (double b : {25.0, 50.0, 100.0, 200.0})
      worst = std::max(worst, std::abs(b * scaled_erf_re(a, b)));
  return {worst, "max |beta * g| = " + fmt(worst)};
}

CheckOutcome core_gaussian_moments() {
  double worst = 0;
  const PositionGrid grid(-16.0, 16.0, 32001);
  for (double sigma : {0.5, 1.0, 2.0}) {
    const auto psi = sample_gaussian(GaussianState(sigma), grid);
    const auto x2 = diagonal_observable_kernel([](double x) { return x * x; }, grid);
    worst = std::max(worst, std::abs(expectation_hilbert(psi, x2) - sigma * sigma));
  }
  return {worst, "max |<x^2> - sigma^2| = " + fmt(worst)};
}

CheckOutcome core_projector_idempotence() {
  const PositionGrid grid(-8.0, 8.0, 1025);
  const auto window = window_projector_kernel(3.0, grid);
  const auto ww = compose_kernels(window, window);
  double worst = (ww.diagonal_values() - window.diagonal_values()).cwiseAbs().maxCoeff();
  const auto k = rank_one_kernel(sample_gaussian(GaussianState(1.0), grid));
  const auto kk = compose_kernels(k, k);
  worst = std::max(worst, (kk.dense_kernel() - k.dense_kernel()).cwiseAbs().maxCoeff());
  return {worst, "max |P^2 - P| = " + fmt(worst) + " at n_x = 1025"};
}

CheckOutcome core_sandwich_hermiticity() {
  const PositionGrid grid(-8.0, 8.0, 1025);
  const auto p = window_projector_kernel(3.0, grid);
  const auto rho = rank_one_kernel(sample_gaussian(GaussianState(1.0), grid));
  const auto sandwich = compose_kernels(p, compose_kernels(rho, p));
  return {sandwich.hermitian() ? 0.0 : 1.0, "hermitian flag on P rho P"};
}

CheckOutcome transform_gaussian_oracle() {
  double worst = 0;
  for (double sigma : {0.5, 1.0, 2.0}) {
    const PositionGrid xg(-12.0 * sigma, 12.0 * sigma, 24001);
    const auto psi = sample_gaussian(GaussianState(sigma), xg);
    const PhaseSpaceGrid grid(-4.0 * sigma, 4.0 * sigma, 81, -4.0 / sigma, 4.0 / sigma, 81);
    WignerNumericOptions opts;
    opts.y_halfwidth = 16.0 * sigma;
    const auto numeric = wigner_numeric(psi, grid, opts);
    const auto analytic = wigner_of_gaussian(GaussianState(sigma), grid);
    worst = std::max(worst, (numeric.values - analytic.values).cwiseAbs().maxCoeff());
  }
  return {worst, "max |numeric - closed form| = " + fmt(worst) + " over sigma in {1/2,1,2}"};
}

CheckOutcome transform_normalization() {
  const PositionGrid xg(-12.0, 12.0, 24001);
  const auto psi = sample_gaussian(GaussianState(1.0), xg);
  const PhaseSpaceGrid grid(-8.0, 8.0, 161, -8.0, 8.0, 161);
  const auto w = wigner_numeric(psi, grid);
  double worst = std::abs(normalization(w).value - 1.0);
  worst = std::max(worst, std::abs(w.values(80, 80) - 2.0));  // peak value
  return {worst, "|norm - 1| and |peak - 2|, worst " + fmt(worst)};
}

CheckOutcome transform_marginals() {
  const PositionGrid xg(-12.0, 12.0, 24001);
  const auto psi = sample_gaussian(GaussianState(1.0), xg);
  const PhaseSpaceGrid grid(-8.0, 8.0, 161, -8.0, 8.0, 321);
  const auto w = wigner_numeric(psi, grid);
  const auto m = marginal_q(w);
  double worst = 0;
  for (Index i = 0; i < grid.n_q; ++i) {
    const double x = grid.q_node(i);
    worst = std::max(worst,
                     std::abs(m.values[i] - std::exp(-x * x / 2.0) / std::sqrt(2.0 * M_PI)));
  }
  const auto wq = trapezoid_weights(grid.dq(), grid.n_q);
  const Eigen::RowVectorXd pm = wq.matrix().transpose() * w.values;
  for (Index j = 0; j < grid.n_p; ++j) {
    const double p = grid.p_node(j);
    const double want = 2.0 * std::sqrt(2.0 * M_PI) * std::exp(-2.0 * p * p);
    worst = std::max(worst, std::abs(pm[j] - want));
  }
  return {worst, "worst marginal deviation " + fmt(worst)};
}

CheckOutcome transform_parity() {
  const PositionGrid xg(-12.0, 12.0, 24001);
  const auto psi = sample_gaussian(GaussianState(1.0), xg);
  const PhaseSpaceGrid grid(-4.0, 4.0, 61, -4.0, 4.0, 61);
  const auto w = wigner_numeric(psi, grid);
  const auto sym = symbol_of_diagonal([](double x) { return x * x; }, grid);
  double worst = 0;
  for (Index i = 0; i < grid.n_q; ++i)
    for (Index j = 0; j < grid.n_p; ++j) {
      worst = std::max(worst, std::abs(w.values(i, j) - w.values(grid.n_q - 1 - i, j)));
      worst = std::max(worst, std::abs(w.values(i, j) - w.values(i, grid.n_p - 1 - j)));
      worst = std::max(worst,
                       std::abs(sym.values(i, j) - sym.values(grid.n_q - 1 - i, j)));
    }
  return {worst, "worst parity deviation " + fmt(worst)};
}

CheckOutcome measurement_projection_equivalence() {
  double worst = 0;
  const struct {
    double sigma, a;
  } cases[] = {{1.0, 3.0}, {1.0, 1.0}, {2.0, 3.0}};
  for (const auto c : cases) {
    const double extent = 8.0 * c.sigma;
    const PositionGrid xg(-extent, extent, Index(2 * extent / 5e-4) + 1);
    const auto psi = sample_gaussian(GaussianState(c.sigma), xg);
    const auto projected = apply_window_projector(psi, c.a);
    const auto support_state =
        restricted_to_interval(projected, -c.a / 2, c.a / 2).normalized();
    const double margin = c.a / 2 - 2.0 * xg.step();
    const PhaseSpaceGrid grid(-margin, margin, 101, -5.0, 5.0, 101);
    const auto numeric = wigner_numeric(support_state, grid);
    const auto analytic =
        projected_wigner_analytic(ProjectedGaussianParams(c.sigma, c.a), grid);
    worst = std::max(worst, (numeric.values - analytic.values).cwiseAbs().maxCoeff());
  }
  return {worst, "max |analytic - numeric| = " + fmt(worst) + " over the (sigma, a) trio"};
}

CheckOutcome measurement_sign_flip() {
  const struct {
    double sigma, a;
  } cases[] = {{1.0, 3.0}, {1.0, 1.0}, {2.0, 3.0}};
  bool ok = true;
  std::string details;
  for (const auto c : cases) {
    const PhaseSpaceGrid grid(-c.a / 2, c.a / 2, 201, 1.5, 5.0, 201);
    const auto projected =
        projected_wigner_analytic(ProjectedGaussianParams(c.sigma, c.a), grid);
    const auto plain = wigner_of_gaussian(GaussianState(c.sigma), grid);
    const double mn = projected.values.minCoeff();
    ok = ok && mn < 0.0 && plain.values.minCoeff() > 0.0;
    details += " min=" + fmt(mn);
  }
  return {ok ? 0.0 : 1.0, "projected minima:" + details};
}

CheckOutcome measurement_rank_one_nonnegativity() {
  const PositionGrid xg(-24.0, 24.0, 48001);
  const auto psi = sample_gaussian(GaussianState(1.0), xg);
  const auto out = apply_rank_one_gaussian(GaussianState(2.0), psi);
  WignerNumericOptions opts;
  opts.y_halfwidth = 32.0;
  const auto w = wigner_numeric(out, PhaseSpaceGrid(-8, 8, 81, -4, 4, 81), opts);
  const double measured = std::max(0.0, -w.values.minCoeff());
  return {measured, "min of the projected field = " + fmt(w.values.minCoeff())};
}

CheckOutcome measurement_properness_dichotomy() {
  const PhaseSpaceGrid grid(-4, 4, 81, -4, 4, 81);
  const auto window = properness_report(symbol_of_window(3.0, grid), {0.0, 1.0}, 0.0);
  const auto gauss =
      properness_report(symbol_of_rank_one_gaussian(GaussianState(1.0), grid), {0.0, 1.0});
  double measured = std::max(window.max_distance, std::abs(gauss.max_distance - 1.0));
  // the window projector breaks non-negativity, the rank-one Gaussian keeps it
  const auto projected = projected_wigner_analytic(ProjectedGaussianParams(1.0, 3.0),
                                                   PhaseSpaceGrid(-1.5, 1.5, 201, 1.5, 5, 201));
  if (!(projected.values.minCoeff() < 0.0)) measured = 1.0;
  const PositionGrid xg(-24.0, 24.0, 48001);
  const auto kept = apply_rank_one_gaussian(GaussianState(2.0),
                                            sample_gaussian(GaussianState(1.0), xg));
  WignerNumericOptions opts;
  opts.y_halfwidth = 32.0;
  const auto w = wigner_numeric(kept, PhaseSpaceGrid(-8, 8, 61, -4, 4, 61), opts);
  if (!(w.values.minCoeff() >= -1e-9)) measured = 1.0;
  return {measured, "window max_distance " + fmt(window.max_distance) +
                        ", rank-one distance-to-{0,1} " + fmt(gauss.max_distance)};
}

CheckOutcome measurement_uncertainty_violation() {
  const PhaseSpaceGrid grid(-8.0, 8.0, 8001, -8.0, 8.0, 321);
  const auto w = wigner_of_gaussian(GaussianState(1.0), grid);
  const auto original = moments(w);
  const auto cut = naive_classical_truncation(w, 3.0);
  const auto truncated = moments(cut.field);
  double measured = std::abs(original.uncertainty_product - 0.25);
  measured = std::max(measured, std::abs(truncated.var_p - 0.25));
  if (!(truncated.uncertainty_product < 0.2)) measured = 1.0;
  return {measured, "products: original " + fmt(original.uncertainty_product) +
                        ", truncated " + fmt(truncated.uncertainty_product)};
}

CheckOutcome measurement_nonfactor_margin() {
  const PositionGrid xg(-8.0, 8.0, 2001);
  const auto psi = sample_gaussian(GaussianState(1.0), xg);
  const auto p = window_projector_kernel(3.0, xg);
  const auto sandwich = compose_kernels(p, compose_kernels(rank_one_kernel(psi), p));
  const PhaseSpaceGrid viewport(-1.5, 1.5, 301, 1.5, 5.0, 351);
  auto composed = symbol_of_kernel(sandwich, viewport);
  composed.values /= expectation_hilbert(psi, p);
  const auto product = pointwise_product(symbol_of_window(3.0, viewport),
                                         wigner_of_gaussian(GaussianState(1.0), viewport));
  const double gap = (composed.values - product.values).cwiseAbs().maxCoeff();
  return {gap >= kNonfactorMargin ? 0.0 : 1.0,
          "max |W_{PrhoP} - W_P W_rho| = " + fmt(gap) + " (margin " +
              fmt(kNonfactorMargin) + ")"};
}

CheckOutcome analysis_expectation_equivalence() {
  const PositionGrid xg(-8.0, 8.0, 16001);
  const auto psi = sample_gaussian(GaussianState(1.0), xg);
  const PhaseSpaceGrid grid(-8.0, 8.0, 8001, -8.0, 8.0, 161);
  const auto w_state = wigner_of_gaussian(GaussianState(1.0), grid);
  const auto pk = window_projector_kernel(3.0, xg);
  const auto x2k = diagonal_observable_kernel([](double x) { return x * x; }, xg);
  const auto pap = compose_kernels(pk, compose_kernels(x2k, pk));

  double worst = std::abs(phase_space_expectation(
                              w_state, symbol_of_diagonal([](double) { return 1.0; }, grid)) -
                          expectation_hilbert(psi, identity_kernel(xg)));
  worst = std::max(worst, std::abs(phase_space_expectation(
                              w_state, symbol_of_diagonal([](double x) { return x; }, grid)) -
                          expectation_hilbert(
                              psi, diagonal_observable_kernel([](double x) { return x; }, xg))));
  worst = std::max(worst, std::abs(phase_space_expectation(
                              w_state, symbol_of_diagonal([](double x) { return x * x; }, grid)) -
                          expectation_hilbert(psi, x2k)));
  worst = std::max(worst,
                   std::abs(phase_space_expectation(w_state, symbol_of_window(3.0, grid)) -
                            expectation_hilbert(psi, pk)));
  worst = std::max(worst, std::abs(phase_space_expectation(w_state, symbol_of_kernel(pap, grid)) -
                                   expectation_hilbert(psi, pap)));
  return {worst, "max |phase-space - Hilbert| = " + fmt(worst) + " over {1, x, x^2, P, PAP}"};
}

CheckOutcome analysis_chained_projection() {
  const PositionGrid xg(-8.0, 8.0, 16001);
  const auto psi = sample_gaussian(GaussianState(1.0), xg);
  const auto pk = window_projector_kernel(3.0, xg);
  const auto pap = compose_kernels(
      pk, compose_kernels(diagonal_observable_kernel([](double x) { return x * x; }, xg), pk));
  const double average = expectation_hilbert(psi, pap);
  const auto projected =
      restricted_to_interval(apply_window_projector(psi, 3.0), -1.5, 1.5).normalized();
  const auto w = wigner_numeric(projected, PhaseSpaceGrid(-1.5, 1.5, 101, -5, 5, 101));
  const double mn = negativity_report(w).min_value;
  const bool ok = std::isfinite(average) && average > 0.0 && mn < 0.0;
  return {ok ? 0.0 : 1.0,
          "<PAP> = " + fmt(average) + ", min W of the projected state = " + fmt(mn)};
}

CheckOutcome analysis_negativity_refinement() {
  const ProjectedGaussianParams params(1.0, 3.0);
  const auto coarse = negativity_report(
      projected_wigner_analytic(params, PhaseSpaceGrid(-1.5, 1.5, 301, 1.5, 5.0, 351)));
  const auto fine = negativity_report(
      projected_wigner_analytic(params, PhaseSpaceGrid(-1.5, 1.5, 601, 1.5, 5.0, 701)));
  const double measured = std::abs(fine.min_value - coarse.min_value);
  return {measured, "min shifts by " + fmt(measured) + " when the grid is doubled"};
}

CheckOutcome analysis_properness_tolerances() {
  const PhaseSpaceGrid grid(-4, 4, 81, -4, 4, 81);
  const auto window = symbol_of_window(3.0, grid);
  const auto gauss = symbol_of_rank_one_gaussian(GaussianState(1.0), grid);
  const bool ok = properness_report(window, {0.0, 1.0}, 0.0).proper &&
                  !properness_report(gauss, {0.0, 1.0}, 0.999).proper &&
                  properness_report(gauss, {0.0, 1.0}, 1.0).proper;
  return {ok ? 0.0 : 1.0, "verdicts across the tolerance sweep"};
}

struct RankNOutcomes {
  double gram = 0;
  double idempotence = 0;
  double infidelity = 0;
};

RankNOutcomes compute_rank_n_outcomes() {
  RankNOutcomes out;
  const PositionGrid grid(-16.0, 16.0, 1281);
  const auto psi_g1 = sample_gaussian(GaussianState(1.0), grid);
  const auto psi_g2 = sample_gaussian(GaussianState(2.0), grid);
  for (Index n : {Index(0), Index(1), Index(2)}) {
    const auto seeds = hermite_like_seeds(GaussianState(1.0), grid, n);
    const auto proj = build_rank_n_projector(psi_g2, seeds, psi_g1);
    for (std::size_t r = 0; r < proj.members.size(); ++r)
      for (std::size_t c = 0; c < proj.members.size(); ++c)
        out.gram = std::max(out.gram,
                            std::abs(inner_product(proj.members[r], proj.members[c]) -
                                     (r == c ? 1.0 : 0.0)));
    const auto k = proj.kernel();
    const auto kk = compose_kernels(k, k);
    out.idempotence = std::max(
        out.idempotence, (kk.dense_kernel() - k.dense_kernel()).cwiseAbs().maxCoeff());
    out.infidelity = std::max(
        out.infidelity, 1.0 - fidelity(proj.apply(psi_g1).normalized(), psi_g2));
  }
  return out;
}

std::vector<Check> build_checks() {
  std::vector<Check> checks;
  checks.push_back({"special-symmetries", 1e-14, true, special_symmetries});
  checks.push_back({"special-scaled-consistency", 1e-9, true, special_consistency});
  checks.push_back({"special-asymptotic-tail", 1.0, true, special_asymptotic_tail});
  checks.push_back({"core-gaussian-moments", 1e-8, true, core_gaussian_moments});
  checks.push_back({"core-projector-idempotence", 1e-6, true, core_projector_idempotence});
  checks.push_back({"core-sandwich-hermiticity", 0.5, true, core_sandwich_hermiticity});
  checks.push_back({"transform-gaussian-oracle", 1e-6, true, transform_gaussian_oracle});
  checks.push_back({"transform-normalization", 1e-8, true, transform_normalization});
  checks.push_back({"transform-marginals", 1e-6, true, transform_marginals});
  checks.push_back({"transform-parity", 1e-10, true, transform_parity});
  checks.push_back(
      {"measurement-projection-equivalence", 1e-6, true, measurement_projection_equivalence});
  checks.push_back({"measurement-sign-flip", 0.5, true, measurement_sign_flip});
  checks.push_back(
      {"measurement-rank-one-nonnegativity", 1e-9, true, measurement_rank_one_nonnegativity});
  checks.push_back(
      {"measurement-properness-dichotomy", 1e-9, true, measurement_properness_dichotomy});
  checks.push_back(
      {"measurement-uncertainty-violation", 1e-8, true, measurement_uncertainty_violation});
  checks.push_back({"measurement-nonfactor-margin", 0.5, true, measurement_nonfactor_margin});
  checks.push_back(
      {"analysis-expectation-equivalence", 1e-5, true, analysis_expectation_equivalence});
  checks.push_back({"analysis-chained-projection", 0.5, true, analysis_chained_projection});
  checks.push_back(
      {"analysis-negativity-refinement", 1e-4, true, analysis_negativity_refinement});
  checks.push_back(
      {"analysis-properness-tolerances", 0.5, true, analysis_properness_tolerances});
  // rank-N machinery is the one GEMM-heavy block; excluded from --quick.
  // The three checks share one computation (the first pays the runtime).
  auto rank_n = []() -> const RankNOutcomes& {
    static const RankNOutcomes out = compute_rank_n_outcomes();
    return out;
  };
  checks.push_back({"rank-n-gram", 1e-8, false, [rank_n] {
                      const auto& out = rank_n();
                      return CheckOutcome{out.gram, "max Gram deviation " + fmt(out.gram)};
                    }});
  checks.push_back({"rank-n-idempotence", 1e-6, false, [rank_n] {
                      const auto& out = rank_n();
                      return CheckOutcome{out.idempotence,
                                          "max |P^2 - P| = " + fmt(out.idempotence)};
                    }});
  checks.push_back({"rank-n-projects-to-target", 1e-6, false, [rank_n] {
                      const auto& out = rank_n();
                      return CheckOutcome{out.infidelity,
                                          "max infidelity " + fmt(out.infidelity)};
                    }});
  return checks;
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& opts) {
  VerificationReport report;
  report.quick = opts.quick;
  report.tolerance_scale = opts.tolerance_scale;
  const auto t0 = Clock::now();
  for (const auto& check : build_checks()) {
    if (opts.quick && !check.quick) continue;
    const auto c0 = Clock::now();
    CheckOutcome outcome{};
    std::string error;
    try {
      outcome = check.run();
    } catch (const std::exception& e) {
      outcome.measured = std::numeric_limits<double>::infinity();
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - c0).count();
    const double tolerance = check.tolerance * opts.tolerance_scale;
    CheckResult result{check.name,
                       outcome.measured <= tolerance,
                       outcome.measured,
                       tolerance,
                       seconds,
                       error.empty() ? outcome.details : "exception: " + error};
    report.all_passed = report.all_passed && result.passed;
    if (opts.progress)
      *opts.progress << (result.passed ? "[PASS] " : "[FAIL] ") << result.name << " ("
                     << fmt(seconds) << "s): " << result.details << "\n";
    report.checks.push_back(std::move(result));
  }
  report.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

void write_verification_report(const std::string& path, const VerificationReport& report) {
  nlohmann::json j;
  j["quick"] = report.quick;
  j["tolerance_scale"] = report.tolerance_scale;
  j["all_passed"] = report.all_passed;
  j["total_seconds"] = report.total_seconds;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"measured", std::isfinite(c.measured)
                                            ? nlohmann::json(c.measured)
                                            : nlohmann::json("infinite")},
                           {"tolerance", c.tolerance},
                           {"seconds", c.seconds},
                           {"details", c.details}});
  }
  std::ofstream(path) << j.dump(2) << "\n";
}

}  // namespace wigner::app
