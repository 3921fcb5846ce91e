// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "support/reference_values.hpp"
#include "wigner/analysis.hpp"
#include "wigner/gaussian.hpp"
#include "wigner/kernel.hpp"
#include "wigner/transform.hpp"

using namespace wigner;

namespace {

// Position grid [-12 sigma, 12 sigma] with dx = sigma / 1000; wide enough that
// every |q| <= 8 sigma row keeps its full y-window.
PositionGrid transform_grid(double sigma) {
  return PositionGrid(-12.0 * sigma, 12.0 * sigma, 24001);
}

PhaseSpaceGrid region(double sigma, double qr, double pr, Index nq, Index np) {
  return PhaseSpaceGrid(-qr * sigma, qr * sigma, nq, -pr / sigma, pr / sigma, np);
}

}  // namespace

TEST_CASE("closed-form Gaussian field hits its pinned values") {
  const PhaseSpaceGrid g(-8.0, 8.0, 161, -8.0, 8.0, 161);
  const auto w = wigner_of_gaussian(GaussianState(1.0), g);
  CHECK(w.values(80, 80) == 2.0);  // peak value exactly 2 at the origin node
  // (q, p) = (1, 0) -> 2 exp(-1/2)
  CHECK(w.values(90, 80) == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-12));
  CHECK(w.values.minCoeff() > 0.0);
  CHECK(normalization(w).value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("closed-form Gaussian field translates with the offsets") {
  const PhaseSpaceGrid g(-6.0, 10.0, 161, -7.0, 9.0, 161);
  const auto w = wigner_of_gaussian(GaussianState(1.0, 2.0, 1.0), g);
  Index iq = 0, jp = 0;
  double best = -1;
  for (Index i = 0; i < g.n_q; ++i)
    for (Index j = 0; j < g.n_p; ++j)
      if (w.values(i, j) > best) {
        best = w.values(i, j);
        iq = i;
        jp = j;
      }
  CHECK(g.q_node(iq) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(g.p_node(jp) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(best == 2.0);
  CHECK(normalization(w).value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("numeric transform reproduces the Gaussian closed form") {
  for (double sigma : {0.5, 1.0, 2.0}) {
    const auto psi = sample_gaussian(GaussianState(sigma), transform_grid(sigma));
    const auto grid = region(sigma, 4.0, 4.0, 81, 81);
    WignerNumericOptions opts;
    opts.y_halfwidth = 16.0 * sigma;
    const auto numeric = wigner_numeric(psi, grid, opts);
    const auto analytic = wigner_of_gaussian(GaussianState(sigma), grid);
    const double gap = (numeric.values - analytic.values).cwiseAbs().maxCoeff();
    CHECK(gap < 1e-6);
    CHECK(numeric.tail == TailDecay::Gaussian);
  }
}

TEST_CASE("numeric transform tolerates off-lattice phase-space nodes") {
  // nodes deliberately incommensurate with the sample lattice, so every
  // evaluation interpolates
  const PositionGrid xg(-12.0, 12.0, 48001);
  const auto psi = sample_gaussian(GaussianState(1.0), xg);
  const PhaseSpaceGrid grid(-3.977, 3.977, 77, -3.977, 3.977, 77);
  const auto numeric = wigner_numeric(psi, grid);
  const auto analytic = wigner_of_gaussian(GaussianState(1.0), grid);
  CHECK((numeric.values - analytic.values).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("numeric field of a real even state is even in q and in p") {
  const auto psi = sample_gaussian(GaussianState(1.0), transform_grid(1.0));
  const PhaseSpaceGrid grid = region(1.0, 4.0, 4.0, 61, 61);
  const auto w = wigner_numeric(psi, grid);
  for (Index i = 0; i < grid.n_q; ++i)
    for (Index j = 0; j < grid.n_p; ++j) {
      CHECK(w.values(i, j) ==
            doctest::Approx(w.values(grid.n_q - 1 - i, j)).epsilon(1e-10));
      CHECK(w.values(i, j) ==
            doctest::Approx(w.values(i, grid.n_p - 1 - j)).epsilon(1e-10));
    }
}

TEST_CASE("numeric field has the position-density marginal") {
  const auto psi = sample_gaussian(GaussianState(1.0), transform_grid(1.0));
  const PhaseSpaceGrid grid(-8.0, 8.0, 161, -8.0, 8.0, 321);
  const auto w = wigner_numeric(psi, grid);
  const auto m = marginal_q(w);
  // |psi(0)|^2 at the central node
  CHECK(m.values[80] == doctest::Approx(refval::gaussian_marginal_peak).epsilon(1e-6));
  for (Index i = 0; i < grid.n_q; ++i) {
    const double x = grid.q_node(i);
    const double want = std::exp(-x * x / 2.0) / std::sqrt(2.0 * M_PI);
    CHECK(m.values[i] == doctest::Approx(want).epsilon(1e-6).scale(1.0));
  }
  // marginal integrates (dq) back to 1
  const auto wq = trapezoid_weights(grid.dq(), grid.n_q);
  CHECK((wq * m.values.array()).sum() == doctest::Approx(1.0).epsilon(1e-8));
  // momentum marginal: integral W dq = |FT psi|^2 = 2 sqrt(2 pi) sigma e^{-2 sigma^2 p^2}
  const Eigen::RowVectorXd col = wq.matrix().transpose() * w.values;
  for (Index j = 0; j < grid.n_p; ++j) {
    const double p = grid.p_node(j);
    const double want = 2.0 * std::sqrt(2.0 * M_PI) * std::exp(-2.0 * p * p);
    CHECK(col[j] == doctest::Approx(want).epsilon(1e-6).scale(1.0));
  }
  CHECK(normalization(w).value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("numeric transform enforces its preconditions") {
  const PositionGrid xg(-6.0, 6.0, 12001);
  const auto psi = sample_gaussian(GaussianState(0.5), xg);
  WignerNumericOptions opts;
  opts.y_halfwidth = 16.0;  // needs x up to q + 8
  CHECK_THROWS_AS(wigner_numeric(psi, PhaseSpaceGrid(-2, 2, 17, -2, 2, 17), opts),
                  SupportExceeded);
  CHECK_THROWS_AS(wigner_numeric(psi, PhaseSpaceGrid(-8, 8, 17, -2, 2, 17)),
                  SupportExceeded);  // q outside the sample grid entirely
  SampledState big(xg, psi.amplitudes() * 1.5);
  CHECK_THROWS_AS(wigner_numeric(big, PhaseSpaceGrid(-2, 2, 17, -2, 2, 17)),
                  NotNormalized);
}

TEST_CASE("window symbol is the step function with theta(0) = 1") {
  const PhaseSpaceGrid g(-4.0, 4.0, 33, 84.0, 116.0, 17);
  const auto w = symbol_of_window(3.0, g);
  const Index iq0 = 16;               // q = 0
  CHECK(g.q_node(iq0) == 0.0);
  CHECK(w.values(iq0, 8) == 1.0);     // p = 100: p-independent
  const Index edge = 22;              // q = 1.5 exactly
  CHECK(g.q_node(edge) == 1.5);
  CHECK(w.values(edge, 0) == 1.0);    // boundary node kept
  const Index outside = 28;           // q = 3.0
  CHECK(g.q_node(outside) == 3.0);
  CHECK(w.values(outside, 0) == 0.0);
  for (Index i = 0; i < g.n_q; ++i)
    for (Index j = 0; j < g.n_p; ++j)
      CHECK((w.values(i, j) == 0.0 || w.values(i, j) == 1.0));
}

TEST_CASE("diagonal symbol is f(q), independent of p") {
  const PhaseSpaceGrid g(-4.0, 4.0, 33, -9.0, 9.0, 19);
  const auto w = symbol_of_diagonal([](double x) { return x * x; }, g);
  CHECK(w.values(24, 0) == 4.0);   // q = 2
  CHECK(w.values(24, 18) == 4.0);  // any p
  const auto lin = symbol_of_diagonal([](double x) { return x; }, g);
  CHECK(lin.values(12, 16) == -1.0);  // q = -1, p = 7
  const auto ind = symbol_of_diagonal(
      [](double x) { return std::abs(x) <= 1.5 ? 1.0 : 0.0; }, g);
  const auto win = symbol_of_window(3.0, g);
  CHECK((ind.values - win.values).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(symbol_of_diagonal([](double x) { return std::log(x); }, g),
                  NonFiniteSample);
}

TEST_CASE("rank-one Gaussian symbol leaves the eigenvalue set {0, 1}") {
  const double qcross = std::sqrt(2.0 * std::log(2.0));
  const PhaseSpaceGrid g(-qcross, qcross, 17, -2.0, 2.0, 17);
  const auto w = symbol_of_rank_one_gaussian(GaussianState(1.0), g);
  CHECK(w.values(8, 8) == 2.0);                                   // origin: value 2
  CHECK(w.values(16, 8) == doctest::Approx(1.0).epsilon(1e-12));  // crosses 1 smoothly
  CHECK(w.values.minCoeff() > 0.0);
  CHECK(w.values.maxCoeff() == 2.0);
  CHECK(w.kind == FieldKind::OperatorSymbol);
}

TEST_CASE("kernel symbol routes diagonals through the exact delta") {
  const PositionGrid xg(-8.0, 8.0, 1601);
  const PhaseSpaceGrid g(-4.0, 4.0, 81, -4.0, 4.0, 33);
  const auto x2 = diagonal_observable_kernel([](double x) { return x * x; }, xg);
  const auto sym = symbol_of_kernel(x2, g);
  const auto want = symbol_of_diagonal([](double x) { return x * x; }, g);
  CHECK((sym.values - want.values).cwiseAbs().maxCoeff() <= 1e-6);

  const auto win = window_projector_kernel(3.0, xg);
  const auto wsym = symbol_of_kernel(win, g);
  const auto wref = symbol_of_window(3.0, g);
  // split metric: tight away from the jump, loose near it (the delta route is
  // exact here, so both bands pass with margin)
  double away = 0, band = 0;
  for (Index i = 0; i < g.n_q; ++i) {
    const double d = std::abs(std::abs(g.q_node(i)) - 1.5);
    for (Index j = 0; j < g.n_p; ++j) {
      const double gap = std::abs(wsym.values(i, j) - wref.values(i, j));
      (d <= 2.0 * xg.step() ? band : away) = std::max(d <= 2.0 * xg.step() ? band : away, gap);
    }
  }
  CHECK(away <= 0.02);
  CHECK(band <= 0.2);
}

TEST_CASE("kernel symbol of a rank-one Gaussian matches the closed form") {
  const PositionGrid xg(-8.0, 8.0, 1601);
  const auto psi = sample_gaussian(GaussianState(1.0), xg);
  const auto k = rank_one_kernel(psi);
  const PhaseSpaceGrid g(-3.0, 3.0, 61, -3.0, 3.0, 61);
  const auto sym = symbol_of_kernel(k, g);
  const auto want = symbol_of_rank_one_gaussian(GaussianState(1.0), g);
  CHECK((sym.values - want.values).cwiseAbs().maxCoeff() <= 1e-6);
  CHECK(sym.kind == FieldKind::OperatorSymbol);
}

TEST_CASE("kernel symbol requires hermiticity") {
  const PositionGrid xg(-8.0, 8.0, 64);
  OperatorKernel::DenseMatrix m = OperatorKernel::DenseMatrix::Zero(64, 64);
  m(1, 2) = 1.0;  // not hermitian
  const auto k = OperatorKernel::make_dense(xg, m);
  CHECK_THROWS_AS(symbol_of_kernel(k, PhaseSpaceGrid(-2, 2, 17, -2, 2, 17)),
                  NotHermitian);
}

TEST_CASE("pointwise product composes fields elementwise") {
  const PhaseSpaceGrid g(-4.0, 4.0, 33, -4.0, 4.0, 33);
  const auto wf = wigner_of_gaussian(GaussianState(1.0), g);
  const auto one = symbol_of_diagonal([](double) { return 1.0; }, g);
  const auto same = pointwise_product(wf, one);
  CHECK((same.values - wf.values).cwiseAbs().maxCoeff() == 0.0);
  const auto win = symbol_of_window(3.0, g);
  const auto prod = pointwise_product(win, wf);
  CHECK(prod.values(16, 16) == 2.0);  // (0, 0): 1 x 2
  CHECK(prod.values(24, 16) == 0.0);  // (2, 0): outside the window
  CHECK(prod.q_support.has_value());
  const PhaseSpaceGrid other(-4.0, 4.0, 33, -4.0, 4.0, 35);
  CHECK_THROWS_AS(pointwise_product(wf, wigner_of_gaussian(GaussianState(1.0), other)),
                  GridMismatch);
}
