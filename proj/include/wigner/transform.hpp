// SPDX-License-Identifier: Apache-2.0
//
// Maps states and operator kernels to phase-space fields.
//
// The state transform is
//   W(q, p) = integral e^{-i p y} psi(q + y/2) conj(psi(q - y/2)) dy
// realized as a composite trapezoid sum over a symmetric y-window with linear
// interpolation of psi between samples; operator kernels transform the same
// way with K(q + y/2, q - y/2) and bilinear interpolation.  The y-window is
// capped per row by the position grid so the half-shifted arguments never
// leave it; for states that vanish beyond their grid (a window-projected state
// restricted to its support) the cap lands exactly on the support edge and the
// integrand stays smooth inside, which is what makes the quadrature O(dy^2)
// there instead of stalling on the jump.
#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "wigner/field.hpp"
#include "wigner/gaussian.hpp"
#include "wigner/kernel.hpp"
#include "wigner/parallel.hpp"
#include "wigner/state.hpp"

namespace wigner {

namespace detail {

template <class Scalar>
typename WignerFieldT<Scalar>::Matrix gaussian_field_values(
    const GaussianStateT<Scalar>& g, const PhaseSpaceGridT<Scalar>& grid) {
  Eigen::Array<Scalar, Eigen::Dynamic, 1> fq(grid.n_q), fp(grid.n_p);
  const Scalar s2 = g.sigma * g.sigma;
  for (Index i = 0; i < grid.n_q; ++i) {
    const Scalar d = grid.q_node(i) - g.q0;
    fq[i] = Scalar(2) * std::exp(-d * d / (Scalar(2) * s2));
  }
  for (Index j = 0; j < grid.n_p; ++j) {
    const Scalar d = grid.p_node(j) - g.p0;
    fp[j] = std::exp(Scalar(-2) * s2 * d * d);
  }
  return fq.matrix() * fp.matrix().transpose();
}

}  // namespace detail

// Closed-form Wigner function of a Gaussian state,
//   W(q, p) = 2 exp(-(q-q0)^2 / (2 sigma^2)) exp(-2 sigma^2 (p-p0)^2);
// strictly positive with peak value exactly 2.
template <class Scalar>
WignerFieldT<Scalar> wigner_of_gaussian(const GaussianStateT<Scalar>& g,
                                        const PhaseSpaceGridT<Scalar>& grid) {
  return WignerFieldT<Scalar>(grid, detail::gaussian_field_values(g, grid),
                              FieldKind::StateWigner);
}

// Phase-space symbol of the rank-one Gaussian projector |psi_G><psi_G|.  Same
// surface as the state's Wigner function, so its value set is (0, 2]: it
// reaches 2 rather than staying on the projector eigenvalues {0, 1}.
template <class Scalar>
WignerFieldT<Scalar> symbol_of_rank_one_gaussian(const GaussianStateT<Scalar>& g,
                                                 const PhaseSpaceGridT<Scalar>& grid) {
  return WignerFieldT<Scalar>(grid, detail::gaussian_field_values(g, grid),
                              FieldKind::OperatorSymbol);
}

// Symbol of the window projector: theta(a/2 - |q|), independent of p, with
// theta(0) = 1 so nodes landing exactly on +-a/2 are kept.  Value set {0, 1} =
// the projector's eigenvalues.
template <class Scalar>
WignerFieldT<Scalar> symbol_of_window(Scalar a, const PhaseSpaceGridT<Scalar>& grid) {
  if (!(a > Scalar(0)) || !std::isfinite(a))
    throw std::invalid_argument("symbol_of_window: a must be positive");
  const Scalar half = a / 2;
  typename WignerFieldT<Scalar>::Matrix v(grid.n_q, grid.n_p);
  for (Index i = 0; i < grid.n_q; ++i)
    v.row(i).setConstant(std::abs(grid.q_node(i)) <= half ? Scalar(1) : Scalar(0));
  WignerFieldT<Scalar> out(grid, std::move(v), FieldKind::OperatorSymbol);
  out.q_support = IntervalT<Scalar>{-half, half};
  return out;
}

// Symbol of a diagonal observable: W(q, p) = f(q).
template <class Scalar, class Fn>
WignerFieldT<Scalar> symbol_of_diagonal(Fn&& f, const PhaseSpaceGridT<Scalar>& grid) {
  typename WignerFieldT<Scalar>::Matrix v(grid.n_q, grid.n_p);
  for (Index i = 0; i < grid.n_q; ++i) {
    const Scalar fi = static_cast<Scalar>(f(grid.q_node(i)));
    if (!std::isfinite(fi))
      throw NonFiniteSample("symbol_of_diagonal: f is not finite on the grid");
    v.row(i).setConstant(fi);
  }
  return WignerFieldT<Scalar>(grid, std::move(v), FieldKind::OperatorSymbol);
}

template <class Scalar>
struct WignerNumericOptionsT {
  // Explicit half-width of the y-integration window.  When set, every row must
  // be coverable by the state's grid or SupportExceeded is thrown; when unset,
  // the window is capped per row by the grid extent.
  std::optional<Scalar> y_halfwidth{};
  // Target y-step; defaults to twice the state's grid spacing, which makes the
  // half-shifted arguments land on sample nodes whenever q does.
  std::optional<Scalar> y_step{};
  int threads = 0;
};

using WignerNumericOptions = WignerNumericOptionsT<double>;

namespace detail {

// Shared phase-recurrence trapezoid sum over a symmetric y-grid.
// F holds the integrand samples with the end weights already halved.
template <class Scalar>
std::complex<Scalar> oscillatory_row_sum(const std::vector<std::complex<Scalar>>& f,
                                         Scalar y_halfwidth, Scalar dy, Scalar p) {
  std::complex<Scalar> phase = std::polar(Scalar(1), p * y_halfwidth);
  const std::complex<Scalar> step = std::polar(Scalar(1), -p * dy);
  std::complex<Scalar> acc(0);
  for (const auto& fk : f) {
    acc += phase * fk;
    phase *= step;
  }
  return acc * dy;
}

}  // namespace detail

// Quadrature realization of the state Wigner transform.  The output is real up
// to an imaginary residue below 1e-10 (checked, then discarded).
template <class Scalar>
WignerFieldT<Scalar> wigner_numeric(const SampledStateT<Scalar>& psi,
                                    const PhaseSpaceGridT<Scalar>& grid,
                                    const WignerNumericOptionsT<Scalar>& opts = {}) {
  using C = std::complex<Scalar>;
  if (!psi.is_normalized(Scalar(1e-6)))
    throw NotNormalized("wigner_numeric: state must be normalized");
  const auto& xg = psi.grid();
  const Scalar dx = xg.step();
  const Scalar dy_target = opts.y_step.value_or(Scalar(2) * dx);
  if (!(dy_target > Scalar(0)))
    throw std::invalid_argument("wigner_numeric: y_step must be positive");

  // Per-row integration windows, validated up front.
  std::vector<Scalar> halfwidth(grid.n_q);
  std::vector<Index> halfcount(grid.n_q);
  for (Index i = 0; i < grid.n_q; ++i) {
    const Scalar q = grid.q_node(i);
    Scalar allowed = Scalar(2) * std::min(xg.x_max - q, q - xg.x_min);
    if (allowed < Scalar(-1e-9) * dx)
      throw SupportExceeded("wigner_numeric: phase-space q outside the state's grid");
    allowed = std::max(allowed, Scalar(0));
    Scalar y = allowed;
    if (opts.y_halfwidth) {
      if (*opts.y_halfwidth > allowed + Scalar(1e-9) * dx)
        throw SupportExceeded(
            "wigner_numeric: requested y-window exceeds the state's grid");
      y = std::min(*opts.y_halfwidth, allowed);
    }
    halfwidth[i] = y;
    halfcount[i] = y > Scalar(0)
                       ? std::max<Index>(16, static_cast<Index>(
                                                 std::ceil(y / dy_target - Scalar(1e-12))))
                       : 0;
  }

  typename WignerFieldT<Scalar>::Matrix values(grid.n_q, grid.n_p);
  std::vector<Scalar> residue(grid.n_q, Scalar(0));
  const C* amp = psi.amplitudes().data();
  const Index last_cell = xg.n_x - 2;

  auto interp = [amp, &xg, dx, last_cell](Scalar x) -> C {
    Scalar t = (x - xg.x_min) / dx;
    if (t < Scalar(0)) t = Scalar(0);
    Index i = static_cast<Index>(t);
    if (i > last_cell) i = last_cell;
    const Scalar f = t - Scalar(i);
    return (Scalar(1) - f) * amp[i] + f * amp[i + 1];
  };

  parallel_for(
      grid.n_q,
      [&](Index iq) {
        const Index m = halfcount[iq];
        if (m == 0) {
          values.row(iq).setZero();
          return;
        }
        const Scalar q = grid.q_node(iq);
        const Scalar y_half = halfwidth[iq];
        const Scalar dy = y_half / Scalar(m);
        std::vector<C> f(2 * m + 1);
        for (Index k = 0; k <= 2 * m; ++k) {
          const Scalar y = Scalar(k - m) * dy;
          f[k] = interp(q + y / 2) * std::conj(interp(q - y / 2));
        }
        f.front() *= Scalar(0.5);
        f.back() *= Scalar(0.5);
        Scalar row_residue = 0;
        for (Index jp = 0; jp < grid.n_p; ++jp) {
          const C w = detail::oscillatory_row_sum(f, y_half, dy, grid.p_node(jp));
          values(iq, jp) = w.real();
          row_residue = std::max(row_residue, std::abs(w.imag()));
        }
        residue[iq] = row_residue;
      },
      opts.threads);

  const Scalar max_residue = *std::max_element(residue.begin(), residue.end());
  if (!(max_residue < Scalar(1e-10)))
    throw Error("wigner_numeric: imaginary residue exceeds 1e-10");

  WignerFieldT<Scalar> out(grid, std::move(values), FieldKind::StateWigner);
  const Scalar peak = psi.amplitudes().cwiseAbs().maxCoeff();
  const Scalar edge = std::max(std::abs(psi.amplitudes()[0]),
                               std::abs(psi.amplitudes()[xg.n_x - 1]));
  out.tail = edge > Scalar(1e-8) * peak ? TailDecay::SlowOscillatory : TailDecay::Gaussian;
  return out;
}

template <class Scalar>
struct SymbolOptionsT {
  std::optional<Scalar> y_step{};
  int threads = 0;
};

using SymbolOptions = SymbolOptionsT<double>;

// Wigner transform of an operator kernel.  Diagonal kernels carry an exact
// delta in the cross coordinate, so their symbol is f(q) directly (linearly
// interpolated between diagonal samples, masked by the support); dense kernels
// go through the y-quadrature with bilinear interpolation.
template <class Scalar>
WignerFieldT<Scalar> symbol_of_kernel(const OperatorKernelT<Scalar>& a,
                                      const PhaseSpaceGridT<Scalar>& grid,
                                      const SymbolOptionsT<Scalar>& opts = {}) {
  using C = std::complex<Scalar>;
  if (!a.hermitian())
    throw NotHermitian("symbol_of_kernel: kernel must be hermitian");
  const auto& xg = a.grid();
  const Scalar dx = xg.step();

  if (a.is_diagonal()) {
    const auto support = a.row_support();
    typename WignerFieldT<Scalar>::Matrix v(grid.n_q, grid.n_p);
    const auto& diag = a.diagonal_values();
    for (Index i = 0; i < grid.n_q; ++i) {
      const Scalar q = grid.q_node(i);
      if (support && (q < support->lo || q > support->hi)) {
        v.row(i).setZero();
        continue;
      }
      Scalar t = (q - xg.x_min) / dx;
      if (t < Scalar(-1e-9) || t > Scalar(xg.n_x - 1) + Scalar(1e-9))
        throw SupportExceeded("symbol_of_kernel: phase-space q outside the kernel grid");
      t = std::clamp(t, Scalar(0), Scalar(xg.n_x - 1));
      const Index c = std::min<Index>(static_cast<Index>(t), xg.n_x - 2);
      const Scalar f = t - Scalar(c);
      v.row(i).setConstant((Scalar(1) - f) * diag[c] + f * diag[c + 1]);
    }
    WignerFieldT<Scalar> out(grid, std::move(v), FieldKind::OperatorSymbol);
    out.q_support = support;
    return out;
  }

  const Scalar dy_target = opts.y_step.value_or(Scalar(2) * dx);
  const auto support = intersect(a.row_support(), a.col_support());
  const Scalar lo = support ? std::max(support->lo, xg.x_min) : xg.x_min;
  const Scalar hi = support ? std::min(support->hi, xg.x_max) : xg.x_max;

  std::vector<Scalar> halfwidth(grid.n_q, Scalar(0));
  std::vector<Index> halfcount(grid.n_q, 0);
  for (Index i = 0; i < grid.n_q; ++i) {
    const Scalar q = grid.q_node(i);
    if (!support && (q < xg.x_min - Scalar(1e-9) * dx || q > xg.x_max + Scalar(1e-9) * dx))
      throw SupportExceeded("symbol_of_kernel: phase-space q outside the kernel grid");
    const Scalar y = Scalar(2) * std::min(hi - q, q - lo);
    if (y <= Scalar(0)) continue;
    halfwidth[i] = y;
    halfcount[i] =
        std::max<Index>(16, static_cast<Index>(std::ceil(y / dy_target - Scalar(1e-12))));
  }

  const auto& k = a.dense_kernel();
  const Index last_cell = xg.n_x - 2;
  auto bilerp = [&k, &xg, dx, last_cell](Scalar u, Scalar v) -> C {
    Scalar tu = (u - xg.x_min) / dx;
    Scalar tv = (v - xg.x_min) / dx;
    if (tu < Scalar(0)) tu = Scalar(0);
    if (tv < Scalar(0)) tv = Scalar(0);
    Index iu = std::min<Index>(static_cast<Index>(tu), last_cell);
    Index iv = std::min<Index>(static_cast<Index>(tv), last_cell);
    const Scalar fu = tu - Scalar(iu);
    const Scalar fv = tv - Scalar(iv);
    return (Scalar(1) - fu) * ((Scalar(1) - fv) * k(iu, iv) + fv * k(iu, iv + 1)) +
           fu * ((Scalar(1) - fv) * k(iu + 1, iv) + fv * k(iu + 1, iv + 1));
  };

  typename WignerFieldT<Scalar>::Matrix values(grid.n_q, grid.n_p);
  std::vector<Scalar> residue(grid.n_q, Scalar(0));
  parallel_for(
      grid.n_q,
      [&](Index iq) {
        const Index m = halfcount[iq];
        if (m == 0) {
          values.row(iq).setZero();
          return;
        }
        const Scalar q = grid.q_node(iq);
        const Scalar y_half = halfwidth[iq];
        const Scalar dy = y_half / Scalar(m);
        std::vector<C> f(2 * m + 1);
        for (Index kk = 0; kk <= 2 * m; ++kk) {
          const Scalar y = Scalar(kk - m) * dy;
          f[kk] = bilerp(q + y / 2, q - y / 2);
        }
        f.front() *= Scalar(0.5);
        f.back() *= Scalar(0.5);
        Scalar row_residue = 0;
        for (Index jp = 0; jp < grid.n_p; ++jp) {
          const C w = detail::oscillatory_row_sum(f, y_half, dy, grid.p_node(jp));
          values(iq, jp) = w.real();
          row_residue = std::max(row_residue, std::abs(w.imag()));
        }
        residue[iq] = row_residue;
      },
      opts.threads);

  const Scalar max_residue = *std::max_element(residue.begin(), residue.end());
  if (!(max_residue < Scalar(1e-8)))
    throw Error("symbol_of_kernel: imaginary residue exceeds 1e-8");

  WignerFieldT<Scalar> out(grid, std::move(values), FieldKind::OperatorSymbol);
  out.q_support = support;
  out.tail = support ? TailDecay::SlowOscillatory : TailDecay::Gaussian;
  return out;
}

}  // namespace wigner
