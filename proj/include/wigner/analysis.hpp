// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "wigner/field.hpp"
#include "wigner/state.hpp"
#include "wigner/transform.hpp"

namespace wigner {

// Integral with an error estimate.  Fields with sharp position windows decay
// along p only as an oscillatory 1/p, so their finite-grid integrals are
// conditionally convergent and a bare number would overstate what the grid
// knows; the bound is a one-lobe estimate of the truncated tail.
template <class Scalar>
struct IntegralEstimateT {
  Scalar value;
  Scalar error_bound;
};

using IntegralEstimate = IntegralEstimateT<double>;

namespace detail {

// Half period (in p units) of the row's oscillation, measured from sign
// changes over the outer third of the p-axis; falls back to that whole span
// when the row does not oscillate there.
template <class Scalar>
Scalar row_half_period(const WignerFieldT<Scalar>& w, Index iq) {
  const Index np = w.grid.n_p;
  const Index start = np - std::max<Index>(np / 3, 2);
  int flips = 0;
  for (Index j = start + 1; j < np; ++j)
    if ((w.values(iq, j) > 0) != (w.values(iq, j - 1) > 0)) ++flips;
  const Scalar span = (w.grid.p_node(np - 1) - w.grid.p_node(start));
  return flips > 0 ? span / Scalar(flips) : span;
}

template <class Scalar>
Scalar tail_error_bound(const WignerFieldT<Scalar>& w) {
  const auto wq = w.q_weights();
  const auto wp = w.p_weights();
  const Index nq = w.grid.n_q;
  const Index np = w.grid.n_p;
  Scalar ep = 0;
  if (w.tail == TailDecay::Gaussian) {
    for (Index i = 0; i < nq; ++i)
      ep += wq[i] * (std::abs(w.values(i, 0)) + std::abs(w.values(i, np - 1)));
    ep *= Scalar(4) * w.grid.dp();  // geometric extrapolation of a decaying strip
  } else {
    for (Index i = 0; i < nq; ++i) {
      const Scalar hp = row_half_period(w, i);
      ep += wq[i] * (std::abs(w.values(i, 0)) + std::abs(w.values(i, np - 1))) * hp;
    }
  }
  Scalar eq = 0;
  if (!w.q_support) {
    for (Index j = 0; j < np; ++j)
      eq += wp[j] * (std::abs(w.values(0, j)) + std::abs(w.values(nq - 1, j)));
    eq *= Scalar(4) * w.grid.dq();
  }
  return (ep + eq) / (Scalar(2) * std::numbers::pi_v<Scalar>);
}

}  // namespace detail

// integral W dq dp / (2 pi).
template <class Scalar>
IntegralEstimateT<Scalar> normalization(const WignerFieldT<Scalar>& w) {
  if (w.kind != FieldKind::StateWigner)
    throw std::invalid_argument("normalization: defined for state fields");
  const auto wq = w.q_weights();
  const auto wp = w.p_weights();
  const Scalar value = (wq.matrix().transpose() * w.values * wp.matrix()).value() /
                       (Scalar(2) * std::numbers::pi_v<Scalar>);
  return {value, detail::tail_error_bound(w)};
}

template <class Scalar>
struct MarginalT {
  Eigen::Vector<Scalar, Eigen::Dynamic> values;  // one entry per q-node
  Scalar error_bound;
};

using Marginal = MarginalT<double>;

// integral W dp / (2 pi) per q-column; for a state field this is |psi(q)|^2.
template <class Scalar>
MarginalT<Scalar> marginal_q(const WignerFieldT<Scalar>& w) {
  if (w.kind != FieldKind::StateWigner)
    throw std::invalid_argument("marginal_q: defined for state fields");
  const auto wp = w.p_weights();
  MarginalT<Scalar> out;
  out.values = (w.values * wp.matrix()) / (Scalar(2) * std::numbers::pi_v<Scalar>);
  Scalar bound = 0;
  const Index np = w.grid.n_p;
  for (Index i = 0; i < w.grid.n_q; ++i) {
    const Scalar edge = std::abs(w.values(i, 0)) + std::abs(w.values(i, np - 1));
    const Scalar scale = w.tail == TailDecay::Gaussian ? Scalar(4) * w.grid.dp()
                                                       : detail::row_half_period(w, i);
    bound = std::max(bound, edge * scale);
  }
  out.error_bound = bound / (Scalar(2) * std::numbers::pi_v<Scalar>);
  return out;
}

template <class Scalar>
struct NegativityReportT {
  Scalar min_value;
  Scalar argmin_q;
  Scalar argmin_p;
  Scalar negative_mass;  // integral of |W| over {W < -tol}, dq dp / (2 pi)
  Scalar tol;
};

using NegativityReport = NegativityReportT<double>;

// Exact grid scan; ties in the argmin go to the lowest q-index, then the
// lowest p-index.
template <class Scalar>
NegativityReportT<Scalar> negativity_report(const WignerFieldT<Scalar>& w,
                                            Scalar tol = Scalar(1e-12)) {
  const auto wq = w.q_weights();
  const auto wp = w.p_weights();
  Scalar min_value = w.values(0, 0);
  Index best_i = 0, best_j = 0;
  Scalar mass = 0;
  for (Index i = 0; i < w.grid.n_q; ++i) {
    for (Index j = 0; j < w.grid.n_p; ++j) {
      const Scalar v = w.values(i, j);
      if (v < min_value) {
        min_value = v;
        best_i = i;
        best_j = j;
      }
      if (v < -tol) mass += std::abs(v) * wq[i] * wp[j];
    }
  }
  return {min_value, w.grid.q_node(best_i), w.grid.p_node(best_j),
          mass / (Scalar(2) * std::numbers::pi_v<Scalar>), tol};
}

template <class Scalar>
struct MomentReportT {
  Scalar mean_q;
  Scalar mean_p;
  Scalar var_q;
  Scalar var_p;
  Scalar uncertainty_product;
  bool caveat_grid_truncation;
};

using MomentReport = MomentReportT<double>;

// First and second central moments under the dq dp / (2 pi) measure.  Refuses
// window-projected fields: their sharp position cut makes <p^2> divergent, so
// any grid value would be an artifact of the grid, not physics.
template <class Scalar>
MomentReportT<Scalar> moments(const WignerFieldT<Scalar>& w) {
  if (w.kind != FieldKind::StateWigner)
    throw std::invalid_argument("moments: defined for state fields");
  if (w.tail == TailDecay::SlowOscillatory)
    throw DivergentMoments("moments: <p^2> of a window-projected field diverges");
  const Scalar peak = w.values.cwiseAbs().maxCoeff();
  if (w.values.minCoeff() < -Scalar(1e-9) * std::max(peak, Scalar(1)))
    throw std::invalid_argument("moments: field must be non-negative");

  const auto wq = w.q_weights();
  const auto wp = w.p_weights();
  const Eigen::Vector<Scalar, Eigen::Dynamic> row_mass = w.values * wp.matrix();
  const Eigen::RowVector<Scalar, Eigen::Dynamic> col_mass =
      wq.matrix().transpose() * w.values;
  const Scalar norm = wq.matrix().dot(row_mass);

  Scalar mean_q = 0, mean_p = 0;
  for (Index i = 0; i < w.grid.n_q; ++i) mean_q += wq[i] * w.grid.q_node(i) * row_mass[i];
  for (Index j = 0; j < w.grid.n_p; ++j) mean_p += wp[j] * w.grid.p_node(j) * col_mass[j];
  mean_q /= norm;
  mean_p /= norm;
  Scalar var_q = 0, var_p = 0;
  for (Index i = 0; i < w.grid.n_q; ++i) {
    const Scalar d = w.grid.q_node(i) - mean_q;
    var_q += wq[i] * d * d * row_mass[i];
  }
  for (Index j = 0; j < w.grid.n_p; ++j) {
    const Scalar d = w.grid.p_node(j) - mean_p;
    var_p += wp[j] * d * d * col_mass[j];
  }
  var_q /= norm;
  var_p /= norm;
  return {mean_q, mean_p, var_q, var_p, var_q * var_p,
          w.classically_truncated || w.q_support.has_value()};
}

template <class Scalar>
struct PropernessReportT {
  std::vector<Scalar> spectrum;
  Scalar max_distance;  // max over the grid of the distance to the spectrum
  bool proper;
  Scalar witness_q;
  Scalar witness_p;
  Scalar tolerance;
};

using PropernessReport = PropernessReportT<double>;

// A symbol is a proper phase-space observable when its values stay on the
// operator's spectrum; max_distance quantifies the worst excursion.
template <class Scalar>
PropernessReportT<Scalar> properness_report(const WignerFieldT<Scalar>& w,
                                            std::vector<Scalar> spectrum,
                                            Scalar tolerance = Scalar(1e-9)) {
  if (w.kind != FieldKind::OperatorSymbol)
    throw std::invalid_argument("properness_report: defined for operator symbols");
  if (spectrum.empty()) throw EmptySpectrum("properness_report: spectrum is empty");
  std::sort(spectrum.begin(), spectrum.end());
  auto distance = [&spectrum](Scalar v) {
    auto it = std::lower_bound(spectrum.begin(), spectrum.end(), v);
    Scalar d = std::numeric_limits<Scalar>::infinity();
    if (it != spectrum.end()) d = std::min(d, std::abs(*it - v));
    if (it != spectrum.begin()) d = std::min(d, std::abs(*(it - 1) - v));
    return d;
  };
  Scalar max_d = -1;
  Index best_i = 0, best_j = 0;
  for (Index i = 0; i < w.grid.n_q; ++i) {
    for (Index j = 0; j < w.grid.n_p; ++j) {
      const Scalar d = distance(w.values(i, j));
      if (d > max_d) {
        max_d = d;
        best_i = i;
        best_j = j;
      }
    }
  }
  return {std::move(spectrum), max_d,          max_d <= tolerance,
          w.grid.q_node(best_i), w.grid.p_node(best_j), tolerance};
}

// integral W_state W_obs dq dp / (2 pi): the phase-space route to <A>.
template <class Scalar>
Scalar phase_space_expectation(const WignerFieldT<Scalar>& state,
                               const WignerFieldT<Scalar>& obs) {
  if (!(state.grid == obs.grid))
    throw GridMismatch("phase_space_expectation: fields live on different grids");
  const auto wq = interpolant_weights(state.grid.q_min, state.grid.dq(), state.grid.n_q,
                                      intersect(state.q_support, obs.q_support));
  const auto wp = trapezoid_weights(state.grid.dp(), state.grid.n_p);
  return (wq.matrix().transpose() * state.values.cwiseProduct(obs.values) * wp.matrix())
             .value() /
         (Scalar(2) * std::numbers::pi_v<Scalar>);
}

template <class Scalar>
struct HudsonVerdictT {
  bool gaussian_class;
  Scalar fit_residual;
  NegativityReportT<Scalar> negativity;
  bool consistent;  // Gaussian => no negativity; non-Gaussian pure => negativity
};

using HudsonVerdict = HudsonVerdictT<double>;

// Classifies the state by whether its log-amplitude fits a quadratic, computes
// the numeric Wigner function, and checks the two against each other: only
// Gaussian pure states may have a non-negative Wigner function.
//
// The classifier looks at on-grid samples, so states should be passed on their
// natural (full) grids: a window-projected state restricted to its own support
// looks Gaussian sample-wise even though the represented state is not.  For
// smooth states the sample grid should also extend a few widths beyond the
// probed q-range (x_max ~ 10 sigma is comfortable), or the truncated y-window
// rings at the 1e-8 level and masquerades as negativity.
template <class Scalar>
HudsonVerdictT<Scalar> hudson_check(const SampledStateT<Scalar>& psi,
                                    const PhaseSpaceGridT<Scalar>& grid,
                                    const WignerNumericOptionsT<Scalar>& opts = {}) {
  const auto& amps = psi.amplitudes();
  const Scalar peak = amps.cwiseAbs().maxCoeff();
  const Scalar threshold = Scalar(1e-6) * peak;
  std::vector<Index> in;
  for (Index i = 0; i < psi.grid().n_x; ++i)
    if (std::abs(amps[i]) > threshold) in.push_back(i);

  Scalar fit_residual = std::numeric_limits<Scalar>::infinity();
  bool gaussian = false;
  if (in.size() >= 3) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 3> design(in.size(), 3);
    Eigen::Vector<Scalar, Eigen::Dynamic> rhs(in.size());
    for (std::size_t r = 0; r < in.size(); ++r) {
      const Scalar x = psi.grid().node(in[r]);
      design(r, 0) = 1;
      design(r, 1) = x;
      design(r, 2) = x * x;
      rhs[r] = std::log(std::abs(amps[in[r]]));
    }
    const Eigen::Vector<Scalar, 3> c = design.colPivHouseholderQr().solve(rhs);
    // residuals over the whole region where the fit predicts visible amplitude
    fit_residual = 0;
    const Scalar log_threshold = std::log(threshold);
    for (Index i = 0; i < psi.grid().n_x; ++i) {
      const Scalar x = psi.grid().node(i);
      const Scalar pred = c[0] + c[1] * x + c[2] * x * x;
      if (pred < log_threshold) continue;
      const Scalar mag = std::abs(amps[i]);
      const Scalar res = mag > Scalar(0)
                             ? std::abs(std::log(mag) - pred) / (Scalar(1) + std::abs(pred))
                             : std::numeric_limits<Scalar>::infinity();
      fit_residual = std::max(fit_residual, res);
    }
    gaussian = fit_residual <= Scalar(1e-6);
  }

  const auto report = negativity_report(wigner_numeric(psi, grid, opts), Scalar(1e-12));
  const bool negative = report.min_value < -Scalar(1e-9);
  return {gaussian, fit_residual, report, gaussian ? !negative : negative};
}

}  // namespace wigner
