// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <type_traits>
#include <optional>

#include "wigner/grid.hpp"

namespace wigner {

template <class Scalar>
struct IntervalT {
  Scalar lo;
  Scalar hi;

  friend bool operator==(const IntervalT&, const IntervalT&) = default;
};

using Interval = IntervalT<double>;

template <class Scalar>
std::optional<IntervalT<Scalar>> intersect(std::optional<IntervalT<Scalar>> a,
                                           std::optional<IntervalT<Scalar>> b) {
  if (!a) return b;
  if (!b) return a;
  return IntervalT<Scalar>{std::max(a->lo, b->lo), std::min(a->hi, b->hi)};
}

// Composite-trapezoid node weights for a uniform axis.
template <class Scalar>
Eigen::Array<Scalar, Eigen::Dynamic, 1> trapezoid_weights(Scalar dx, Index n) {
  Eigen::Array<Scalar, Eigen::Dynamic, 1> w =
      Eigen::Array<Scalar, Eigen::Dynamic, 1>::Constant(n, dx);
  w[0] = dx / 2;
  w[n - 1] = dx / 2;
  return w;
}

// Node weights whose dot product with sampled values equals the exact integral
// of the piecewise-linear interpolant over `support` (clamped to the axis).
// With no support this reduces to the composite trapezoid rule; a support
// boundary that falls on a node yields the half-weight of the one-sided rule,
// and boundaries inside a cell split that cell exactly.
template <class Scalar>
Eigen::Array<Scalar, Eigen::Dynamic, 1> interpolant_weights(
    Scalar x0, Scalar dx, Index n,
    std::type_identity_t<std::optional<IntervalT<Scalar>>> support = {}) {
  if (!support) return trapezoid_weights(dx, n);
  Eigen::Array<Scalar, Eigen::Dynamic, 1> w =
      Eigen::Array<Scalar, Eigen::Dynamic, 1>::Zero(n);
  const Scalar x_end = x0 + dx * Scalar(n - 1);
  const Scalar lo = std::max(support->lo, x0);
  const Scalar hi = std::min(support->hi, x_end);
  if (!(hi > lo)) return w;
  const Index first = std::max<Index>(0, static_cast<Index>(std::floor((lo - x0) / dx)));
  const Index last = std::min<Index>(n - 2, static_cast<Index>(std::floor((hi - x0) / dx)));
  for (Index i = first; i <= last; ++i) {
    const Scalar xi = x0 + dx * Scalar(i);
    const Scalar u = std::max(lo, xi);
    const Scalar v = std::min(hi, xi + dx);
    if (!(v > u)) continue;
    const Scalar tu = (u - xi) / dx;
    const Scalar tv = (v - xi) / dx;
    const Scalar m2 = (tv * tv - tu * tu) / 2;
    w[i] += dx * ((tv - tu) - m2);
    w[i + 1] += dx * m2;
  }
  return w;
}

template <class Scalar>
Eigen::Array<Scalar, Eigen::Dynamic, 1> interpolant_weights(
    const PositionGridT<Scalar>& grid,
    std::type_identity_t<std::optional<IntervalT<Scalar>>> support = {}) {
  return interpolant_weights(grid.x_min, grid.step(), grid.n_x, support);
}

}  // namespace wigner
