// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <utility>

#include "wigner/errors.hpp"
#include "wigner/grid.hpp"
#include "wigner/quadrature.hpp"

namespace wigner {

// Complex wavefunction amplitudes on a 1-D position grid.  Immutable after
// construction; every operation returns a new state.
template <class Scalar>
class SampledStateT {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Vector<Complex, Eigen::Dynamic>;

  SampledStateT(PositionGridT<Scalar> grid, Vector amplitudes)
      : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != grid_.n_x)
      throw GridMismatch("SampledState: amplitude count does not match grid");
    if (!amplitudes_.allFinite())
      throw NonFiniteSample("SampledState: non-finite amplitude");
  }

  const PositionGridT<Scalar>& grid() const { return grid_; }
  const Vector& amplitudes() const { return amplitudes_; }

  // Trapezoid-rule L2 norm.
  Scalar norm() const {
    const auto w = trapezoid_weights(grid_.step(), grid_.n_x);
    return std::sqrt((amplitudes_.array().abs2() * w).sum());
  }

  bool is_normalized(Scalar tol = Scalar(1e-6)) const {
    return std::abs(norm() - Scalar(1)) <= tol;
  }

  SampledStateT normalized() const {
    const Scalar n = norm();
    if (!(n > Scalar(0)))
      throw ZeroProbability("SampledState::normalized: state has zero norm");
    return SampledStateT(grid_, amplitudes_ / n);
  }

  // Linear interpolation between samples.
  Complex value_at(Scalar x) const {
    const Scalar dx = grid_.step();
    const Scalar t = (x - grid_.x_min) / dx;
    if (t < Scalar(0) || t > Scalar(grid_.n_x - 1)) {
      if (t >= Scalar(-1e-9) && t <= Scalar(grid_.n_x - 1) + Scalar(1e-9))
        return amplitudes_[t < Scalar(0) ? 0 : grid_.n_x - 1];
      throw SupportExceeded("SampledState::value_at: x outside the grid");
    }
    const Index i = std::min<Index>(static_cast<Index>(t), grid_.n_x - 2);
    const Scalar f = t - Scalar(i);
    return (Scalar(1) - f) * amplitudes_[i] + f * amplitudes_[i + 1];
  }

 private:
  PositionGridT<Scalar> grid_;
  Vector amplitudes_;
};

using SampledState = SampledStateT<double>;

template <class Scalar>
std::complex<Scalar> inner_product(const SampledStateT<Scalar>& a,
                                   const SampledStateT<Scalar>& b) {
  if (!(a.grid() == b.grid()))
    throw GridMismatch("inner_product: states live on different grids");
  const auto w = trapezoid_weights(a.grid().step(), a.grid().n_x);
  return (a.amplitudes().array().conjugate() * b.amplitudes().array() *
          w.template cast<std::complex<Scalar>>())
      .sum();
}

// |<a|b>|: global-phase-insensitive overlap.
template <class Scalar>
Scalar fidelity(const SampledStateT<Scalar>& a, const SampledStateT<Scalar>& b) {
  return std::abs(inner_product(a, b));
}

// The state restricted to [lo, hi]; both edges must land on grid nodes, so the
// restriction is a lossless re-windowing of the sampled data.
template <class Scalar>
SampledStateT<Scalar> restricted_to_interval(const SampledStateT<Scalar>& s,
                                             Scalar lo, Scalar hi) {
  const auto& g = s.grid();
  const Scalar dx = g.step();
  lo = std::max(lo, g.x_min);
  hi = std::min(hi, g.x_max);
  const Index i_lo = static_cast<Index>(std::llround((lo - g.x_min) / dx));
  const Index i_hi = static_cast<Index>(std::llround((hi - g.x_min) / dx));
  if (std::abs(g.node(i_lo) - lo) > Scalar(1e-9) * dx ||
      std::abs(g.node(i_hi) - hi) > Scalar(1e-9) * dx)
    throw GridMismatch("restricted_to_interval: interval edges must be grid nodes");
  PositionGridT<Scalar> sub(g.node(i_lo), g.node(i_hi), i_hi - i_lo + 1);
  return SampledStateT<Scalar>(sub, s.amplitudes().segment(i_lo, i_hi - i_lo + 1));
}

}  // namespace wigner
