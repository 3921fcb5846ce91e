// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>

namespace wigner {

using Index = Eigen::Index;

// Uniform 1-D sampling lattice for position-space quantities.
template <class Scalar>
struct PositionGridT {
  Scalar x_min;
  Scalar x_max;
  Index n_x;

  PositionGridT(Scalar min, Scalar max, Index n) : x_min(min), x_max(max), n_x(n) {
    if (!(n_x >= 16)) throw std::invalid_argument("PositionGrid: n_x must be >= 16");
    if (!(x_max > x_min)) throw std::invalid_argument("PositionGrid: x_max must exceed x_min");
    if (!std::isfinite(x_min) || !std::isfinite(x_max))
      throw std::invalid_argument("PositionGrid: bounds must be finite");
  }

  Scalar step() const { return (x_max - x_min) / Scalar(n_x - 1); }

  // Endpoint-exact linear interpolation of the node coordinates; node(0) and
  // node(n_x-1) reproduce the bounds bitwise.
  Scalar node(Index i) const {
    return (x_min * Scalar(n_x - 1 - i) + x_max * Scalar(i)) / Scalar(n_x - 1);
  }

  Eigen::Array<Scalar, Eigen::Dynamic, 1> nodes() const {
    Eigen::Array<Scalar, Eigen::Dynamic, 1> out(n_x);
    for (Index i = 0; i < n_x; ++i) out[i] = node(i);
    return out;
  }

  bool covers(Scalar lo, Scalar hi) const {
    const Scalar slack = Scalar(1e-9) * step();
    return x_min <= lo + slack && x_max >= hi - slack;
  }

  friend bool operator==(const PositionGridT&, const PositionGridT&) = default;
};

// Uniform rectangular (q, p) lattice on which all fields are evaluated.
template <class Scalar>
struct PhaseSpaceGridT {
  Scalar q_min, q_max;
  Index n_q;
  Scalar p_min, p_max;
  Index n_p;

  PhaseSpaceGridT(Scalar qmin, Scalar qmax, Index nq, Scalar pmin, Scalar pmax, Index np)
      : q_min(qmin), q_max(qmax), n_q(nq), p_min(pmin), p_max(pmax), n_p(np) {
    if (!(n_q >= 16 && n_p >= 16))
      throw std::invalid_argument("PhaseSpaceGrid: n_q and n_p must be >= 16");
    if (!(q_max > q_min && p_max > p_min))
      throw std::invalid_argument("PhaseSpaceGrid: empty axis range");
  }

  Scalar dq() const { return (q_max - q_min) / Scalar(n_q - 1); }
  Scalar dp() const { return (p_max - p_min) / Scalar(n_p - 1); }

  Scalar q_node(Index i) const {
    return (q_min * Scalar(n_q - 1 - i) + q_max * Scalar(i)) / Scalar(n_q - 1);
  }
  Scalar p_node(Index j) const {
    return (p_min * Scalar(n_p - 1 - j) + p_max * Scalar(j)) / Scalar(n_p - 1);
  }

  friend bool operator==(const PhaseSpaceGridT&, const PhaseSpaceGridT&) = default;
};

using PositionGrid = PositionGridT<double>;
using PhaseSpaceGrid = PhaseSpaceGridT<double>;

}  // namespace wigner
