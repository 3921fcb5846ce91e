// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <optional>
#include <utility>

#include "wigner/errors.hpp"
#include "wigner/grid.hpp"
#include "wigner/quadrature.hpp"

namespace wigner {

enum class FieldKind { StateWigner, OperatorSymbol };

// How the field decays along the p-axis.  Fields produced by sharp position
// windows fall off only as an oscillatory 1/p, which makes finite-grid
// p-integrals conditionally convergent; integrators must report an error
// estimate instead of a bare number for those.
enum class TailDecay { Gaussian, SlowOscillatory };

// Real-valued function on a phase-space grid (row index = q, column = p) with
// provenance metadata.  The normalization convention for state fields is
// integral W dq dp / (2 pi) = 1.
template <class Scalar>
struct WignerFieldT {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  PhaseSpaceGridT<Scalar> grid;
  Matrix values;
  FieldKind kind;
  TailDecay tail = TailDecay::Gaussian;
  bool classically_truncated = false;
  // Values vanish identically outside this q-interval when set.
  std::optional<IntervalT<Scalar>> q_support{};

  static constexpr const char* normalization_convention = "dq dp / (2 pi)";

  WignerFieldT(PhaseSpaceGridT<Scalar> g, Matrix v, FieldKind k)
      : grid(std::move(g)), values(std::move(v)), kind(k) {
    if (values.rows() != grid.n_q || values.cols() != grid.n_p)
      throw GridMismatch("WignerField: value shape does not match grid");
    if (!values.allFinite())
      throw NonFiniteSample("WignerField: non-finite value");
  }

  // Quadrature weights along each axis; q-weights honour the support interval.
  Eigen::Array<Scalar, Eigen::Dynamic, 1> q_weights() const {
    return interpolant_weights(grid.q_min, grid.dq(), grid.n_q, q_support);
  }
  Eigen::Array<Scalar, Eigen::Dynamic, 1> p_weights() const {
    return trapezoid_weights(grid.dp(), grid.n_p);
  }
};

using WignerField = WignerFieldT<double>;

inline TailDecay slower(TailDecay a, TailDecay b) {
  return (a == TailDecay::SlowOscillatory || b == TailDecay::SlowOscillatory)
             ? TailDecay::SlowOscillatory
             : TailDecay::Gaussian;
}

// Elementwise product of two fields on the same grid.  This is the object one
// would write down when (wrongly) treating phase space classically; it exists
// so that the gap to the true composed-operator field can be measured.
template <class Scalar>
WignerFieldT<Scalar> pointwise_product(const WignerFieldT<Scalar>& a,
                                       const WignerFieldT<Scalar>& b) {
  if (!(a.grid == b.grid))
    throw GridMismatch("pointwise_product: fields live on different grids");
  const FieldKind kind = (a.kind == FieldKind::StateWigner || b.kind == FieldKind::StateWigner)
                             ? FieldKind::StateWigner
                             : FieldKind::OperatorSymbol;
  WignerFieldT<Scalar> out(a.grid, a.values.cwiseProduct(b.values), kind);
  out.tail = slower(a.tail, b.tail);
  out.q_support = intersect(a.q_support, b.q_support);
  out.classically_truncated = a.classically_truncated || b.classically_truncated;
  return out;
}

}  // namespace wigner
