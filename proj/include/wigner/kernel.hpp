// SPDX-License-Identifier: Apache-2.0
//
// Position-representation operator kernels K(x, x') = <x|A|x'> on a uniform
// grid.  Two storage forms:
//
//   diagonal: A = integral |x> f(x) <x| dx, held as the real samples f(x_i).
//     The delta factor is never materialized; actions multiply amplitudes
//     pointwise and compositions with a diagonal factor are exact, which keeps
//     projector idempotence exact in the discrete representation.
//
//   dense: K(x_i, x_j) held as a complex matrix; operator products and actions
//     contract the shared coordinate with a dx-weighted sum.
//
// Kernels carry optional row/column support intervals (set by window
// projectors and propagated through compositions).  Quadratures over a kernel
// integrate the linear interpolant of its samples across the support, so
// expectation values and traces agree with the continuum formulas to O(dx^2)
// even when the support edge cuts the grid.
#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <utility>

#include "wigner/state.hpp"

namespace wigner {

template <class Scalar>
class OperatorKernelT {
 public:
  using Complex = std::complex<Scalar>;
  using DenseMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  using DiagVector = Eigen::Vector<Scalar, Eigen::Dynamic>;
  using Support = std::optional<IntervalT<Scalar>>;

  static OperatorKernelT make_diagonal(PositionGridT<Scalar> grid, DiagVector values,
                                       Support support = {}) {
    if (values.size() != grid.n_x)
      throw GridMismatch("OperatorKernel: diagonal length does not match grid");
    if (!values.allFinite())
      throw NonFiniteSample("OperatorKernel: non-finite diagonal sample");
    OperatorKernelT k(std::move(grid));
    k.diag_ = std::move(values);
    k.diagonal_ = true;
    k.hermitian_ = true;  // real diagonal
    k.row_support_ = support;
    k.col_support_ = support;
    return k;
  }

  static OperatorKernelT make_dense(PositionGridT<Scalar> grid, DenseMatrix kernel,
                                    Support row_support = {}, Support col_support = {}) {
    if (kernel.rows() != grid.n_x || kernel.cols() != grid.n_x)
      throw GridMismatch("OperatorKernel: matrix shape does not match grid");
    if (!kernel.allFinite())
      throw NonFiniteSample("OperatorKernel: non-finite kernel sample");
    OperatorKernelT k(std::move(grid));
    const Scalar scale = kernel.cwiseAbs().maxCoeff();
    k.hermitian_ = (kernel - kernel.adjoint()).cwiseAbs().maxCoeff() <=
                   Scalar(1e-12) * std::max(scale, Scalar(1e-300));
    k.dense_ = std::move(kernel);
    k.diagonal_ = false;
    k.row_support_ = row_support;
    k.col_support_ = col_support;
    return k;
  }

  bool is_diagonal() const { return diagonal_; }
  bool hermitian() const { return hermitian_; }
  const PositionGridT<Scalar>& grid() const { return grid_; }
  const DiagVector& diagonal_values() const { return diag_; }
  const DenseMatrix& dense_kernel() const { return dense_; }
  Support row_support() const { return row_support_; }
  Support col_support() const { return col_support_; }

 private:
  explicit OperatorKernelT(PositionGridT<Scalar> grid) : grid_(std::move(grid)) {}

  PositionGridT<Scalar> grid_;
  DiagVector diag_;
  DenseMatrix dense_;
  Support row_support_;
  Support col_support_;
  bool diagonal_ = false;
  bool hermitian_ = false;
};

using OperatorKernel = OperatorKernelT<double>;

// Projector onto the position window (-a/2, a/2); the step convention keeps
// grid points landing exactly on +-a/2.
template <class Scalar>
OperatorKernelT<Scalar> window_projector_kernel(Scalar a, const PositionGridT<Scalar>& grid) {
  if (!(a > Scalar(0)) || !std::isfinite(a))
    throw std::invalid_argument("window_projector_kernel: a must be positive");
  if (!grid.covers(-a / 2, a / 2))
    throw GridTooNarrow("window_projector_kernel: grid does not cover [-a/2, a/2]");
  const Scalar half = a / 2;
  typename OperatorKernelT<Scalar>::DiagVector v(grid.n_x);
  for (Index i = 0; i < grid.n_x; ++i)
    v[i] = std::abs(grid.node(i)) <= half ? Scalar(1) : Scalar(0);
  return OperatorKernelT<Scalar>::make_diagonal(grid, std::move(v),
                                                IntervalT<Scalar>{-half, half});
}

// A = integral |x> f(x) <x| dx for a real function of position.
template <class Scalar, class Fn>
OperatorKernelT<Scalar> diagonal_observable_kernel(Fn&& f, const PositionGridT<Scalar>& grid) {
  typename OperatorKernelT<Scalar>::DiagVector v(grid.n_x);
  for (Index i = 0; i < grid.n_x; ++i) {
    v[i] = static_cast<Scalar>(f(grid.node(i)));
    if (!std::isfinite(v[i]))
      throw NonFiniteSample("diagonal_observable_kernel: f is not finite on the grid");
  }
  return OperatorKernelT<Scalar>::make_diagonal(grid, std::move(v));
}

template <class Scalar>
OperatorKernelT<Scalar> identity_kernel(const PositionGridT<Scalar>& grid) {
  return OperatorKernelT<Scalar>::make_diagonal(
      grid, OperatorKernelT<Scalar>::DiagVector::Ones(grid.n_x));
}

// |phi><phi| for a normalized state.
template <class Scalar>
OperatorKernelT<Scalar> rank_one_kernel(const SampledStateT<Scalar>& phi) {
  if (!phi.is_normalized(Scalar(1e-6)))
    throw NotNormalized("rank_one_kernel: state norm deviates from 1 by more than 1e-6");
  typename OperatorKernelT<Scalar>::DenseMatrix k =
      phi.amplitudes() * phi.amplitudes().adjoint();
  return OperatorKernelT<Scalar>::make_dense(phi.grid(), std::move(k));
}

// Operator product A B.  Diagonal factors compose exactly; a dense-dense
// product is the quadrature contraction sum_j A(x, x_j) B(x_j, x') dx.
template <class Scalar>
OperatorKernelT<Scalar> compose_kernels(const OperatorKernelT<Scalar>& a,
                                        const OperatorKernelT<Scalar>& b) {
  using K = OperatorKernelT<Scalar>;
  if (!(a.grid() == b.grid()))
    throw GridMismatch("compose_kernels: kernels live on different grids");
  if (a.is_diagonal() && b.is_diagonal()) {
    typename K::DiagVector v = a.diagonal_values().cwiseProduct(b.diagonal_values());
    return K::make_diagonal(a.grid(), std::move(v),
                            intersect(a.row_support(), b.row_support()));
  }
  if (a.is_diagonal()) {
    typename K::DenseMatrix m =
        a.diagonal_values().template cast<std::complex<Scalar>>().asDiagonal() *
        b.dense_kernel();
    return K::make_dense(a.grid(), std::move(m),
                         intersect(a.row_support(), b.row_support()), b.col_support());
  }
  if (b.is_diagonal()) {
    typename K::DenseMatrix m =
        a.dense_kernel() *
        b.diagonal_values().template cast<std::complex<Scalar>>().asDiagonal();
    return K::make_dense(a.grid(), std::move(m), a.row_support(),
                         intersect(a.col_support(), b.col_support()));
  }
  typename K::DenseMatrix m = a.dense_kernel() * b.dense_kernel() * a.grid().step();
  return K::make_dense(a.grid(), std::move(m), a.row_support(), b.col_support());
}

// (A psi)(x) = integral K(x, x') psi(x') dx'.
template <class Scalar>
SampledStateT<Scalar> apply_kernel(const OperatorKernelT<Scalar>& a,
                                   const SampledStateT<Scalar>& psi) {
  if (!(a.grid() == psi.grid()))
    throw GridMismatch("apply_kernel: kernel and state grids differ");
  if (a.is_diagonal()) {
    typename SampledStateT<Scalar>::Vector v =
        psi.amplitudes().cwiseProduct(
            a.diagonal_values().template cast<std::complex<Scalar>>());
    return SampledStateT<Scalar>(psi.grid(), std::move(v));
  }
  typename SampledStateT<Scalar>::Vector v =
      a.dense_kernel() * psi.amplitudes() * a.grid().step();
  return SampledStateT<Scalar>(psi.grid(), std::move(v));
}

// Tr A = integral K(x, x) dx for dense kernels (a diagonal kernel's trace is a
// delta-squared object with no finite grid representation).
template <class Scalar>
std::complex<Scalar> kernel_trace(const OperatorKernelT<Scalar>& a) {
  if (a.is_diagonal())
    throw std::invalid_argument("kernel_trace: undefined for delta-normalized diagonals");
  const auto w = interpolant_weights(a.grid(), intersect(a.row_support(), a.col_support()));
  return (a.dense_kernel().diagonal().array() * w.template cast<std::complex<Scalar>>())
      .sum();
}

}  // namespace wigner
