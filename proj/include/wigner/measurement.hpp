// SPDX-License-Identifier: Apache-2.0
//
// Selective projective measurements in Hilbert space and their phase-space
// counterparts.  A projection keeps the eigenvalue-1 subensemble:
//   psi' = P psi / sqrt(<psi|P|psi>).
//
// Two discrete inner products coexist here on purpose.  States are normalized
// under the plain trapezoid rule on their own grid (that is the SampledState
// invariant), while reported probabilities and expectation values integrate
// the linear interpolant across the operator's support, which converges at
// O(dx^2) even when the window edge makes the integrand one-sidedly sharp.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "wigner/field.hpp"
#include "wigner/gaussian.hpp"
#include "wigner/kernel.hpp"
#include "wigner/special.hpp"
#include "wigner/state.hpp"

namespace wigner {

// Width of the pre-measurement Gaussian and of the selection window.
template <class Scalar>
struct ProjectedGaussianParamsT {
  Scalar sigma;
  Scalar a;

  ProjectedGaussianParamsT(Scalar sigma_, Scalar a_) : sigma(sigma_), a(a_) {
    if (!(sigma > Scalar(0)) || !(a > Scalar(0)))
      throw std::invalid_argument("ProjectedGaussianParams: sigma and a must be positive");
  }
};

using ProjectedGaussianParams = ProjectedGaussianParamsT<double>;

// <psi| P |psi> for the window (-a/2, a/2): the linear interpolant of |psi|^2
// integrated across the window clamped to the grid.
template <class Scalar>
Scalar window_projection_probability(const SampledStateT<Scalar>& psi, Scalar a) {
  const auto& g = psi.grid();
  const auto w =
      interpolant_weights(g, IntervalT<Scalar>{-a / 2, a / 2});
  return (psi.amplitudes().array().abs2() * w).sum();
}

// psi' = P psi / ||P psi||, on the same grid.  Samples landing exactly on
// +-a/2 are kept (theta(0) = 1).  When the window covers the whole grid the
// projector is the identity on the sampled data and psi is returned untouched.
template <class Scalar>
SampledStateT<Scalar> apply_window_projector(const SampledStateT<Scalar>& psi, Scalar a) {
  if (!(a > Scalar(0)) || !std::isfinite(a))
    throw std::invalid_argument("apply_window_projector: a must be positive");
  const auto& g = psi.grid();
  const Scalar half = a / 2;
  typename SampledStateT<Scalar>::Vector v = psi.amplitudes();
  bool touched = false;
  for (Index i = 0; i < g.n_x; ++i) {
    if (std::abs(g.node(i)) > half) {
      v[i] = std::complex<Scalar>(0);
      touched = true;
    }
  }
  if (!touched) return psi;
  SampledStateT<Scalar> clipped(g, std::move(v));
  const Scalar n = clipped.norm();
  if (!(n * n > Scalar(1e-12)))
    throw ZeroProbability("apply_window_projector: window captures negligible norm");
  return SampledStateT<Scalar>(g, clipped.amplitudes() / n);
}

// Closed-form Wigner function of the window-projected Gaussian:
//   W'(q, p) = g(alpha, beta) / erf(a / (2 sqrt(2) sigma))
//              * 2 exp(-q^2 / (2 sigma^2)) * theta(a/2 - |q|)
// with alpha = (a/2 - |q|) / (sqrt(2) sigma), beta = sqrt(2) sigma p and
// g(alpha, beta) = Re[erf(alpha + i beta)] exp(-beta^2), so the Gaussian
// p-factor is absorbed into the overflow-safe scaled product.
template <class Scalar>
WignerFieldT<Scalar> projected_wigner_analytic(const ProjectedGaussianParamsT<Scalar>& params,
                                               const PhaseSpaceGridT<Scalar>& grid) {
  const Scalar sigma = params.sigma;
  const Scalar half = params.a / 2;
  const Scalar sqrt2 = std::sqrt(Scalar(2));
  const Scalar denom = std::erf(half / (sqrt2 * sigma));
  typename WignerFieldT<Scalar>::Matrix v(grid.n_q, grid.n_p);
  for (Index i = 0; i < grid.n_q; ++i) {
    const Scalar q = grid.q_node(i);
    const Scalar absq = std::abs(q);
    if (absq > half) {
      v.row(i).setZero();
      continue;
    }
    const Scalar alpha = (half - absq) / (sqrt2 * sigma);
    const Scalar envelope =
        Scalar(2) * std::exp(-q * q / (Scalar(2) * sigma * sigma)) / denom;
    for (Index j = 0; j < grid.n_p; ++j) {
      const Scalar beta = sqrt2 * sigma * grid.p_node(j);
      v(i, j) = scaled_erf_re(alpha, beta) * envelope;
    }
  }
  WignerFieldT<Scalar> out(grid, std::move(v), FieldKind::StateWigner);
  out.q_support = IntervalT<Scalar>{-half, half};
  out.tail = TailDecay::SlowOscillatory;
  return out;
}

// Rank-one Gaussian projection |G2><G2| psi / norm: the output is |G2> up to
// the global phase of the overlap.
template <class Scalar>
SampledStateT<Scalar> apply_rank_one_gaussian(const GaussianStateT<Scalar>& target,
                                              const SampledStateT<Scalar>& psi_in) {
  const SampledStateT<Scalar> g2 = sample_gaussian(target, psi_in.grid());
  const std::complex<Scalar> overlap = inner_product(g2, psi_in);
  const Scalar mag = std::abs(overlap);
  if (!(mag > Scalar(1e-12)))
    throw ZeroProbability("apply_rank_one_gaussian: input is orthogonal to the target");
  return SampledStateT<Scalar>(psi_in.grid(), g2.amplitudes() * (overlap / mag));
}

// Projector of rank 1 + N: |psi_G2><psi_G2| plus N orthonormal complements,
// each orthogonal to both psi_G1 and psi_G2 so that acting on psi_G1 still
// lands on psi_G2 and the operator stays a projector.
template <class Scalar>
struct RankNProjectorT {
  std::vector<SampledStateT<Scalar>> members;  // members.front() is psi_G2

  Index n_extra() const { return static_cast<Index>(members.size()) - 1; }

  OperatorKernelT<Scalar> kernel() const {
    typename OperatorKernelT<Scalar>::DenseMatrix k =
        members.front().amplitudes() * members.front().amplitudes().adjoint();
    for (std::size_t m = 1; m < members.size(); ++m)
      k += members[m].amplitudes() * members[m].amplitudes().adjoint();
    return OperatorKernelT<Scalar>::make_dense(members.front().grid(), std::move(k));
  }

  SampledStateT<Scalar> apply(const SampledStateT<Scalar>& psi) const {
    typename SampledStateT<Scalar>::Vector v =
        SampledStateT<Scalar>::Vector::Zero(psi.grid().n_x);
    for (const auto& m : members) v += m.amplitudes() * inner_product(m, psi);
    return SampledStateT<Scalar>(psi.grid(), std::move(v));
  }
};

using RankNProjector = RankNProjectorT<double>;

// Hermite-like seed ladder x^k exp(-x^2 / (4 sigma^2)), k = 1..n, normalized.
template <class Scalar>
std::vector<SampledStateT<Scalar>> hermite_like_seeds(const GaussianStateT<Scalar>& g,
                                                      const PositionGridT<Scalar>& grid,
                                                      Index n) {
  std::vector<SampledStateT<Scalar>> seeds;
  seeds.reserve(n);
  typename SampledStateT<Scalar>::Vector base(grid.n_x);
  for (Index i = 0; i < grid.n_x; ++i) base[i] = g.amplitude(grid.node(i));
  for (Index k = 1; k <= n; ++k) {
    typename SampledStateT<Scalar>::Vector v(grid.n_x);
    for (Index i = 0; i < grid.n_x; ++i)
      v[i] = base[i] * std::pow(grid.node(i) - g.q0, Scalar(k));
    seeds.push_back(SampledStateT<Scalar>(grid, std::move(v)).normalized());
  }
  return seeds;
}

// Stabilized Gram-Schmidt with a re-orthogonalization pass.  Seeds are
// orthogonalized against span{psi_G1, psi_G2} and all previously accepted
// members; a residual norm below 1e-10 reports the seed as degenerate.
template <class Scalar>
RankNProjectorT<Scalar> build_rank_n_projector(const SampledStateT<Scalar>& psi_g2,
                                               const std::vector<SampledStateT<Scalar>>& seeds,
                                               const SampledStateT<Scalar>& psi_g1) {
  if (!(psi_g1.grid() == psi_g2.grid()))
    throw GridMismatch("build_rank_n_projector: psi_G1 and psi_G2 grids differ");
  if (!psi_g1.is_normalized(Scalar(1e-6)) || !psi_g2.is_normalized(Scalar(1e-6)))
    throw NotNormalized("build_rank_n_projector: psi_G1 and psi_G2 must be normalized");

  // Orthonormal basis of the protected subspace span{psi_G1, psi_G2}.
  std::vector<SampledStateT<Scalar>> protect;
  protect.push_back(psi_g1);
  {
    typename SampledStateT<Scalar>::Vector v =
        psi_g2.amplitudes() - psi_g1.amplitudes() * inner_product(psi_g1, psi_g2);
    SampledStateT<Scalar> u(psi_g1.grid(), std::move(v));
    const Scalar r = u.norm();
    if (r > Scalar(1e-10)) protect.push_back(SampledStateT<Scalar>(u.grid(), u.amplitudes() / r));
  }

  RankNProjectorT<Scalar> proj;
  proj.members.push_back(psi_g2);
  for (const auto& seed : seeds) {
    if (!(seed.grid() == psi_g1.grid()))
      throw GridMismatch("build_rank_n_projector: seed grid differs");
    typename SampledStateT<Scalar>::Vector v = seed.amplitudes();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : protect) {
        SampledStateT<Scalar> cur(psi_g1.grid(), v);
        v -= b.amplitudes() * inner_product(b, cur);
      }
      for (std::size_t m = 1; m < proj.members.size(); ++m) {
        SampledStateT<Scalar> cur(psi_g1.grid(), v);
        v -= proj.members[m].amplitudes() * inner_product(proj.members[m], cur);
      }
    }
    SampledStateT<Scalar> residual(psi_g1.grid(), std::move(v));
    const Scalar r = residual.norm();
    if (r < Scalar(1e-10))
      throw DegenerateSeed("build_rank_n_projector: seed vanishes after orthogonalization");
    proj.members.push_back(
        SampledStateT<Scalar>(residual.grid(), residual.amplitudes() / r));
  }
  return proj;
}

// Result of the deliberately classical phase-space truncation.
template <class Scalar>
struct TruncationResultT {
  WignerFieldT<Scalar> field;
  Scalar renormalization_factor;
};

using TruncationResult = TruncationResultT<double>;

// W theta(a/2 - |q|), renormalized to unit phase-space mass.  This is the
// operation a classical-statistics reading would suggest; it is NOT the Wigner
// function of the projected state, and the result is flagged accordingly.
template <class Scalar>
TruncationResultT<Scalar> naive_classical_truncation(const WignerFieldT<Scalar>& w, Scalar a) {
  if (w.kind != FieldKind::StateWigner)
    throw std::invalid_argument("naive_classical_truncation: input must be a state field");
  if (!(a > Scalar(0)) || !std::isfinite(a))
    throw std::invalid_argument("naive_classical_truncation: a must be positive");
  const Scalar half = a / 2;
  if (w.grid.q_min >= -half && w.grid.q_max <= half)
    return {w, Scalar(1)};  // window wider than the grid: nothing to cut

  WignerFieldT<Scalar> out = w;
  for (Index i = 0; i < w.grid.n_q; ++i)
    if (std::abs(w.grid.q_node(i)) > half) out.values.row(i).setZero();
  out.q_support = intersect(w.q_support, std::optional(IntervalT<Scalar>{-half, half}));
  out.classically_truncated = true;

  const auto wq = out.q_weights();
  const auto wp = out.p_weights();
  const Scalar mass =
      (wq.matrix().transpose() * out.values * wp.matrix()).value() /
      (Scalar(2) * std::numbers::pi_v<Scalar>);
  if (!(mass > Scalar(1e-12)))
    throw ZeroMass("naive_classical_truncation: truncated mass is negligible");
  out.values /= mass;
  return {std::move(out), Scalar(1) / mass};
}

// <psi| A |psi> by quadrature over the kernel's support; the imaginary residue
// must stay below 1e-10 and is discarded after the check.
template <class Scalar>
Scalar expectation_hilbert(const SampledStateT<Scalar>& psi, const OperatorKernelT<Scalar>& a) {
  if (!(psi.grid() == a.grid()))
    throw GridMismatch("expectation_hilbert: state and kernel grids differ");
  if (!a.hermitian())
    throw NotHermitian("expectation_hilbert: kernel must be hermitian");
  if (a.is_diagonal()) {
    const auto w = interpolant_weights(a.grid(), a.row_support());
    return (psi.amplitudes().array().abs2() * a.diagonal_values().array() * w).sum();
  }
  const auto wr = interpolant_weights(a.grid(), a.row_support());
  const auto wc = interpolant_weights(a.grid(), a.col_support());
  using C = std::complex<Scalar>;
  const Eigen::Vector<C, Eigen::Dynamic> u =
      (psi.amplitudes().array() * wr.template cast<C>()).matrix();
  const Eigen::Vector<C, Eigen::Dynamic> v =
      (psi.amplitudes().array() * wc.template cast<C>()).matrix();
  const C val = u.adjoint() * a.dense_kernel() * v;
  if (!(std::abs(val.imag()) < Scalar(1e-10) * (Scalar(1) + std::abs(val.real()))))
    throw Error("expectation_hilbert: imaginary residue exceeds 1e-10");
  return val.real();
}

}  // namespace wigner
