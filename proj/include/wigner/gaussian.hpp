// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "wigner/state.hpp"

namespace wigner {

// Analytic Gaussian wavefunction parameters: width sigma, position offset q0,
// momentum offset p0.  The coordinate representation is
//   psi(x) = (2 pi sigma^2)^(-1/4) exp(-(x-q0)^2 / (4 sigma^2)) exp(i p0 x),
// an exact L2-normalized state.
template <class Scalar>
struct GaussianStateT {
  Scalar sigma;
  Scalar q0 = 0;
  Scalar p0 = 0;

  explicit GaussianStateT(Scalar width, Scalar q_offset = 0, Scalar p_offset = 0)
      : sigma(width), q0(q_offset), p0(p_offset) {
    if (!(sigma > Scalar(0)) || !std::isfinite(sigma))
      throw std::invalid_argument("GaussianState: sigma must be positive");
    if (!std::isfinite(q0) || !std::isfinite(p0))
      throw std::invalid_argument("GaussianState: offsets must be finite");
  }

  std::complex<Scalar> amplitude(Scalar x) const {
    const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
    const Scalar prefactor = std::pow(two_pi * sigma * sigma, Scalar(-0.25));
    const Scalar d = x - q0;
    const Scalar mag = prefactor * std::exp(-d * d / (Scalar(4) * sigma * sigma));
    return std::polar(mag, p0 * x);
  }
};

using GaussianState = GaussianStateT<double>;

// Samples the Gaussian on the grid and renormalizes under the trapezoid rule.
// The grid must span [q0 - 8 sigma, q0 + 8 sigma]; outside that the neglected
// tail mass (erfc(8/sqrt 2) ~ 1.3e-15) would corrupt subsequent norms.
template <class Scalar>
SampledStateT<Scalar> sample_gaussian(const GaussianStateT<Scalar>& g,
                                      const PositionGridT<Scalar>& grid) {
  if (!grid.covers(g.q0 - Scalar(8) * g.sigma, g.q0 + Scalar(8) * g.sigma))
    throw GridTooNarrow("sample_gaussian: grid must span [q0 - 8 sigma, q0 + 8 sigma]");
  typename SampledStateT<Scalar>::Vector amps(grid.n_x);
  for (Index i = 0; i < grid.n_x; ++i) amps[i] = g.amplitude(grid.node(i));
  return SampledStateT<Scalar>(grid, std::move(amps)).normalized();
}

}  // namespace wigner
