// SPDX-License-Identifier: Apache-2.0
//
// Overflow-safe evaluation of the complex error function and of the scaled
// product Re[erf(alpha + i beta)] * exp(-beta^2).  The unscaled erf grows like
// exp(beta^2) along the imaginary direction and overflows double precision
// near |beta| ~ 26, while the physics only ever needs the scaled product, so
// that product is computed directly through the Faddeeva function
//   w(z) = exp(-z^2) erfc(-iz)
// which is bounded on the upper half plane.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "wigner/detail/faddeeva_coefficients.hpp"
#include "wigner/errors.hpp"

namespace wigner {

namespace detail {

// Maclaurin series of erf; used for |z| <= 3 where the alternating-sum
// cancellation stays below exp(9) ~ 8.1e3 and costs at most ~3 decimal digits.
template <class Scalar>
std::complex<Scalar> erf_maclaurin(const std::complex<Scalar>& z) {
  using C = std::complex<Scalar>;
  const C mz2 = -z * z;
  C sum = z;
  C u = z;
  const Scalar eps2 = std::numeric_limits<Scalar>::epsilon() *
                      std::numeric_limits<Scalar>::epsilon();
  for (int n = 1; n < 256; ++n) {
    u *= mz2 / Scalar(n);
    const C term = u / Scalar(2 * n + 1);
    sum += term;
    if (std::norm(term) <= eps2 * std::norm(sum)) break;
  }
  return Scalar(2) * std::numbers::inv_sqrtpi_v<Scalar> * sum;
}

// Faddeeva function on the upper half plane, valid for |z| > 3 (callers below
// cover the small-|z| disc with the erf series instead).
//   3 < |z| < 16 : Weideman rational approximation, N = 48
//   |z| >= 16    : 10-term Laurent tail
// Both pieces were validated against a 50-digit reference to < 6e-16 relative
// error over their regions.
template <class Scalar>
std::complex<Scalar> faddeeva_w_upper(const std::complex<Scalar>& z) {
  using C = std::complex<Scalar>;
  const Scalar inv_sqrt_pi = std::numbers::inv_sqrtpi_v<Scalar>;
  if (std::norm(z) >= Scalar(256)) {
    const C inv2z2 = Scalar(0.5) / (z * z);
    C sum(1);
    C term(1);
    for (int k = 1; k < 10; ++k) {
      term *= Scalar(2 * k - 1) * inv2z2;
      sum += term;
    }
    return C(0, inv_sqrt_pi) / z * sum;
  }
  const Scalar L = Scalar(faddeeva_shift);
  const C iz(-z.imag(), z.real());
  const C d = L - iz;
  const C big_z = (L + iz) / d;
  C poly{Scalar(faddeeva_coeffs[0])};
  for (int k = 1; k < faddeeva_n_coeffs; ++k)
    poly = poly * big_z + Scalar(faddeeva_coeffs[k]);
  return Scalar(2) * poly / (d * d) + inv_sqrt_pi / d;
}

}  // namespace detail

// erf(z) for complex z with |Im z| <= 12.  Accuracy: ~1e-13 relative in the
// complex-magnitude sense; exact zeros of erf in the complex plane (the first
// sits near 1.4506 + 1.8809i) are the usual fixed-precision blind spots.
// Odd symmetry and conjugate symmetry hold bitwise by construction.
template <class Scalar>
std::complex<Scalar> cerf(std::complex<Scalar> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("cerf: argument must be finite");
  if (std::abs(z.imag()) > Scalar(12))
    throw OverflowRisk("cerf: |Im z| > 12 overflows exp(Im z)^2; use scaled_erf_re");
  if (z.real() < Scalar(0)) return -cerf(-z);
  if (z.imag() == Scalar(0)) return {std::erf(z.real()), z.imag()};
  if (std::norm(z) <= Scalar(9)) return detail::erf_maclaurin(z);
  const std::complex<Scalar> iz(-z.imag(), z.real());
  return Scalar(1) - std::exp(-z * z) * detail::faddeeva_w_upper(iz);
}

// g(alpha, beta) = Re[erf(alpha + i beta)] * exp(-beta^2), total on finite
// inputs and free of intermediate overflow for any |beta| (the transform
// region of interest reaches |beta| ~ 200).  g(alpha, 0) = erf(alpha) exactly,
// g is even in beta and odd in alpha by construction.
template <class Scalar>
Scalar scaled_erf_re(Scalar alpha, Scalar beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw std::invalid_argument("scaled_erf_re: arguments must be finite");
  if (alpha == Scalar(0)) return Scalar(0);  // Re erf(i beta) = 0
  const Scalar sign = alpha > Scalar(0) ? Scalar(1) : Scalar(-1);
  const Scalar a = std::abs(alpha);
  const Scalar b = std::abs(beta);
  if (b == Scalar(0)) return sign * std::erf(a);
  const Scalar two_over_sqrt_pi = Scalar(2) * std::numbers::inv_sqrtpi_v<Scalar>;
  // Taylor branch: the two routes below subtract nearly equal quantities when
  // alpha is tiny, but g ~ (2/sqrt(pi)) alpha there, so expand instead.
  if (a <= Scalar(1e-4) && a * b <= Scalar(3e-3))
    return sign * two_over_sqrt_pi * a *
           (Scalar(1) - a * a * (Scalar(2) * b * b + Scalar(1)) / Scalar(3));
  if (a * a + b * b <= Scalar(9))
    return sign * detail::erf_maclaurin(std::complex<Scalar>(a, b)).real() *
           std::exp(-b * b);
  // e^{-b^2} erf(a+ib) = e^{-b^2} - e^{-a^2} e^{-2iab} w(-b + ia); every factor
  // is bounded by 1 on the upper half plane.
  const std::complex<Scalar> w = detail::faddeeva_w_upper(std::complex<Scalar>(-b, a));
  const Scalar t = Scalar(2) * a * b;
  return sign * (std::exp(-b * b) -
                 std::exp(-a * a) * (std::cos(t) * w.real() + std::sin(t) * w.imag()));
}

}  // namespace wigner
