// SPDX-License-Identifier: Apache-2.0
// Weideman rational-approximation coefficients for the Faddeeva function
// w(z) = exp(-z^2) erfc(-iz) on the upper half plane (N = 48), descending
// powers for Horner evaluation.  Generated by tests/support/gen_reference.py
// with mpmath at 50 digits; see J.A.C. Weideman, SIAM Review 36 (1994) 1497.
#pragma once

namespace wigner::detail {

inline constexpr int faddeeva_n_coeffs = 48;
inline constexpr double faddeeva_shift = 5.825901260487881;  // L = sqrt(N/sqrt(2))
inline constexpr double faddeeva_coeffs[48] = {
    -1.722992942473381e-18,
    -1.7002414703709919e-18,
    1.0143644768076384e-17,
    1.1239721046711719e-17,
    -5.9805823062946817e-17,
    -8.3042615498912872e-17,
    3.4839124551595775e-16,
    6.554481018191892e-16,
    -1.942664860638217e-15,
    -5.2979443451748264e-15,
    9.6048404827117241e-15,
    4.2343104696919382e-14,
    -3.1939423743169578e-14,
    -3.2268483073834782e-13,
    -9.6432764464304552e-14,
    2.2154904726186046e-12,
    3.4254258518412529e-12,
    -1.1935494328759351e-11,
    -4.3865882662554395e-11,
    2.1621977623864713e-11,
    3.8794210668839531e-10,
    5.7752897655739289e-10,
    -2.0156599753747293e-9,
    -9.596254752690327e-9,
    -6.3868099518349111e-9,
    6.9270006358871891e-8,
    2.6549492017089926e-7,
    1.949433748332226e-7,
    -1.9445657789319263e-6,
    -9.4756382403851336e-6,
    -1.9054461618984307e-5,
    1.7506316371146354e-5,
    0.00030786913640886617,
    0.0014864991251956357,
    0.0051258135482258636,
    0.014546837792237558,
    0.035861369983376719,
    0.07895589553470023,
    0.15786330443380482,
    0.2897998907960483,
    0.49225702391399073,
    0.77806241914842289,
    1.1492204645397783,
    1.5913084691178007,
    2.070759971674292,
    2.5370484874446907,
    2.9304498956237565,
    3.1940645893950712,
};

}  // namespace wigner::detail
