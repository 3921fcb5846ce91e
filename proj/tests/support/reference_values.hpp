// SPDX-License-Identifier: Apache-2.0
// Frozen reference values, generated by tests/support/gen_reference.py
// (mpmath, 50 significant digits).  Do not edit by hand.
#pragma once

namespace refval {

// erf on the real axis
inline constexpr double erf_1 = 0.84270079294971487;
inline constexpr double erf_ratio_s1_a3 = 0.86638559746228387;  // erf(a/(2*sqrt(2)*sigma)), sigma=1, a=3
inline constexpr double erf_ratio_s1_a1 = 0.38292492254802621;  // erf(a/(2*sqrt(2)*sigma)), sigma=1, a=1
inline constexpr double erf_ratio_s2_a3 = 0.54674529524626360;  // erf(a/(2*sqrt(2)*sigma)), sigma=2, a=3

// complex erf reference points: {re(z), im(z), re(erf z), im(erf z)}
inline constexpr double cerf_points[][4] = {
    {1.0000000000000000, 1.0000000000000000, 1.3161512816979476, 0.19045346923783469},
    {0.50000000000000000, 3.0000000000000000, 404.81268348510669, -1172.6091303384733},
    {2.0000000000000000, 0.50000000000000000, 1.0035022433130363, 0.0047409030312943361},
    {3.0000000000000000, 3.0000000000000000, 0.86782649757545114, -0.012152181790312257},
    {0.50000000000000000, 8.0000000000000000, 3.4331947078415915e+26, -2.8419703160127090e+25},
    {0.25000000000000000, 11.500000000000000, -6.6436636005971578e+55, 1.0713368756006952e+56},
    {4.0000000000000000, 2.0000000000000000, 1.0000005652170028, -5.1310052960818763e-7},
    {6.0000000000000000, 1.0000000000000000, 0.99999999999999995, -2.2776350333692490e-17},
    {2.5000000000000000, 2.5000000000000000, 0.87636319535042133, 0.099928773791597468},
    {0.10000000000000001, 5.0000000000000000, 6817477771.5138365, 4581362884.0523508},
    {1.7500000000000000, 0.25000000000000000, 0.99225386046450153, 0.011791883720784154},
    {0.050000000000000003, 2.0000000000000000, 3.0573416319498166, 18.258173779974835},
};

// scaled products: {alpha, beta, Re[erf(alpha+i beta)]*exp(-beta^2)}
inline constexpr double scaled_erf_points[][3] = {
    {1.0606601717798212, 4.2426406871192848, 0.027100826639788319},
    {0.50000000000000000, 2.0000000000000000, 0.25348817971560586},
    {2.0000000000000000, 7.0000000000000000, 0.00075747534264205177},
    {1.0000000000000000, 50.000000000000000, -0.0021731462486125448},
    {5.0000000000000000, 5.0000000000000000, 1.2921059709891574e-11},
    {0.25000000000000000, 199.00000000000000, -0.0022863561001459513},
    {0.35355339059327373, 2.0000000000000000, 0.27109396987419155},
    {3.0000000000000001e-5, 10.000000000000000, 3.3851372971627502e-5},
    {1.2000000000000000, 1.8999999999999999, -0.014565660722601011},
    {0.75000000000000000, 120.00000000000000, -0.0021361613473709334},
};

// projected Wigner function (sigma=1, a=3) spot values
inline constexpr double projected_w_q12_p30 = 0.14470953341724989;
inline constexpr double projected_w_q05_p20 = -0.13682091867289785;
inline constexpr double projected_w_q00_p20 = -0.091622463830265260;

// minimum of the projected Wigner function on the 301x351 viewport
// q in [-1.5,1.5], p in [1.5,5] (sigma=1, a=3)
inline constexpr double viewport_min_301x351 = -0.21208370239023805;
inline constexpr int viewport_argmin_iq_301x351 = 189;
inline constexpr int viewport_argmin_ip_301x351 = 66;
inline constexpr double viewport_min_601x701 = -0.21209373735609092;

// local (off-grid) minimum near the viewport argmin
inline constexpr double viewport_min_refined = -0.21209684720620416;
inline constexpr double viewport_argmin_q = 0.39269060253216015;
inline constexpr double viewport_argmin_p = 2.1686268565280225;

// factorization gap: max over the viewport of
// |W_projected - W_window * W_gaussian| and a safe lower margin
inline constexpr double factorization_gap_max = 0.37688053521565448;
inline constexpr double factorization_gap_margin = 0.33919248169408903;

// sharp q-truncation of the sigma=1 Gaussian to |q| <= 1.5
inline constexpr double truncated_var_q = 0.55152441576155131;
inline constexpr double truncated_uncertainty_product = 0.13788110394038783;
inline constexpr double truncation_renorm_factor = 1.1542204798060863;

// <psi| P x^2 P |psi> for the sigma=1 Gaussian, window a=3
inline constexpr double windowed_x2_expectation = 0.47783281046460869;
inline constexpr double gaussian_marginal_peak = 0.39894228040143268;  // |psi(0)|^2, sigma=1
inline constexpr double gaussian_peak_amplitude = 0.63161877774606470;  // (2*pi)^(-1/4)

}  // namespace refval
