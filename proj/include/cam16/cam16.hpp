// SPDX-License-Identifier: Apache-2.0
// Copyright contributors to the cam16 project.

#pragma once

#include <array>

#include "cam16/types.hpp"

namespace cam16 {

/// XYZ -> cone response matrix.
inline constexpr std::array<std::array<double, 3>, 3> kM16{{
    {0.401288, 0.650173, -0.051461},
    {-0.250268, 1.204414, 0.045854},
    {-0.002079, 0.048952, 0.953127},
}};

/// Correctly rounded inverse of kM16.
inline constexpr std::array<std::array<double, 3>, 3> kM16Inverse{{
    {1.8620678550872327, -1.0112546305316843, 0.14918677544445175},
    {0.38752654323613717, 0.6214474419314753, -0.008973985167612518},
    {-0.015841498849333856, -0.03412293802851556, 1.0499644368778496},
}};

// Unique hue data: angles h_i, eccentricities e_i, quadratures H_i, labels.
// The red entry repeats so that every hue angle falls in some segment.
inline constexpr std::array<double, 5> kHueAngles{20.14, 90.00, 164.25, 237.53, 380.14};
inline constexpr std::array<double, 5> kHueEccentricities{0.8, 0.7, 1.0, 1.2, 0.8};
inline constexpr std::array<double, 5> kHueQuadratures{0.0, 100.0, 200.0, 300.0, 400.0};
inline constexpr std::array<char, 5> kHueLabels{'R', 'Y', 'G', 'B', 'R'};

/// Hue quadrature H plus the composition it encodes: rounded percentages of
/// the two neighboring unique hues and the formatted text ("59G41B"; a pure
/// hue renders one-sided, e.g. "100R").
struct HueQuadrature {
    double big_h{};
    int percent_left{};
    int percent_right{};
    char left{};
    char right{};
    std::string text;
};

/// Exact (F, c, N_c) row for one of the three named surrounds.
Surround surround_preset(SurroundName name);

/// Surround for an intermediate impact factor c in [0.525, 0.69]; F and N_c
/// are piecewise-linear between the preset rows.
Surround surround_interpolate(double c);

/// Adapting-field luminance from the illuminance of the reference white
/// (lux): L_A = E_w/pi * Y_b/Y_w.
double adapting_luminance_from_illuminance(double e_w, double y_b, double y_w);

/// Precompute all sample-independent parameters. `discount_illuminant`
/// forces the degree of adaptation to 1.
ViewingConditions viewing_conditions(const XyzColor& white, double y_b, double l_a,
                                     const Surround& surround,
                                     bool discount_illuminant = false);

/// Postadaptation cone response compression: odd, strictly increasing,
/// bounded by +-400, exactly zero at zero.
double postadapt(double x, double f_l);

/// Inverse of postadapt. Throws UnrepresentableError for |y| >= 400.
double postadapt_inverse(double y, double f_l);

/// Eccentricity factor e_t; always within [0.7, 1.2].
double eccentricity(double h);

/// Hue quadrature and composition for a hue angle in [0, 360).
HueQuadrature hue_quadrature(double h);

/// Hue angle in [0, 360) for a hue quadrature in [0, 400). Inverse of
/// hue_quadrature.
double hue_from_quadrature(double big_h);

/// Forward model: XYZ to appearance correlates.
Correlates forward(const XyzColor& xyz, const ViewingConditions& vc);

/// Inverse model: any admissible correlate selection back to XYZ.
XyzColor inverse(const CorrelateSelection& sel, const ViewingConditions& vc);

}  // namespace cam16
