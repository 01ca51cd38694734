// SPDX-License-Identifier: Apache-2.0
// Copyright contributors to the cam16 project.

#include "cam16/cam16.hpp"

#include <cmath>

#include "detail.hpp"

namespace cam16 {

using detail::kDegToRad;
using detail::kRadToDeg;
using detail::mat3_apply;
using detail::require_finite;
using detail::require_nonnegative;
using detail::require_positive;
using detail::sign;

namespace {

// Opponent/auxiliary combinations of the adapted cone responses: rows give
// p'_2, a (redness-greenness), b (yellowness-blueness) and u.
constexpr std::array<std::array<double, 3>, 4> kOpponentRows{{
    {2.0, 1.0, 1.0 / 20.0},
    {1.0, -12.0 / 11.0, 1.0 / 11.0},
    {1.0 / 9.0, 1.0 / 9.0, -2.0 / 9.0},
    {1.0, 1.0, 21.0 / 20.0},
}};

int hue_segment(double hp) {
    int i = 0;
    while (i < 3 && hp >= kHueAngles[static_cast<std::size_t>(i) + 1]) ++i;
    return i;
}

std::string compose_hue_text(int p_l, int p_r, char left, char right) {
    if (p_l == 0) return std::to_string(p_r) + right;
    if (p_r == 0) return std::to_string(p_l) + left;
    return std::to_string(p_l) + left + std::to_string(p_r) + right;
}

}  // namespace

Surround surround_preset(SurroundName name) {
    switch (name) {
        case SurroundName::Average: return {1.0, 0.69, 1.0};
        case SurroundName::Dim: return {0.9, 0.59, 0.9};
        case SurroundName::Dark: return {0.8, 0.525, 0.8};
    }
    throw DomainError("unknown surround preset");
}

Surround surround_interpolate(double c) {
    if (!(c >= 0.525 && c <= 0.69)) {
        throw DomainError("surround c must lie in [0.525, 0.69] (got " + std::to_string(c) +
                          ")");
    }
    if (c >= 0.59) {
        const double t = (c - 0.59) / (0.69 - 0.59);
        return {std::lerp(0.9, 1.0, t), c, std::lerp(0.9, 1.0, t)};
    }
    const double t = (c - 0.525) / (0.59 - 0.525);
    return {std::lerp(0.8, 0.9, t), c, std::lerp(0.8, 0.9, t)};
}

double adapting_luminance_from_illuminance(double e_w, double y_b, double y_w) {
    require_positive(e_w, "e_w");
    require_positive(y_b, "y_b");
    require_positive(y_w, "y_w");
    return (e_w / std::numbers::pi) * (y_b / y_w);
}

ViewingConditions viewing_conditions(const XyzColor& white, double y_b, double l_a,
                                     const Surround& surround, bool discount_illuminant) {
    require_positive(white.x, "white.x");
    require_positive(white.y, "white.y");
    require_positive(white.z, "white.z");
    require_positive(y_b, "y_b");
    require_positive(l_a, "l_a");
    if (!(surround.c >= 0.525 && surround.c <= 0.69)) {
        throw DomainError("surround.c must lie in [0.525, 0.69]");
    }

    ViewingConditions vc;
    vc.white = white;
    vc.y_b = y_b;
    vc.l_a = l_a;
    vc.surround = surround;
    vc.rgb_w = mat3_apply(kM16, {white.x, white.y, white.z});

    double d = surround.f * (1.0 - (1.0 / 3.6) * std::exp((-l_a - 42.0) / 92.0));
    if (discount_illuminant) d = 1.0;
    if (d > 1.0) {
        d = 1.0;
    } else if (d < 0.0) {
        d = 0.0;
    }
    vc.d = d;

    const double y_w = white.y;
    for (std::size_t i = 0; i < 3; ++i) {
        // Convex blend between full adaptation (Y_w/rgb_w) and none (1).
        vc.d_rgb[i] = d * y_w / vc.rgb_w[i] + 1.0 - d;
    }

    const double k = 1.0 / (5.0 * l_a + 1.0);
    const double k4 = k * k * k * k;
    vc.f_l = k4 * l_a + 0.1 * (1.0 - k4) * (1.0 - k4) * std::pow(5.0 * l_a, 1.0 / 3.0);
    vc.n = y_b / y_w;
    vc.z = 1.48 + std::sqrt(vc.n);
    vc.n_bb = 0.725 / std::pow(vc.n, 0.2);
    vc.n_cb = vc.n_bb;
    for (std::size_t i = 0; i < 3; ++i) {
        vc.rgb_wc[i] = vc.d_rgb[i] * vc.rgb_w[i];
        const double p = std::pow(vc.f_l * vc.rgb_wc[i] / 100.0, 0.42);
        vc.rgb_aw[i] = 400.0 * p / (p + 27.13);
    }
    vc.a_w = (2.0 * vc.rgb_aw[0] + vc.rgb_aw[1] + vc.rgb_aw[2] / 20.0) * vc.n_bb;
    return vc;
}

double postadapt(double x, double f_l) {
    const double q = std::pow(f_l * std::fabs(x) / 100.0, 0.42);
    return 400.0 * sign(x) * q / (q + 27.13);
}

double postadapt_inverse(double y, double f_l) {
    const double ay = std::fabs(y);
    if (!(ay < 400.0)) {
        throw UnrepresentableError("unrepresentable correlates: |adapted response| >= 400");
    }
    return sign(y) * (100.0 / f_l) * std::pow(27.13 * ay / (400.0 - ay), 1.0 / 0.42);
}

double eccentricity(double h) {
    return 0.25 * (std::cos(h * kDegToRad + 2.0) + 3.8);
}

HueQuadrature hue_quadrature(double h) {
    if (!(h >= 0.0 && h < 360.0)) {
        throw DomainError("hue angle must lie in [0, 360)");
    }
    const double hp = h < kHueAngles[0] ? h + 360.0 : h;
    const std::size_t i = static_cast<std::size_t>(hue_segment(hp));
    const double e_cur = kHueEccentricities[i];
    const double e_next = kHueEccentricities[i + 1];
    HueQuadrature hq;
    hq.big_h = kHueQuadratures[i] +
               100.0 * e_next * (hp - kHueAngles[i]) /
                   (e_next * (hp - kHueAngles[i]) + e_cur * (kHueAngles[i + 1] - hp));
    hq.percent_left = static_cast<int>(std::floor(kHueQuadratures[i + 1] - hq.big_h + 0.5));
    hq.percent_right = static_cast<int>(std::floor(hq.big_h - kHueQuadratures[i] + 0.5));
    hq.left = kHueLabels[i];
    hq.right = kHueLabels[i + 1];
    hq.text = compose_hue_text(hq.percent_left, hq.percent_right, hq.left, hq.right);
    return hq;
}

double hue_from_quadrature(double big_h) {
    if (!(big_h >= 0.0 && big_h < 400.0)) {
        throw DomainError("hue quadrature must lie in [0, 400)");
    }
    std::size_t i = static_cast<std::size_t>(big_h / 100.0);
    if (i > 3) i = 3;
    const double e_cur = kHueEccentricities[i];
    const double e_next = kHueEccentricities[i + 1];
    const double dh = big_h - kHueQuadratures[i];
    double hp = (dh * (e_next * kHueAngles[i] - e_cur * kHueAngles[i + 1]) -
                 100.0 * kHueAngles[i] * e_next) /
                (dh * (e_next - e_cur) - 100.0 * e_next);
    if (hp >= 360.0) hp -= 360.0;
    return hp;
}

Correlates forward(const XyzColor& xyz, const ViewingConditions& vc) {
    require_finite(xyz.x, "xyz.x");
    require_finite(xyz.y, "xyz.y");
    require_finite(xyz.z, "xyz.z");

    const std::array<double, 3> rgb = mat3_apply(kM16, {xyz.x, xyz.y, xyz.z});
    std::array<double, 3> rgb_a{};
    for (std::size_t i = 0; i < 3; ++i) {
        rgb_a[i] = postadapt(vc.d_rgb[i] * rgb[i], vc.f_l);
    }

    // One 4x3 product yields p'_2, a, b and u at once.
    std::array<double, 4> comps{};
    for (std::size_t r = 0; r < 4; ++r) {
        comps[r] = kOpponentRows[r][0] * rgb_a[0] + kOpponentRows[r][1] * rgb_a[1] +
                   kOpponentRows[r][2] * rgb_a[2];
    }
    const double p2 = comps[0];
    const double a = comps[1];
    const double b = comps[2];
    const double u = comps[3];

    double h = 0.0;
    if (!(a == 0.0 && b == 0.0)) {
        h = std::atan2(b, a) * kRadToDeg;
        if (h < 0.0) h += 360.0;
        if (h >= 360.0) h -= 360.0;  // a tiny negative angle can round up to 360
    }
    const double hp = h < kHueAngles[0] ? h + 360.0 : h;
    const double e_t = eccentricity(hp);
    HueQuadrature hq = hue_quadrature(h);

    const double big_a = p2 * vc.n_bb;
    if (big_a < 0.0) {
        throw DomainError("achromatic response is negative; input lies outside the model's"
                          " meaningful range");
    }

    Correlates r;
    r.j = 100.0 * std::pow(big_a / vc.a_w, vc.surround.c * vc.z);
    r.q = (4.0 / vc.surround.c) * std::sqrt(r.j / 100.0) * (vc.a_w + 4.0) *
          std::pow(vc.f_l, 0.25);
    // The only place where the legacy 0.1 offsets survive, folded into 0.305.
    const double t = (50000.0 / 13.0) * vc.surround.n_c * vc.n_cb * e_t *
                     std::sqrt(a * a + b * b) / (u + 0.305);
    const double alpha = std::pow(t, 0.9) * std::pow(1.64 - std::pow(0.29, vc.n), 0.73);
    r.c = alpha * std::sqrt(r.j / 100.0);
    r.m = r.c * std::pow(vc.f_l, 0.25);
    r.s = 50.0 * std::sqrt(alpha * vc.surround.c / (vc.a_w + 4.0));
    r.h = h;
    r.big_h = hq.big_h;
    r.h_c = std::move(hq.text);
    return r;
}

XyzColor inverse(const CorrelateSelection& sel, const ViewingConditions& vc) {
    require_nonnegative(sel.lightness,
                        sel.lightness_kind == LightnessKind::J ? "J" : "Q");
    require_nonnegative(sel.chroma, sel.chroma_kind == ChromaKind::C   ? "C"
                                    : sel.chroma_kind == ChromaKind::M ? "M"
                                                                       : "s");
    if (sel.hue_kind == HueKind::Angle) {
        if (!(sel.hue >= 0.0 && sel.hue < 360.0)) {
            throw DomainError("hue angle must lie in [0, 360)");
        }
    } else if (!(sel.hue >= 0.0 && sel.hue < 400.0)) {
        throw DomainError("hue quadrature must lie in [0, 400)");
    }

    double j;
    if (sel.lightness_kind == LightnessKind::J) {
        j = sel.lightness;
    } else {
        // Inverting the brightness step: J = 6.25 [cQ / ((A_w+4) F_L^0.25)]^2.
        const double scaled =
            vc.surround.c * sel.lightness / ((vc.a_w + 4.0) * std::pow(vc.f_l, 0.25));
        j = 6.25 * scaled * scaled;
    }

    double alpha;
    if (sel.chroma_kind == ChromaKind::S) {
        alpha = (sel.chroma / 50.0) * (sel.chroma / 50.0) * (vc.a_w + 4.0) / vc.surround.c;
    } else {
        const double c_val = sel.chroma_kind == ChromaKind::M
                                 ? sel.chroma / std::pow(vc.f_l, 0.25)
                                 : sel.chroma;
        alpha = j == 0.0 ? 0.0 : c_val / std::sqrt(j / 100.0);
    }
    const double t =
        std::pow(alpha / std::pow(1.64 - std::pow(0.29, vc.n), 0.73), 1.0 / 0.9);

    const double h = sel.hue_kind == HueKind::Angle ? sel.hue : hue_from_quadrature(sel.hue);

    const double e_t = eccentricity(h);
    const double big_a = vc.a_w * std::pow(j / 100.0, 1.0 / (vc.surround.c * vc.z));
    const double p1 = e_t * (50000.0 / 13.0) * vc.surround.n_c * vc.n_cb;
    const double p2 = big_a / vc.n_bb;

    const double hr = h * kDegToRad;
    const double sin_h = std::sin(hr);
    const double cos_h = std::cos(hr);
    // Always well-defined: no case split on sin/cos, no division by t.
    const double gamma = 23.0 * (p2 + 0.305) * t /
                         (23.0 * p1 + 11.0 * t * cos_h + 108.0 * t * sin_h);
    const double a = gamma * cos_h;
    const double b = gamma * sin_h;

    const double ra = (460.0 * p2 + 451.0 * a + 288.0 * b) / 1403.0;
    const double ga = (460.0 * p2 - 891.0 * a - 261.0 * b) / 1403.0;
    const double ba = (460.0 * p2 - 220.0 * a - 6300.0 * b) / 1403.0;

    const std::array<double, 3> rgb_c{
        postadapt_inverse(ra, vc.f_l),
        postadapt_inverse(ga, vc.f_l),
        postadapt_inverse(ba, vc.f_l),
    };
    const std::array<double, 3> rgb{
        rgb_c[0] / vc.d_rgb[0],
        rgb_c[1] / vc.d_rgb[1],
        rgb_c[2] / vc.d_rgb[2],
    };
    const std::array<double, 3> xyz = mat3_apply(kM16Inverse, rgb);
    return {xyz[0], xyz[1], xyz[2]};
}

}  // namespace cam16
