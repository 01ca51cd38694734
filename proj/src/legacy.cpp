// SPDX-License-Identifier: Apache-2.0
// Copyright contributors to the cam16 project.

#include "cam16/legacy.hpp"

#include <cmath>

#include "cam16/cam16.hpp"
#include "detail.hpp"

namespace cam16::legacy {

using detail::kDegToRad;
using detail::kRadToDeg;
using detail::mat3_apply;

double postadapt(double x, double f_l) {
    return cam16::postadapt(x, f_l) + 0.1;
}

Correlates forward(const XyzColor& xyz, const ViewingConditions& vc) {
    const std::array<double, 3> rgb = mat3_apply(kM16, {xyz.x, xyz.y, xyz.z});
    const double ra = postadapt(vc.d_rgb[0] * rgb[0], vc.f_l);
    const double ga = postadapt(vc.d_rgb[1] * rgb[1], vc.f_l);
    const double ba = postadapt(vc.d_rgb[2] * rgb[2], vc.f_l);

    // Four individual opponent combinations, offsets still on board.
    const double a = ra - 12.0 * ga / 11.0 + ba / 11.0;
    const double b = (ra + ga - 2.0 * ba) / 9.0;

    double h = std::atan2(b, a) * kRadToDeg;
    if (h < 0.0) h += 360.0;
    if (h >= 360.0) h -= 360.0;
    const double hp = h < kHueAngles[0] ? h + 360.0 : h;
    const double e_t = eccentricity(hp);
    HueQuadrature hq = hue_quadrature(h);

    // The 0.305 here cancels the three 0.1 offsets, but only algebraically;
    // at degenerate inputs the rounding residue survives into J.
    const double big_a = (2.0 * ra + ga + ba / 20.0 - 0.305) * vc.n_bb;

    Correlates r;
    r.j = 100.0 * std::pow(big_a / vc.a_w, vc.surround.c * vc.z);
    r.q = (4.0 / vc.surround.c) * std::sqrt(r.j / 100.0) * (vc.a_w + 4.0) *
          std::pow(vc.f_l, 0.25);
    const double t = (50000.0 / 13.0) * vc.surround.n_c * vc.n_cb * e_t *
                     std::sqrt(a * a + b * b) / (ra + ga + (21.0 / 20.0) * ba);
    r.c = std::pow(t, 0.9) * std::sqrt(r.j / 100.0) *
          std::pow(1.64 - std::pow(0.29, vc.n), 0.73);
    r.m = r.c * std::pow(vc.f_l, 0.25);
    r.s = 100.0 * std::sqrt(r.m / r.q);  // breaks down when Q == 0
    r.h = h;
    r.big_h = hq.big_h;
    r.h_c = std::move(hq.text);
    return r;
}

XyzColor inverse(const CorrelateSelection& sel, const ViewingConditions& vc) {
    const double c = vc.surround.c;
    double j;
    if (sel.lightness_kind == LightnessKind::J) {
        j = sel.lightness;
    } else {
        const double scaled =
            c * sel.lightness / ((vc.a_w + 4.0) * std::pow(vc.f_l, 0.25));
        j = 6.25 * scaled * scaled;
    }

    double big_c;
    switch (sel.chroma_kind) {
        case ChromaKind::C: big_c = sel.chroma; break;
        case ChromaKind::M: big_c = sel.chroma / std::pow(vc.f_l, 0.25); break;
        default: {
            // s route needs Q; recover it from J when only J was supplied.
            const double q = sel.lightness_kind == LightnessKind::Q
                                 ? sel.lightness
                                 : (4.0 / c) * std::sqrt(j / 100.0) * (vc.a_w + 4.0) *
                                       std::pow(vc.f_l, 0.25);
            big_c = (sel.chroma / 100.0) * (sel.chroma / 100.0) * q /
                    std::pow(vc.f_l, 0.25);
            break;
        }
    }
    const double t = std::pow(
        big_c / (std::sqrt(j / 100.0) * std::pow(1.64 - std::pow(0.29, vc.n), 0.73)),
        1.0 / 0.9);

    const double h = sel.hue_kind == HueKind::Angle ? sel.hue : hue_from_quadrature(sel.hue);

    const double e_t = 0.25 * (std::cos(h * kDegToRad + 2.0) + 3.8);
    const double big_a = vc.a_w * std::pow(j / 100.0, 1.0 / (c * vc.z));
    const double p2 = big_a / vc.n_bb + 0.305;
    const double p3 = 21.0 / 20.0;

    double a = 0.0;
    double b = 0.0;
    if (t != 0.0) {
        const double p1 =
            (50000.0 / 13.0) * vc.surround.n_c * vc.n_cb * e_t * (1.0 / t);
        const double hr = h * kDegToRad;
        const double sin_h = std::sin(hr);
        const double cos_h = std::cos(hr);
        if (std::fabs(sin_h) >= std::fabs(cos_h)) {
            const double p4 = p1 / sin_h;
            b = p2 * (2.0 + p3) * (460.0 / 1403.0) /
                (p4 + (2.0 + p3) * (220.0 / 1403.0) * (cos_h / sin_h) - 27.0 / 1403.0 +
                 p3 * (6300.0 / 1403.0));
            a = b * (cos_h / sin_h);
        } else {
            const double p5 = p1 / cos_h;
            a = p2 * (2.0 + p3) * (460.0 / 1403.0) /
                (p5 + (2.0 + p3) * (220.0 / 1403.0) -
                 (27.0 / 1403.0 - p3 * (6300.0 / 1403.0)) * (sin_h / cos_h));
            b = a * (sin_h / cos_h);
        }
    }

    const double ra = (460.0 * p2 + 451.0 * a + 288.0 * b) / 1403.0;
    const double ga = (460.0 * p2 - 891.0 * a - 261.0 * b) / 1403.0;
    const double ba = (460.0 * p2 - 220.0 * a - 6300.0 * b) / 1403.0;

    // The offset responses carry +0.1 each; strip it before decompressing.
    const std::array<double, 3> rgb_c{
        postadapt_inverse(ra - 0.1, vc.f_l),
        postadapt_inverse(ga - 0.1, vc.f_l),
        postadapt_inverse(ba - 0.1, vc.f_l),
    };
    const std::array<double, 3> rgb{
        rgb_c[0] / vc.d_rgb[0],
        rgb_c[1] / vc.d_rgb[1],
        rgb_c[2] / vc.d_rgb[2],
    };
    const std::array<double, 3> out = mat3_apply(kM16Inverse, rgb);
    return {out[0], out[1], out[2]};
}

}  // namespace cam16::legacy
