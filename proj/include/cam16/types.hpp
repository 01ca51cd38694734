// SPDX-License-Identifier: Apache-2.0
// Copyright contributors to the cam16 project.

#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace cam16 {

/// Tristimulus values on the conventional 0-100 scale (white Y typically 100).
struct XyzColor {
    double x{};
    double y{};
    double z{};
};

/// Surround parameterization: factor F, surround impact c, chromatic
/// induction factor N_c.
struct Surround {
    double f{};
    double c{};
    double n_c{};
};

enum class SurroundName { Average, Dim, Dark };

/// Everything that is independent of the input sample, precomputed once per
/// viewing environment. Immutable after construction and safe to share
/// across threads.
struct ViewingConditions {
    XyzColor white;                  // adopted white (X_w, Y_w, Z_w)
    double y_b{};                    // background luminance factor
    double l_a{};                    // adapting-field luminance, cd/m^2
    Surround surround;
    std::array<double, 3> rgb_w{};   // cone responses of the white
    double d{};                      // degree of adaptation, in [0, 1]
    std::array<double, 3> d_rgb{};
    double f_l{};                    // luminance adaptation factor
    double n{};
    double z{};
    double n_bb{};
    double n_cb{};
    std::array<double, 3> rgb_wc{};
    std::array<double, 3> rgb_aw{};
    double a_w{};                    // achromatic response of the white
};

/// Full set of appearance correlates produced by the forward model.
struct Correlates {
    double j{};       // lightness J
    double c{};       // chroma C
    double h{};       // hue angle, degrees in [0, 360)
    double q{};       // brightness Q
    double m{};       // colorfulness M
    double s{};       // saturation s
    double big_h{};   // hue quadrature H in [0, 400)
    std::string h_c;  // hue composition, e.g. "59G41B"
};

enum class LightnessKind { J, Q };
enum class ChromaKind { C, M, S };
enum class HueKind { Angle, Quadrature };

/// Inverse-model input: one of {J|Q}, one of {C|M|s}, one of {h|H}.
struct CorrelateSelection {
    LightnessKind lightness_kind{LightnessKind::J};
    double lightness{};
    ChromaKind chroma_kind{ChromaKind::C};
    double chroma{};
    HueKind hue_kind{HueKind::Angle};
    double hue{};

    static CorrelateSelection jch(double j, double c, double h) {
        return {LightnessKind::J, j, ChromaKind::C, c, HueKind::Angle, h};
    }

    /// Pick one value per axis out of a forward result.
    static CorrelateSelection pick(const Correlates& r, LightnessKind lk, ChromaKind ck,
                                   HueKind hk) {
        CorrelateSelection sel;
        sel.lightness_kind = lk;
        sel.lightness = (lk == LightnessKind::J) ? r.j : r.q;
        sel.chroma_kind = ck;
        sel.chroma = (ck == ChromaKind::C) ? r.c : (ck == ChromaKind::M) ? r.m : r.s;
        sel.hue_kind = hk;
        sel.hue = (hk == HueKind::Angle) ? r.h : r.big_h;
        return sel;
    }
};

/// Input outside the model's domain (non-finite, out of range, wrong sign).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Correlates that no finite cone response can produce (|adapted response|
/// reaches 400, the compression asymptote).
class UnrepresentableError : public std::range_error {
  public:
    using std::range_error::range_error;
};

}  // namespace cam16
