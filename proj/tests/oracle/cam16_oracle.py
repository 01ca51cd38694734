# SPDX-License-Identifier: Apache-2.0
# Copyright contributors to the cam16 project.
"""Standalone reference implementation of the CAM16 appearance model.

This script is written independently of the C++ sources and is the authority
for the golden fixtures under tests/golden/ and for the frozen expected values
in the unit tests. It deliberately uses only the Python standard library so
that its arithmetic is plain IEEE-754 double precision.

Regenerate the golden files with

    python3 tests/oracle/cam16_oracle.py --golden-dir tests/golden

and print the frozen constants with --print-frozen.
"""

import argparse
import math
import os

M16 = (
    (0.401288, 0.650173, -0.051461),
    (-0.250268, 1.204414, 0.045854),
    (-0.002079, 0.048952, 0.953127),
)

# Correctly rounded inverse of M16.
M16_INV = (
    (1.8620678550872327, -1.0112546305316843, 0.14918677544445175),
    (0.38752654323613717, 0.6214474419314753, -0.008973985167612518),
    (-0.015841498849333856, -0.03412293802851556, 1.0499644368778496),
)

DEG = math.pi / 180.0

HUE_ANGLES = (20.14, 90.00, 164.25, 237.53, 380.14)
HUE_ECC = (0.8, 0.7, 1.0, 1.2, 0.8)
HUE_QUAD = (0.0, 100.0, 200.0, 300.0, 400.0)
HUE_LABELS = "RYGBR"

SURROUNDS = {
    "average": (1.0, 0.69, 1.0),
    "dim": (0.9, 0.59, 0.9),
    "dark": (0.8, 0.525, 0.8),
}


def mat3_apply(m, v):
    return (
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    )


def sign(x):
    if x > 0.0:
        return 1.0
    if x < 0.0:
        return -1.0
    return 0.0


def postadapt(x, f_l):
    q = (f_l * abs(x) / 100.0) ** 0.42
    return 400.0 * sign(x) * q / (q + 27.13)


def postadapt_inverse(y, f_l):
    ay = abs(y)
    if ay >= 400.0:
        raise ValueError("unrepresentable correlates")
    return sign(y) * (100.0 / f_l) * ((27.13 * ay) / (400.0 - ay)) ** (1.0 / 0.42)


def eccentricity(h):
    return 0.25 * (math.cos(h * DEG + 2.0) + 3.8)


class ViewingConditions:
    pass


def viewing_conditions(white, y_b, l_a, surround, discount_illuminant=False):
    f, c, n_c = surround
    vc = ViewingConditions()
    vc.white = white
    vc.y_b = y_b
    vc.l_a = l_a
    vc.f = f
    vc.c = c
    vc.n_c = n_c
    vc.rgb_w = mat3_apply(M16, white)
    d = f * (1.0 - (1.0 / 3.6) * math.exp((-l_a - 42.0) / 92.0))
    if discount_illuminant:
        d = 1.0
    if d > 1.0:
        d = 1.0
    elif d < 0.0:
        d = 0.0
    vc.d = d
    y_w = white[1]
    # Convex blend between full adaptation (Y_w/rgb_w) and none (1).
    vc.d_rgb = tuple(d * y_w / w + 1.0 - d for w in vc.rgb_w)
    k = 1.0 / (5.0 * l_a + 1.0)
    k4 = k * k * k * k
    vc.f_l = k4 * l_a + 0.1 * (1.0 - k4) * (1.0 - k4) * (5.0 * l_a) ** (1.0 / 3.0)
    vc.n = y_b / y_w
    vc.z = 1.48 + math.sqrt(vc.n)
    vc.n_bb = 0.725 / vc.n ** 0.2
    vc.n_cb = vc.n_bb
    vc.rgb_wc = tuple(dc * w for dc, w in zip(vc.d_rgb, vc.rgb_w))
    rgb_aw = []
    for wc in vc.rgb_wc:
        p = (vc.f_l * wc / 100.0) ** 0.42
        rgb_aw.append(400.0 * p / (p + 27.13))
    vc.rgb_aw = tuple(rgb_aw)
    vc.a_w = (2.0 * vc.rgb_aw[0] + vc.rgb_aw[1] + vc.rgb_aw[2] / 20.0) * vc.n_bb
    return vc


def hue_quadrature(h):
    hp = h + 360.0 if h < HUE_ANGLES[0] else h
    i = 0
    while i < 3 and hp >= HUE_ANGLES[i + 1]:
        i += 1
    e_cur = HUE_ECC[i]
    e_next = HUE_ECC[i + 1]
    big_h = HUE_QUAD[i] + 100.0 * e_next * (hp - HUE_ANGLES[i]) / (
        e_next * (hp - HUE_ANGLES[i]) + e_cur * (HUE_ANGLES[i + 1] - hp)
    )
    p_l = int(math.floor(HUE_QUAD[i + 1] - big_h + 0.5))
    p_r = int(math.floor(big_h - HUE_QUAD[i] + 0.5))
    left = HUE_LABELS[i]
    right = HUE_LABELS[i + 1]
    if p_l == 0:
        text = "%d%s" % (p_r, right)
    elif p_r == 0:
        text = "%d%s" % (p_l, left)
    else:
        text = "%d%s%d%s" % (p_l, left, p_r, right)
    return big_h, p_l, p_r, left, right, text


def hue_from_quadrature(big_h):
    i = min(3, int(big_h // 100.0))
    e_cur = HUE_ECC[i]
    e_next = HUE_ECC[i + 1]
    dh = big_h - HUE_QUAD[i]
    hp = (dh * (e_next * HUE_ANGLES[i] - e_cur * HUE_ANGLES[i + 1]) - 100.0 * HUE_ANGLES[i] * e_next) / (
        dh * (e_next - e_cur) - 100.0 * e_next
    )
    if hp >= 360.0:
        hp -= 360.0
    return hp


def forward(xyz, vc):
    rgb = mat3_apply(M16, xyz)
    rgb_c = tuple(dc * v for dc, v in zip(vc.d_rgb, rgb))
    ra = postadapt(rgb_c[0], vc.f_l)
    ga = postadapt(rgb_c[1], vc.f_l)
    ba = postadapt(rgb_c[2], vc.f_l)
    p2 = 2.0 * ra + 1.0 * ga + (1.0 / 20.0) * ba
    a = 1.0 * ra + (-12.0 / 11.0) * ga + (1.0 / 11.0) * ba
    b = (1.0 / 9.0) * ra + (1.0 / 9.0) * ga + (-2.0 / 9.0) * ba
    u = 1.0 * ra + 1.0 * ga + (21.0 / 20.0) * ba
    if a == 0.0 and b == 0.0:
        h = 0.0
    else:
        h = math.atan2(b, a) * (180.0 / math.pi)
        if h < 0.0:
            h += 360.0
        if h >= 360.0:
            h -= 360.0  # a tiny negative angle can round up to 360
    hp = h + 360.0 if h < HUE_ANGLES[0] else h
    e_t = eccentricity(hp)
    big_h, p_l, p_r, left, right, hc = hue_quadrature(h)
    big_a = p2 * vc.n_bb
    if big_a < 0.0:
        raise ValueError("achromatic response is negative")
    j = 100.0 * (big_a / vc.a_w) ** (vc.c * vc.z)
    q = (4.0 / vc.c) * math.sqrt(j / 100.0) * (vc.a_w + 4.0) * vc.f_l ** 0.25
    t = (50000.0 / 13.0) * vc.n_c * vc.n_cb * e_t * math.sqrt(a * a + b * b) / (u + 0.305)
    alpha = t ** 0.9 * (1.64 - 0.29 ** vc.n) ** 0.73
    c = alpha * math.sqrt(j / 100.0)
    m = c * vc.f_l ** 0.25
    s = 50.0 * math.sqrt(alpha * vc.c / (vc.a_w + 4.0))
    return {"J": j, "C": c, "h": h, "Q": q, "M": m, "s": s, "H": big_h, "H_c": hc}


def inverse_jch(j, c, h, vc):
    if j == 0.0:
        alpha = 0.0
    else:
        alpha = c / math.sqrt(j / 100.0)
    t = (alpha / (1.64 - 0.29 ** vc.n) ** 0.73) ** (1.0 / 0.9)
    e_t = eccentricity(h)
    big_a = vc.a_w * (j / 100.0) ** (1.0 / (vc.c * vc.z))
    p1 = e_t * (50000.0 / 13.0) * vc.n_c * vc.n_cb
    p2 = big_a / vc.n_bb
    hr = h * DEG
    sin_h = math.sin(hr)
    cos_h = math.cos(hr)
    gamma = 23.0 * (p2 + 0.305) * t / (23.0 * p1 + 11.0 * t * cos_h + 108.0 * t * sin_h)
    a = gamma * cos_h
    b = gamma * sin_h
    ra = (460.0 * p2 + 451.0 * a + 288.0 * b) / 1403.0
    ga = (460.0 * p2 - 891.0 * a - 261.0 * b) / 1403.0
    ba = (460.0 * p2 - 220.0 * a - 6300.0 * b) / 1403.0
    rgb_c = (
        postadapt_inverse(ra, vc.f_l),
        postadapt_inverse(ga, vc.f_l),
        postadapt_inverse(ba, vc.f_l),
    )
    rgb = tuple(v / dc for v, dc in zip(rgb_c, vc.d_rgb))
    return mat3_apply(M16_INV, rgb)


# ---------------------------------------------------------------------------
# Number formatting mirroring std::to_chars (shortest round-trip; scientific
# only when strictly shorter than fixed; exponent is sign plus >= 2 digits).


def _digits_exponent(x):
    r = repr(abs(x))
    if "e" in r:
        mant, _, exp = r.partition("e")
        exp = int(exp)
    else:
        mant, exp = r, 0
    if "." in mant:
        intpart, _, frac = mant.partition(".")
    else:
        intpart, frac = mant, ""
    digits = (intpart + frac).lstrip("0")
    point = exp + len(intpart)  # value = 0.<digits> * 10**point, before stripping
    lead = len(intpart + frac) - len(digits)
    point -= lead
    digits = digits.rstrip("0")
    if not digits:
        return "0", 1
    return digits, point


def fmt(x):
    if x != x or math.isinf(x):
        raise ValueError("non-finite value in golden output")
    sgn = "-" if math.copysign(1.0, x) < 0.0 else ""
    if x == 0.0:
        return sgn + "0"
    digits, point = _digits_exponent(x)
    n = len(digits)
    if point >= n:
        fixed = digits + "0" * (point - n)
    elif point > 0:
        fixed = digits[:point] + "." + digits[point:]
    else:
        fixed = "0." + "0" * (-point) + digits
    e = point - 1
    mant = digits if n == 1 else digits[0] + "." + digits[1:]
    sci = "%s%s%+03d" % (mant, "e", e)
    return sgn + (sci if len(sci) < len(fixed) else fixed)


# ---------------------------------------------------------------------------

FIXTURE = [
    (0.0, 0.0, 0.0),
    (19.01, 20.0, 21.78),
    (95.047, 100.0, 108.883),
    (41.24, 21.26, 1.93),
    (35.76, 71.52, 11.92),
    (18.05, 7.22, 95.05),
    (77.0, 80.7, 97.2),
    (50.0, 50.0, 50.0),
    (3.53, 3.71, 4.86),
    (62.1, 64.4, 59.8),
    (28.3, 17.1, 4.4),
    (12.08, 6.15, 30.3),
    (56.8, 60.2, 88.3),
    (9.199, 9.6, 10.45),
    (71.1, 74.6, 81.3),
    (0.5, 0.25, 0.75),
    (33.3, 33.3, 33.3),
    (5.0561, 5.3157, 5.8625),
    (88.8, 92.1, 100.0),
    (64.0, 59.1, 24.3),
]

STANDARD_WHITE = (95.047, 100.0, 108.883)
STANDARD_YB = 20.0
STANDARD_LA = 318.31


def standard_vc():
    return viewing_conditions(STANDARD_WHITE, STANDARD_YB, STANDARD_LA, SURROUNDS["average"])


def write_goldens(golden_dir):
    os.makedirs(golden_dir, exist_ok=True)
    vc = standard_vc()

    with open(os.path.join(golden_dir, "forward_input.csv"), "w", newline="") as fh:
        fh.write("X,Y,Z\n")
        for xyz in FIXTURE:
            fh.write(",".join(fmt(v) for v in xyz) + "\n")

    with open(os.path.join(golden_dir, "forward_input.jsonl"), "w", newline="") as fh:
        for xyz in FIXTURE:
            fh.write('{"X":%s,"Y":%s,"Z":%s}\n' % tuple(fmt(v) for v in xyz))

    results = [forward(xyz, vc) for xyz in FIXTURE]

    cols = ("J", "C", "h", "Q", "M", "s", "H")
    with open(os.path.join(golden_dir, "forward_golden.csv"), "w", newline="") as fh:
        fh.write("J,C,h,Q,M,s,H,H_c\n")
        for r in results:
            fh.write(",".join(fmt(r[k]) for k in cols) + "," + r["H_c"] + "\n")

    with open(os.path.join(golden_dir, "forward_golden.jsonl"), "w", newline="") as fh:
        for r in results:
            fields = ",".join('"%s":%s' % (k, fmt(r[k])) for k in cols)
            fh.write("{%s,\"H_c\":\"%s\"}\n" % (fields, r["H_c"]))

    # The inverse job consumes the forward golden, so round each correlate
    # through its decimal representation exactly as the CSV reader will.
    with open(os.path.join(golden_dir, "inverse_golden.csv"), "w", newline="") as fh:
        fh.write("X,Y,Z\n")
        for r in results:
            j = float(fmt(r["J"]))
            c = float(fmt(r["C"]))
            h = float(fmt(r["h"]))
            xyz = inverse_jch(j, c, h, vc)
            fh.write(",".join(fmt(v) for v in xyz) + "\n")


def print_frozen():
    vc = standard_vc()
    print("# viewing conditions: white=(95.047,100,108.883) yb=20 la=318.31 average")
    for name in ("d", "f_l", "n", "z", "n_bb", "a_w"):
        print("%s = %r" % (name, getattr(vc, name)))
    print("rgb_w = %r" % (vc.rgb_w,))
    print("d_rgb = %r" % (vc.d_rgb,))
    print()
    r = forward((19.01, 20.0, 21.78), vc)
    print("# forward (19.01, 20.00, 21.78)")
    for k in ("J", "C", "h", "Q", "M", "s", "H", "H_c"):
        print("%s = %r" % (k, r[k]))
    print()
    print("# assorted")
    print("postadapt(100, 1) = %r" % postadapt(100.0, 1.0))
    print("eccentricity(0) = %r" % eccentricity(0.0))
    print("adapting_luminance(1000, 18, 100) = %r" % ((1000.0 / math.pi) * (18.0 / 100.0)))
    print("hue_quadrature(0) = %r" % (hue_quadrature(0.0),))
    print("forward zero H = %r" % forward((0.0, 0.0, 0.0), vc)["H"])
    dim = viewing_conditions(STANDARD_WHITE, STANDARD_YB, STANDARD_LA, SURROUNDS["dim"])
    print("dim a_w = %r" % dim.a_w)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--golden-dir", default=None, help="write golden fixtures here")
    ap.add_argument("--print-frozen", action="store_true", help="print frozen test constants")
    args = ap.parse_args()
    if args.golden_dir:
        write_goldens(args.golden_dir)
    if args.print_frozen or not args.golden_dir:
        print_frozen()


if __name__ == "__main__":
    main()
