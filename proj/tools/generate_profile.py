#!/usr/bin/env python3
"""Emit the synthetic reference dolphin profile (data/profile_ref.csv).

Center-cut side outline on a 1 m chord: a thick rounded nose, the widest
section near 30% chord, a dorsal fin between 0.42 m and 0.59 m on the upper
contour and a thin peduncle running out to the fluke tip. The curves are
closed-form so the file is reproducible bit-for-bit.
"""
import argparse
import math

N_SAMPLES = 201


def half_thickness(x):
    # symmetric 4-digit-airfoil style thickness law, 22% thick
    tau = 0.22
    return 5.0 * tau * (0.2969 * math.sqrt(x) - 0.1260 * x - 0.3516 * x**2
                        + 0.2843 * x**3 - 0.1015 * x**4)


def camber(x):
    # slight downward sweep of the rostrum, rising peduncle
    return 0.012 * math.sin(math.pi * x) * (1.0 - 1.4 * x)


def dorsal_fin(x):
    if x <= 0.42 or x >= 0.59:
        return 0.0
    s = (x - 0.42) / 0.17
    # swept-back fin: fast rise, slower trailing edge
    return 0.055 * math.sin(math.pi * s**0.8) ** 2


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="data/profile_ref.csv")
    parser.add_argument("--header", default="include/dolphin/reference_profile_data.hpp",
                        help="C++ header embedding the same CSV text")
    args = parser.parse_args()
    lines = ["x_m,y_upper_m,y_lower_m"]
    for i in range(N_SAMPLES):
        x = i / (N_SAMPLES - 1)
        t = half_thickness(x)
        c = camber(x)
        lines.append(f"{x:.6f},{c + t + dorsal_fin(x):.9f},{c - t:.9f}")
    text = "\n".join(lines) + "\n"
    with open(args.out, "w", newline="\n") as f:
        f.write(text)
    with open(args.header, "w", newline="\n") as f:
        f.write("#pragma once\n\n")
        f.write("// Generated by tools/generate_profile.py; do not edit.\n\n")
        f.write("namespace dolphin {\n\n")
        f.write(f"inline constexpr int kReferenceProfileSamples = {N_SAMPLES};\n\n")
        f.write("inline constexpr char kReferenceProfileCsv[] = R\"csv(")
        f.write(text)
        f.write(")csv\";\n\n} // namespace dolphin\n")


if __name__ == "__main__":
    main()
