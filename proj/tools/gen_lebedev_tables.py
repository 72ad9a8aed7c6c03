#!/usr/bin/env python3
"""Regenerates core/src/lebedev_tables.inc.

The node sets are the Lebedev-Laikov rules as distributed with
scipy.integrate.lebedev_rule (SciPy >= 1.15). Each rule is stored as one
representative (u >= v >= w >= 0) per octahedral orbit plus the orbit weight
normalized to a unit sphere area; the C++ side expands the orbits.
Rules containing negative weights (74, 230, 266) are skipped.
"""
import sys

import numpy as np
from scipy.integrate import lebedev_rule

AVAILABLE_DEGREES = [3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31, 35, 41, 47, 53, 59, 65, 71, 77, 83, 89, 95, 101, 107, 113, 119, 125, 131]
SUPPORTED = [6, 14, 26, 38, 50, 86, 110, 146, 170, 194, 302, 350, 434, 590, 770, 974, 1202, 1454, 1730, 2030, 2354, 2702, 3074,
             3470, 3890, 4334, 4802, 5294, 5810]


def orbits(n):
    for degree in AVAILABLE_DEGREES:
        x, w = lebedev_rule(degree)
        if x.shape[1] == n:
            break
    else:
        raise SystemExit(f"no rule with {n} nodes")
    w = w / (4.0 * np.pi)
    reps = {}
    for i in range(n):
        c = tuple(sorted(np.abs(x[:, i]), reverse=True))
        key = tuple(round(v, 12) for v in c)
        if key not in reps:
            reps[key] = (c, w[i], 0)
        c0, w0, k = reps[key]
        reps[key] = (c0, w0, k + 1)
    return degree, [v for _, v in sorted(reps.items(), reverse=True)]


def main(out):
    out.write("// Generated by tools/gen_lebedev_tables.py. Do not edit.\n")
    for n in SUPPORTED:
        degree, reps = orbits(n)
        out.write(f"static constexpr OrbitRep kLebedev{n}[] = {{\n")
        for (u, v, w), weight, count in reps:
            out.write(f"    {{{float(u)!r}, {float(v)!r}, {float(w)!r}, {float(weight)!r}, {count}}},\n")
        out.write("};\n")
    out.write("\nstatic constexpr RuleTable kRules[] = {\n")
    for n in SUPPORTED:
        degree, _ = orbits(n)
        out.write(f"    {{{n}, {degree}, kLebedev{n}}},\n")
    out.write("};\n")


if __name__ == "__main__":
    main(sys.stdout)
