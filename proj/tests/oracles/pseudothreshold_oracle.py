#!/usr/bin/env python3
"""Independent pseudothreshold oracle using sympy exact polynomials.

The fixed point is the smallest real root of f(p) - p in (0, 0.5].
"""
from itertools import product

import sympy as sp

p = sp.symbols("p")


def perfect(n, t):
    return sp.expand(1 - sum(sp.binomial(n, i) * p**i * (1 - p) ** (n - i) for i in range(t + 1)))


REP_PRINTED = sp.expand(1 - (1 - p) ** 3 - 3 * (1 - p) ** 2 * p - sp.Rational(2, 9) * (1 - p) * p**2)

LISTED = ["III", "XII", "IXI", "IIX", "ZII", "IZI", "IIZ", "YII", "IYI", "IIY",
          "XXI", "IXX", "XIX", "ZZI", "IZZ", "ZIZ"]


def from_set(n, patterns):
    total = 0
    for pat in patterns:
        w = sum(ch != "I" for ch in pat)
        total += (p / 3) ** w * (1 - p) ** (n - w)
    return sp.expand(1 - total)


def threshold(f):
    g = sp.Poly(sp.expand(f - p), p)
    roots = [r for r in g.nroots(n=30, maxsteps=500) if abs(sp.im(r)) < 1e-20 and 1e-12 < sp.re(r) <= 0.5]
    return min(sp.re(r) for r in roots) if roots else None


FIVE, FOUR = perfect(5, 1), perfect(4, 1)
POLY = {"five13": FIVE, "four131": FOUR, "rep3132": REP_PRINTED}

if __name__ == "__main__":
    for a, b in [("five13", "rep3132"), ("rep3132", "five13"), ("five13", "four131"), ("four131", "five13")]:
        print(f"compose({a},{b}) = {threshold(POLY[a].subs(p, POLY[b]))}")
    for name, f in POLY.items():
        print(f"{name}: {threshold(f)}  self-composed: {threshold(f.subs(p, f))}")
    print("five13 coeffs:", sp.Poly(FIVE, p).all_coeffs()[::-1])
    print("rep3132 coeffs:", sp.Poly(REP_PRINTED, p).all_coeffs()[::-1])
    print("listed-set poly:", sp.Poly(from_set(3, LISTED), p).all_coeffs()[::-1])
    c = sp.Poly(FIVE.subs(p, REP_PRINTED), p).all_coeffs()[::-1]
    print("five13(rep3132) degree", len(c) - 1, "p^1..p^3:", c[1:4])
    print("five13 at 1/2:", FIVE.subs(p, sp.Rational(1, 2)))
    upto = ["".join(t) for t in product("IXYZ", repeat=3) if sum(ch != "I" for ch in t) <= 1]
    print("weight<=1 set matches perfect(3,1):", sp.expand(from_set(3, upto) - perfect(3, 1)) == 0)
