#!/usr/bin/env python3
"""Independent EA Hamming oracle: concatenated parameters and exact sphere sums.

Prints the values frozen into the C++ tests. Pure Python integers.
"""
from math import comb


def concat(o, i):
    no, ko, do, co = o
    ni, ki, di, ci = i
    if no % ki == 0:
        return (no * ni // ki, ko, (do * di) // ki, co + ci * no // ki)
    return (no * ni, ko * ki, do * di, co * ki + ci * no)


def sphere(n, t):
    return sum(3**i * comb(n, i) for i in range(t + 1))


def violates(code):
    n, k, d, c = code
    return sphere(n, (d - 1) // 2) > 2 ** (n - k + c)


FAMILIES = {
    "rep_odd": (1, 3, lambda n: (n, 1, n, n - 1)),
    "rep_even": (0, 4, lambda n: (n, 1, n - 1, n - 1)),
    "rep_odd_ext": (1, 3, lambda n: (n + 1, 1, n, n)),
    "rep_even_ext": (0, 4, lambda n: (n + 1, 1, n - 1, n)),
}
CONST = {"C1": (8, 1, 5, 1), "C2": (7, 1, 5, 2), "C4": (9, 1, 7, 4)}


def onset(fam, inner, hi=110, reverse=False):
    parity, lo, gen = FAMILIES[fam]
    ns = [n for n in range(lo, hi + 1) if n % 2 == parity]
    flags = [violates(concat(CONST[inner], gen(n)) if reverse else concat(gen(n), CONST[inner])) for n in ns]
    first = None
    for n, v in reversed(list(zip(ns, flags))):
        if not v:
            break
        first = n
    return first


if __name__ == "__main__":
    for fam, inner in [("rep_odd", "C1"), ("rep_even", "C1"), ("rep_odd", "C2"), ("rep_odd", "C4"),
                       ("rep_even", "C2"), ("rep_even", "C4"), ("rep_odd_ext", "C1"), ("rep_even_ext", "C1")]:
        print(f"onset {fam} > {inner}: {onset(fam, inner)}  reversed: {onset(fam, inner, reverse=True)}")
    for code in [(24, 1, 15, 5), (24, 1, 15, 17), (8, 1, 5, 1), (3, 1, 3, 2), (40, 1, 25, 9)]:
        n, k, d, c = code
        print(code, "S =", sphere(n, (d - 1) // 2), "B =", 2 ** (n - k + c))
    print("C1>rep_odd(3):", concat(CONST["C1"], (3, 1, 3, 2)))
    print("rep_odd(3)>C1:", concat((3, 1, 3, 2), CONST["C1"]))
    print("rep_even(10)>C1:", concat((10, 1, 9, 9), CONST["C1"]))
