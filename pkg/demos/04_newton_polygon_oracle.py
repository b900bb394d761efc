"""The independent cross-check: monomial multiplier ideals from the polygon.

For a polynomial nondegenerate with respect to its Newton polygon, the
multiplier ideals below 1 are monomial, and the monomial x^a y^b enters
when (a+1, b+1) crosses into the scaled polyhedron.  This gives the jump
set below 1 with no resolution at all, which is exactly what makes it a
trustworthy check of the blowup pipeline.
"""

from fractions import Fraction
from math import gcd

from curvejump import (
    jumping_numbers,
    monomial_threshold,
    nondegenerate,
    oracle_jumping_numbers,
    parse,
    polygon,
    resolve,
    to_diagram,
)

JUST_BELOW_ONE = Fraction(10**9 - 1, 10**9)

f = parse("(x^3-y^2)*(x^2-y^3)")
np_ = polygon(f)
print("polygon of (x^3 - y^2)(x^2 - y^3):")
print(f"  compact edges (p, q, c) with edge on p x + q y = c: {np_.edges}")
print(f"  nondegenerate: {nondegenerate(f)}")
print("  monomial entry thresholds:")
for a, b in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)]:
    print(f"    x^{a} y^{b}: {monomial_threshold(np_, a, b)}")

print("\noracle vs engine on the binomial family x^p - y^q:")
for p in range(2, 10):
    for q in range(p + 1, 10):
        if gcd(p, q) != 1:
            continue
        text = f"x^{p} - y^{q}"
        oracle = oracle_jumping_numbers(parse(text), JUST_BELOW_ONE)
        engine = [
            v for v in jumping_numbers(resolve(to_diagram(text))).jumping_values()
            if v < 1
        ]
        mark = "ok" if oracle == engine else "MISMATCH"
        print(f"  {text:>11}: {len(oracle):>2} jumps below 1 ... {mark}")

print("\ndegenerate input is refused (the monomial description fails there):")
try:
    oracle_jumping_numbers(parse("(x+y)^2"), Fraction(1, 2))
except Exception as exc:
    print(f"  {type(exc).__name__}: {exc}")
