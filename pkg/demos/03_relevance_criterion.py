"""Which exceptional divisors contribute jumping numbers: the valence rule.

An exceptional divisor contributes the number t exactly when minus the
rounded pullback meets it at least twice.  Whether ANY candidate works is
read off the dual graph alone: the divisor is relevant precisely when at
least three other components of the reduced total transform cross it, and
then 1 - 1/a already works.  The script shows both worked curves, the
subtlety at a log canonical threshold contributed only collectively, and a
random-germ spot check of the equivalence.
"""

import random
from fractions import Fraction

from curvejump import (
    candidates,
    contributes,
    contribution_report,
    jumping_numbers,
    relevant,
    resolve,
    to_diagram,
)

print("== the cusp x^4 = y^3 ==")
r = resolve(to_diagram("x^4 - y^3"))
for j, name in enumerate(r.exc_names):
    ok, witness = relevant(r, j)
    flag = f"relevant, contributes {witness}" if ok else "irrelevant"
    print(f"  {name}: valence {r.valence[j]} -> {flag}")
print("  candidates of E2 such as 5/8 and 7/8 all fail the criterion:")
print(f"    contributes(E2, 5/8) = {contributes(r, 2, Fraction(5, 8))}")
print(f"    contributes(E2, 7/8) = {contributes(r, 2, Fraction(7, 8))}")

print("\n== two transverse cusps (x^3 - y^2)(x^2 - y^3) ==")
r2 = resolve(to_diagram("(x^3-y^2)*(x^2-y^3)"))
rep = jumping_numbers(r2)
for row in rep.relevance:
    flag = f"relevant, contributes {row.witness}" if row.relevant else "irrelevant"
    print(f"  {row.name}: valence {row.valence} -> {flag}")
rec = contribution_report(r2, rep.lct)
print(f"  the log canonical threshold {rep.lct} is a jumping number whose")
print(f"  critical set is {set(rec.critical)}, yet no single divisor passes")
print(f"  the criterion there: the jump belongs to the trio collectively.")

print("\n== spot check on random germs ==")
import sys, pathlib
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))
from corpus import resolution_corpus

total = 0
for rr in resolution_corpus(11, 40):
    for j in range(rr.nexc()):
        some = any(contributes(rr, j, lam) for lam in candidates(rr, j, 1))
        assert some == (rr.valence[j] >= 3)
        total += 1
print(f"  valence >= 3 agreed with candidate contribution on {total} divisors.")
