"""Jumping numbers through multiplier-ideal vectors and unloading.

At each candidate coefficient t the multiplier ideal is encoded by an
integer vector over the exceptional divisors, max(0, floor(t a_i) - k_i).
Two vectors cut the same ideal exactly when their antinef closures agree,
so the jumping numbers are the grid values where the closure steps.  The
script walks the cusp x^4 = y^3 through this machinery, then shows the
periodicity above 1.
"""

from fractions import Fraction

from curvejump import (
    antinef_closure,
    jumping_numbers,
    multiplier_vector,
    resolve,
    skoda_shift,
    to_diagram,
)

r = resolve(to_diagram("x^4 - y^3"))

print("the candidate 7/12 (from E3, a=12, k=6) is the log canonical threshold:")
at = multiplier_vector(r, Fraction(7, 12), "at")
left = multiplier_vector(r, Fraction(7, 12), "left-limit")
print(f"  vector at 7/12:        exceptional {at.exc}")
print(f"  vector just below:     exceptional {left.exc}")
print(f"  closure at 7/12:       {antinef_closure(r, at).exc}")
print(f"  closure just below:    {antinef_closure(r, left).exc}")
print("  the closures differ, so the ideal jumps at 7/12.\n")

print("the candidate 2/3 (from E0) does not jump: both closures agree:")
at = multiplier_vector(r, Fraction(2, 3), "at")
left = multiplier_vector(r, Fraction(2, 3), "left-limit")
print(f"  closure at 2/3:        {antinef_closure(r, at).exc}")
print(f"  closure just below:    {antinef_closure(r, left).exc}\n")

report = jumping_numbers(r)
print("all jumping numbers in (0, 1]:")
for rec in report.records:
    contrib = ", ".join(rec.contributing) or "none individually"
    print(f"  {rec.value}:  critical {set(rec.critical)}, contributed by {contrib}")

print("\nabove 1 the set repeats with period 1 (checked against a direct scan):")
rep2 = jumping_numbers(r, bound=2)
above = [v for v in rep2.jumping_values() if v > 1]
print(f"  jumps in (1, 2]: {[str(v) for v in above]}")
for lam in above:
    assert skoda_shift(report, lam)
print("  each one is a below-one jump shifted by an integer.")
