"""Branch-level combinatorics: sequences, semigroups, contacts.

A branch with characteristic exponents (b0; b1, ..., bg) determines the
multiplicity sequence of its infinitely near points by a subtractive
Euclidean walk, its value semigroup by a closed recursion, and its
intersection number with another branch by summing products of
multiplicities over the points they share.
"""

from curvejump import (
    CharExponents,
    branch_intersection,
    multiplicity_sequence,
    puiseux_branches,
    semigroup,
)

for beta in [(2, 3), (3, 4), (4, 6, 7), (6, 9, 22)]:
    c = CharExponents(beta)
    seq = multiplicity_sequence(c)
    pretty = ", ".join(
        f"{e.mult}{'' if e.extra is None else f' (satellite -> p{e.extra})'}"
        for e in seq
    )
    print(f"branch {c}:")
    print(f"  multiplicity sequence: {pretty}")
    print(f"  value semigroup:       {semigroup(c)}")
    delta = sum(e.mult * (e.mult - 1) for e in seq) // 2
    print(f"  delta invariant:       {delta} (= gap count of the semigroup)")

print("\nintersections through shared points:")
a, b = CharExponents((2, 3)), CharExponents((2, 3))
print(f"  two ordinary cusps, transverse (share the origin only): "
      f"{branch_intersection(a, b, 1)}")
print(f"  two ordinary cusps sharing their whole cluster and two more "
      f"free points: {branch_intersection(a, b, 5)}")

print("\nthe frontend recovers all of this from a polynomial, including")
print("contacts (shared point counts) between the branches it finds:")
for text in ["(y^2-x^3)*(y^2-x^3-x^4)", "y^4 - 2*x^6", "x*(x^2-y^3)*(x-y^2)"]:
    print(f"  {text}:")
    for br in puiseux_branches(text):
        print(f"    {br.name}: {br.char}, coefficient {br.coefficient}, "
              f"conjugacy class size {br.class_size}, contacts {br.contacts}")
