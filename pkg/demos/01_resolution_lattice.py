"""From a polynomial to the numerical lattice of its minimal resolution.

The running example is the unibranch quartic cusp x^4 = y^3: one singular
point whose embedded resolution takes four blowups.  The script prints the
infinitely near points with their proximities, the pullback and canonical
orders of the exceptional divisors, the intersection matrix, and the dual
graph in DOT form.
"""

from curvejump import dual_graph, resolve, to_diagram, to_dot

diagram = to_diagram("x^4 - y^3")

print("infinitely near points (id, parent, extra proximity):")
for p in diagram.points:
    kind = "satellite" if p.extra is not None else "free"
    print(f"  p{p.id}: parent={p.parent}, extra={p.extra}  ({kind}), "
          f"curve multiplicity {diagram.total_mult(p.id)}")

r = resolve(diagram)
print("\ndivisor   a (pullback order)   k (canonical order)   E^2   valence")
for j, name in enumerate(r.exc_names):
    print(f"  {name:<6}  {r.a_exc[j]:<19} {r.k_exc[j]:<21} "
          f"{r.matrix[j][j]:<5} {r.valence[j]}")

print("\nThe pullback of the curve is C + 3E0 + 4E1 + 8E2 + 12E3 and the")
print("relative canonical divisor is E0 + 2E1 + 4E2 + 6E3; each exceptional")
print("divisor meets the pullback trivially, which resolve() re-checks.")

print("\nfull intersection matrix (exceptional then strict components):")
for row in r.matrix:
    print("  " + " ".join(f"{v:>3}" for v in row))

print("\ndual graph:")
print(to_dot(dual_graph(diagram)))
