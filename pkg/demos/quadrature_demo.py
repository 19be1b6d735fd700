"""Quadrature weights for even, symmetric, and scattered nodes.

Run:  python demos/quadrature_demo.py
"""

import math
from fractions import Fraction

from divdiff import (SampleSet, central_quad_weights, even_quad_weights,
                     quad_composite, quad_uneven)

print("Closed even-grid rules, generated rather than tabulated:\n")
for n in range(1, 9):
    print(f"  n={n}:  {even_quad_weights(n).display()}")

print("\nSymmetric rules over -n..n coincide with the even rules on the")
print("same 2n+1 points:")
for n in (1, 2, 3):
    d = central_quad_weights(n).to_json_dict()
    print(f"  n={n}:  h/{d['weights_den']} * {d['weights_num']}")

print("\n\nComposite three-point rule on sin over [0, pi] (expected fourth")
print("order in the panel width):")
prev = None
for panels in (4, 8, 16, 32, 64):
    err = abs(quad_composite(math.sin, 0.0, math.pi, panels) - 2.0)
    line = f"  {panels:3d} panels: error {err:.3e}"
    if prev is not None:
        line += f"   observed order {math.log2(prev / err):.2f}"
    prev = err
    print(line)

print("\n\nScattered-node quadrature: integrate over a short step [x, x+h]")
print("anchored anywhere off the nodes.  Exact on polynomial data:")
nodes = [Fraction(1, 20), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4),
         Fraction(19, 20)]
samples = SampleSet(nodes, [t ** 4 for t in nodes])
x, h = Fraction(3, 10), Fraction(2, 5)
got = quad_uneven(samples, x, h)
want = ((x + h) ** 5 - x ** 5) / 5
print(f"  integral of x^4 over [{x}, {x + h}]: {got}  (exact {want})")

print("\nand serviceable on transcendental data near the hull:")
fnodes = [0.05, 0.25, 0.5, 0.75, 0.95]
fsamples = SampleSet(fnodes, [math.exp(t) for t in fnodes])
got = quad_uneven(fsamples, 0.3, 0.4)
print(f"  integral of exp over [0.3, 0.7]: {got:.10f}  "
      f"(exact {math.exp(0.7) - math.exp(0.3):.10f})")
