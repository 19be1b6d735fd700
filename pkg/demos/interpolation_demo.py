"""The split-form interpolation family, from Newton (r=n) to Lagrange (r=0).

Run:  python demos/interpolation_demo.py
"""

import math

from divdiff import (SampleSet, count_ops, fit_tail, interpolate_central,
                     interpolate_forward_even, interpolate_general,
                     interpolate_with_tail, table5_function)

f = table5_function
nodes = [1.0 + 0.25 * i for i in range(9)]
samples = SampleSet(nodes, [f(x) for x in nodes])

print("Every split index r evaluates the same interpolating polynomial;")
print("only the arithmetic mix changes.\n")
x = 1.62
print(f"value at x = {x} for r = 0..8:")
for r in range(9):
    c = count_ops(8, r)
    print(f"  r={r}:  {interpolate_general(samples, r, x):.12f}   "
          f"(mul {c.multiplications:3d}, div {c.divisions:3d} per evaluation)")

print("\nThe r knob trades multiplications against divisions: Lagrange-like")
print("splits multiply more, Newton-like splits divide more.")

print("\n\nEvenly spaced forms work in the position variable s and match the")
print("raw-coordinate evaluation for any spacing:")
vals5 = [f(1.0 + 0.25 * i) for i in range(5)]
for xq in (0.85, 1.3, 2.1):
    s = (xq - 1.0) / 0.25
    approx = interpolate_forward_even(vals5, 4, s)
    print(f"  x={xq}: forward fit {approx:+.6f},  actual {f(xq):+.6f},"
          f"  error {approx - f(xq):+.2e}")

print("\nSymmetric variants all collapse to one polynomial (here degree 4")
print("on the five samples around x = 2):")
vals_c = [f(2.0 + 0.25 * p) for p in range(-2, 3)]
for variant in ("new_forward", "stirling", "everett", "steffensen"):
    got = interpolate_central(vals_c, 2, 2, 0.4, variant)
    print(f"  {variant:12s} {got:.12f}")

print("\n\nFitted-tail form: keep a short prefix and model everything beyond")
print("it with a least-squares line over the order-3 fixed-prefix column.")
pos_samples = SampleSet(range(9), [f(1.0 + 0.25 * i) for i in range(9)])
tail = fit_tail(pos_samples, 3, 1, basis="s")
print(f"fitted line: {tail.coefficients[1]:.6f} * s + {tail.coefficients[0]:.6f}")
print("errors of prefix+line vs the full degree-8 interpolant:")
for xq in (0.85, 1.5, 2.5, 3.15):
    s = (xq - 1.0) / 0.25
    short = interpolate_with_tail(pos_samples, 3, tail, s)
    print(f"  x={xq}: short form {short - f(xq):+.2e},  "
          f"full {interpolate_general(samples, 4, xq) - f(xq):+.2e}")

print("\nThe three-term form stays usable across the whole span, unlike a")
print("plain order-2 Newton prefix:")
for xq in (0.85, 2.5, 3.15):
    s = (xq - 1.0) / 0.25
    prefix_only = (pos_samples.values[0]
                   + (f(1.25) - f(1.0)) * s
                   + (f(1.5) - 2 * f(1.25) + f(1.0)) / 2 * s * (s - 1))
    short = interpolate_with_tail(pos_samples, 3, tail, s)
    print(f"  x={xq}: prefix only {prefix_only - f(xq):+.2e},  "
          f"with tail {short - f(xq):+.2e}")
assert math.isclose(interpolate_general(samples, 0, x),
                    interpolate_general(samples, 8, x), rel_tol=1e-10)
