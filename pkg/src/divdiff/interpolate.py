"""Split-form polynomial interpolation.

One family of evaluators, parameterized by a split index ``r``: the first
``r`` nodes contribute classical Newton terms, the remaining ``n - r + 1``
nodes enter through a Lagrange-style sum of prefix-extended divided
differences.  ``r = n`` is Newton's form, ``r = 0`` is Lagrange's; every
``r`` evaluates the same interpolating polynomial.

Evenly spaced specializations work in the dimensionless position variable
``s`` (node i sits at position i), so results are independent of the grid
spacing.  The tail of the split form can also be replaced by a fitted
low-degree polynomial (:func:`fit_tail` / :func:`interpolate_with_tail`),
which keeps a short Newton prefix while modelling everything beyond it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .counting import Counted, OpCounts
from .samples import SampleSet
from .tables import _dd_over, build_new_table

CENTRAL_VARIANTS = ("new_forward", "new_backward", "stirling", "bessel",
                    "everett", "steffensen")


# ---------------------------------------------------------------------------
# the general split form

def interpolate_general(samples: SampleSet, r: int, x, tally=None):
    """Interpolating-polynomial value with an r-term Newton prefix.

    Runs the fixed-prefix table for columns 1..r, then evaluates prefix
    terms and the suffix sum term by term.  With a tally the arithmetic on
    data is charged operation by operation; the closed forms in
    :func:`count_ops` describe the interior-r cost of exactly this path.
    """
    n = samples.n
    if not 0 <= r <= n:
        raise ValueError(f"r={r} out of range 0..{n}")
    xs = list(samples.nodes)
    fs = list(samples.values)
    if tally is not None:
        xs = [Counted(v, tally) for v in xs]
        fs = [Counted(v, tally) for v in fs]
        x = Counted(x, tally)

    # fixed-prefix table, columns 1..r
    cols = [fs]
    for i in range(1, r + 1):
        prev = cols[i - 1]
        head = prev[0]
        cols.append([(prev[j + 1] - head) / (xs[i + j] - xs[i - 1])
                     for j in range(n - i + 1)])

    if r:
        prefix = fs[0]
        for i in range(1, r):
            prod = x - xs[0]
            for j in range(1, i):
                prod = prod * (x - xs[j])
            prefix = prefix + cols[i][0] * prod
        prefix_product = x - xs[0]
        for i in range(1, r):
            prefix_product = prefix_product * (x - xs[i])

    tail = None
    for i in range(r, n + 1):
        coeff = cols[r][i - r] if r else fs[i]
        others = [j for j in range(r, n + 1) if j != i]
        if others:
            num = x - xs[others[0]]
            den = xs[i] - xs[others[0]]
            for j in others[1:]:
                num = num * (x - xs[j])
                den = den * (xs[i] - xs[j])
            term = coeff * (num / den)
        else:
            term = coeff
        tail = term if tail is None else tail + term

    out = tail if not r else prefix + prefix_product * tail
    return out.value if tally is not None else out


def interpolate_barycentric(samples: SampleSet, r: int, x):
    """Same polynomial as :func:`interpolate_general`, suffix sum in
    barycentric ratio form.

    At a suffix node the ratio degenerates; the nodal limit (prefix plus
    prefix product times the stored divided difference) is returned, which
    reproduces the sample value.
    """
    n = samples.n
    if not 0 <= r <= n:
        raise ValueError(f"r={r} out of range 0..{n}")
    xs = samples.nodes
    table = build_new_table(samples, r)
    coeff = table.columns[r]

    prefix = samples.values[0] if r else 0
    prod = 1
    for i in range(1, r):
        prod = prod * (x - xs[i - 1])
        prefix = prefix + table.columns[i][0] * prod
    prefix_product = 1
    for i in range(r):
        prefix_product = prefix_product * (x - xs[i])

    weights = []
    for i in range(r, n + 1):
        p = 1
        for j in range(r, n + 1):
            if j != i:
                p = p * (xs[i] - xs[j])
        weights.append(1 / p)

    for i in range(r, n + 1):
        if x == xs[i]:
            return prefix + prefix_product * coeff[i - r]
    num = 0
    den = 0
    for i in range(r, n + 1):
        c = weights[i - r] / (x - xs[i])
        num = num + coeff[i - r] * c
        den = den + c
    return prefix + prefix_product * (num / den)


# ---------------------------------------------------------------------------
# evenly spaced forms (position variable s; node i at position i)

def _falling(s, k):
    p = 1
    for j in range(k):
        p = p * (s - j)
    return p


def _rising(s, k):
    p = 1
    for j in range(k):
        p = p * (s + j)
    return p


def _fdiff(values, base, order):
    """Forward difference of the given order anchored at index ``base``."""
    acc = 0
    for j in range(order + 1):
        acc = acc + (-1) ** (order - j) * math.comb(order, j) * values[base + j]
    return acc


def interpolate_forward_even(values, r: int, s):
    """Value at position ``s`` from samples at positions 0..n.

    Newton-forward differences up to order r-1, then the fixed-prefix tail
    over integer arguments scaled by the falling factorial of s.
    """
    vals = list(values)
    n = len(vals) - 1
    if not 0 <= r <= n:
        raise ValueError(f"r={r} out of range 0..{n}")
    if r == 0:
        return _lagrange_positions(list(range(n + 1)), vals, s)
    acc = vals[0]
    for i in range(1, r):
        acc = acc + _fdiff(vals, 0, i) * _falling(s, i) / math.factorial(i)
    tail = 0
    prefix_pos = list(range(r))
    prefix_vals = vals[:r]
    for i in range(r, n + 1):
        coeff = _dd_over([i] + prefix_pos, [vals[i]] + prefix_vals)
        prod = 1
        for j in range(r, n + 1):
            if j != i:
                prod = prod * (s - j) / (i - j)
        tail = tail + coeff * prod
    return acc + _falling(s, r) * tail


def interpolate_backward_even(values, r: int, s):
    """Value at position ``s`` from samples at positions 0, -1, ..., -n.

    ``values[k]`` is the sample at position ``-k``.  Backward differences
    carry rising factorials of s; the tail mirrors the forward form with
    the sign of the suffix product folded into ``(-1)^(n-r)``.
    """
    vals = list(values)
    n = len(vals) - 1
    if not 0 <= r <= n:
        raise ValueError(f"r={r} out of range 0..{n}")
    pos = [-k for k in range(n + 1)]
    if r == 0:
        return _lagrange_positions(pos, vals, s)
    acc = vals[0]
    for i in range(1, r):
        # backward difference of order i at the newest sample
        bd = _fdiff(vals[::-1], n - i, i)
        acc = acc + bd * _rising(s, i) / math.factorial(i)
    tail = 0
    prefix_pos = pos[:r]
    prefix_vals = vals[:r]
    for i in range(r, n + 1):
        coeff = _dd_over([-i] + prefix_pos, [vals[i]] + prefix_vals)
        prod = 1
        for j in range(r, n + 1):
            if j != i:
                prod = prod * (s + j) / (i - j)
        tail = tail + coeff * prod
    return acc + _rising(s, r) * (-1) ** (n - r) * tail


def _lagrange_positions(pos, vals, s):
    total = 0
    for i, pi in enumerate(pos):
        p = vals[i]
        for pj in pos:
            if pj != pi:
                p = p * (s - pj) / (pi - pj)
        total = total + p
    return total


def _central_tail(by_pos, m, n, r, s):
    """Suffix contribution beyond the symmetric prefix -r..r."""
    prefix = [0]
    for k in range(1, r + 1):
        prefix += [-k, k]
    rest = [i for i in range(-m, n + 1) if not -r <= i <= r]
    total = 0
    for i in rest:
        coeff = _dd_over([i] + prefix, [by_pos[i]] + [by_pos[p] for p in prefix])
        prod = 1
        for j in rest:
            if j != i:
                prod = prod * (s - j) / (i - j)
        total = total + coeff * prod
    pp = 1
    for j in range(-r, r + 1):
        pp = pp * (s - j)
    return pp * total


def interpolate_central(values, m: int, r: int, s, variant: str = "new_forward"):
    """Two-sided even-grid interpolation at position ``s``.

    ``values`` run over positions -m..n (``values[k]`` at ``k - m``).  The
    symmetric prefix through order 2r uses central differences arranged per
    ``variant``; all variants evaluate the same interpolating polynomial.
    The bessel variant carries the odd-order balancing term with the same
    factorial-power factor as its final even term, which is exactly what
    folds its half-step average back onto the symmetric node set.
    """
    if variant not in CENTRAL_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    vals = list(values)
    n = len(vals) - 1 - m
    if n < 0:
        raise ValueError("m exceeds the sample count")
    need_right = r + 1 if variant == "bessel" else r
    if r < 0 or r > m or need_right > n:
        raise ValueError("insufficient two-sided range for requested r")
    v = {i - m: vals[i] for i in range(len(vals))}
    fact = math.factorial

    def d(base, order):
        acc = 0
        for j in range(order + 1):
            acc = acc + (-1) ** (order - j) * math.comb(order, j) * v[base + j]
        return acc

    if variant == "new_forward":
        acc = v[0]
        for j in range(1, r + 1):
            acc = acc + d(-(j - 1), 2 * j - 1) * _falling(s + j - 1, 2 * j - 1) / fact(2 * j - 1)
            acc = acc + d(-j, 2 * j) * _falling(s + j - 1, 2 * j) / fact(2 * j)
    elif variant == "new_backward":
        acc = v[0]
        for j in range(1, r + 1):
            acc = acc + d(-j, 2 * j - 1) * _falling(s + j - 1, 2 * j - 1) / fact(2 * j - 1)
            acc = acc + d(-j, 2 * j) * _falling(s + j, 2 * j) / fact(2 * j)
    elif variant == "stirling":
        acc = v[0]
        for j in range(1, r + 1):
            mean_odd = (d(-(j - 1), 2 * j - 1) + d(-j, 2 * j - 1)) / 2
            acc = acc + mean_odd * _falling(s + j - 1, 2 * j - 1) / fact(2 * j - 1)
            acc = acc + d(-j, 2 * j) * s * _falling(s + j - 1, 2 * j - 1) / fact(2 * j)
    elif variant == "bessel":
        half = Fraction(1, 2) if isinstance(s, (Fraction, int)) else 0.5
        acc = (v[0] + v[1]) / 2
        for j in range(1, r + 1):
            if j == 1:
                acc = acc + (s - half) * d(0, 1)
            else:
                acc = acc + (s - half) * _falling(s + j - 2, 2 * j - 2) \
                    * d(-(j - 1), 2 * j - 1) / fact(2 * j - 1)
            mean_even = (d(-j, 2 * j) + d(-(j - 1), 2 * j)) / 2
            acc = acc + mean_even * _falling(s + j - 1, 2 * j) / fact(2 * j)
        acc = acc - _falling(s + r - 1, 2 * r) * d(-r, 2 * r + 1) / (2 * fact(2 * r))
    elif variant == "everett":
        t = 1 - s
        acc = 0
        for j in range(r):
            acc = acc + d(-j, 2 * j) * _falling(t + j, 2 * j + 1) / fact(2 * j + 1)
            acc = acc + d(-j + 1, 2 * j) * _falling(s + j, 2 * j + 1) / fact(2 * j + 1)
        acc = acc + d(-r, 2 * r) * _falling(s + r - 1, 2 * r) / fact(2 * r)
    else:  # steffensen
        acc = v[0]
        for j in range(1, r + 1):
            acc = acc + d(-(j - 1), 2 * j - 1) * _falling(s + j, 2 * j) / fact(2 * j)
            acc = acc - d(-j, 2 * j - 1) * _falling(s + j - 1, 2 * j) / fact(2 * j)

    return acc + _central_tail(v, m, n, r, s)


# ---------------------------------------------------------------------------
# fitted-tail replacement

@dataclass(frozen=True)
class TailModel:
    """Low-degree stand-in for the order-r divided-difference function."""

    coefficients: tuple  # ascending degree
    fit_order: int
    basis: str = "x"
    residual: float = 0.0

    def __call__(self, u):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * u + c
        return acc

    def to_json_dict(self):
        return {"r": self.fit_order, "basis": self.basis,
                "coeffs": list(self.coefficients)}

    def to_json(self, **kw):
        return json.dumps(self.to_json_dict(), **kw)


def fit_tail(samples: SampleSet, r: int, model_degree: int,
             basis: str = "x") -> TailModel:
    """Least-squares polynomial fit to the order-r fixed-prefix column.

    The regressor for column entry j is the trailing argument ``x_{r+j}``
    itself (pass position-coordinate samples to fit in the position
    variable; record that choice via ``basis``).  Ordinary unweighted
    least squares over all available entries.
    """
    n = samples.n
    if not 1 <= r <= n:
        raise ValueError(f"r={r} out of range 1..{n}")
    if n - r + 1 < model_degree + 1:
        raise ValueError("not enough divided differences for the requested degree")
    table = build_new_table(samples, r)
    ys = [float(v) for v in table.columns[r]]
    xs = [float(samples.nodes[r + j]) for j in range(len(ys))]
    coeffs = np.polyfit(xs, ys, model_degree)[::-1]
    model = TailModel(tuple(float(c) for c in coeffs), r, basis)
    resid = sum((model(u) - y) ** 2 for u, y in zip(xs, ys))
    return TailModel(model.coefficients, r, basis, float(resid))


def tail_model_from_json(text_or_dict) -> TailModel:
    d = text_or_dict if isinstance(text_or_dict, dict) else json.loads(text_or_dict)
    return TailModel(tuple(d["coeffs"]), d["r"], d.get("basis", "x"))


def interpolate_with_tail(samples: SampleSet, r: int, tail: TailModel, x):
    """Newton prefix of order r-1 plus prefix product times the tail model.

    Evaluate in the same coordinate the tail was fitted in: for a
    position-basis model, ``samples`` must be in position coordinates and
    ``x`` is the position.
    """
    n = samples.n
    if not 1 <= r <= n:
        raise ValueError(f"r={r} out of range 1..{n}")
    xs = samples.nodes
    acc = samples.values[0]
    prod = 1
    for i in range(1, r):
        prod = prod * (x - xs[i - 1])
        acc = acc + _dd_over(xs[:i + 1], samples.values[:i + 1]) * prod
    pp = 1
    for i in range(r):
        pp = pp * (x - xs[i])
    return acc + pp * tail(x)


# ---------------------------------------------------------------------------
# closed-form operation counts for the split form

def count_ops(n: int, r: int) -> OpCounts:
    """Closed-form cost of one split-form evaluation (table included).

    Exact for 0 <= r < n; at r = n the true Newton-path cost differs by
    +1 multiplication / -1 division from these expressions because the
    suffix sum degenerates to a single bare coefficient.
    """
    if not 0 <= r <= n:
        raise ValueError(f"r={r} out of range 0..{n}")
    d = n - r
    return OpCounts(
        additions=n,
        subtractions=n * (n + 1) + d * (d + 1) + r * (r + 1) // 2,
        multiplications=(2 * d - 1) * (d + 1) + r * (r + 1) // 2,
        divisions=n * (n + 1) // 2 - d * (d + 1) // 2 + d + 1,
    )


def newton_op_counts(n: int) -> OpCounts:
    """Cost of the pure Newton path (r = n) under the same conventions."""
    return OpCounts(n, 3 * n * (n + 1) // 2, n * (n + 1) // 2, n * (n + 1) // 2)


def lagrange_op_counts(n: int) -> OpCounts:
    """Cost of the pure Lagrange path (r = 0) under the same conventions."""
    return OpCounts(n, 2 * n * (n + 1), (2 * n - 1) * (n + 1), n + 1)
