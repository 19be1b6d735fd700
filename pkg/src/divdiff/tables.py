"""Divided differences and the table schemes that organize them.

Four layouts are provided:

* :class:`TriangularTable` -- the classical sliding-window table where
  column ``i`` holds ``f[x_j .. x_{j+i}]``.
* :class:`NewDDTable` -- fixed-prefix layout: column ``i`` holds
  ``f[x_0 .. x_{i-1}, x_{i+j}]`` (a sliding *last* argument).
* :class:`CombinedTable` -- the two layouts stitched together, the part
  chosen per entry by the predicate ``j < r - i + 1``.
* :class:`IntegerDDTable` -- the combined layout over integer node
  positions, with plain forward differences in the sliding-window part.

Every entry of every scheme is checkable against
:func:`divided_difference`, which is the single recursive definition.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .samples import SampleSet


def _dd_over(nodes, values):
    # classical recursive table collapsed to its top entry
    cur = list(values)
    k = len(nodes)
    for order in range(1, k):
        nxt = []
        for j in range(k - order):
            den = nodes[j + order] - nodes[j]
            if den == 0:
                raise ValueError("coincident nodes")
            nxt.append((cur[j + 1] - cur[j]) / den)
        cur = nxt
    return cur[0]


def divided_difference(samples: SampleSet, indices):
    """Classical divided difference over the selected node indices.

    The result is symmetric in the indices; any order gives the same
    value (up to rounding in float mode, exactly with Fractions).
    """
    idx = list(indices)
    if not idx:
        raise ValueError("empty index list")
    if len(set(idx)) != len(idx):
        raise ValueError("coincident nodes")
    nodes = [samples.nodes[i] for i in idx]
    values = [samples.values[i] for i in idx]
    return _dd_over(nodes, values)


# ---------------------------------------------------------------------------
# table containers

class _TableBase:
    scheme = ""

    def to_json_dict(self):
        d = {
            "scheme": self.scheme,
            "r": self.r,
            "columns": [[_jsonable(v) for v in col] for col in self.columns],
        }
        xs = getattr(self, "nodes", None)
        if xs is not None:
            d["nodes"] = [_jsonable(v) for v in xs]
        return d

    def to_json(self, **kw):
        return json.dumps(self.to_json_dict(), **kw)

    def render_text(self, labels=None, fmt="%.10g"):
        return _render_staggered(self, labels, fmt)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


@dataclass(frozen=True)
class TriangularTable(_TableBase):
    """Sliding-window table: ``columns[i][j] = f[x_j .. x_{j+i}]``."""

    nodes: tuple
    columns: tuple  # columns[0] is the raw value row

    scheme = "newton"

    @property
    def r(self):
        return len(self.nodes) - 1

    def entry(self, i, j):
        return self.columns[i][j]


@dataclass(frozen=True)
class NewDDTable(_TableBase):
    """Fixed-prefix table: ``columns[i][j] = f[x_0 .. x_{i-1}, x_{i+j}]``."""

    nodes: tuple
    r: int
    columns: tuple

    scheme = "new"

    def entry(self, i, j):
        return self.columns[i][j]

    def prefix_coefficient(self, i):
        """``f[x_0 .. x_i]`` -- head of column i (column 0 head for i=0)."""
        return self.columns[i][0]


@dataclass(frozen=True)
class CombinedTable(_TableBase):
    """Sliding-window entries where ``j < r-i+1`` holds, fixed-prefix after."""

    nodes: tuple
    split: int
    columns: tuple

    scheme = "combined"

    @property
    def r(self):
        return self.split

    def entry(self, i, j):
        return self.columns[i][j]

    def part_of(self, i, j) -> str:
        return "newton" if j < self.split - i + 1 else "new"

    @property
    def newton_part(self):
        return [(i, j, v) for i, col in enumerate(self.columns) if i
                for j, v in enumerate(col) if self.part_of(i, j) == "newton"]

    @property
    def new_part(self):
        return [(i, j, v) for i, col in enumerate(self.columns) if i
                for j, v in enumerate(col) if self.part_of(i, j) == "new"]


@dataclass(frozen=True)
class IntegerDDTable(_TableBase):
    """Combined-layout table over integer node positions.

    In the sliding-window part the stored entry is the *plain* forward
    difference (the divided difference times ``i!`` -- unit spacing makes
    every denominator a factorial).  Fixed-prefix entries are true divided
    differences over their integer arguments.  ``column_heads[i]`` is the
    head entry normalized to a divided difference.

    A signed layout (``positions`` covering ``-m..n``) stores divided
    differences over the zigzag prefix ordering ``0, -1, 1, -2, 2, ...``
    in every column.
    """

    positions: tuple
    r: int
    columns: tuple
    signed: bool = False

    scheme = "integer"

    def entry(self, i, j):
        return self.columns[i][j]

    def part_of(self, i, j) -> str:
        if self.signed:
            return "new"
        return "newton" if j < self.r - i + 1 else "new"

    def entry_as_dd(self, i, j):
        """Entry normalized to a divided difference."""
        if i and self.part_of(i, j) == "newton":
            return self.columns[i][j] / math.factorial(i)
        return self.columns[i][j]

    @property
    def column_heads(self):
        return [self.entry_as_dd(i, 0) for i in range(len(self.columns))]

    def argument_indices(self, i, j):
        """Positions whose divided difference entry (i, j) represents."""
        if i == 0:
            return [self.positions[j]]
        if self.part_of(i, j) == "newton":
            return list(self.positions[j:j + i + 1])
        return list(self.positions[:i]) + [self.positions[i + j]]

    def to_json_dict(self):
        d = super().to_json_dict()
        d["positions"] = list(self.positions)
        return d


# ---------------------------------------------------------------------------
# builders

def build_newton_table(samples: SampleSet) -> TriangularTable:
    """Full sliding-window divided-difference table."""
    xs = samples.nodes
    cols = [tuple(samples.values)]
    for i in range(1, samples.n + 1):
        prev = cols[i - 1]
        col = []
        for j in range(samples.n - i + 1):
            den = xs[j + i] - xs[j]
            if den == 0:
                raise ValueError("coincident nodes")
            col.append((prev[j + 1] - prev[j]) / den)
        cols.append(tuple(col))
    return TriangularTable(xs, tuple(cols))


def _check_r(r, n):
    if not 0 <= r <= n:
        raise ValueError(f"r={r} out of range 0..{n}")


def build_new_table(samples: SampleSet, r: int) -> NewDDTable:
    """Fixed-prefix table with columns 1..r populated.

    Column ``i`` entry ``j`` is generated from the previous column by

        (column[i-1][j+1] - column[i-1][0]) / (x[i+j] - x[i-1])
    """
    _check_r(r, samples.n)
    xs = samples.nodes
    cols = [tuple(samples.values)]
    for i in range(1, r + 1):
        prev = cols[i - 1]
        head = prev[0]
        col = []
        for j in range(samples.n - i + 1):
            col.append((prev[j + 1] - head) / (xs[i + j] - xs[i - 1]))
        cols.append(tuple(col))
    return NewDDTable(xs, r, tuple(cols))


def build_combined_table(samples: SampleSet, r: int) -> CombinedTable:
    """All columns 1..n, each entry routed by the split predicate.

    At ``r = n`` every entry is sliding-window and the table coincides with
    :func:`build_newton_table`; at ``r = 0`` every entry is fixed-prefix.
    """
    _check_r(r, samples.n)
    xs = samples.nodes
    n = samples.n
    cols = [tuple(samples.values)]
    for i in range(1, n + 1):
        prev = cols[i - 1]
        col = []
        for j in range(n - i + 1):
            if j < r - i + 1:  # sliding-window part
                col.append((prev[j + 1] - prev[j]) / (xs[j + i] - xs[j]))
            else:  # fixed-prefix part
                col.append((prev[j + 1] - prev[0]) / (xs[i + j] - xs[i - 1]))
        cols.append(tuple(col))
    return CombinedTable(xs, r, tuple(cols))


def zigzag_positions(m: int, n: int):
    """0, -1, 1, -2, 2, ... clipped to the available two-sided range."""
    out = [0]
    for k in range(1, max(m, n) + 1):
        if k <= m:
            out.append(-k)
        if k <= n:
            out.append(k)
    return out


def build_integer_table(values, r: int, signed_range=None) -> IntegerDDTable:
    """Difference/divided-difference table over integer node positions.

    ``values`` are samples at positions ``0..n`` (or, with
    ``signed_range=(m, n)``, at ``-m..n`` listed left to right).  For the
    unsigned layout the sliding-window part stores plain forward
    differences; fixed-prefix entries divide by the true integer argument
    gap ``j + 1``, normalizing window heads by their factorial first.
    """
    vals = list(values)
    if signed_range is not None:
        m, n = signed_range
        if m + n + 1 != len(vals):
            raise ValueError("signed range does not match value count")
        _check_r(r, m + n)
        pos = zigzag_positions(m, n)
        by_pos = {p: vals[p + m] for p in range(-m, n + 1)}
        ordered_vals = [by_pos[p] for p in pos]
        cols = [tuple(ordered_vals)]
        total = m + n
        for i in range(1, total + 1):
            prev = cols[i - 1]
            head = prev[0]
            col = []
            for j in range(total - i + 1):
                col.append((prev[j + 1] - head) / (pos[i + j] - pos[i - 1]))
            cols.append(tuple(col))
        return IntegerDDTable(tuple(pos), r, tuple(cols), signed=True)

    n = len(vals) - 1
    _check_r(r, n)
    pos = tuple(range(n + 1))
    cols = [tuple(vals)]
    for i in range(1, n + 1):
        prev = cols[i - 1]
        col = []
        for j in range(n - i + 1):
            if j < r - i + 1:  # plain forward difference
                col.append(prev[j + 1] - prev[j])
            else:
                head = prev[0]
                if i - 1 and 0 < r - (i - 1) + 1:
                    # window-part head is a plain difference; the true
                    # integer-argument gap below needs its dd value
                    head = head / math.factorial(i - 1)
                col.append((prev[j + 1] - head) / (j + 1))
        cols.append(tuple(col))
    return IntegerDDTable(pos, r, tuple(cols), signed=False)


# ---------------------------------------------------------------------------
# extended divided-difference evaluation

def barycentric_suffix_weights(samples: SampleSet, r: int):
    """Weights ``w_i = prod_{j=r..n, j!=i} 1/(x_i - x_j)`` for i = r..n."""
    _check_r(r, samples.n)
    xs = samples.nodes
    ws = []
    for i in range(r, samples.n + 1):
        p = 1
        for j in range(r, samples.n + 1):
            if j != i:
                p = p * (xs[i] - xs[j])
        ws.append(1 / p)
    return ws


def extended_dd_eval(samples: SampleSet, r: int, x, barycentric: bool = False):
    """Value of the divided-difference function ``f[x, x_0..x_{r-1}]``.

    Interpolates the prefix-extended divided differences of order r over
    the suffix nodes; exact whenever the data come from a polynomial of
    degree <= n.  ``r = 0`` reduces to plain interpolation of f itself.
    When x coincides with a suffix node the stored nodal value is returned
    directly (the barycentric form falls back to the same value).
    """
    n = samples.n
    _check_r(r, n)
    table = build_new_table(samples, r)
    coeff = table.columns[r]  # f[x_0..x_{r-1}, x_{r+j}]
    xs = samples.nodes
    for i in range(r, n + 1):
        if x == xs[i]:
            return coeff[i - r]
    if barycentric:
        ws = barycentric_suffix_weights(samples, r)
        num = 0
        den = 0
        for i in range(r, n + 1):
            c = ws[i - r] / (x - xs[i])
            num = num + coeff[i - r] * c
            den = den + c
        return num / den
    total = 0
    for i in range(r, n + 1):
        p = coeff[i - r]
        for j in range(r, n + 1):
            if j != i:
                p = p * (x - xs[j]) / (xs[i] - xs[j])
        total = total + p
    return total


# ---------------------------------------------------------------------------
# serialization helpers

_SCHEMES = {
    "newton": TriangularTable,
    "new": NewDDTable,
    "combined": CombinedTable,
    "integer": IntegerDDTable,
}


def table_from_json(text_or_dict):
    """Rebuild a table container from its JSON form."""
    d = text_or_dict if isinstance(text_or_dict, dict) else json.loads(text_or_dict)
    scheme = d["scheme"]
    cols = tuple(tuple(_from_jsonable(v) for v in col) for col in d["columns"])
    nodes = tuple(_from_jsonable(v) for v in d.get("nodes", ()))
    if scheme == "newton":
        return TriangularTable(nodes, cols)
    if scheme == "new":
        return NewDDTable(nodes, d["r"], cols)
    if scheme == "combined":
        return CombinedTable(nodes, d["r"], cols)
    if scheme == "integer":
        pos = tuple(d.get("positions", ()))
        return IntegerDDTable(pos, d["r"], cols, signed=any(p < 0 for p in pos))
    raise ValueError(f"unknown scheme {scheme!r}")


def _from_jsonable(v):
    if isinstance(v, str):
        return Fraction(v)
    return v


def _render_staggered(table, labels, fmt):
    """Text layout with column ``i`` entry ``j`` on text row ``2j + i``.

    Mirrors the usual staggered presentation where an order-i entry sits
    between the rows of the nodes it couples.  Integer-table window heads
    are shown factorial-normalized, like their divided-difference meaning.
    """
    cols = table.columns
    ncols = len(cols)
    nrows = 2 * len(cols[0]) - 1

    def cell(v):
        if isinstance(v, Fraction):
            return str(v)
        return fmt % v

    grid = [["" for _ in range(ncols + 1)] for _ in range(nrows)]
    xs = getattr(table, "nodes", None) or getattr(table, "positions", None)
    for j in range(len(cols[0])):
        if xs:
            grid[2 * j][0] = cell(xs[j])
    for i in range(ncols):
        for j, v in enumerate(cols[i]):
            if i and isinstance(table, IntegerDDTable) and j == 0:
                v = table.entry_as_dd(i, 0)
            grid[2 * j + i][i + 1] = cell(v)
    if labels is None:
        labels = ["x", "y"] + [f"d{i}" for i in range(1, ncols)]
    widths = [max(len(labels[c]), max((len(row[c]) for row in grid), default=0))
              for c in range(ncols + 1)]
    lines = ["  ".join(lab.rjust(w) for lab, w in zip(labels, widths))]
    for row in grid:
        lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)))
    return "\n".join(line.rstrip() for line in lines)
