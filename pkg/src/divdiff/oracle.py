"""Independent brute-force references for correctness testing.

Everything here is deliberately structurally different from the main
evaluation paths: plain Lagrange sums with no shared work, symbolic
polynomial calculus over exact rationals, and a catalog of classical
weight sets stored verbatim.  Agreement with the optimized paths is then
evidence, not tautology.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .samples import SampleSet


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact rational coefficients, ascending degree."""

    coefficients: tuple

    def __init__(self, coefficients):
        coeffs = [Fraction(c) for c in coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative(self, k: int = 1) -> "RationalPoly":
        coeffs = list(self.coefficients)
        for _ in range(k):
            coeffs = [i * c for i, c in enumerate(coeffs)][1:] or [Fraction(0)]
        return RationalPoly(coeffs)

    def antiderivative(self) -> "RationalPoly":
        return RationalPoly([Fraction(0)] +
                            [c / (i + 1) for i, c in enumerate(self.coefficients)])

    def definite_integral(self, lo, hi) -> Fraction:
        anti = self.antiderivative()
        return anti(Fraction(hi)) - anti(Fraction(lo))

    def sample(self, nodes) -> SampleSet:
        return SampleSet(nodes, [self(x) for x in nodes])


def oracle_interpolate(samples: SampleSet, x):
    """Naive Lagrange sum, one unshared product per node.

    Exact with Fraction inputs; O(n^2) per point on purpose.
    """
    total = None
    for i, xi in enumerate(samples.nodes):
        term = samples.values[i]
        for j, xj in enumerate(samples.nodes):
            if j != i:
                term = term * (x - xj) / (xi - xj)
        total = term if total is None else total + term
    return total


def table5_function(x: float) -> float:
    """Reference test function exp(x)*(1+x) + x*sin(x)."""
    return math.exp(x) * (1.0 + x) + x * math.sin(x)


@dataclass(frozen=True)
class GoldenStencil:
    name: str
    kind: str  # "derivative" or "quadrature"
    offsets: tuple
    weights: tuple  # exact Fractions
    order: int      # derivative order; 0 for quadrature rules

    def apply(self, values, h):
        total = 0
        for w, v in zip(self.weights, values):
            total = total + w * v
        if self.kind == "derivative":
            return total / h ** self.order
        return total * h


_CATALOG = None


def known_stencils() -> dict:
    """Catalog of classical golden weight sets, keyed by name."""
    global _CATALOG
    if _CATALOG is None:
        text = resources.files("divdiff").joinpath(
            "data/golden_stencils.json").read_text()
        raw = json.loads(text)
        _CATALOG = {}
        for rec in raw["stencils"]:
            weights = tuple(Fraction(n, rec["den"]) for n in rec["num"])
            _CATALOG[rec["name"]] = GoldenStencil(
                rec["name"], rec["kind"], tuple(rec["offsets"]), weights,
                rec.get("t", 0))
    return dict(_CATALOG)
