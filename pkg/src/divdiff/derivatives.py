"""Arbitrary-order numerical differentiation.

Three routes to the same quantity:

* a recursive-coefficient solve at an off-node point x (the power sums of
  the reciprocal node distances feed a convolution recurrence for the
  bracket coefficients),
* grid specializations of that solve (one-sided, two-sided, symmetric),
  whose per-node weights :func:`stencil_weights` makes explicit, and
* a linear combination over all node subsets of fixed-order divided
  differences,

plus a truncated two-sided alternating series for smooth functions on an
infinite grid.  Grid coefficient sets are built in exact rational
arithmetic and only meet floats at the data boundary.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import Counted, OpCounts
from .samples import SampleSet
from .tables import _dd_over

_SUBSET_LIMIT = 10 ** 6


# ---------------------------------------------------------------------------
# off-node recursive path

def _basis_values(nodes, x):
    """Cardinal basis values L_i(x), products taken factor by factor."""
    out = []
    for i, xi in enumerate(nodes):
        num = None
        den = None
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            fn = x - xj
            fd = xi - xj
            num = fn if num is None else num * fn
            den = fd if den is None else den * fd
        out.append(1 if num is None else num / den)
    return out


def _rho_values(nodes, basis, x, kmax):
    """Power sums rho_k = sum_i L_i / (x_i - x)^k for k = 1..kmax.

    Each power is rebuilt from fresh differences; this is the costing
    convention the closed-form operation counts assume.
    """
    rho = [None]
    for k in range(1, kmax + 1):
        acc = None
        for i, xi in enumerate(nodes):
            pw = xi - x
            for _ in range(k - 1):
                pw = pw * (xi - x)
            term = basis[i] / pw
            acc = term if acc is None else acc + term
        rho.append(acc)
    return rho


def _convolved_coeffs(power_sums, t, one=1):
    """a_0 = 1, a_k = -(s_k a_0 + s_{k-1} a_1 + ... + s_1 a_{k-1})."""
    a = [one]
    for k in range(1, t + 1):
        acc = power_sums[k] * a[0]
        for m in range(1, k):
            acc = acc + power_sums[k - m] * a[m]
        a.append(-acc)
    return a


@dataclass(frozen=True)
class RhoSet:
    """rho_1..rho_k at a point; rho_0 is 1 by convention."""

    values: tuple

    def __getitem__(self, m):
        if m == 0:
            return 1
        return self.values[m - 1]


def rho_coeffs(samples: SampleSet, x, kmax: int) -> RhoSet:
    """Reciprocal-distance power sums at x (x must not be a node)."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    if any(x == xi for xi in samples.nodes):
        raise ValueError("rho undefined at node")
    basis = _basis_values(samples.nodes, x)
    rho = _rho_values(samples.nodes, basis, x, kmax)
    return RhoSet(tuple(rho[1:]))


def derivative_uneven(samples: SampleSet, x, t: int, fx=None, tally=None):
    """t-th derivative at off-node x from unevenly spaced samples.

    Exact for polynomial data of degree <= n.  Supply ``fx`` to use the
    known-value form (the final coefficient multiplies f(x) itself instead
    of its interpolated stand-in).  With a tally, operations on data are
    charged along the reference path whose interior cost is
    :func:`diff_op_counts`.
    """
    n = samples.n
    if not 1 <= t <= n:
        raise ValueError(f"t={t} out of range 1..{n}")
    if any(x == xi for xi in samples.nodes):
        raise ValueError(
            "x coincides with a node; use a grid formula or derivative_lincomb")
    xs = list(samples.nodes)
    fs = list(samples.values)
    one = 1
    if tally is not None:
        xs = [Counted(v, tally) for v in xs]
        fs = [Counted(v, tally) for v in fs]
        x = Counted(x, tally)
        one = Counted(1, tally)
        if fx is not None:
            fx = Counted(fx, tally)

    basis = _basis_values(xs, x)
    rho = _rho_values(xs, basis, x, t)
    a = _convolved_coeffs(rho, t, one)

    total = None
    for i in range(n + 1):
        inner = None
        for m in range(t):
            pw = xs[i] - x
            for _ in range(t - m - 1):
                pw = pw * (xs[i] - x)
            term = a[m] / pw
            inner = term if inner is None else inner + term
        if fx is None:
            inner = inner + a[t]
        contrib = inner * fs[i] * basis[i]
        total = contrib if total is None else total + contrib
    if fx is not None:
        total = total + a[t] * fx
    if tally is not None:
        total = total.value
    return total * math.factorial(t)


# ---------------------------------------------------------------------------
# grid coefficient sets (exact rational)

@functools.lru_cache(maxsize=None)
def _twosided_A(m: int, n: int):
    """Cardinal-basis values at the centre of a -m..n grid.

    Returns (A_neg, A_pos): A_neg[i] for the node at -i (i = 1..m),
    A_pos[i] for +i (i = 1..n).  Built by ratio recurrences, exactly.
    """
    pos = [None]
    if n:
        cur = Fraction(n, m + 1)
        pos.append(cur)
        for i in range(2, n + 1):
            cur = cur * Fraction(-(n - i + 1), m + i)
            pos.append(cur)
    neg = [None]
    if m:
        cur = Fraction(m, n + 1)
        neg.append(cur)
        for i in range(2, m + 1):
            cur = cur * Fraction(-(m - i + 1), n + i)
            neg.append(cur)
    return tuple(neg), tuple(pos)


@dataclass(frozen=True)
class ForwardCoeffs:
    """One-sided grid: alternating binomial power sums and their convolution."""

    n: int
    U: tuple      # U[k] for k = 1..t at index k-1
    a_hat: tuple  # a_hat[0..t]

    def u(self, k):
        return self.U[k - 1]


def forward_coeffs(n: int, t: int) -> ForwardCoeffs:
    U = [sum(Fraction((-1) ** (i - 1) * math.comb(n, i), i ** k)
             for i in range(1, n + 1)) for k in range(1, t + 1)]
    a = _convolved_coeffs([None] + U, t, Fraction(1))
    return ForwardCoeffs(n, tuple(U), tuple(a))


@dataclass(frozen=True)
class TwoSidedCoeffs:
    m: int
    n: int
    A_neg: tuple
    A_pos: tuple
    W: tuple
    a_hat: tuple


def twosided_coeffs(m: int, n: int, t: int) -> TwoSidedCoeffs:
    A_neg, A_pos = _twosided_A(m, n)
    W = []
    for k in range(1, t + 1):
        s = Fraction(0)
        for i in range(1, m + 1):
            s += (-1) ** k * A_neg[i] / Fraction(i ** k)
        for i in range(1, n + 1):
            s += A_pos[i] / Fraction(i ** k)
        W.append(s)
    a = _convolved_coeffs([None] + W, t, Fraction(1))
    return TwoSidedCoeffs(m, n, A_neg, A_pos, tuple(W), tuple(a))


@dataclass(frozen=True)
class CentralCoeffs:
    """Symmetric grid: odd power sums vanish, so only even terms survive."""

    n: int
    A: tuple        # A[i] for node pair +-i, i = 1..n
    V: tuple        # V[k] at index k//2 - 1, even k only
    a_tilde: tuple  # a_tilde[0..t], odd entries zero
    psi: int

    def v(self, k):
        return self.V[k // 2 - 1]


def central_coeffs(n: int, t: int) -> CentralCoeffs:
    _, A = _twosided_A(n, n)
    V = [sum(A[i] / Fraction(i ** k) for i in range(1, n + 1))
         for k in range(2, t + 1, 2)]
    a = [Fraction(1)]
    for k in range(1, t + 1):
        if k % 2:
            a.append(Fraction(0))
        else:
            acc = Fraction(0)
            for j in range(2, k + 1, 2):
                acc += V[j // 2 - 1] * a[k - j]
            a.append(-2 * acc)
    return CentralCoeffs(n, A, tuple(V), tuple(a), psi=t % 2)


def harmonic_number(n: int) -> Fraction:
    return sum(Fraction(1, i) for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# grid derivative evaluators

def forward_derivative(values, h, t: int):
    """t-th derivative at the leftmost node of an even grid.

    ``values`` are f at a, a+h, ..., a+nh; accuracy degrades like
    O(h^(n+1-t)).
    """
    vals = list(values)
    n = len(vals) - 1
    if not 1 <= t <= n:
        raise ValueError(f"t={t} out of range 1..{n}")
    co = forward_coeffs(n, t)
    a = co.a_hat
    total = a[t] * vals[0]
    for i in range(1, n + 1):
        bracket = sum(a[m] / Fraction(i ** (t - m)) for m in range(t))
        total = total + (-1) ** (i - 1) * math.comb(n, i) * bracket * vals[i]
    return total * math.factorial(t) / h ** t


def twosided_derivative(values, h, t: int, m: int):
    """t-th derivative at the node with ``m`` points to its left.

    ``values`` run over a-mh .. a+nh; reduces to the one-sided form at
    m = 0 and to the symmetric form at m = n.
    """
    vals = list(values)
    n = len(vals) - 1 - m
    if m < 0 or n < 0:
        raise ValueError("m out of range")
    if not 1 <= t <= m + n:
        raise ValueError(f"t={t} out of range 1..{m + n}")
    co = twosided_coeffs(m, n, t)
    a = co.a_hat
    total = a[t] * vals[m]
    for i in range(1, n + 1):
        bracket = sum(a[k] / Fraction(i ** (t - k)) for k in range(t))
        total = total + co.A_pos[i] * bracket * vals[m + i]
    for i in range(1, m + 1):
        bracket = sum((-1) ** (t - k) * a[k] / Fraction(i ** (t - k))
                      for k in range(t))
        total = total + co.A_neg[i] * bracket * vals[m - i]
    return total * math.factorial(t) / h ** t


def central_derivative(values, h, t: int):
    """t-th derivative at the centre of a symmetric grid a +- ih.

    Only the parity-matched combination of each node pair enters; for odd
    t the centre value drops out entirely.
    """
    vals = list(values)
    if len(vals) % 2 == 0:
        raise ValueError("need a symmetric sample with odd length")
    n = (len(vals) - 1) // 2
    if not 1 <= t <= 2 * n:
        raise ValueError(f"t={t} out of range 1..{2 * n}")
    co = central_coeffs(n, t)
    a = co.a_tilde
    psi = co.psi
    total = a[t] * vals[n] if t % 2 == 0 else 0
    for i in range(1, n + 1):
        pair = vals[n + i] + (-1) ** psi * vals[n - i]
        bracket = sum(a[k] / Fraction(i ** (t - k)) for k in range(0, t, 2))
        total = total + co.A[i] * bracket * pair
    return total * math.factorial(t) / h ** t


@dataclass(frozen=True)
class StencilWeights:
    """Dimensionless per-node weights: f^(t)(a) ~ sum(c_i f(a+ih)) / h^t."""

    offsets: tuple
    weights: tuple  # exact Fractions
    order: int      # derivative order t
    accuracy_order: int

    def apply(self, values, h):
        if len(values) != len(self.offsets):
            raise ValueError("value count does not match the stencil")
        total = 0
        for c, v in zip(self.weights, values):
            total = total + c * v
        return total / h ** self.order

    def as_floats(self):
        return [float(c) for c in self.weights]

    def common_denominator(self):
        den = 1
        for c in self.weights:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return [int(c * den) for c in self.weights], den

    def to_json_dict(self):
        num, den = self.common_denominator()
        return {"offsets": list(self.offsets), "num": num, "den": den,
                "t": self.order, "order": self.accuracy_order}


def stencil_weights(m: int, n: int, t: int) -> StencilWeights:
    """Exact weights of the two-sided grid formula, one per offset -m..n."""
    if m < 0 or n < 0 or not 1 <= t <= m + n:
        raise ValueError("need m, n >= 0 and 1 <= t <= m + n")
    co = twosided_coeffs(m, n, t)
    a = co.a_hat
    fact = math.factorial(t)
    w = {0: fact * a[t]}
    for i in range(1, n + 1):
        bracket = sum(a[k] / Fraction(i ** (t - k)) for k in range(t))
        w[i] = fact * co.A_pos[i] * bracket
    for i in range(1, m + 1):
        bracket = sum((-1) ** (t - k) * a[k] / Fraction(i ** (t - k))
                      for k in range(t))
        w[-i] = fact * co.A_neg[i] * bracket
    acc = m + n + 1 - t
    if m == n and (m + n + t) % 2 == 0:
        acc += 1  # symmetry cancels the next moment for free
    offsets = tuple(range(-m, n + 1))
    return StencilWeights(offsets, tuple(w[i] for i in offsets), t, acc)


# ---------------------------------------------------------------------------
# subset linear-combination path

def _subset_weight(nodes, x, subset, power):
    w = 1
    for j, xj in enumerate(nodes):
        if j in subset:
            continue
        num = (x - xj) ** power
        den = 1
        for z in subset:
            den = den * (nodes[z] - xj)
        w = w * num / den
    return w


def derivative_lincomb(samples: SampleSet, x, k: int, fx=None):
    """k-th derivative at x as a weighted sum of order-k divided differences.

    Without ``fx`` every (k+1)-node subset contributes its divided
    difference; with ``fx`` known, each k-node subset is extended by the
    point x itself.  Exact for polynomial data of degree <= n.
    """
    n = samples.n
    if fx is None:
        if not 1 <= k <= n:
            raise ValueError(f"k={k} out of range 1..{n}")
        size = k + 1
    else:
        if not 1 <= k <= n + 1:
            raise ValueError(f"k={k} out of range 1..{n + 1}")
        if any(x == xi for xi in samples.nodes):
            raise ValueError("x coincides with a node")
        size = k
    if math.comb(n + 1, size) > _SUBSET_LIMIT:
        raise ValueError("subset count exceeds the combinatorial guard")
    xs = samples.nodes
    fs = samples.values
    total = 0
    for subset in itertools.combinations(range(n + 1), size):
        sub_nodes = [xs[i] for i in subset]
        sub_vals = [fs[i] for i in subset]
        if fx is not None:
            sub_nodes.append(x)
            sub_vals.append(fx)
        dd = _dd_over(sub_nodes, sub_vals)
        total = total + dd * _subset_weight(xs, x, subset, size)
    return total * math.factorial(k)


def lincomb_weight_sum(nodes, x, k: int):
    """Sum of the known-value subset weights; identically 1."""
    nodes = list(nodes)
    total = 0
    for subset in itertools.combinations(range(len(nodes)), k):
        total = total + _subset_weight(nodes, x, subset, k)
    return total


def grid_lincomb_weight_sum(n: int, k: int):
    """Closed-form grid analog of the subset weight sum; identically 1.

    Weight of the index subset i_1 < ... < i_k of 1..n is the signed
    binomial product over the k-1 power of the index product, times the
    pairwise-difference products.
    """
    total = Fraction(0)
    for subset in itertools.combinations(range(1, n + 1), k):
        sign = (-1) ** (sum(subset) - k)
        num = 1
        prod = 1
        for z in subset:
            num *= math.comb(n, z)
            prod *= z
        pis = 1
        for z in subset:
            for w in subset:
                if w != z:
                    pis *= z - w
        total += Fraction(sign * num * pis, prod ** (k - 1))
    return total


# ---------------------------------------------------------------------------
# infinite-series path

@functools.lru_cache(maxsize=None)
def _zeta(m: int) -> float:
    # 64-term power sum with tail corrections; ample for m >= 2
    N = 64
    s = sum(i ** -m for i in range(1, N))
    s += N ** (1 - m) / (m - 1) + 0.5 * N ** -m + m * N ** (-m - 1) / 12.0
    s -= m * (m + 1) * (m + 2) * N ** (-m - 3) / 720.0
    return s


def alternating_zeta(m: int) -> float:
    """sigma_m = 1 - 2^-m + 3^-m - ...; sigma_2 is pi^2/12."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return (1.0 - 2.0 ** (1 - m)) * _zeta(m)


def series_derivative(sampler, a, h, k: int, terms: int):
    """k-th derivative at ``a`` from the alternating two-sided sample series.

    The series converges only conditionally; the last partial-sum term is
    halved (average of the final two partial sums), which damps the
    alternating tail so the truncation error shrinks with ``terms``.
    Lower-order derivatives on the bracketed side are resolved by recursion
    of the same formula (depth k // 2).  Requires 0 < |h| < 1 and a
    sampler whose derivatives stay bounded; otherwise the series is not
    usable and no convergence is claimed.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    if not 0 < abs(h) < 1:
        raise ValueError("need 0 < |h| < 1")
    psi = k % 2
    total = 0.0
    for i in range(1, terms + 1):
        term = (-1) ** (i - 1) * (sampler(a + i * h)
                                  + (-1) ** psi * sampler(a - i * h)) / i ** k
        if i == terms:
            term *= 0.5
        total += term
    j = 1
    while k - 2 * j >= psi:
        low = k - 2 * j
        d = sampler(a) if low == 0 else series_derivative(sampler, a, h, low, terms)
        total -= 2.0 * alternating_zeta(2 * j) * h ** low * d / math.factorial(low)
        j += 1
    return total * math.factorial(k) / h ** k


# ---------------------------------------------------------------------------
# closed-form operation counts for the recursive path

def diff_op_counts(n: int, k: int) -> OpCounts:
    """Cost of one off-node derivative evaluation (value unknown form)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    return OpCounts(
        additions=n * (2 * k + 1) + k * (k + 1) // 2,
        subtractions=(n + 1) * (2 * n + k * k + k),
        multiplications=2 * n * (n + 1) + (n + 1) * k * (k - 1) + k * (k + 1) // 2,
        divisions=(n + 1) * (2 * k + 1),
    )
