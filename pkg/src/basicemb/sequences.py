"""Diagnostics for completed arrays and the spike function W.

Series quantities are float64 and every report carries its truncation
depth and tolerance. W and the increments built from it are exact.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .decomp import gen_hard_instance, hard_layer, m_coord  # noqa: F401  (re-exported)
from .rational import as_rat
from .rook import is_array

GEOMETRIC = "geometric"
POWER = "power"
CUSTOM = "custom"


@dataclass(frozen=True)
class CompletedArrayGen:
    """Generator for a_n, n = start, start+1, ...

    Geometric: a_n = (2^-[(n+1)/2], 2^-[n/2]), n >= 1, exact.
    Power:     a_n = ([(n+1)/2]^-1/2, [n/2]^-1/2), n >= 2, float.
    Custom:    an explicit finite list.
    """

    family: str
    start: int = 1
    points: tuple = ()
    limit: tuple = (0, 0)

    def term(self, n):
        if self.family == GEOMETRIC:
            return (Fraction(1, 2 ** ((n + 1) // 2)), Fraction(1, 2 ** (n // 2)))
        if self.family == POWER:
            return (((n + 1) // 2) ** -0.5, (n // 2) ** -0.5)
        return self.points[n - self.start]

    def prefix(self, N):
        """The first N terms as (n, a_n) pairs."""
        if self.family == CUSTOM:
            N = min(N, len(self.points))
        return [(n, self.term(n)) for n in range(self.start, self.start + N)]

    @property
    def first_step_parity(self):
        # geometric: a_1, a_2 share x; power: a_2, a_3 share y
        return {GEOMETRIC: "x", POWER: "y"}.get(self.family)


def geometric_family():
    return CompletedArrayGen(GEOMETRIC, 1)


def power_family():
    return CompletedArrayGen(POWER, 2)


def custom_family(indexed_points):
    """Custom array from (index, (x, y)) pairs; indices must be consecutive."""
    items = sorted(indexed_points)
    if not items:
        raise ValueError("empty custom array")
    start = items[0][0]
    for k, (n, _) in enumerate(items):
        if n != start + k:
            raise ValueError(f"array indices must be consecutive; gap before {n}")
    pts = tuple(tuple(as_rat(c) for c in p) for _, p in items)
    return CompletedArrayGen(CUSTOM, start, pts, limit=None)


def validate_prefix(gen, N):
    """Does the first N-term prefix satisfy the array alternation rule?"""
    pts = [p for _, p in gen.prefix(N)]
    parity = gen.first_step_parity
    if parity is None:
        return is_array(pts, "y") or is_array(pts, "x")
    return is_array(pts, parity)


def harmonic_rule(n, a):
    return (-1) ** n / n


def geometric_rule(n, a):
    return 2.0 ** -n


def const_rule(c):
    def rule(n, a):
        return c
    return rule


@dataclass(frozen=True)
class SeriesReport:
    partials: tuple
    max_partial: float
    max_abs: float
    converged: bool
    diverges: bool
    terms: int
    threshold: float
    tol: float

    @property
    def verdict(self):
        if self.converged:
            return "converges"
        if self.diverges:
            return "diverges"
        return "inconclusive"


def alternating_sums(gen, f, N, threshold=3.0, tol=1e-6, tail_fraction=0.1):
    """Partial sums S_L of (-1)^n f(a_n) over the first N terms.

    ``converged`` means the last ``tail_fraction`` of partial sums lie
    within ``tol`` of each other (a Cauchy tail). ``diverges`` means no
    such tail and max |S_L| above ``threshold``.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    s = 0.0
    partials = []
    for n, a in gen.prefix(N):
        s += (-1) ** n * float(f(n, a))
        partials.append(s)
    tail = partials[-max(2, int(len(partials) * tail_fraction)):]
    converged = max(tail) - min(tail) < tol
    max_abs = max(abs(v) for v in partials)
    return SeriesReport(
        tuple(partials), max(partials), max_abs, converged,
        (not converged) and max_abs > threshold, len(partials), threshold, tol,
    )


def _norm(a):
    return math.hypot(float(a[0]), float(a[1]))


@dataclass(frozen=True)
class TailRatioReport:
    ratios: tuple  # (k, r_k)
    N: int
    remainder_bounds: tuple  # bound on the omitted relative tail beyond N, per k
    max_ratio: float

    @property
    def heuristic_verdict(self):
        """Labelled heuristic: compare the two halves of the k-range."""
        half = len(self.ratios) // 2
        if half == 0:
            return "heuristic: too few ratios"
        first = max(r for _, r in self.ratios[:half])
        if self.max_ratio <= 1.1 * first:
            return "heuristic: looks bounded"
        return "heuristic: looks unbounded"


def tail_ratio(gen, k_max, N):
    """r_k = (sum_{n=k}^{N} |a_n|) / |a_k| for start <= k <= k_max.

    Remainder bounds: for the geometric family |a_n| <= sqrt(5) 2^-n/2, so
    the omitted tail is at most sqrt(5) 2^-(N+1)/2 / (1 - 2^-1/2); the
    power family's tail diverges (bound = inf); custom arrays are finite.
    """
    if k_max >= gen.start + N - 1:
        raise ValueError("k_max must be below the last index")
    terms = gen.prefix(N)
    norms = [_norm(a) for _, a in terms]
    last = terms[-1][0]
    suffix = [0.0] * (len(norms) + 1)
    for i in range(len(norms) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + norms[i]
    if gen.family == GEOMETRIC:
        rem = math.sqrt(5) * 2 ** (-(last + 1) / 2) / (1 - 2 ** -0.5)
    elif gen.family == POWER:
        rem = math.inf
    else:
        rem = 0.0
    out, bounds = [], []
    for i, (k, _) in enumerate(terms):
        if k > k_max:
            break
        if norms[i] == 0:
            raise ZeroDivisionError(f"|a_{k}| = 0")
        out.append((k, suffix[i] / norms[i]))
        bounds.append(rem / norms[i])
    return TailRatioReport(tuple(out), N, tuple(bounds), max(r for _, r in out))


@dataclass(frozen=True)
class GeometricDecomposition:
    g: dict  # 2^-k -> value, plus 0
    h: dict
    residual: float
    worst_point: tuple
    depth: int
    tol: float
    remainder: float
    g_quotients: tuple  # (k, g(2^-k) / 2^-k)
    h_quotients: tuple


class GeometricDecompositionError(ArithmeticError):
    def __init__(self, report):
        super().__init__(
            f"residual {report.residual:.3e} >= tol {report.tol:.1e} at {report.worst_point}"
        )
        self.report = report


def geometric_decompose(f, depth, tol=1e-9):
    """g, h on the geometric completed array via truncated alternating tails.

    f is normalized by its value at (0, 0), which is then carried by g(0).
    g(2^-k) sums f(p_0) - f(p_1) + ... along the chain from (2^-k, 2^-k)
    towards the origin; h(2^-k) does the same from (2^-(k+1), 2^-k). Both
    chains stop at exponent ``depth``.
    """
    if depth < 2:
        raise ValueError("depth must be >= 2")
    f0 = float(f(0.0, 0.0))

    def fn(x, y):
        return float(f(x, y)) - f0

    def p2(e):
        return 2.0 ** -e

    g, h = {0.0: f0}, {0.0: 0.0}
    for k in range(depth):
        sg = sh = 0.0
        for j in range(depth - k):
            sg += fn(p2(k + j), p2(k + j)) - fn(p2(k + j + 1), p2(k + j))
            sh += fn(p2(k + j + 1), p2(k + j)) - fn(p2(k + j + 1), p2(k + j + 1))
        g[p2(k)] = sg + f0
        h[p2(k)] = sh
    remainder = abs(fn(p2(depth), p2(depth)))
    worst, res = None, 0.0
    pts = [(p2(k), p2(k)) for k in range(depth)] + [(p2(k + 1), p2(k)) for k in range(depth - 1)]
    for x, y in pts:
        r = abs(float(f(x, y)) - g[x] - h[y])
        if worst is None or r > res:
            worst, res = (x, y), r
    rep = GeometricDecomposition(
        g, h, res, worst, depth, tol, remainder,
        tuple((k, (g[p2(k)] - f0) / p2(k)) for k in range(depth)),
        tuple((k, h[p2(k)] / p2(k)) for k in range(depth)),
    )
    if res >= tol:
        raise GeometricDecompositionError(rep)
    return rep


def _spike(i):
    """(left end, apex, right end, height) of the i-th spike of w."""
    left = Fraction(1, 4 ** i)
    return left, left + Fraction(1, 4 ** (3 * i + 1)), left + Fraction(1, 4 ** (3 * i)), Fraction(2 ** (3 * i))


def _spike_area(i):
    return Fraction(1, 2 ** (3 * i + 1))


def _partial_spike(i, x):
    L, P, R, H = _spike(i)
    if x <= L:
        return Fraction(0)
    if x >= R:
        return _spike_area(i)
    if x <= P:
        return H * (x - L) ** 2 / (2 * (P - L))
    return _spike_area(i) - H * (R - x) ** 2 / (2 * (R - P))


def w_area(x):
    """Exact area under the spike function w on [0, x].

    w vanishes except for triangles over [4^-i, 4^-i + 4^-3i] with apex
    2^3i at 4^-i + 4^-3i-1 (i >= 1), of area 2^-(3i+1). All spikes left of
    x are summed in closed form.
    """
    x = as_rat(x)
    if x < 0 or x > 1:
        raise ValueError("x must lie in [0, 1]")
    if x == 0:
        return Fraction(0)
    total = Fraction(0)
    i = 1
    while True:
        L, _, R, _ = _spike(i)
        if R <= x:
            # spikes i, i+1, ... lie entirely in [0, x]: sum 2^-(3i+1) * 8/7
            return total + Fraction(2 ** 2, 7 * 2 ** (3 * i))
        total += _partial_spike(i, x)
        i += 1


@dataclass(frozen=True)
class IncrementReport:
    d: Fraction
    depth: int
    value: Fraction
    bound: float
    holds: bool
    tol: float


def cross_g_increment(d, depth, tol=1e-12):
    """sum_{k=0}^{depth} [W(4^-k-1 + d 4^-k) - W(4^-k-1)] against (4d)^(3/4) / 2."""
    d = as_rat(d)
    if not 0 < d < Fraction(1, 4):
        raise ValueError("d must lie in (0, 1/4)")
    total = Fraction(0)
    for k in range(depth + 1):
        base = Fraction(1, 4 ** (k + 1))
        total += w_area(base + d / 4 ** k) - w_area(base)
    bound = (4 * float(d)) ** 0.75 / 2
    return IncrementReport(d, depth, total, bound, float(total) >= bound - tol, tol)
