"""The 'Dare you to decompose!' game in dimension 2 and higher.

A.N. marks cells and writes numbers; V.I. must find one weight per
coordinate hyperplane so that every marked number is the sum of its
weights. In the plane V.I. wins exactly when the marked cells carry no
closed rook route. In general dimension the decision is linear algebra:
V.I. wins iff the only signed weighting of the cells with all axis
marginals zero is the zero weighting.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .rational import as_rat
from .rook import Finite, e_depth, e_trace, find_closed_array, point_set

VI = "VI"
AN = "AN"


def point_n(coords):
    return tuple(as_rat(c) for c in coords)


def point_set_n(points):
    pts = sorted({point_n(p) for p in points})
    if pts:
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise ValueError("points of mixed dimension")
        if d < 2:
            raise ValueError("dimension must be at least 2")
    return tuple(pts)


def _dim(pts, default=2):
    return len(pts[0]) if pts else default


@dataclass(frozen=True)
class MarginalKernel:
    dim: int
    points: tuple
    basis: tuple  # integer vectors indexed like ``points``

    @property
    def trivial(self):
        return not self.basis


@dataclass(frozen=True)
class GameVerdict:
    winner: str
    kind: str  # peeling | rook-route | scheme | kernel-vector
    certificate: object


@dataclass(frozen=True)
class CoordinateFunctions:
    funcs: tuple  # one dict value -> Fraction per axis

    def __call__(self, p):
        return sum((self.funcs[t][c] for t, c in enumerate(p)), Fraction(0))


@dataclass(frozen=True)
class KernelObstruction:
    points: tuple
    mu: tuple
    pairing: Fraction  # sum of mu(p) f(p), never zero


@dataclass(frozen=True)
class DecompositionScheme:
    """u = S f: coordinate-function values as linear forms in the cell values."""

    points: tuple
    columns: tuple  # (axis, value)
    matrix: tuple  # rows indexed by columns, entries by points

    def apply(self, values):
        f = [Fraction(values[p]) for p in self.points]
        u = [sum((a * b for a, b in zip(row, f) if a), Fraction(0)) for row in self.matrix]
        return _anchor(self.points, self.columns, u, len(self.points[0]))


def _columns(pts):
    d = _dim(pts)
    return tuple((t, c) for t in range(d) for c in sorted({p[t] for p in pts}))


def _marginal_rows(pts, cols):
    idx = {col: k for k, col in enumerate(cols)}
    rows = [[0] * len(pts) for _ in cols]
    for j, p in enumerate(pts):
        for t, c in enumerate(p):
            rows[idx[(t, c)]][j] = 1
    return rows


def marginal_kernel(K):
    """Integer basis of the zero-marginal vectors on K."""
    pts = point_set_n(K)
    cols = _columns(pts)
    rows = _marginal_rows(pts, cols)
    basis = tuple(tuple(linalg.integerize(v)) for v in linalg.nullspace(rows, len(pts)))
    return MarginalKernel(_dim(pts), pts, basis)


def is_zero_marginal(points, mu):
    sums = defaultdict(Fraction)
    for p, m in zip(points, mu):
        for t, c in enumerate(p):
            sums[(t, c)] += m
    return all(v == 0 for v in sums.values())


def _components(pts):
    parent = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in pts:
        nodes = [(t, c) for t, c in enumerate(p)]
        for nd in nodes[1:]:
            a, b = find(nodes[0]), find(nd)
            if a != b:
                parent[a] = b
    groups = defaultdict(list)
    for p in pts:
        groups[find((0, p[0]))].append(p)
    return sorted(groups.values(), key=lambda g: g[0])


def _anchor(pts, cols, u, d):
    """Zero the smallest value of every g_t, t >= 2, on each component."""
    funcs = [dict() for _ in range(d)]
    for (t, c), v in zip(cols, u):
        funcs[t][c] = Fraction(v)
    for comp in _components(pts):
        for t in range(1, d):
            first = min(p[t] for p in comp)
            shift = funcs[t][first]
            if shift:
                for c in {p[t] for p in comp}:
                    funcs[t][c] -= shift
                for c in {p[0] for p in comp}:
                    funcs[0][c] += shift
    return CoordinateFunctions(tuple(funcs))


def decompose_nd(values):
    """Solve f(p) = sum_t g_t(p_t) on K exactly.

    ``values`` maps points to numbers. Returns CoordinateFunctions (anchored)
    or a KernelObstruction whose vector pairs nontrivially with f.
    """
    vals = {point_n(p): as_rat(v) for p, v in dict(values).items()}
    pts = point_set_n(vals)
    cols = _columns(pts)
    idx = {col: k for k, col in enumerate(cols)}
    rows = []
    for p in pts:
        r = [0] * len(cols)
        for t, c in enumerate(p):
            r[idx[(t, c)]] = 1
        rows.append(r)
    u = linalg.solve(rows, [vals[p] for p in pts], len(cols))
    if u is None:
        for mu in marginal_kernel(pts).basis:
            pairing = sum((m * vals[p] for m, p in zip(mu, pts)), Fraction(0))
            if pairing != 0:
                return KernelObstruction(pts, mu, pairing)
        raise AssertionError("inconsistent system with no separating kernel vector")
    return _anchor(pts, cols, u, _dim(pts))


def decomposition_scheme(K):
    """Coordinate-function solutions for every indicator function on K.

    Only meaningful when the marginal kernel is trivial.
    """
    pts = point_set_n(K)
    cols = _columns(pts)
    idx = {col: k for k, col in enumerate(cols)}
    n = len(pts)
    aug = []
    for j, p in enumerate(pts):
        r = [0] * (len(cols) + n)
        for t, c in enumerate(p):
            r[idx[(t, c)]] = 1
        r[len(cols) + j] = 1
        aug.append(r)
    R, pivots = linalg.rref(aug, len(cols) + n)
    if any(pc >= len(cols) for pc in pivots):
        raise ValueError("cells admit a zero-marginal weighting; no scheme exists")
    S = [[Fraction(0)] * n for _ in cols]
    for row, pc in zip(R, pivots):
        S[pc] = row[len(cols):]
    # anchoring is linear, so anchor each indicator column
    d = _dim(pts)
    for j in range(n):
        fj = _anchor(pts, cols, [S[k][j] for k in range(len(cols))], d)
        for k, (t, c) in enumerate(cols):
            S[k][j] = fj.funcs[t][c]
    return DecompositionScheme(pts, cols, tuple(tuple(r) for r in S))


def winner_2d(cells):
    """Combinatorial decision in the plane."""
    K = point_set(cells)
    arr = find_closed_array(K)
    if arr is not None:
        return GameVerdict(AN, "rook-route", arr)
    return GameVerdict(VI, "peeling", tuple(e_trace(K)))


def winner_nd(cells):
    """Algebraic decision in any dimension d >= 2."""
    ker = marginal_kernel(cells)
    if not ker.trivial:
        return GameVerdict(AN, "kernel-vector", (ker.points, ker.basis[0]))
    return GameVerdict(VI, "scheme", decomposition_scheme(ker.points))


def e_operator_nd(K):
    """Keep points whose every axis-orthogonal hyperplane meets K twice."""
    pts = tuple(K)
    if not pts:
        return ()
    d = len(pts[0])
    counts = [defaultdict(int) for _ in range(d)]
    for p in pts:
        for t in range(d):
            counts[t][p[t]] += 1
    return tuple(p for p in pts if all(counts[t][p[t]] >= 2 for t in range(d)))


def e_depth_nd(K):
    return e_depth(point_set_n(K), op=e_operator_nd)


def e_operator_3d(K):
    pts = point_set_n(K)
    if pts and len(pts[0]) != 3:
        raise ValueError("expected points in 3-space")
    return e_operator_nd(pts)


def e_depth_3d(K):
    pts = point_set_n(K)
    if pts and len(pts[0]) != 3:
        raise ValueError("expected points in 3-space")
    return e_depth(pts, op=e_operator_nd)


def depth_is_finite(K):
    return isinstance(e_depth_nd(K), Finite)
