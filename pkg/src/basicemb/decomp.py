"""Exact decompositions f(x, y) = g(x) + h(y) on finite planar sets."""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from . import simplex
from .rational import as_rat, fmt_rat
from .rook import (
    Array2,
    Cyclic,
    Point2,
    _cycle_to_array,
    build_incidence,
    e_depth,
    e_operator,
    equivalence_classes,
    point,
)


@dataclass(frozen=True)
class ValuedSet2:
    values: dict

    @property
    def base(self):
        return tuple(sorted(self.values))

    def __len__(self):
        return len(self.values)

    def restrict(self, pts):
        return ValuedSet2({p: self.values[p] for p in pts})


def valued_set(pairs):
    """Build a ValuedSet2 from ((x, y), v) pairs or a mapping."""
    if isinstance(pairs, dict):
        pairs = pairs.items()
    vals = {}
    for p, v in pairs:
        p = p if isinstance(p, Point2) else point(*p)
        if p in vals:
            raise ValueError(f"duplicate point {p}")
        vals[p] = as_rat(v)
    return ValuedSet2(dict(sorted(vals.items())))


@dataclass
class Decomposition2:
    g: dict = field(default_factory=dict)
    h: dict = field(default_factory=dict)

    def __call__(self, p):
        return self.g[p.x] + self.h[p.y]

    def shifted(self, c):
        """The gauge-equivalent pair (g + c, h - c)."""
        return Decomposition2({x: v + c for x, v in self.g.items()}, {y: v - c for y, v in self.h.items()})


@dataclass(frozen=True)
class NormReport:
    sup_g: Fraction
    sup_h: Fraction
    sup_f: Fraction
    residual: Fraction

    @property
    def objective(self):
        return self.sup_g + self.sup_h


@dataclass(frozen=True)
class Obstruction2:
    cycle: Array2
    alternating_sum: Fraction


def alternating_sum(Kf, arr):
    """f(a_1) - f(a_2) + ... - f(a_2l) along a closed array."""
    pts = arr.points[:-1] if arr.closed else arr.points
    return sum((Kf.values[p] if i % 2 == 0 else -Kf.values[p] for i, p in enumerate(pts)), Fraction(0))


class MissingCoordinate(KeyError):
    pass


def verify(Kf, D):
    """Exact sup norms of g, h, f and the residual max |f - g - h| over K."""
    res = Fraction(0)
    for p, v in Kf.values.items():
        if p.x not in D.g:
            raise MissingCoordinate(f"g is undefined at x = {fmt_rat(p.x)}")
        if p.y not in D.h:
            raise MissingCoordinate(f"h is undefined at y = {fmt_rat(p.y)}")
        res = max(res, abs(v - D.g[p.x] - D.h[p.y]))
    xs = {p.x for p in Kf.values}
    ys = {p.y for p in Kf.values}
    sup_g = max((abs(D.g[x]) for x in xs), default=Fraction(0))
    sup_h = max((abs(D.h[y]) for y in ys), default=Fraction(0))
    sup_f = max((abs(v) for v in Kf.values.values()), default=Fraction(0))
    return NormReport(Fraction(sup_g), Fraction(sup_h), Fraction(sup_f), res)


def decompose_exact(Kf):
    """Spanning-forest propagation of the telescoping formulas.

    Each class is anchored at its smallest point a_1 by h(y(a_1)) = 0,
    g(x(a_1)) = f(a_1). Returns a Decomposition2, or an Obstruction2 built
    from the first point (in sorted order) that closes an inconsistent cycle.
    """
    g_inc = build_incidence(Kf.base)
    nx = len(g_inc.x_nodes)
    adj = g_inc.adjacency()
    for lst in adj:
        lst.sort()
    val = {}
    par = {}
    tree_edges = set()
    pts = g_inc.points
    for e, (i, j) in enumerate(g_inc.edges):
        y_node = nx + j
        if y_node in val or i in val:
            continue
        # new class; e is its smallest point since points are sorted
        val[y_node] = Fraction(0)
        par[y_node] = (None, None)
        q = deque([y_node])
        while q:
            u = q.popleft()
            for v, ed in adj[u]:
                if v in val:
                    continue
                f = Kf.values[pts[ed]]
                val[v] = f - val[u]
                par[v] = (u, ed)
                tree_edges.add(ed)
                q.append(v)
    for e, (i, j) in enumerate(g_inc.edges):
        if e in tree_edges:
            continue
        if val[i] + val[nx + j] != Kf.values[pts[e]]:
            arr = _tree_cycle(g_inc, par, i, nx + j, e)
            return Obstruction2(arr, alternating_sum(Kf, arr))
    D = Decomposition2(
        {x: val[k] for k, x in enumerate(g_inc.x_nodes)},
        {y: val[nx + k] for k, y in enumerate(g_inc.y_nodes)},
    )
    return D


def _tree_cycle(g_inc, par, u, v, e):
    def up(w):
        nodes, edges = [w], []
        while par[w][0] is not None:
            w, pe = par[w]
            nodes.append(w)
            edges.append(pe)
        return nodes, edges

    nu, eu = up(u)
    nv, ev = up(v)
    # strip common ancestry
    while len(nu) > 1 and len(nv) > 1 and nu[-2] == nv[-2]:
        nu.pop()
        nv.pop()
        eu.pop()
        ev.pop()
    # cycle: lca -> ... -> u, edge e, v -> ... -> lca
    nodes = nu[::-1] + nv[:-1]
    edges = list(reversed(eu)) + [e] + ev
    return _cycle_to_array(g_inc, nodes, edges)


def peel_decompose(Kf):
    """Decompose by recursing on E(K) and extending to the white points.

    Requires a finite E-depth; use decompose_exact otherwise.
    """
    K = Kf.base
    if isinstance(e_depth(K), Cyclic):
        raise ValueError("E-iteration does not terminate on this set; use decompose_exact")
    return _peel(Kf, K)


def _peel(Kf, K):
    if not K:
        return Decomposition2()
    EK = e_operator(K)
    D = _peel(Kf, EK)
    g, h = dict(D.g), dict(D.h)
    inner = set(EK)
    white = [p for p in K if p not in inner]
    cx, cy = {}, {}
    for p in K:
        cx[p.x] = cx.get(p.x, 0) + 1
        cy[p.y] = cy.get(p.y, 0) + 1
    # alone on the horizontal line only: g(x) is shared, h(y) is free
    for p in white:
        if cx[p.x] > 1:
            g.setdefault(p.x, Fraction(0))
            h[p.y] = Kf.values[p] - g[p.x]
    # alone on the vertical line: g(x) is free
    for p in white:
        if cx[p.x] == 1:
            h.setdefault(p.y, Fraction(0))
            g[p.x] = Kf.values[p] - h[p.y]
    return Decomposition2(g, h)


def _coords(Kf):
    xs = sorted({p.x for p in Kf.values})
    ys = sorted({p.y for p in Kf.values})
    return xs, ys


def min_norm_exact(Kf):
    """Among exact decompositions, one minimizing sup|g| + sup|h|.

    LP variables: g at each x-value, h at each y-value, and bounds G, H.
    Returns (Decomposition2, NormReport) or an Obstruction2.
    """
    xs, ys = _coords(Kf)
    nxv, nyv = len(xs), len(ys)
    n = nxv + nyv + 2
    iG, iH = n - 2, n - 1
    xi = {x: k for k, x in enumerate(xs)}
    yi = {y: nxv + k for k, y in enumerate(ys)}
    A_eq, b_eq = [], []
    for p, v in Kf.values.items():
        row = [0] * n
        row[xi[p.x]] = 1
        row[yi[p.y]] = 1
        A_eq.append(row)
        b_eq.append(v)
    A_ub, b_ub = [], []
    for k in range(nxv + nyv):
        bound = iG if k < nxv else iH
        for s in (1, -1):
            row = [0] * n
            row[k] = s
            row[bound] = -1
            A_ub.append(row)
            b_ub.append(0)
    c = [0] * n
    c[iG] = c[iH] = 1
    res = simplex.linprog_exact(c, A_ub, b_ub, A_eq, b_eq, free=range(nxv + nyv))
    if res.status == simplex.INFEASIBLE:
        ob = decompose_exact(Kf)
        assert isinstance(ob, Obstruction2)
        return ob
    D = Decomposition2({x: res.x[xi[x]] for x in xs}, {y: res.x[yi[y]] for y in ys})
    rep = verify(Kf, D)
    assert rep.residual == 0 and rep.objective == res.fun
    return D, rep


def best_sup_approx(Kf):
    """g, h minimizing max |f - g - h| (Chebyshev relaxation)."""
    xs, ys = _coords(Kf)
    nxv, nyv = len(xs), len(ys)
    n = nxv + nyv + 1
    it = n - 1
    xi = {x: k for k, x in enumerate(xs)}
    yi = {y: nxv + k for k, y in enumerate(ys)}
    A_ub, b_ub = [], []
    for p, v in Kf.values.items():
        # f - g - h <= t  and  g + h - f <= t
        row = [0] * n
        row[xi[p.x]] = -1
        row[yi[p.y]] = -1
        row[it] = -1
        A_ub.append(row)
        b_ub.append(-v)
        row = [0] * n
        row[xi[p.x]] = 1
        row[yi[p.y]] = 1
        row[it] = -1
        A_ub.append(row)
        b_ub.append(v)
    c = [0] * n
    c[it] = 1
    res = simplex.linprog_exact(c, A_ub, b_ub, free=range(nxv + nyv))
    assert res.status == simplex.OPTIMAL
    D = Decomposition2({x: res.x[xi[x]] for x in xs}, {y: res.x[yi[y]] for y in ys})
    rep = verify(Kf, D)
    assert rep.residual == res.fun
    return D, rep


def make_alternating_instance(m):
    """Open staircase array of 2m+4 distinct points with f(a_i) = (-1)^i.

    a_i = (floor(i/2), floor((i-1)/2)), so a_1, a_2 share y and no other
    coordinate coincidences occur.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    pairs = []
    for i in range(1, 2 * m + 5):
        pairs.append(((i // 2, (i - 1) // 2), (-1) ** i))
    return valued_set(pairs)


def alternating_array(m):
    """The ordered array underlying make_alternating_instance(m)."""
    return Array2(tuple(point(i // 2, (i - 1) // 2) for i in range(1, 2 * m + 5)), "y")


def m_coord(i, j):
    """2 - 3*2^-i + j*2^-2i."""
    return 2 - Fraction(3, 2 ** i) + Fraction(j, 4 ** i)


def hard_layer(k):
    """Layer k of the m_ij family as an ordered array of 2^k points.

    Order: (m_2, m_0), (m_2, m_2), (m_4, m_2), (m_4, m_4), ...; the first
    step shares x.
    """
    pts = []
    for l in range(1, 2 ** (k - 1) + 1):
        pts.append(point(m_coord(k, 2 * l), m_coord(k, 2 * l - 2)))
        pts.append(point(m_coord(k, 2 * l), m_coord(k, 2 * l)))
    return Array2(tuple(pts), "x")


def gen_hard_instance(i):
    """Union of layers 1..i with f = +2^-k on diagonal points, -2^-k below them."""
    if i < 1:
        raise ValueError("i must be >= 1")
    pairs = []
    for k in range(1, i + 1):
        w = Fraction(1, 2 ** k)
        for l in range(1, 2 ** (k - 1) + 1):
            a = m_coord(k, 2 * l)
            pairs.append(((a, a), w))
            pairs.append(((a, m_coord(k, 2 * l - 2)), -w))
    return valued_set(pairs)


def anchor_gauge(Kf, D):
    """Re-anchor each class so that h vanishes at the y of its smallest point."""
    g, h = dict(D.g), dict(D.h)
    for cls in equivalence_classes(Kf.base):
        c = h[cls[0].y]
        xs = {p.x for p in cls}
        ys = {p.y for p in cls}
        for x in xs:
            g[x] += c
        for y in ys:
            h[y] -= c
    return Decomposition2(g, h)
