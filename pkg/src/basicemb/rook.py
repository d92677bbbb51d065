"""Finite planar point sets, arrays and the E-operator.

A finite set K in the plane is encoded by its incidence graph: one node per
distinct x-value, one node per distinct y-value, and one edge per point.
Walks in this bipartite graph are exactly the arrays of K, so closed arrays
are cycles and the E-operator is a simultaneous peeling of degree-1 edges.
"""

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import NamedTuple

from .rational import as_rat


class Point2(NamedTuple):
    x: object
    y: object


def point(x, y):
    return Point2(as_rat(x), as_rat(y))


def point_set(points):
    """Normalize an iterable of pairs to a sorted tuple of distinct Point2."""
    return tuple(sorted({p if isinstance(p, Point2) else point(*p) for p in points}))


@dataclass(frozen=True)
class Finite:
    n: int


@dataclass(frozen=True)
class Cyclic:
    core: tuple


@dataclass(frozen=True)
class Bounded:
    length: int


@dataclass(frozen=True)
class Unbounded:
    pass


@dataclass(frozen=True)
class Array2:
    """An array a_1..a_m.

    ``parity`` names the coordinate shared by a_1 and a_2 ('y' is the
    convention used throughout; 'x' is accepted). A closed array stores
    a_1 again as its last entry, so m = 2l+1.
    """

    points: tuple
    parity: str = "y"
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        check_array(self.points, self.parity, self.closed)

    def __len__(self):
        return len(self.points)

    def normalized(self):
        """Return an equivalent array with parity 'y' when one exists."""
        if self.parity == "y":
            return self
        pts = self.points
        if self.closed:
            # rotate by one step: a_2 .. a_m, a_2
            rot = pts[1:] + (pts[1],)
            return Array2(rot, "y", True)
        if len(pts) == 1:
            return Array2(pts, "y")
        if len(pts) % 2 == 0:
            return Array2(pts[::-1], "y") if len(pts) > 1 else self
        raise ValueError("odd-length open array starting with an x-step has no y-first form")


def check_array(points, parity="y", closed=False):
    """Raise ValueError unless ``points`` is an array with the given parity."""
    if parity not in ("x", "y"):
        raise ValueError(f"parity must be 'x' or 'y', got {parity!r}")
    m = len(points)
    if m == 0:
        raise ValueError("empty array")
    first = 1 if parity == "y" else 0
    for i in range(m - 1):
        a, b = points[i], points[i + 1]
        if a == b:
            raise ValueError(f"consecutive points {i + 1} and {i + 2} coincide")
        axis = first if i % 2 == 0 else 1 - first
        if a[axis] != b[axis]:
            name = "xy"[axis]
            raise ValueError(f"points {i + 1} and {i + 2} do not share {name}")
    if closed:
        if m % 2 == 0 or m < 5:
            raise ValueError("closed array needs an odd number m >= 5 of entries")
        if points[0] != points[-1]:
            raise ValueError("closed array must end where it starts")


def is_array(points, parity="y", closed=False):
    try:
        check_array(points, parity, closed)
    except ValueError:
        return False
    return True


@dataclass(frozen=True)
class IncidenceGraph:
    points: tuple
    x_nodes: tuple
    y_nodes: tuple
    edges: tuple  # (x index, y index) per point, in point order

    def node_count(self):
        return len(self.x_nodes) + len(self.y_nodes)

    def adjacency(self):
        """Node ids: x-nodes 0..nx-1, y-nodes nx..; adjacency lists of (node, edge)."""
        nx = len(self.x_nodes)
        adj = [[] for _ in range(self.node_count())]
        for e, (i, j) in enumerate(self.edges):
            adj[i].append((nx + j, e))
            adj[nx + j].append((i, e))
        return adj


def build_incidence(K):
    pts = point_set(K)
    xs = tuple(sorted({p.x for p in pts}))
    ys = tuple(sorted({p.y for p in pts}))
    xi = {x: i for i, x in enumerate(xs)}
    yi = {y: j for j, y in enumerate(ys)}
    return IncidenceGraph(pts, xs, ys, tuple((xi[p.x], yi[p.y]) for p in pts))


def e_operator(K):
    pts = point_set(K)
    cx = defaultdict(int)
    cy = defaultdict(int)
    for p in pts:
        cx[p.x] += 1
        cy[p.y] += 1
    return tuple(p for p in pts if cx[p.x] >= 2 and cy[p.y] >= 2)


def e_trace(K, op=e_operator):
    """The peeling sequence K, E(K), E^2(K), ... up to the empty set or a fixpoint."""
    cur = tuple(K)
    seq = [cur]
    while cur:
        nxt = op(cur)
        if len(nxt) == len(cur):
            break
        seq.append(nxt)
        cur = nxt
    return seq


def e_depth(K, op=e_operator):
    """Finite(n) with n minimal such that E^n(K) is empty, else Cyclic(core).

    The empty set has depth Finite(0).
    """
    seq = e_trace(point_set(K) if op is e_operator else K, op)
    if seq[-1]:
        return Cyclic(seq[-1])
    return Finite(len(seq) - 1)


def _cycle_to_array(g, node_cycle, edge_cycle):
    """Turn a simple cycle in the incidence graph into a canonical closed Array2.

    The start is the smallest point; the direction is forced by requiring the
    first step to share y.
    """
    pts = [g.points[e] for e in edge_cycle]
    L = len(pts)
    k = min(range(L), key=lambda i: pts[i])
    nxt, prv = pts[(k + 1) % L], pts[(k - 1) % L]
    if nxt.y == pts[k].y:
        seq = [pts[(k + i) % L] for i in range(L)]
    else:
        assert prv.y == pts[k].y
        seq = [pts[(k - i) % L] for i in range(L)]
    return Array2(tuple(seq) + (seq[0],), "y", True)


def _shortest_cycle(g):
    """Shortest simple cycle as (node list, edge list), ties broken by canonical array."""
    adj = g.adjacency()
    for lst in adj:
        lst.sort()
    best = None
    n = g.node_count()
    for s in range(n):
        dist = {s: 0}
        par = {s: (None, None)}
        q = deque([s])
        while q:
            u = q.popleft()
            for v, e in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    par[v] = (u, e)
                    q.append(v)
                elif par[u][1] != e and dist[v] >= dist[u]:
                    length = dist[u] + dist[v] + 1
                    if best is not None and length > best[0]:
                        continue
                    cyc = _join_paths(par, u, v, e)
                    if cyc is None:
                        continue
                    arr = _cycle_to_array(g, *cyc)
                    key = (length, arr.points)
                    if best is None or key < best:
                        best = key
    return best


def _join_paths(par, u, v, e):
    def path(w):
        nodes, edges = [w], []
        while par[w][0] is not None:
            w, pe = par[w]
            edges.append(pe)
            nodes.append(w)
        return nodes[::-1], edges[::-1]  # root .. w

    nu, eu = path(u)
    nv, ev = path(v)
    if set(nu[1:]) & set(nv[1:]):
        return None
    nodes = nu + nv[::-1][:-1]
    edges = eu + [e] + ev[::-1]
    if len(set(nodes)) != len(nodes):
        return None
    return nodes, edges


def find_closed_array(K):
    """A shortest closed array of K (a simple cycle of its incidence graph), or None."""
    g = build_incidence(K)
    best = _shortest_cycle(g)
    if best is None:
        return None
    return Array2(best[1], "y", True)


def equivalence_classes(K):
    """Points joined by an array, i.e. components of the incidence graph."""
    g = build_incidence(K)
    nx = len(g.x_nodes)
    parent = list(range(g.node_count()))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in g.edges:
        a, b = find(i), find(nx + j)
        if a != b:
            parent[a] = b
    groups = defaultdict(list)
    for p, (i, _) in zip(g.points, g.edges):
        groups[find(i)].append(p)
    return sorted((tuple(v) for v in groups.values()), key=lambda c: c[0])


@dataclass(frozen=True)
class BasicVerdict:
    basic: bool
    closed_array: object = None
    peeling: tuple = ()


def is_discontinuously_basic(K):
    K = point_set(K)
    arr = find_closed_array(K)
    if arr is not None:
        return BasicVerdict(False, closed_array=arr)
    return BasicVerdict(True, peeling=tuple(e_trace(K)))


def longest_odd_array(K):
    """Bounded(2n+1) with n the largest index such that E^n(K) is nonempty.

    Unbounded when E-iteration stalls on a nonempty core. The empty set
    gives Bounded(0).
    """
    d = e_depth(K)
    if isinstance(d, Cyclic):
        return Unbounded()
    if d.n == 0:
        return Bounded(0)
    return Bounded(2 * (d.n - 1) + 1)


def plant_odd_array(K, n):
    """Extract an array of 2n+1 points centred at a point of E^n(K).

    Follows the constructive argument: a centre in E^n, neighbours in
    E^{n-1} sharing x on one side and y on the other, and so on outward.
    Points need not be distinct when K has cycles.
    """
    seq = e_trace(point_set(K))
    layers = list(seq) + [()] * (n + 1)
    if not layers[n]:
        raise ValueError(f"E^{n}(K) is empty")
    centre = layers[n][0]
    left, right = [centre], [centre]
    for k in range(n - 1, -1, -1):
        pool = layers[k]
        step = n - k
        # left side alternates x, y, x ...; right side y, x, y ...
        ax_l = 0 if step % 2 == 1 else 1
        ax_r = 1 - ax_l
        a = left[-1]
        b = right[-1]
        cand_l = [p for p in pool if p != a and p[ax_l] == a[ax_l]]
        cand_r = [p for p in pool if p != b and p[ax_r] == b[ax_r]]
        left.append(cand_l[0])
        right.append(cand_r[0])
    pts = tuple(left[::-1]) + tuple(right[1:])
    # with left side ending in an x-step at the centre, the first step of the
    # assembled sequence shares x if n is odd
    parity = "x" if n % 2 == 1 else "y"
    return Array2(pts, parity if n else "y")
