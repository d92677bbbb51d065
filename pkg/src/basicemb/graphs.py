"""Basic embeddability of finite graphs into the plane and into R x T_n.

Plane criterion. A finite graph embeds basically into the plane iff it
contains no subdivided circle, no subdivided five-point star T_5 and no
subdivided branched cross C (a cross whose four arm ends each branch into
two), equivalently iff it sits topologically inside some R_n.

Two reductions make the forbidden-subgraph test linear time.

* T_5: a subdivision of T_5 exists iff some vertex has degree >= 5. The
  centre of a subdivided star has degree at least 5; conversely five edges
  at a vertex already form a T_5.

* C, on forests: a subdivision of C exists iff some vertex u has at least
  four components of G - u that each contain a vertex of degree >= 3 in G.
  If C is subdivided inside a forest, its centre u has its four arms in
  four different components of G - u (a forest has no other u-avoiding
  connections), and each arm contains its branch vertex, whose degree in
  G is at least 3. Conversely, given such u and branch vertices w_1..w_4
  in distinct components, the paths u -> w_i are internally disjoint and
  each w_i has two neighbours off its path (degree >= 3 and only one
  neighbour lies towards u), which supply the branched ends.

Graphs with cycles fail the circle test before C is examined, so the C
test is only ever run on forests.
"""

import sys
from collections import deque
from dataclasses import dataclass

DEFAULT_CAP = 5000


class FiniteGraph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        es = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            e = (min(u, v), max(u, v))
            if e in es:
                raise ValueError(f"repeated edge {e}")
            es.add(e)
        self.n = n
        self.edges = frozenset(es)
        adj = [[] for _ in range(n)]
        for u, v in sorted(es):
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    def __repr__(self):
        return f"FiniteGraph({self.n}, {sorted(self.edges)})"

    def __eq__(self, other):
        return isinstance(other, FiniteGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def degrees(self):
        return [len(a) for a in self._adj]

    def components(self):
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, q = [s], deque([s])
            while q:
                u = q.popleft()
                for v in self._adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        q.append(v)
            comps.append(sorted(comp))
        return comps

    def induced(self, vertices):
        """Induced subgraph, relabelled in the order given."""
        idx = {v: i for i, v in enumerate(vertices)}
        es = [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx]
        return FiniteGraph(len(vertices), es)

    def relabel(self, perm):
        """Graph with vertex v renamed perm[v]."""
        return FiniteGraph(self.n, [(perm[u], perm[v]) for u, v in self.edges])


def path_graph(n):
    return FiniteGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return FiniteGraph(n, [(i, (i + 1) % n) for i in range(n)])


def star(k):
    """T_k: a centre 0 joined to leaves 1..k."""
    return FiniteGraph(k + 1, [(0, i) for i in range(1, k + 1)])


def branched_cross():
    """C: centre 0, arms to 1..4, each arm end branching into two leaves."""
    edges = [(0, i) for i in range(1, 5)]
    nxt = 5
    for i in range(1, 5):
        edges += [(i, nxt), (i, nxt + 1)]
        nxt += 2
    return FiniteGraph(nxt, edges)


def find_cycle(G):
    """Vertices of some cycle, or None."""
    parent = [-1] * G.n
    state = [0] * G.n
    for s in range(G.n):
        if state[s]:
            continue
        stack = [(s, -1, iter(G.neighbors(s)))]
        state[s] = 1
        while stack:
            u, pu, it = stack[-1]
            for v in it:
                if v == pu:
                    continue
                if state[v] == 1:
                    cyc = [u]
                    w = u
                    while w != v:
                        w = parent[w]
                        cyc.append(w)
                    return cyc[::-1]
                if state[v] == 0:
                    state[v] = 1
                    parent[v] = u
                    stack.append((v, u, iter(G.neighbors(v))))
                    break
            else:
                state[u] = 2
                stack.pop()
    return None


def is_forest(G):
    return len(G.edges) == G.n - len(G.components())


def is_tree(G):
    """Connected and acyclic. A disconnected acyclic graph is a forest, not a tree."""
    return G.n >= 1 and len(G.edges) == G.n - 1 and len(G.components()) == 1


def contains_T5(G):
    """A vertex of degree >= 5 (centre of a T_5 subdivision), or None."""
    for v in range(G.n):
        if G.degree(v) >= 5:
            return v
    return None


@dataclass(frozen=True)
class CrossWitness:
    center: int
    branches: tuple  # one vertex of degree >= 3 in each of four components of G - center


def contains_branched_cross(G):
    if not is_forest(G):
        raise ValueError("branched-cross test requires a forest")
    deg = G.degrees()
    for u in range(G.n):
        if deg[u] < 4:
            continue
        reps = []
        for v in G.neighbors(u):
            # component of G - u through v (forest: the branch behind v)
            rep = None
            seen = {u, v}
            q = deque([v])
            while q:
                w = q.popleft()
                if deg[w] >= 3:
                    rep = w
                    break
                for z in G.neighbors(w):
                    if z not in seen:
                        seen.add(z)
                        q.append(z)
            if rep is not None:
                reps.append(rep)
            if len(reps) == 4:
                return CrossWitness(u, tuple(reps))
    return None


@dataclass(frozen=True)
class PlaneVerdict:
    basic: bool
    reason: str = None  # cycle | degree | cross
    witness: object = None


def basic_in_plane(G):
    """Forbidden-subgraph decision, applied to every component."""
    cyc = find_cycle(G)
    if cyc is not None:
        return PlaneVerdict(False, "cycle", tuple(cyc))
    v = contains_T5(G)
    if v is not None:
        return PlaneVerdict(False, "degree", v)
    w = contains_branched_cross(G)
    if w is not None:
        return PlaneVerdict(False, "cross", w)
    return PlaneVerdict(True)


def _f_size(n):
    return 3 * 2 ** n - 2


def gen_F(n, cap=DEFAULT_CAP):
    """F_1 is a triod; F_{k+1} gives every leaf of F_k two new leaves."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if _f_size(n) > cap:
        raise ValueError(f"F_{n} has {_f_size(n)} vertices, above the cap {cap}")
    edges = [(0, 1), (0, 2), (0, 3)]
    leaves = [1, 2, 3]
    nv = 4
    for _ in range(n - 1):
        new = []
        for leaf in leaves:
            edges += [(leaf, nv), (leaf, nv + 1)]
            new += [nv, nv + 1]
            nv += 2
        leaves = new
    return FiniteGraph(nv, edges)


def gen_R(n, cap=DEFAULT_CAP):
    """F_n with one hanging edge added at every non-leaf vertex."""
    if n < 1:
        raise ValueError("n must be >= 1")
    size = _f_size(n) + (_f_size(n) - 3 * 2 ** (n - 1))
    if size > cap:
        raise ValueError(f"R_{n} has {size} vertices, above the cap {cap}")
    F = gen_F(n, cap)
    edges = list(F.edges)
    nv = F.n
    for v in range(F.n):
        if F.degree(v) > 1:
            edges.append((v, nv))
            nv += 1
    return FiniteGraph(nv, edges)


def suppress_degree_two(G):
    """Homeomorphic reduction of a tree: smooth out all degree-2 vertices.

    A path reduces to a single edge (or stays a point).
    """
    if not is_tree(G):
        raise ValueError("expected a tree")
    if G.n <= 2:
        return G
    deg = G.degrees()
    if max(deg) <= 2:
        return FiniteGraph(2, [(0, 1)])
    keep = [v for v in range(G.n) if deg[v] != 2]
    idx = {v: i for i, v in enumerate(keep)}
    edges = set()
    for u in keep:
        for v in G.neighbors(u):
            prev, cur = u, v
            while deg[cur] == 2:
                a, b = G.neighbors(cur)
                prev, cur = cur, (b if a == prev else a)
            e = (min(idx[u], idx[cur]), max(idx[u], idx[cur]))
            edges.add(e)
    return FiniteGraph(len(keep), edges)


def _match(left, adj_ok):
    """Does every left item match a distinct right item? Kuhn's algorithm."""
    owner = {}

    def augment(i, seen):
        for r in adj_ok[i]:
            if r in seen:
                continue
            seen.add(r)
            if r not in owner or augment(owner[r], seen):
                owner[r] = i
                return True
        return False

    return all(augment(i, set()) for i in range(left))


def topo_contains(H, G):
    """Does tree H contain a subgraph homeomorphic to tree G?

    G is first reduced by smoothing degree-2 vertices. Then rooted DP:
    emb(g, h, parent) asks whether the subtree of g maps onto h with g's
    children sent into distinct branches of h below ``parent``; the
    children are assigned by bipartite matching against down(), which
    allows a path of any length from h into the branch.
    """
    if not is_tree(H) or not is_tree(G):
        raise ValueError("topo_contains expects two trees")
    G = suppress_degree_two(G)
    if G.n == 1:
        return True
    if max(G.degrees()) > max(H.degrees()):
        return False
    root = max(range(G.n), key=G.degree)
    gchildren = [[] for _ in range(G.n)]
    order = [root]
    seen = {root}
    for u in order:
        for v in G.neighbors(u):
            if v not in seen:
                seen.add(v)
                gchildren[u].append(v)
                order.append(v)
    emb_memo = {}
    down_memo = {}

    def hkids(h, hp):
        return [c for c in H.neighbors(h) if c != hp]

    def emb(g, h, hp):
        key = (g, h, hp)
        if key in emb_memo:
            return emb_memo[key]
        kids = hkids(h, hp)
        gk = gchildren[g]
        if len(gk) > len(kids):
            ok = False
        else:
            options = [[j for j, c in enumerate(kids) if down(gc, c, h)] for gc in gk]
            ok = all(options) and _match(len(gk), options)
        emb_memo[key] = ok
        return ok

    def down(g, h, hp):
        key = (g, h, hp)
        if key in down_memo:
            return down_memo[key]
        ok = emb(g, h, hp) or any(down(g, c, h) for c in hkids(h, hp))
        down_memo[key] = ok
        return ok

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 20 * (H.n + G.n) + 1000))
    try:
        return any(emb(root, h, None) for h in range(H.n))
    finally:
        sys.setrecursionlimit(old)


@dataclass(frozen=True)
class RnVerdict:
    contained: bool
    n: int = None
    inconclusive: bool = False

    @property
    def decision(self):
        return None if self.inconclusive else self.contained


def basic_in_plane_via_Rn(G, n_max, cap=DEFAULT_CAP):
    """Search for the least n <= n_max with G inside R_n.

    If none is found although the forbidden-subgraph condition holds, the
    search was too short and the result is flagged inconclusive.
    """
    if not is_tree(G):
        raise ValueError("expected a tree")
    for n in range(1, n_max + 1):
        if topo_contains(gen_R(n, cap), G):
            return RnVerdict(True, n)
    if basic_in_plane(G).basic:
        return RnVerdict(False, None, inconclusive=True)
    return RnVerdict(False)


@dataclass(frozen=True)
class VertexClass:
    degree: int
    horrible: bool
    awful: bool


@dataclass(frozen=True)
class DefectReport:
    vertices: tuple
    delta: int

    def horrible_with_hanging_edge(self, G):
        deg = G.degrees()
        return [
            v for v, c in enumerate(self.vertices)
            if c.horrible and any(deg[w] == 1 for w in G.neighbors(v))
        ]


def defect(G):
    """Classify vertices and sum deg - 2 over horrible and awful ones."""
    deg = G.degrees()
    out = []
    delta = 0
    for v in range(G.n):
        d = deg[v]
        hanging = any(deg[w] == 1 for w in G.neighbors(v)) or d == 1
        horrible = d > 4
        awful = d == 4 and not hanging
        if horrible or awful:
            delta += d - 2
        out.append(VertexClass(d, horrible, awful))
    return DefectReport(tuple(out), delta)


def basic_in_R_x_Tn(G, n):
    """Tree with defect < n, or defect == n and a horrible vertex with a hanging edge."""
    if n < 3:
        raise ValueError("R x T_n is only treated for n >= 3")
    if not is_tree(G):
        return False
    rep = defect(G)
    if rep.delta < n:
        return True
    return rep.delta == n and bool(rep.horrible_with_hanging_edge(G))
