"""Dense two-phase simplex over the rationals with Bland's rule.

Solves

    minimize    c . x
    subject to  A_ub x <= b_ub,  A_eq x = b_eq,
                x_j >= 0 for j not in ``free``

exactly. Desk-scale only: the tableau is a list of Fraction rows and a
pivot touches only the nonzero entries of the pivot row.
"""

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: list = None
    fun: Fraction = None
    pivots: int = 0


def _pivot(T, r, c):
    prow = T[r]
    p = prow[c]
    if p != 1:
        prow = [v / p if v else 0 for v in prow]
        T[r] = prow
    nz = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(T):
        if i == r:
            continue
        f = row[c]
        if f:
            for j in nz:
                row[j] -= f * prow[j]


def _run(T, basis, ncols, allowed):
    """Bland-rule iterations on tableau T whose last row holds reduced costs.

    Returns (status, pivot count). Only columns in ``allowed`` may enter.
    """
    m = len(T) - 1
    obj = T[m]
    pivots = 0
    while True:
        enter = None
        for j in range(ncols):
            if allowed[j] and obj[j] < 0:
                enter = j
                break
        if enter is None:
            return OPTIMAL, pivots
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return UNBOUNDED, pivots
        _pivot(T, leave, enter)
        obj = T[m]
        basis[leave] = enter
        pivots += 1


def linprog_exact(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), free=()):
    """Exact LP solve. Rows of A_* are dense sequences of numbers."""
    n = len(c)
    free = set(free)
    # column map: original j -> (pos column, neg column or None)
    cols = []
    k = 0
    for j in range(n):
        if j in free:
            cols.append((k, k + 1))
            k += 2
        else:
            cols.append((k, None))
            k += 1
    nstruct = k
    rows = []  # (coeffs over structural cols, rhs, kind)
    for a, b in zip(A_ub, b_ub):
        rows.append((a, Fraction(b), "ub"))
    for a, b in zip(A_eq, b_eq):
        rows.append((a, Fraction(b), "eq"))
    m = len(rows)
    n_slack = sum(1 for r in rows if r[2] == "ub")
    # columns: structural | slacks | artificials
    slack_start = nstruct
    art_start = nstruct + n_slack
    T = []
    basis = []
    arts = []
    s = 0
    for a, b, kind in rows:
        row = [0] * (art_start + m + 1)
        for j, v in enumerate(a):
            if v:
                v = Fraction(v)
                p, q = cols[j]
                row[p] = v
                if q is not None:
                    row[q] = -v
        if kind == "ub":
            row[slack_start + s] = 1
            s_col = slack_start + s
            s += 1
        else:
            s_col = None
        if b < 0:
            row = [-v for v in row]
            b = -b
        row[-1] = b
        if s_col is not None and row[s_col] == 1:
            basis.append(s_col)
        else:
            a_col = art_start + len(arts)
            row[a_col] = 1
            arts.append(a_col)
            basis.append(a_col)
        T.append(row)
    ncols = art_start + len(arts)
    width = art_start + m + 1
    # trim unused artificial columns
    for row in T:
        del row[ncols:width - 1]
    # phase I
    obj = [0] * (ncols + 1)
    for i, bcol in enumerate(basis):
        if bcol >= art_start:
            for j in range(ncols + 1):
                if j < art_start or j == ncols:
                    obj[j] -= T[i][j]
    T.append(obj)
    allowed = [True] * ncols
    status, piv = _run(T, basis, ncols, allowed)
    if T[-1][-1] != 0:
        return LPResult(INFEASIBLE, pivots=piv)
    # drive artificials out of the basis
    drop = []
    for i in range(m):
        if basis[i] >= art_start:
            for j in range(art_start):
                if T[i][j] != 0:
                    _pivot(T, i, j)
                    basis[i] = j
                    piv += 1
                    break
            else:
                drop.append(i)
    for i in reversed(drop):
        del T[i]
        del basis[i]
    m = len(basis)
    # phase II: rebuild objective row over structural+slack columns
    cost = [0] * (ncols + 1)
    for j in range(n):
        if c[j]:
            p, q = cols[j]
            cost[p] = Fraction(c[j])
            if q is not None:
                cost[q] = -Fraction(c[j])
    obj = list(cost)
    for i, bcol in enumerate(basis):
        cb = cost[bcol]
        if cb:
            row = T[i]
            for j in range(ncols + 1):
                if row[j]:
                    obj[j] -= cb * row[j]
    T[-1] = obj
    allowed = [j < art_start for j in range(ncols)]
    status, piv2 = _run(T, basis, ncols, allowed)
    piv += piv2
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, pivots=piv)
    val = [Fraction(0)] * ncols
    for i, bcol in enumerate(basis):
        val[bcol] = Fraction(T[i][-1])
    x = []
    for j in range(n):
        p, q = cols[j]
        x.append(val[p] - (val[q] if q is not None else 0))
    fun = sum((Fraction(c[j]) * x[j] for j in range(n)), Fraction(0))
    return LPResult(OPTIMAL, x, fun, piv)
