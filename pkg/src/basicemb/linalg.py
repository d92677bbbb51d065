"""Gaussian elimination over Q: row reduction, nullspace, linear solve."""

from fractions import Fraction
from math import gcd


def rref(rows, ncols):
    """Reduced row echelon form. Returns (reduced rows, pivot columns)."""
    A = [[Fraction(v) for v in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(A):
            break
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        if p != 1:
            A[r] = [v / p for v in A[r]]
        prow = A[r]
        nz = [j for j in range(c, len(prow)) if prow[j] != 0]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                row = A[i]
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace(rows, ncols):
    """Basis of {v : A v = 0}, one vector per free column, in column order."""
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def integerize(v):
    """Scale a rational vector to integers with content 1, first nonzero positive."""
    den = 1
    for q in v:
        q = Fraction(q)
        den = den * q.denominator // gcd(den, q.denominator)
    ints = [int(Fraction(q) * den) for q in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return ints
    ints = [a // g for a in ints]
    first = next(a for a in ints if a)
    if first < 0:
        ints = [-a for a in ints]
    return ints


def solve(rows, rhs, ncols):
    """One solution of A u = b with free variables set to zero, or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    u = [Fraction(0)] * ncols
    for row, pc in zip(R, pivots):
        u[pc] = row[ncols]
    return u


def rank(rows, ncols):
    return len(rref(rows, ncols)[1])
