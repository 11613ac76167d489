"""Fraction-free (Bareiss) elimination and exact nullspaces of integer matrices."""

from fractions import Fraction
from math import gcd


def bareiss_echelon(rows):
    """Row-echelon form of an integer matrix by fraction-free elimination.

    Pivots are chosen as the first row (smallest index) with a nonzero entry
    in the column, so the result is deterministic.  Returns ``(matrix, pivots)``
    where ``pivots`` lists the pivot column of each leading row.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        row_r = m[r]
        for i in range(r + 1, len(m)):
            row_i = m[i]
            f = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(rows):
    """Basis of the rational nullspace as primitive integer vectors."""
    if not rows:
        return []
    ncols = len(rows[0])
    echelon, pivots = bareiss_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            row = echelon[k]
            s = sum((row[j] * v[j] for j in range(c + 1, ncols) if row[j]), Fraction(0))
            v[c] = -s / row[c]
        basis.append(primitive(v))
    return basis


def primitive(v):
    """Scale a rational vector to coprime integers (sign untouched)."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    return [x // g for x in ints]


def rank(rows):
    return len(bareiss_echelon(rows)[1])
