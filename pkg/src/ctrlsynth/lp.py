"""Exact rational linear programming over nonnegative variables.

Dense two-phase simplex with Bland's rule, all arithmetic in Fraction.
Problems here are tiny (tens of variables); no attempt at sparse or
revised-simplex performance.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _pivot(tab, basis, row, col):
    piv = tab[row][col]
    inv = ONE / piv
    prow = [a * inv for a in tab[row]]
    tab[row] = prow
    for i, r in enumerate(tab):
        if i == row:
            continue
        factor = r[col]
        if factor:
            tab[i] = [a - factor * b for a, b in zip(r, prow)]
    basis[row] = col


def _run_simplex(tab, basis, ncols):
    """Maximize the objective in the last tableau row; Bland's rule."""
    obj = len(tab) - 1
    while True:
        col = -1
        for j in range(ncols):
            if tab[obj][j] > 0:
                col = j
                break
        if col < 0:
            return OPTIMAL
        row = -1
        best = None
        for i in range(obj):
            a = tab[i][col]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    best = ratio
                    row = i
        if row < 0:
            return UNBOUNDED
        _pivot(tab, basis, row, col)


def solve(rows, obj, maximize=True):
    """Solve max/min obj.x subject to rows (coeffs, rhs) meaning coeffs.x <= rhs, x >= 0.

    rows: list of (list[Fraction], Fraction); obj: list[Fraction].
    Returns (status, value); value is None unless status == OPTIMAL.
    """
    m = len(rows)
    m0 = m  # slack column count is fixed even if redundant rows get dropped
    sign = ONE if maximize else -ONE
    n = len(obj)

    # Columns: n structural + m slacks (+ artificials in phase 1).
    neg = [i for i, (_, b) in enumerate(rows) if b < 0]
    nart = len(neg)
    ncols = n + m + nart
    tab = []
    art_of_row = {}
    k = 0
    for i, (coeffs, b) in enumerate(rows):
        row = list(coeffs) + [ZERO] * (m + nart) + [b]
        row[n + i] = ONE
        if b < 0:
            row = [-a for a in row]
            row[n + m + k] = ONE
            art_of_row[i] = n + m + k
            k += 1
        tab.append(row)

    basis = [art_of_row.get(i, n + i) for i in range(m)]

    if nart:
        # Phase 1: maximize -sum(artificials).
        phase1 = [ZERO] * (ncols + 1)
        for j in range(n + m + nart):
            phase1[j] = -ONE if j >= n + m else ZERO
        tab.append(phase1)
        for i in range(m):
            if basis[i] >= n + m:
                tab[-1] = [a + b for a, b in zip(tab[-1], tab[i])]
        status = _run_simplex(tab, basis, ncols)
        if status != OPTIMAL or tab[-1][-1] != 0:
            return INFEASIBLE, None
        tab.pop()
        # Drive any artificial still in the basis out; drop redundant rows.
        drop = []
        for i in range(m):
            if basis[i] >= n + m:
                col = -1
                for j in range(n + m):
                    if tab[i][j] != 0:
                        col = j
                        break
                if col >= 0:
                    _pivot(tab, basis, i, col)
                else:
                    drop.append(i)
        for i in reversed(drop):
            del tab[i]
            del basis[i]
        m = len(tab)
        # Remove artificial columns.
        for i in range(len(tab)):
            tab[i] = tab[i][: n + m0] + [tab[i][-1]]
        ncols = n + m0

    objrow = [sign * c for c in obj] + [ZERO] * (ncols - n) + [ZERO]
    tab.append(objrow)
    for i in range(m):
        b = basis[i]
        factor = tab[-1][b]
        if factor:
            tab[-1] = [a - factor * c for a, c in zip(tab[-1], tab[i])]
    status = _run_simplex(tab, basis, ncols)
    if status != OPTIMAL:
        return status, None
    value = -tab[-1][-1]
    return OPTIMAL, sign * value
