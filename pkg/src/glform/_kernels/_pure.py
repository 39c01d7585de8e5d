"""Reference implementations of the exact integer-matrix kernels.

Arbitrary-precision and allocation-heavy; the compiled backend in
``_fast`` mirrors these semantics for machine-word-sized inputs.
"""

from __future__ import annotations

from fractions import Fraction


def det_exact(rows: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss)
    elimination with partial pivoting."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def signature_triple(rows: list[list[int]]) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a symmetric integer matrix, by exact
    symmetric congruence reduction over the rationals.

    Nonzero diagonal entries are used as 1x1 pivots; when the remaining
    diagonal vanishes, a hyperbolic 2x2 pivot contributes (1, 1, 0).
    """
    n = len(rows)
    a = {(i, j): Fraction(rows[i][j]) for i in range(n) for j in range(n)}
    for i in range(n):
        for j in range(n):
            if rows[i][j] != rows[j][i]:
                raise ValueError("matrix is not symmetric")
    live = list(range(n))
    n_plus = n_minus = n_zero = 0
    while live:
        # best 1x1 pivot: largest |diagonal|
        p = max(live, key=lambda i: abs(a[(i, i)]))
        if a[(p, p)] != 0:
            d = a[(p, p)]
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            live.remove(p)
            col = {i: a[(i, p)] for i in live}
            for i in live:
                if col[i] == 0:
                    continue
                for j in live:
                    a[(i, j)] -= col[i] * col[j] / d
            continue
        # diagonal is zero everywhere: find an off-diagonal entry
        off = None
        for i in live:
            for j in live:
                if i < j and a[(i, j)] != 0:
                    off = (i, j)
                    break
            if off:
                break
        if off is None:
            n_zero += len(live)
            break
        p, q = off
        b = a[(p, q)]
        n_plus += 1
        n_minus += 1
        live.remove(p)
        live.remove(q)
        u = {i: a[(i, p)] for i in live}
        v = {i: a[(i, q)] for i in live}
        for i in live:
            for j in live:
                a[(i, j)] -= (u[i] * v[j] + v[i] * u[j]) / b
    return n_plus, n_minus, n_zero


def smith_invariant_factors(rows: list[list[int]]) -> list[int]:
    """Invariant factors d1 | d2 | ... of an integer matrix, nonnegative,
    padded with zeros to min(m, n)."""
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    res = []
    top = 0
    while top < min(m, n):
        # find a nonzero entry in the submatrix
        piv = None
        for i in range(top, m):
            for j in range(top, n):
                if a[i][j] != 0:
                    if piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        a[top], a[i0] = a[i0], a[top]
        for r in range(m):
            a[r][top], a[r][j0] = a[r][j0], a[r][top]
        # clear row and column by division-with-remainder rounds
        while True:
            dirty = False
            for i in range(top + 1, m):
                if a[i][top] % a[top][top] != 0:
                    q = a[i][top] // a[top][top]
                    for j in range(top, n):
                        a[i][j] -= q * a[top][j]
                    a[top], a[i] = a[i], a[top]
                    dirty = True
            if dirty:
                continue
            for i in range(top + 1, m):
                if a[i][top]:
                    q = a[i][top] // a[top][top]
                    for j in range(top, n):
                        a[i][j] -= q * a[top][j]
            for j in range(top + 1, n):
                if a[top][j] % a[top][top] != 0:
                    q = a[top][j] // a[top][top]
                    for i in range(top, m):
                        a[i][j] -= q * a[i][top]
                    for i in range(top, m):
                        a[i][top], a[i][j] = a[i][j], a[i][top]
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(top + 1, n):
                if a[top][j]:
                    q = a[top][j] // a[top][top]
                    for i in range(top, m):
                        a[i][j] -= q * a[i][top]
            # divisibility condition against the rest of the block
            fix = None
            for i in range(top + 1, m):
                for j in range(top + 1, n):
                    if a[i][j] % a[top][top] != 0:
                        fix = i
                        break
                if fix is not None:
                    break
            if fix is None:
                break
            for j in range(top, n):
                a[top][j] += a[fix][j]
        res.append(abs(a[top][top]))
        top += 1
    res += [0] * (min(m, n) - len(res))
    return res
