"""Independent cross-checking oracles used only by the test suite.

Everything here recomputes invariants by routes disjoint from the library's
Goeritz-form machinery:

* Kauffman bracket state sum -> Jones polynomial -> determinant |V(-1)|.
* Fox calculus on the Wirtinger presentation -> Alexander polynomial.
* Seifert matrices of braid closures -> signature via numeric eigenvalues.

Only the PD parser and combinatorial crossing data are shared with the
library; all invariant arithmetic here is independent.
"""

from __future__ import annotations

import cmath
from collections import defaultdict

from glform.diagram import Diagram, _analyze, crossing_sign


# ---------------------------------------------------------------------------
# Kauffman bracket / Jones polynomial

def _mul_delta(poly: dict) -> dict:
    out = defaultdict(int)
    for p, q in poly.items():
        out[p + 2] -= q
        out[p - 2] -= q
    return dict(out)


def kauffman_bracket(d: Diagram) -> dict:
    """Bracket polynomial as {power of A: coefficient}, via the 2^c state
    sum with delta = -A^2 - A^-2.  The A-smoothing of X[a,b,c,d] joins
    (a,d) with (b,c)."""
    c = d.n_crossings
    if c == 0:
        poly = {0: 1}
        for _ in range(d.n_components - 1):
            poly = _mul_delta(poly)
        return poly
    out = defaultdict(int)
    edges = sorted({x for e in d.crossings for x in e})
    for state in range(1 << c):
        parent = {x: x for x in edges}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        a_count = 0
        for ci in range(c):
            e = d.crossings[ci]
            if (state >> ci) & 1 == 0:
                a_count += 1
                pairs = ((e[0], e[3]), (e[1], e[2]))
            else:
                pairs = ((e[0], e[1]), (e[2], e[3]))
            for x, y in pairs:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        loops = len({find(x) for x in edges}) + d.loops
        term = {2 * a_count - c: 1}
        for _ in range(loops - 1):
            term = _mul_delta(term)
        for p, q in term.items():
            out[p] += q
    return {p: q for p, q in out.items() if q}


def jones_polynomial(d: Diagram) -> dict:
    """Jones polynomial as {power of t^(1/4): coefficient}, computed as
    (-A)^(-3w) <D> with t = A^-4."""
    w = sum(crossing_sign(d, c) for c in range(d.n_crossings))
    sign = -1 if (3 * w) % 2 else 1
    return {-(p - 3 * w): sign * q for p, q in kauffman_bracket(d).items()}


def kauffman_det(d: Diagram) -> int:
    """|V(-1)| evaluated at t^(1/4) = exp(i*pi/4); the value is a rational
    integer up to a unit, so its magnitude rounds exactly."""
    z = cmath.exp(1j * cmath.pi / 4)
    v = sum(q * z ** p for p, q in jones_polynomial(d).items())
    mag = abs(v)
    n = round(mag)
    if abs(mag - n) > 1e-6:
        raise AssertionError(f"non-integral |V(-1)| = {mag}")
    return n


# ---------------------------------------------------------------------------
# Alexander polynomial via Fox calculus on the Wirtinger presentation

def _over_arcs(d: Diagram) -> dict:
    """Map each edge to its over-arc id (arcs break at under-passes)."""
    parent = {x: x for e in d.crossings for x in e}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in d.crossings:
        rx, ry = find(e[1]), find(e[3])
        if rx != ry:
            parent[rx] = ry
    return {x: find(x) for x in parent}


def alexander_polynomial(d: Diagram) -> tuple:
    """Alexander polynomial of a knot diagram, normalized to a coefficient
    tuple with positive leading term, symmetrized so mirror images and
    t <-> 1/t agree."""
    import sympy

    if d.n_components != 1:
        raise ValueError("knots only")
    if d.n_crossings == 0:
        return (1,)
    t = sympy.Symbol("t")
    arc_of = _over_arcs(d)
    arcs = sorted(set(arc_of.values()))
    aidx = {a: i for i, a in enumerate(arcs)}
    a = _analyze(d)
    rows = []
    for ci, e in enumerate(d.crossings):
        row = [sympy.Integer(0)] * len(arcs)
        over_edge = e[a.over_head_slot[ci]]
        o = aidx[arc_of[over_edge]]
        ain = aidx[arc_of[e[0]]]
        bout = aidx[arc_of[e[2]]]
        if crossing_sign(d, ci) == 1:
            row[o] += 1 - t
            row[ain] += t
            row[bout] += -1
        else:
            row[o] += t - 1
            row[ain] += 1
            row[bout] += -t
        rows.append(row)
    m = sympy.Matrix([r[:-1] for r in rows[:-1]])
    delta = sympy.expand(m.det(method="berkowitz"))
    poly = sympy.Poly(delta, t)
    coeffs = [int(c) for c in poly.all_coeffs()]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if not coeffs:
        return (0,)
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    rev = list(reversed(coeffs))
    if rev[0] < 0:
        rev = [-c for c in rev]
    return tuple(min(coeffs, rev))


# ---------------------------------------------------------------------------
# Seifert matrices of braid closures

def braid_seifert_matrix(word, strands=None) -> list:
    """Seifert matrix for the closure of a braid word (generators +-i),
    basis = loops between consecutive occurrences of the same generator."""
    if strands is None:
        strands = max(abs(x) for x in word) + 1
    occ = defaultdict(list)  # generator index -> [(position, sign)]
    for pos, x in enumerate(word):
        occ[abs(x)].append((pos, 1 if x > 0 else -1))
    loops = []  # (gen, start position, end position, start sign, end sign)
    for g, lst in sorted(occ.items()):
        for k in range(len(lst) - 1):
            (p, e1), (q, e2) = lst[k], lst[k + 1]
            loops.append((g, p, q, e1, e2))
    n = len(loops)
    v = [[0] * n for _ in range(n)]
    for i, (g, p, q, e1, e2) in enumerate(loops):
        v[i][i] = -(e1 + e2) // 2
        for j, (g2, p2, q2, f1, f2) in enumerate(loops):
            if j <= i:
                continue
            if g2 == g:
                if p2 == q:  # adjacent loops sharing the occurrence at q
                    if e2 == 1:
                        v[j][i] = -1
                    else:
                        v[i][j] = 1
            elif abs(g2 - g) == 1:
                # interleaving loops on adjacent generators link once
                if p < p2 < q < q2:
                    v[i][j] = 1 if g2 == g + 1 else 0
                    v[j][i] = 0 if g2 == g + 1 else 1
                elif p2 < p < q2 < q:
                    v[i][j] = 0 if g2 == g + 1 else 1
                    v[j][i] = 1 if g2 == g + 1 else 0
    return v


def seifert_signature(word, strands=None) -> int:
    """Signature of the braid closure from V + V^T (numeric eigenvalues;
    entries are tiny integers, so the tolerance is safe)."""
    import numpy as np

    v = braid_seifert_matrix(word, strands)
    if not v:
        return 0
    m = np.array(v, dtype=float)
    m = m + m.T
    ev = np.linalg.eigvalsh(m)
    return int((ev > 1e-9).sum() - (ev < -1e-9).sum())


def seifert_det(word, strands=None) -> int:
    """|det(V + V^T)| of the braid closure, exact over integers."""
    from fractions import Fraction

    v = braid_seifert_matrix(word, strands)
    n = len(v)
    if n == 0:
        return 1
    m = [[Fraction(v[i][j] + v[j][i]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            for cc in range(col, n):
                m[r][cc] -= f * m[col][cc]
    return abs(int(det))
