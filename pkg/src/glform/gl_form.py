"""Goeritz forms of checkerboard surfaces and the corrected signature.

For a connected diagram and a checkerboard coloring, the Goeritz matrix is
taken over the white faces (the faces not carrying the shaded spanning
surface), with one face discarded.  The type-II correction term recovers
the knot signature from any diagram, and the Euler number of the shaded
surface is minus twice that correction.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import exact_forms
from .diagram import (
    BLACK, WHITE, Coloring, Diagram, Disconnected, checkerboard,
    classify_crossing, _analyze,
)


class MultiComponent(ValueError):
    """Raised when a knot-only quantity is asked of a multi-component link."""


@dataclass(frozen=True)
class GoeritzData:
    coloring: Coloring
    matrix: exact_forms.SymMatrix
    mu: int                 # sum of Goeritz signs over type-II crossings
    b1_surface: int         # first Betti number of the shaded surface
    euler_number: int       # of the shaded surface in the double branched cover
    signature: exact_forms.SignatureTriple

    @property
    def corrected_signature(self) -> int:
        return self.signature.signature - self.mu


@dataclass(frozen=True)
class CoverBetti:
    """Betti-number data of the double cover of B^4 branched over the
    pushed-in shaded surface."""

    b2: int
    b2_plus: int
    b2_minus: int
    b2_zero: int
    signature: int
    euler_number: int


def goeritz(d: Diagram, coloring: Coloring | None = None) -> GoeritzData:
    if coloring is None:
        coloring, _ = checkerboard(d)
    if d.n_crossings == 0:
        if d.loops != 1:
            raise Disconnected("goeritz requires a connected diagram")
        m = exact_forms.SymMatrix(())
        return GoeritzData(coloring, m, 0, 0, 0,
                           exact_forms.signature_triple(m))
    a = _analyze(d)
    if a.n_cross_components != 1 or d.loops:
        raise Disconnected("goeritz requires a connected diagram")
    unshaded = WHITE if coloring.shaded == BLACK else BLACK
    white_faces = [f.id for f in a.faces
                   if coloring.color(f.id) == unshaded]
    index = {f: i for i, f in enumerate(white_faces)}
    n = len(white_faces)
    g = [[0] * n for _ in range(n)]
    mu = 0
    for c in range(d.n_crossings):
        cls = classify_crossing(d, coloring, c)
        if cls.gl_type == "II":
            mu += cls.eta
        # the two white corners of a crossing are an opposite pair
        wf = [a.corner_face[(c, k)] for k in range(4)
              if coloring.color(a.corner_face[(c, k)]) == unshaded]
        assert len(wf) == 2
        i, j = index[wf[0]], index[wf[1]]
        if i != j:
            g[i][j] -= cls.eta
            g[j][i] -= cls.eta
    for i in range(n):
        g[i][i] = -sum(g[i][j] for j in range(n) if j != i)
    # discard the white face with the highest face id
    drop = index[max(white_faces)]
    keep = [i for i in range(n) if i != drop]
    m = exact_forms.SymMatrix.from_rows(
        [[g[i][j] for j in keep] for i in keep])
    b1 = n - 1  # shaded surface: chi = (#shaded faces) - c = 2 - n
    return GoeritzData(coloring, m, mu, b1, -2 * mu,
                       exact_forms.signature_triple(m))


def knot_signature(d: Diagram) -> int:
    """Signature of a knot from any connected diagram of it."""
    if d.n_components != 1:
        raise MultiComponent("signature is implemented for knots only")
    c1, c2 = checkerboard(d)
    g1 = goeritz(d, c1)
    s1 = g1.corrected_signature
    g2 = goeritz(d, c2)
    s2 = g2.corrected_signature
    assert s1 == s2, f"colorings disagree: {s1} vs {s2}"
    return s1


def link_determinant(d: Diagram) -> int:
    """|det(L)|; zero for split diagrams, one for the unknot."""
    if d.n_crossings == 0:
        return 1 if d.loops == 1 else 0
    a = _analyze(d)
    if a.n_cross_components != 1 or d.loops:
        return 0
    g = goeritz(d)
    return abs(exact_forms.det_exact(g.matrix))


def cover_betti(g: GoeritzData) -> CoverBetti:
    """Betti numbers of the double cover of B^4 branched over the shaded
    surface pushed into the interior: b2 is the surface's first Betti
    number and the intersection form is the Goeritz form."""
    t = g.signature
    return CoverBetti(
        b2=g.b1_surface,
        b2_plus=t.n_plus,
        b2_minus=t.n_minus,
        b2_zero=t.n_zero,
        signature=t.signature,
        euler_number=g.euler_number,
    )
