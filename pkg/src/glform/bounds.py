"""Bound producers for the minimal eigenvalue counts b± and b±*.

b+(K) (resp. b-(K)) is the least number of positive (negative) eigenvalues
of the double cover of S^3 branched over a spanning surface of K; the
starred variants minimize over surfaces pushed into the 4-ball.  Every
function here turns one inequality into an explicit, provenance-tagged
bound; ``aggregate_report`` combines them all for one knot.

Provenance tags are stable strings: "surface", "Prop2-g3", "Prop2-g4",
"Prop3-gamma3", "Prop3-gamma4", "Prop4", "Prop5", "Thm2-Batson",
"Thm3-QA", "table", "slice", "no-posdef-filling".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import gl_form
from .diagram import (Diagram, checkerboard, classify_crossing, faces,
                      is_alternating, parse_pd, writhe)
from .exact_forms import definiteness


class OddSigma(ValueError):
    pass


class MissingData(ValueError):
    pass


class EvenN(ValueError):
    pass


class NonPositiveN(ValueError):
    pass


class InconsistentInput(ValueError):
    pass


class NotDealternating(ValueError):
    pass


class InconsistentDiagrams(ValueError):
    pass


INF = math.inf


@dataclass
class Interval:
    lower: float = 0.0          # all bounded quantities here are >= 0
    upper: float = INF
    provenance: list = field(default_factory=list)

    def tighten_lower(self, value, tag: str):
        if value > self.lower:
            self.lower = value
            self.provenance.append(f"{tag}: lower {value}")

    def tighten_upper(self, value, tag: str):
        value = max(0, value)
        if value < self.upper:
            self.upper = value
            self.provenance.append(f"{tag}: upper {value}")

    @property
    def contradictory(self) -> bool:
        return self.lower > self.upper

    def to_json(self):
        return {"lower": self.lower if self.lower != INF else None,
                "upper": self.upper if self.upper != INF else None,
                "provenance": list(self.provenance)}


@dataclass(frozen=True)
class KnotRecord:
    name: str
    pd: str
    sigma: int | None = None
    det: int | None = None
    v0: int | None = None
    v0_mirror: int | None = None
    tau: int | None = None
    g3: int | None = None
    g4: int | None = None
    gamma3: int | None = None
    gamma4: int | None = None
    alt: int | None = None
    dalt: int | None = None
    slice: bool = False
    qa: bool | None = None
    no_posdef_filling: bool = False

    def diagram(self) -> Diagram:
        return parse_pd(self.pd)


@dataclass
class BoundsReport:
    name: str
    b_plus: Interval
    b_minus: Interval
    b_plus_star: Interval
    b_minus_star: Interval
    gamma3: Interval
    gamma4: Interval
    dalt: Interval
    alt: Interval
    four_dim_alternating: str = "unknown"   # "yes" | "no" | "unknown"
    reason: str = ""

    def to_json(self):
        return {
            "name": self.name,
            "b_plus": self.b_plus.to_json(),
            "b_minus": self.b_minus.to_json(),
            "b_plus_star": self.b_plus_star.to_json(),
            "b_minus_star": self.b_minus_star.to_json(),
            "gamma3": self.gamma3.to_json(),
            "gamma4": self.gamma4.to_json(),
            "dalt": self.dalt.to_json(),
            "alt": self.alt.to_json(),
            "four_dim_alternating": self.four_dim_alternating,
            "reason": self.reason,
        }


# ---------------------------------------------------------------------------
# Individual bound producers

def surface_upper_bounds(d: Diagram) -> tuple[int, int]:
    """(upper bound on b+, upper bound on b-) from the two checkerboard
    surfaces of this diagram; the same numbers bound b+* and b-* since a
    spanning surface pushes into the 4-ball."""
    best_p, best_m = None, None
    for col in checkerboard(d):
        cb = gl_form.cover_betti(gl_form.goeritz(d, col))
        best_p = cb.b2_plus if best_p is None else min(best_p, cb.b2_plus)
        best_m = cb.b2_minus if best_m is None else min(best_m, cb.b2_minus)
    return best_p, best_m


def prop2_bounds(g: int, sigma: int, which: str) -> dict:
    """b+/b- (or starred, for which='g4') are at most g +- sigma/2."""
    if sigma % 2:
        raise OddSigma(f"knot signature must be even, got {sigma}")
    if which not in ("g3", "g4"):
        raise ValueError("which must be 'g3' or 'g4'")
    if g < 0:
        raise ValueError("genus must be nonnegative")
    half = sigma // 2
    tag = f"Prop2-{which}"
    return {
        "starred": which == "g4",
        "b_plus_upper": max(0, g + half),
        "b_minus_upper": max(0, g - half),
        "provenance": tag,
    }


def prop3_bounds(gamma: int, which: int) -> dict:
    """Sum constraint b+ + b- <= gamma3 (which=3) or starred <= gamma4."""
    if which not in (3, 4):
        raise ValueError("which must be 3 or 4")
    if gamma < 1:
        raise ValueError("gamma is at least 1 for any knot")
    return {
        "starred": which == 4,
        "sum_upper": gamma,
        "provenance": f"Prop3-gamma{which}",
    }


def prop4_bound(b_plus_lb: int, b_minus_lb: int) -> dict:
    """The dealternating number dominates b+ + b-."""
    return {"dalt_lower": b_plus_lb + b_minus_lb, "provenance": "Prop4"}


def prop5_bound(alt: int) -> dict:
    """b+* + b-* <= 2*ceil(alt/2) where alt is the alternation number."""
    if alt < 0:
        raise ValueError("alternation number is nonnegative")
    return {"starred": True, "sum_upper": 2 * ((alt + 1) // 2),
            "provenance": "Prop5"}


def batson_lower(sigma: int, v0_mirror: int | None) -> int:
    """Lower bound b+*(K) >= sigma(K)/2 - 2*V0(K*), clamped at 0.

    V0 is the first correction-term invariant of the mirror; without it the
    bound must be omitted, never defaulted."""
    if v0_mirror is None:
        raise MissingData("V0 of the mirror is required")
    if sigma % 2:
        raise OddSigma(f"knot signature must be even, got {sigma}")
    if v0_mirror < 0:
        raise ValueError("V0 is nonnegative")
    return max(0, sigma // 2 - 2 * v0_mirror)


def v0_from_cp2(n: int) -> int:
    """V0 of a knot bounding a null-homologous disk in punctured CP^2 whose
    double branched cover argument pins V0 = (n-1)(n+1)/8 for odd n."""
    if n <= 0:
        raise NonPositiveN(n)
    if n % 2 == 0:
        raise EvenN(n)
    return (n - 1) * (n + 1) // 8


def h2_move_sigma(d1: Diagram, d2: Diagram) -> tuple[int, str]:
    """Signature of the trace cobordism of a single H(2) band move taking
    d1 to d2; the caller asserts the diagrams differ by one such move."""
    s1, s2 = gl_form.knot_signature(d1), gl_form.knot_signature(d2)
    w1, w2 = writhe(d1), writhe(d2)
    num = 2 * (s2 - s1) + (w2 - w1)
    if num % 2:
        raise InconsistentInput("formula value is not an integer")
    val = num // 2
    if val not in (-1, 0, 1):
        raise InconsistentInput(
            f"sigma(M_C) = {val} impossible for a rank-1 cobordism")
    cls = {1: "positive", -1: "negative", 0: "neutral"}[val]
    return val, cls


# ---------------------------------------------------------------------------
# Almost-alternating accounting audit

def _face_fingerprints(d: Diagram):
    """Face id -> frozenset of incident edge labels (stable under crossing
    changes, which permute slots but keep edge labels)."""
    out = {}
    for f in faces(d):
        edges = set()
        for ci, k in f.corners:
            e = d.crossings[ci]
            edges.add(e[k])
            edges.add(e[(k + 1) % 4])
        out[f.id] = frozenset(edges)
    return out


def _change_keeping_labels(d: Diagram, changed) -> Diagram:
    """Crossing change that preserves edge labels (unlike the public
    crossing_change, which renormalizes), so faces stay comparable."""
    from .diagram import _analyze
    a = _analyze(d)
    rows = []
    for ci, cr in enumerate(d.crossings):
        if ci in changed:
            k = a.over_head_slot[ci]
            rows.append(tuple(cr[(s + k) % 4] for s in range(4)))
        else:
            rows.append(tuple(cr))
    return Diagram(tuple(rows), d.loops)


def _matching_coloring(d: Diagram, d2: Diagram, col2) -> object:
    """The coloring of d shading the same geometric faces col2 shades in
    d2 (the diagrams differ only by crossing changes)."""
    fp, fp2 = _face_fingerprints(d), _face_fingerprints(d2)
    shaded2 = {fp2[i] for i in range(len(fp2))
               if col2.color(i) == col2.shaded}
    for col in checkerboard(d):
        shaded = {fp[i] for i in range(len(fp))
                  if col.color(i) == col.shaded}
        if shaded == shaded2:
            return col
    raise InconsistentInput("no matching checkerboard coloring")


def almost_alternating_audit(d: Diagram, changed) -> dict:
    """Mechanical check of the eigenvalue accounting behind the
    dealternating-number bound.

    ``changed`` is a set of crossings whose change makes d alternating.
    With the coloring chosen so the alternating diagram's Goeritz form is
    positive definite, the Type I / Type II counts among the changed
    crossings must dominate the cover's negative/positive eigenvalue
    counts, corrected by the signature jump.
    """
    changed = frozenset(changed)
    d2 = _change_keeping_labels(d, changed)
    if not is_alternating(d2):
        raise NotDealternating(
            "changing the given crossings does not alternate the diagram")
    # pick the coloring making the alternating Goeritz form positive
    # (semi-)definite
    chosen2 = None
    for col2 in checkerboard(d2):
        g2 = gl_form.goeritz(d2, col2)
        if definiteness(g2.matrix) in ("positive", "empty"):
            chosen2 = col2
            break
    if chosen2 is None:
        raise InconsistentInput(
            "no positive definite coloring on the alternating diagram")
    col_b = _matching_coloring(d, d2, chosen2)   # shaded surface B
    col_w = next(c for c in checkerboard(d)
                 if c.face_colors != col_b.face_colors)
    mb = gl_form.cover_betti(gl_form.goeritz(d, col_b))
    mw = gl_form.cover_betti(gl_form.goeritz(d, col_w))
    # types are taken in the alternating diagram; with the positive
    # definite coloring fixed, the n1 count pairs with the negative
    # eigenvalues of M_B, which is our Type II class
    n1 = sum(1 for c in changed
             if classify_crossing(d2, chosen2, c).gl_type == "II")
    n2 = len(changed) - n1
    sig = gl_form.knot_signature(d)
    sig2 = gl_form.knot_signature(d2)
    ineq1 = n1 >= mb.b2_minus + (sig - sig2) // 2
    ineq2 = n2 >= mw.b2_plus + (sig2 - sig) // 2
    ineq3 = n1 + n2 >= mw.b2_plus + mb.b2_minus
    return {
        "n1": n1, "n2": n2,
        "b2_minus_MB": mb.b2_minus, "b2_plus_MW": mw.b2_plus,
        "sigma": sig, "sigma_alternating": sig2,
        "inequality_type1": ineq1,
        "inequality_type2": ineq2,
        "inequality_total": ineq3,
        "all_hold": ineq1 and ineq2 and ineq3,
    }


# ---------------------------------------------------------------------------
# Aggregation

def _apply_sum_constraint(iv_a: Interval, iv_b: Interval, total, tag):
    # a + b <= total tightens each upper bound by the other's lower bound
    iv_a.tighten_upper(total - iv_b.lower, tag)
    iv_b.tighten_upper(total - iv_a.lower, tag)


def aggregate_report(rec: KnotRecord, diagrams=(), qa=None) -> BoundsReport:
    """Combine every applicable inequality for one knot.

    ``diagrams`` are additional presentations of the same knot (checked for
    sigma/det agreement); ``qa`` is an optional QAVerdict for the knot.
    """
    ds = [rec.diagram()] + list(diagrams)
    sig = gl_form.knot_signature(ds[0])
    det = gl_form.link_determinant(ds[0])
    for other in ds[1:]:
        if (gl_form.knot_signature(other) != sig
                or gl_form.link_determinant(other) != det):
            raise InconsistentDiagrams(
                "supplied diagrams disagree on sigma or det")
    if rec.sigma is not None and rec.sigma != sig:
        raise InconsistentDiagrams(
            f"table sigma {rec.sigma} != computed {sig}")
    if rec.det is not None and rec.det != det:
        raise InconsistentDiagrams(f"table det {rec.det} != computed {det}")

    bp, bm = Interval(), Interval()
    bps, bms = Interval(), Interval()
    g3iv, g4iv = Interval(), Interval()
    daltiv, altiv = Interval(), Interval()

    for label, iv in (("gamma3", g3iv), ("gamma4", g4iv),
                      ("dalt", daltiv), ("alt", altiv)):
        val = getattr(rec, label)
        if val is not None:
            iv.tighten_lower(val, "table")
            iv.tighten_upper(val, "table")

    # surfaces: every diagram's checkerboard covers bound b+- from above
    for d in ds:
        up, um = surface_upper_bounds(d)
        bp.tighten_upper(up, "surface")
        bm.tighten_upper(um, "surface")

    # genus inequalities
    if rec.g3 is not None:
        r = prop2_bounds(rec.g3, sig, "g3")
        bp.tighten_upper(r["b_plus_upper"], r["provenance"])
        bm.tighten_upper(r["b_minus_upper"], r["provenance"])
    if rec.g4 is not None:
        r = prop2_bounds(rec.g4, sig, "g4")
        bps.tighten_upper(r["b_plus_upper"], r["provenance"])
        bms.tighten_upper(r["b_minus_upper"], r["provenance"])

    # Batson-style lower bound on b+*
    if rec.v0_mirror is not None:
        bps.tighten_lower(batson_lower(sig, rec.v0_mirror), "Thm2-Batson")

    # quasi-alternating certificate kills both starred counts
    if qa is not None and getattr(qa, "status", None) == "certified":
        bps.tighten_upper(0, "Thm3-QA")
        bms.tighten_upper(0, "Thm3-QA")

    # starred counts are dominated by unstarred ones (push the surface in)
    bps.tighten_upper(bp.upper, "surface")
    bms.tighten_upper(bm.upper, "surface")

    # sum constraints
    if rec.gamma3 is not None:
        r = prop3_bounds(rec.gamma3, 3)
        _apply_sum_constraint(bp, bm, r["sum_upper"], r["provenance"])
    if rec.gamma4 is not None:
        r = prop3_bounds(rec.gamma4, 4)
        _apply_sum_constraint(bps, bms, r["sum_upper"], r["provenance"])
    if rec.alt is not None:
        r = prop5_bound(rec.alt)
        _apply_sum_constraint(bps, bms, r["sum_upper"], r["provenance"])

    # contrapositives: lower bounds on the gammas and dalt
    g3iv.tighten_lower(bp.lower + bm.lower, "Prop3-gamma3")
    g4iv.tighten_lower(bps.lower + bms.lower, "Prop3-gamma4")
    daltiv.tighten_lower(
        prop4_bound(bp.lower, bm.lower)["dalt_lower"], "Prop4")

    yes_reasons, no_reasons = [], []
    if qa is not None and getattr(qa, "status", None) == "certified":
        yes_reasons.append("Thm3-QA")
    if rec.slice:
        yes_reasons.append("slice")
    if bps.lower > 0 or bms.lower > 0:
        no_reasons.append("positive starred lower bound")
    if rec.no_posdef_filling:
        no_reasons.append("no-posdef-filling")
    if yes_reasons and no_reasons:
        raise InconsistentInput(
            f"4-dim alternating both ways: {yes_reasons} vs {no_reasons}")
    if no_reasons:
        verdict, reason = "no", "; ".join(no_reasons)
    elif yes_reasons:
        verdict, reason = "yes", "; ".join(yes_reasons)
    else:
        verdict, reason = "unknown", "no applicable certificate or flag"

    report = BoundsReport(rec.name, bp, bm, bps, bms, g3iv, g4iv,
                          daltiv, altiv, verdict, reason)
    for iv in (bp, bm, bps, bms, g3iv, g4iv, daltiv, altiv):
        if iv.contradictory:
            raise InconsistentInput(
                f"contradictory interval in report for {rec.name}: "
                f"{iv.to_json()}")
    return report
