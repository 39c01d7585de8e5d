"""Diagram builders: braid closures, rational tangles, Montesinos sums.

Package-private; used to assemble the bundled reference table and by the
test suite to manufacture diagrams with known invariants.
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import Diagram, _normalize


def braid_closure(word: list[int], strands: int | None = None) -> Diagram:
    """Closure of a braid word; letter i > 0 is the positive generator
    crossing strands i and i+1 (strand i passing over), -i its inverse."""
    if strands is None:
        strands = max((abs(w) for w in word), default=1) + 1
    if any(w == 0 or abs(w) >= strands for w in word):
        raise ValueError("letters must satisfy 1 <= |letter| < strands")
    cur = list(range(strands))          # current arc id at each position
    nxt = strands
    crossings = []
    for w in word:
        i = abs(w) - 1
        left, right = cur[i], cur[i + 1]
        new_l, new_r = nxt, nxt + 1
        nxt += 2
        if w > 0:
            # positive: under-strand from lower-right to upper-left
            crossings.append([right, new_r, new_l, left])
        else:
            crossings.append([left, right, new_r, new_l])
        cur[i], cur[i + 1] = new_l, new_r
    # close up: identify final arcs with initial ones
    rep = {}

    def find(x):
        while x in rep:
            x = rep[x]
        return x

    loops = 0
    for pos in range(strands):
        a, b = find(cur[pos]), find(pos)
        if a == b:
            loops += 1          # a strand no crossing ever touched
        else:
            rep[a] = b
    slots = [[find(x) for x in cr] for cr in crossings]
    if not slots:
        return Diagram((), loops=loops)
    d = _normalize(slots, 0)
    return Diagram(d.crossings, loops=d.loops + loops) if loops else d


class Tangle:
    """A 2-string tangle under construction: soup crossings plus the four
    boundary arc ids at compass positions."""

    def __init__(self):
        self.crossings: list[list[int]] = []  # under-strand in slots {0,2}
        self.nxt = 0
        self.nw = self.ne = self.sw = self.se = None

    def _fresh(self) -> int:
        self.nxt += 1
        return self.nxt - 1

    @classmethod
    def zero(cls) -> "Tangle":
        """Two horizontal strands: NW-NE and SW-SE."""
        t = cls()
        top, bot = t._fresh(), t._fresh()
        t.nw = t.ne = top
        t.sw = t.se = bot
        return t

    @classmethod
    def infinity(cls) -> "Tangle":
        t = cls()
        left, right = t._fresh(), t._fresh()
        t.nw = t.sw = left
        t.ne = t.se = right
        return t

    def _crossing(self, nw, ne, sw, se, under_sw_ne: bool):
        # counterclockwise slot order with the under-strand in slots {0, 2}
        if under_sw_ne:
            self.crossings.append([sw, se, ne, nw])
        else:
            self.crossings.append([se, ne, nw, sw])

    def twist_right(self, sign: int) -> "Tangle":
        """Append |sign| crossings on the east side; positive twists make
        an alternating row when iterated."""
        for _ in range(abs(sign)):
            a, b = self._fresh(), self._fresh()
            self._crossing(self.ne, a, self.se, b, under_sw_ne=(sign > 0))
            self.ne, self.se = a, b
        return self

    def twist_bottom(self, sign: int) -> "Tangle":
        """Append |sign| crossings below; the handedness pairs with
        twist_right so that same-sign words stay alternating."""
        for _ in range(abs(sign)):
            a, b = self._fresh(), self._fresh()
            self._crossing(self.sw, self.se, a, b, under_sw_ne=(sign > 0))
            self.sw, self.se = a, b
        return self

    def rotate(self) -> "Tangle":
        """Quarter turn counterclockwise."""
        self.nw, self.ne, self.se, self.sw = self.ne, self.se, self.sw, self.nw
        return self

    def reflect(self) -> "Tangle":
        """Switch every crossing (mirror through the plane)."""
        for cr in self.crossings:
            cr[:] = [cr[1], cr[2], cr[3], cr[0]]
        return self

    def join(self, other: "Tangle") -> "Tangle":
        """Horizontal tangle sum: self on the west, other on the east."""
        shift = self.nxt
        glue = {other.nw: self.ne, other.sw: self.se}
        for cr in other.crossings:
            self.crossings.append(
                [glue.get(a, a + shift) for a in cr])
        self.ne = glue.get(other.ne, other.ne + shift)
        self.se = glue.get(other.se, other.se + shift)
        self.nxt += other.nxt
        return self

    def numerator_closure(self) -> Diagram:
        glue = {}

        def find(x):
            while x in glue:
                x = glue[x]
            return x

        loops = 0
        for a, b in ((self.nw, self.ne), (self.sw, self.se)):
            ra, rb = find(a), find(b)
            if ra == rb:
                loops += 1
            else:
                glue[ra] = rb
        slots = [[find(a) for a in cr] for cr in self.crossings]
        if not slots:
            return Diagram((), loops=loops)
        d = _normalize(slots, 0)
        return Diagram(d.crossings, loops=d.loops + loops) if loops else d


def continued_fraction(p: int, q: int) -> list[int]:
    """All-positive continued fraction of p/q > 1 (q > 0): p/q = a1 + 1/(a2
    + 1/(...)), entries >= 1."""
    out = []
    while q:
        a, r = divmod(p, q)
        out.append(a)
        p, q = q, r
    return out


def rational_tangle(p: int, q: int) -> Tangle:
    """Tangle of fraction p/q (p > q >= 1): alternating rows of right and
    bottom twists, innermost and outermost both horizontal (the continued
    fraction is normalized to odd length so the build starts and ends with
    right twists on the zero tangle)."""
    if q < 1 or p <= q:
        raise ValueError("expect p > q >= 1")
    cf = continued_fraction(p, q)
    if len(cf) % 2 == 0:
        cf = cf[:-1] + [cf[-1] - 1, 1]
    word = list(reversed(cf))  # innermost twists first
    t = Tangle.zero()
    for i, a in enumerate(word):
        if i % 2 == 0:
            t.twist_right(a)
        else:
            t.twist_bottom(a)
    return t


def rational_knot(p: int, q: int) -> Diagram:
    return rational_tangle(p, q).numerator_closure()


def fraction_tangle(f: Fraction) -> Tangle:
    """Quarter-turned rational tangle of value -beta/alpha for f =
    alpha/beta (|f| > 1); integers give vertical twist columns."""
    f = Fraction(f)
    if abs(f.numerator) <= f.denominator:
        raise ValueError("expect |f| > 1")
    t = rational_tangle(abs(f.numerator), f.denominator)
    if f < 0:
        t.reflect()
    return t.rotate()


def montesinos(fractions: list[Fraction | int], e: int = 0) -> Diagram:
    """Numerator closure of the sum of quarter-turned rational tangles of
    the given fractions alpha/beta, with e extra horizontal twists."""
    total = None
    for f in fractions:
        t = fraction_tangle(Fraction(f))
        total = t if total is None else total.join(t)
    if e:
        total.twist_right(e)
    return total.numerator_closure()


def pretzel(*twists: int) -> Diagram:
    """Pretzel link: vertical twist columns joined side by side."""
    return montesinos(list(twists))
