"""Planar link diagrams from PD codes: faces, checkerboard colorings, smoothings.

A diagram is a list of crossings, each a 4-tuple of edge labels in
counterclockwise order starting at the incoming under-strand (the usual
convention for published PD codes).  Zero-crossing unknot components cannot
be expressed by crossings, so a diagram carries an explicit ``loops`` count
and the PD grammar admits a ``components=k;`` prefix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product


class DiagramError(Exception):
    pass


class MalformedCode(DiagramError):
    """PD text violates the grammar, or the code is not orientable."""


class BadValence(DiagramError):
    """Some edge label does not appear exactly twice."""


class NonSphericalEmbedding(DiagramError):
    """Face tracing fails the Euler check V - E + F = 2 per component."""


class Disconnected(DiagramError):
    pass


BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class Diagram:
    """Immutable oriented link diagram.

    crossings: 4-tuples of edge labels, counterclockwise from the incoming
    under-strand.  loops: number of crossing-free unknot components.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    loops: int = 0

    def __post_init__(self):
        _analyze(self)  # validate eagerly

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(_analyze(self).strands) + self.loops

    def __repr__(self):
        return f"Diagram({serialize(self)!r})"


@dataclass(frozen=True)
class Face:
    id: int
    # corners as (crossing index, corner index); corner k sits between
    # slots k and k+1 (mod 4) of the crossing
    corners: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Coloring:
    """Checkerboard 2-coloring of the faces; ``shaded`` names the color of
    the spanning surface the coloring selects."""

    face_colors: tuple[str, ...]
    shaded: str = BLACK

    def color(self, face_id: int) -> str:
        return self.face_colors[face_id]


@dataclass(frozen=True)
class CrossingClass:
    eta: int          # Goeritz sign, +1 or -1
    gl_type: str      # "I" or "II" relative to the shaded surface


class _Analysis:
    """Derived combinatorial structure of a diagram (validated)."""

    __slots__ = (
        "occ", "head", "strands", "faces", "face_of_dart", "corner_face",
        "n_cross_components", "over_head_slot",
    )

    def __init__(self, occ, head, strands, faces, face_of_dart, corner_face,
                 n_cross_components, over_head_slot):
        self.occ = occ
        self.head = head
        self.strands = strands
        self.faces = faces
        self.face_of_dart = face_of_dart
        self.corner_face = corner_face
        self.n_cross_components = n_cross_components
        self.over_head_slot = over_head_slot


@lru_cache(maxsize=None)
def _analyze(d: Diagram) -> _Analysis:
    crossings = d.crossings
    n = len(crossings)
    if d.loops < 0:
        raise MalformedCode("negative loop count")
    if n == 0:
        if d.loops < 1:
            raise MalformedCode("empty diagram must declare components")
        return _Analysis({}, {}, [], [], {}, {}, 0, {})

    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, cr in enumerate(crossings):
        if len(cr) != 4:
            raise MalformedCode(f"crossing {ci} does not have 4 slots")
        for si, e in enumerate(cr):
            if not isinstance(e, int) or e < 1:
                raise MalformedCode(f"bad edge label {e!r}")
            occ.setdefault(e, []).append((ci, si))
    for e, places in occ.items():
        if len(places) != 2:
            raise BadValence(f"edge {e} appears {len(places)} times")

    # Orient: slot 0 is the incoming under-strand, slot 2 outgoing; over
    # slots get one head and one tail; each edge has one head and one tail.
    head: dict[tuple[int, int], bool] = {}

    def assign(o, val):
        if o in head:
            if head[o] != val:
                raise MalformedCode("inconsistent strand orientation")
            return
        head[o] = val
        stack = [o]
        while stack:
            ci, si = stack.pop()
            val = head[(ci, si)]
            a, b = occ[crossings[ci][si]]
            partner = b if (ci, si) == a else a
            if partner not in head:
                head[partner] = not val
                stack.append(partner)
            elif head[partner] == val:
                raise MalformedCode("inconsistent strand orientation")
            if si in (1, 3):
                sib = (ci, 4 - si)
                if sib not in head:
                    head[sib] = not val
                    stack.append(sib)
                elif head[sib] == val:
                    raise MalformedCode("inconsistent strand orientation")

    for ci in range(n):
        assign((ci, 0), True)
        assign((ci, 2), False)
    for ci in range(n):
        for si in (1, 3):
            if (ci, si) not in head:
                assign((ci, si), True)  # over-only component: pick a direction

    over_head_slot = {}
    for ci in range(n):
        over_head_slot[ci] = 1 if head[(ci, 1)] else 3

    # Strand components: entering slot s leaves via slot s+2.
    seen_occ = set()
    strands = []
    for start in sorted(head):
        if start in seen_occ or not head[start]:
            continue
        comp = []
        cur = start  # an incoming occurrence
        while cur not in seen_occ:
            seen_occ.add(cur)
            ci, si = cur
            out = (ci, (si + 2) % 4)
            seen_occ.add(out)
            e = crossings[ci][(si + 2) % 4]
            comp.append(e)
            a, b = occ[e]
            cur = b if out == a else a
        strands.append(tuple(comp))

    # Faces: dart (ci, si) = leaving crossing ci along the edge in slot si.
    # Arriving at the far end (cj, sj), the face turns to dart (cj, sj+1)
    # and owns the corner sj there.
    def next_dart(dart):
        ci, si = dart
        a, b = occ[crossings[ci][si]]
        cj, sj = b if (ci, si) == a else a
        return (cj, (sj + 1) % 4), (cj, sj)

    face_of_dart = {}
    corner_face = {}
    faces = []
    for ci in range(n):
        for si in range(4):
            if (ci, si) in face_of_dart:
                continue
            fid = len(faces)
            corners = []
            dart = (ci, si)
            while dart not in face_of_dart:
                face_of_dart[dart] = fid
                dart, corner = next_dart(dart)
                corners.append(corner)
                corner_face[corner] = fid
            faces.append(Face(fid, tuple(corners)))

    # Euler check per connected component of the crossing graph.
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e, ((c1, _), (c2, _)) in occ.items():
        parent[find(c1)] = find(c2)
    comp_ids = {find(ci) for ci in range(n)}
    n_comp = len(comp_ids)
    faces_per_comp: dict[int, set[int]] = {c: set() for c in comp_ids}
    for (ci, si), fid in face_of_dart.items():
        faces_per_comp[find(ci)].add(fid)
    for root, fset in faces_per_comp.items():
        v = sum(1 for ci in range(n) if find(ci) == root)
        if len(fset) != v + 2:
            raise NonSphericalEmbedding(
                f"component with {v} crossings traces {len(fset)} faces")

    return _Analysis(occ, head, strands, faces, face_of_dart, corner_face,
                     n_comp, over_head_slot)


_PD_RE = re.compile(r"^PD\[(.*)\]$", re.DOTALL)
_X_RE = re.compile(r"X\[([^\]]*)\]")


def parse_pd(text: str) -> Diagram:
    """Parse a PD code, e.g. ``PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]``.

    An optional ``components=k;`` prefix declares the total component count
    (required for 0-crossing diagrams, which PD cannot express).
    """
    s = re.sub(r"\s+", "", text)
    declared = None
    m = re.match(r"^components=(\d+);", s)
    if m:
        declared = int(m.group(1))
        s = s[m.end():]
    m = _PD_RE.match(s)
    if not m:
        raise MalformedCode(f"not a PD code: {text!r}")
    body = m.group(1)
    crossings = []
    if body:
        pos = 0
        for xm in _X_RE.finditer(body):
            head_txt = body[pos:xm.start()].strip(",")
            if head_txt:
                raise MalformedCode(f"unexpected text {head_txt!r}")
            parts = xm.group(1).split(",") if xm.group(1) else []
            if len(parts) != 4:
                raise MalformedCode(
                    f"crossing needs 4 labels, got {len(parts)}")
            try:
                cr = tuple(int(p) for p in parts)
            except ValueError as exc:
                raise MalformedCode(str(exc)) from None
            if any(e < 1 for e in cr):
                raise MalformedCode("edge labels must be positive")
            crossings.append(cr)
            pos = xm.end()
        if body[pos:].strip(","):
            raise MalformedCode(f"unexpected trailing {body[pos:]!r}")

    # normalize labels to 1..2c, preserving order
    labels = sorted({e for cr in crossings for e in cr})
    counts = {}
    for cr in crossings:
        for e in cr:
            counts[e] = counts.get(e, 0) + 1
    for e, k in counts.items():
        if k != 2:
            raise BadValence(f"edge {e} appears {k} times")
    relab = {e: i + 1 for i, e in enumerate(labels)}
    crossings = tuple(tuple(relab[e] for e in cr) for cr in crossings)

    if not crossings:
        k = declared if declared is not None else 1
        if k < 1:
            raise MalformedCode("component count must be positive")
        return Diagram((), loops=k)
    d = Diagram(crossings, loops=0)
    if declared is not None:
        strands = len(_analyze(d).strands)
        if declared < strands:
            raise MalformedCode(
                f"declared {declared} components but code traces {strands}")
        d = Diagram(crossings, loops=declared - strands)
    return d


def serialize(d: Diagram) -> str:
    body = ",".join("X[%d,%d,%d,%d]" % cr for cr in d.crossings)
    if d.n_crossings == 0:
        return f"components={d.loops};PD[]"
    if d.loops:
        return f"components={d.n_components};PD[{body}]"
    return f"PD[{body}]"


def faces(d: Diagram) -> list[Face]:
    if d.n_crossings == 0:
        if d.loops != 1:
            raise Disconnected("faces requires a connected diagram")
        return [Face(0, ()), Face(1, ())]
    a = _analyze(d)
    if a.n_cross_components != 1 or d.loops:
        raise Disconnected("faces requires a connected diagram")
    return list(a.faces)


def is_connected(d: Diagram) -> bool:
    if d.n_crossings == 0:
        return d.loops == 1
    return _analyze(d).n_cross_components == 1 and d.loops == 0


def checkerboard(d: Diagram) -> tuple[Coloring, Coloring]:
    """The two checkerboard colorings of a connected diagram.

    In the first coloring the face to the left of edge 1 (the face traced
    from edge 1's outgoing dart) is white.
    """
    if d.n_crossings == 0:
        if d.loops != 1:
            raise Disconnected("checkerboard requires a connected diagram")
        first = Coloring((WHITE, BLACK))
        return first, Coloring((BLACK, WHITE))
    a = _analyze(d)
    if a.n_cross_components != 1 or d.loops:
        raise Disconnected("checkerboard requires a connected diagram")
    nf = len(a.faces)
    colors = [None] * nf
    # bipartition: the two darts of an edge lie in faces of opposite color
    colors[0] = 0
    stack = [0]
    adj = [[] for _ in range(nf)]
    for e, ((c1, s1), (c2, s2)) in a.occ.items():
        f1 = a.face_of_dart[(c1, s1)]
        f2 = a.face_of_dart[(c2, s2)]
        adj[f1].append(f2)
        adj[f2].append(f1)
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if colors[g] is None:
                colors[g] = 1 - colors[f]
                stack.append(g)
            elif colors[g] == colors[f]:
                raise NonSphericalEmbedding("faces are not 2-colorable")
    # orient so that edge 1's left face is white in the first coloring
    tail = next(o for o in a.occ[1] if not a.head[o])
    left = a.face_of_dart[tail]
    pal = (WHITE, BLACK) if colors[left] == 0 else (BLACK, WHITE)
    first = Coloring(tuple(pal[c] for c in colors))
    swap = {WHITE: BLACK, BLACK: WHITE}
    second = Coloring(tuple(swap[c] for c in first.face_colors))
    return first, second


# Pinned by calibration against the bundled census (see README conventions
# note): these two switches fix the Goeritz sign and the type-I/II split.
_ETA_SIGN = -1
_TYPE_I_IS_SHADED = False


def classify_crossing(d: Diagram, coloring: Coloring, c: int) -> CrossingClass:
    a = _analyze(d)
    if not (0 <= c < d.n_crossings):
        raise IndexError(f"no crossing {c}")
    corner0 = coloring.color(a.corner_face[(c, 0)])
    eta = _ETA_SIGN * (1 if corner0 == coloring.shaded else -1)
    over_in = a.over_head_slot[c]
    both_in_corner = (c, 0) if over_in == 1 else (c, 3)
    col = coloring.color(a.corner_face[both_in_corner])
    is_type_i = (col == coloring.shaded) == _TYPE_I_IS_SHADED
    return CrossingClass(eta=eta, gl_type="I" if is_type_i else "II")


def crossing_sign(d: Diagram, c: int) -> int:
    """Orientation sign of a crossing: +1 when the over-strand enters at
    slot 3, -1 when it enters at slot 1."""
    a = _analyze(d)
    return 1 if a.over_head_slot[c] == 3 else -1


def writhe(d: Diagram) -> int:
    return sum(crossing_sign(d, c) for c in range(d.n_crossings))


def is_alternating(d: Diagram) -> bool:
    return dealternating_distance(d)[0] == 0


# ---------------------------------------------------------------------------
# Soup: a mutable scratch representation used by mirror/resolve/simplify.
# A soup crossing is a cyclic 4-tuple of port ids with the under-strand in
# slots {0, 2}; ports are joined either by arcs (two ports per arc) or by
# explicit splices from deleted crossings.


class _Soup:
    def __init__(self, d: Diagram):
        self.cross = [list(cr) for cr in d.crossings]  # arc label per slot
        self.alive = [True] * len(self.cross)
        self.joins: list[tuple[tuple[int, int], tuple[int, int]]] = []
        self.loops = d.loops

    def delete(self, ci: int, pairing: tuple[tuple[int, int], tuple[int, int]]):
        assert self.alive[ci]
        self.alive[ci] = False
        for s1, s2 in pairing:
            self.joins.append(((ci, s1), (ci, s2)))

    def rotate(self, ci: int, k: int):
        self.cross[ci] = self.cross[ci][k:] + self.cross[ci][:k]

    def to_diagram(self) -> Diagram:
        # Gather surviving ports; arcs connect ports with equal labels,
        # joins splice through deleted crossings.
        ports = {}
        for ci, cr in enumerate(self.cross):
            for si, lab in enumerate(cr):
                ports.setdefault(lab, []).append((ci, si))
        link = {}  # port -> port, through an arc or a chain of joins
        join_map = {}
        for p, q in self.joins:
            join_map.setdefault(p, []).append(q)
            join_map.setdefault(q, []).append(p)

        def arc_partner(port):
            lab = self.cross[port[0]][port[1]]
            a, b = ports[lab]
            return b if port == a else a

        # walk from each live port through arcs and splices until the next
        # live port (or back: a free loop)
        alive_port = lambda p: self.alive[p[0]]
        new_arcs = {}  # frozenset of two live port endpoints -> arc id
        arc_at = {}
        loops = self.loops
        visited = set()
        arc_id = 0
        for lab, (p1, p2) in sorted(ports.items()):
            for start in (p1, p2):
                if not alive_port(start) or start in visited:
                    continue
                # traverse: arc to partner; if dead, splice onward
                path = [start]
                cur = arc_partner(start)
                prev_was_arc = True
                while not alive_port(cur):
                    nxts = join_map[cur]
                    prev = path[-1] if False else None
                    # a dead port has exactly one splice partner
                    cur2 = nxts[0]
                    path.append(cur)
                    cur = arc_partner(cur2)
                    path.append(cur2)
                visited.add(start)
                visited.add(cur)
                if start == cur:
                    continue
                arc_at[start] = arc_id
                arc_at[cur] = arc_id
                arc_id += 1
        # free loops: closed chains that never touch a live port
        seen_dead = set()
        for p, q in self.joins:
            for s in (p, q):
                if s in seen_dead:
                    continue
                # follow the closed walk through joins and arcs
                chain = set()
                cur = s
                closed = True
                while cur not in chain:
                    chain.add(cur)
                    nxt = arc_partner(cur)
                    if alive_port(nxt):
                        closed = False
                        break
                    chain.add(nxt)
                    cur = join_map[nxt][0]
                    if alive_port(cur):
                        closed = False
                        break
                seen_dead |= chain
                if closed and chain and not any(alive_port(x) for x in chain):
                    # count each closed chain once
                    loops += 1

        live = [ci for ci in range(len(self.cross)) if self.alive[ci]]
        if not live:
            return Diagram((), loops=max(loops, 0))
        # build port->arc table for live crossings
        idx = {ci: i for i, ci in enumerate(live)}
        slots = [[arc_at[(ci, si)] for si in range(4)] for ci in live]
        return _normalize(slots, loops)


def _normalize(slots: list[list[int]], loops: int) -> Diagram:
    """Turn (crossing x slot -> arc id) with under-strand in slots {0,2}
    into a labeled oriented Diagram."""
    n = len(slots)
    if n == 0:
        return Diagram((), loops=loops)
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci in range(n):
        for si in range(4):
            occ.setdefault(slots[ci][si], []).append((ci, si))
    for a, places in occ.items():
        assert len(places) == 2, f"arc {a} has {len(places)} endpoints"
    # orient strands: pass-through successor, deterministic starts
    head = {}
    all_ports = [(ci, si) for ci in range(n) for si in range(4)]
    for start in all_ports:
        if start in head:
            continue
        cur = start
        val = True
        while cur not in head:
            head[cur] = val
            ci, si = cur
            out = (ci, (si + 2) % 4)
            head[out] = not val
            a, b = occ[slots[ci][(si + 2) % 4]]
            cur = b if out == a else a
            val = True
    # relabel arcs by walking each strand once
    rotated = [None] * n
    label = {}
    nxt = 1
    for start in all_ports:
        ci, si = start
        if not head[(ci, si)]:
            continue
        if slots[ci][si] in label:
            continue
        cur = (ci, si)
        while True:
            cci, csi = cur
            out_slot = (csi + 2) % 4
            out_arc = slots[cci][out_slot]
            if out_arc in label:
                break
            label[out_arc] = nxt
            nxt += 1
            a, b = occ[out_arc]
            cur = b if (cci, out_slot) == a else a
        # the starting arc may still be unlabeled (it is the strand's entry)
        if slots[ci][si] not in label:
            label[slots[ci][si]] = nxt
            nxt += 1
    for ci in range(n):
        # rotate so slot 0 holds the incoming under-strand
        if head[(ci, 0)]:
            rotated[ci] = [slots[ci][s] for s in range(4)]
        else:
            rotated[ci] = [slots[ci][(s + 2) % 4] for s in range(4)]
    crossings = tuple(
        tuple(label[a] for a in cr) for cr in rotated
    )
    return Diagram(crossings, loops=loops)


def mirror(d: Diagram) -> Diagram:
    """Swap over/under at every crossing (an involution)."""
    if d.n_crossings == 0:
        return d
    a = _analyze(d)
    slots = []
    for ci, cr in enumerate(d.crossings):
        # rotate by 1: the over pair {1,3} moves into slots {0,2}; pick the
        # rotation that puts the incoming over-strand at slot 0
        k = a.over_head_slot[ci]  # 1 or 3
        slots.append([cr[(s + k) % 4] for s in range(4)])
    # relabel arcs (labels are reused verbatim; they remain a valid arc id set)
    return _normalize(slots, d.loops)


def resolve(d: Diagram, c: int, r: int) -> Diagram:
    """Smooth crossing ``c``: r=0 joins slots (0,1) and (2,3); r=1 joins
    slots (0,3) and (1,2)."""
    if not (0 <= c < d.n_crossings):
        raise IndexError(f"no crossing {c}")
    if r not in (0, 1):
        raise ValueError("resolution must be 0 or 1")
    soup = _Soup(d)
    if r == 0:
        soup.delete(c, ((0, 1), (2, 3)))
    else:
        soup.delete(c, ((0, 3), (1, 2)))
    return soup.to_diagram()


def _find_r1(d: Diagram):
    a = _analyze(d)
    for f in a.faces:
        if len(f.corners) == 1:
            return f.corners[0]
    return None


def _find_r2(d: Diagram):
    a = _analyze(d)
    for f in a.faces:
        if len(f.corners) != 2:
            continue
        (c1, k1), (c2, k2) = f.corners
        if c1 == c2:
            continue
        # the bigon edge in slots (k1, k1+1) at c1; over iff in an odd slot
        e = d.crossings[c1][(k1 + 1) % 4]
        if e not in d.crossings[c2]:
            e = d.crossings[c1][k1]
        s1 = d.crossings[c1].index(e) if d.crossings[c1].count(e) == 1 else None
        s2 = d.crossings[c2].index(e) if d.crossings[c2].count(e) == 1 else None
        if s1 is None or s2 is None:
            continue
        if (s1 % 2) == (s2 % 2):
            return c1, c2
    return None


def simplify(d: Diagram) -> Diagram:
    """Greedy exhaustive R1 and untwisting-R2 reduction."""
    while True:
        if d.n_crossings == 0:
            return d
        spot = _find_r1(d)
        if spot is not None:
            ci, k = spot
            soup = _Soup(d)
            soup.delete(ci, (((k) % 4, (k + 3) % 4), ((k + 1) % 4, (k + 2) % 4)))
            d = soup.to_diagram()
            continue
        pair = _find_r2(d)
        if pair is not None:
            c1, c2 = pair
            soup = _Soup(d)
            soup.delete(c1, ((0, 2), (1, 3)))
            soup.delete(c2, ((0, 2), (1, 3)))
            d = soup.to_diagram()
            continue
        return d


def dealternating_distance(d: Diagram) -> tuple[int, frozenset[int]]:
    """Hamming distance from the diagram's over/under assignment to the
    nearer of the two alternating assignments of its projection, with a
    witnessing crossing set."""
    if d.n_crossings == 0:
        if d.loops != 1:
            raise Disconnected("dealternating_distance needs a connected diagram")
        return 0, frozenset()
    if not is_connected(d):
        raise Disconnected("dealternating_distance needs a connected diagram")
    col, _ = checkerboard(d)
    a = _analyze(d)
    sides = [a.corner_face[(c, 0)] for c in range(d.n_crossings)]
    black = frozenset(
        c for c in range(d.n_crossings) if col.color(sides[c]) == BLACK)
    white = frozenset(range(d.n_crossings)) - black
    return (len(black), black) if len(black) <= len(white) else (len(white), white)


def crossing_change(d: Diagram, changed) -> Diagram:
    """Switch over/under at the given crossing indices."""
    changed = set(changed)
    a = _analyze(d)
    slots = []
    for ci, cr in enumerate(d.crossings):
        if ci in changed:
            k = a.over_head_slot[ci]
            slots.append([cr[(s + k) % 4] for s in range(4)])
        else:
            k = 0 if a.head[(ci, 0)] else 2
            slots.append([cr[(s + k) % 4] for s in range(4)])
    return _normalize(slots, d.loops)


def canonical_code(d: Diagram) -> str:
    """Label-invariant code: the lexicographically least serialization over
    all traversal starts, directions, component orders, and the global
    reflection."""
    if d.n_crossings == 0:
        return serialize(d)
    best = None
    for refl in (False, True):
        if refl:
            slots = [[cr[0], cr[3], cr[2], cr[1]] for cr in d.crossings]
        else:
            slots = [list(cr) for cr in d.crossings]
        cand = _min_code(slots, d.loops)
        if best is None or cand < best:
            best = cand
    return best


def _min_code(slots: list[list[int]], loops: int) -> str:
    n = len(slots)
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci in range(n):
        for si in range(4):
            occ.setdefault(slots[ci][si], []).append((ci, si))

    # strand cycles as sequences of incoming ports
    def strand_from(start):
        seq = []
        cur = start
        while True:
            ci, si = cur
            seq.append((ci, si))
            out = (si + 2) % 4
            a, b = occ[slots[ci][out]]
            cur = b if (ci, out) == a else a
            if cur == start:
                break
        return seq

    # group ports into strands (undirected)
    port_strand = {}
    strands = []
    for ci in range(n):
        for si in range(4):
            if (ci, si) in port_strand:
                continue
            seq = strand_from((ci, si))
            sid = len(strands)
            strands.append(seq)
            for (cj, sj) in seq:
                port_strand[(cj, sj)] = sid
                port_strand[(cj, (sj + 2) % 4)] = sid

    m = len(strands)
    best = None
    # enumerate: order of components, start port within each, direction
    starts_per_strand = []
    for seq in strands:
        opts = []
        for k in range(len(seq)):
            opts.append(seq[k])  # forward from this port
        # reverse direction: incoming ports are the (si+2) ports, walked back
        rev = [( (c, (s + 2) % 4)) for (c, s) in reversed(seq)]
        for k in range(len(rev)):
            opts.append(rev[k])
        starts_per_strand.append(opts)

    for order in permutations(range(m)):
        for choice in product(*(starts_per_strand[s] for s in order)):
            label = {}
            nxt = 1
            ok = True
            for sid, start in zip(order, choice):
                cur = start
                while True:
                    ci, si = cur
                    arc = slots[ci][si]
                    if arc not in label:
                        label[arc] = nxt
                        nxt += 1
                    out = (si + 2) % 4
                    a, b = occ[slots[ci][out]]
                    cur = b if (ci, out) == a else a
                    if cur == start:
                        break
            if len(label) != 2 * n:
                continue
            # incoming occurrences under the chosen directions
            incoming = set()
            for sid, start in zip(order, choice):
                cur = start
                while True:
                    incoming.add(cur)
                    ci, si = cur
                    out = (si + 2) % 4
                    a, b = occ[slots[ci][out]]
                    cur = b if (ci, out) == a else a
                    if cur == start:
                        break
            rows = []
            for ci in range(n):
                k = 0 if (ci, 0) in incoming else 2
                rows.append(tuple(label[slots[ci][(s + k) % 4]]
                                  for s in range(4)))
            rows.sort()
            body = ",".join("X[%d,%d,%d,%d]" % r for r in rows)
            if loops:
                cand = f"components={m + loops};PD[{body}]"
            else:
                cand = f"PD[{body}]"
            if best is None or cand < best:
                best = cand
    return best
