"""Heegaard diagrams as decorated combinatorial maps.

A diagram on a closed oriented surface of genus ``g`` consists of ``g`` blue
and ``g`` red oriented simple closed curves.  Every crossing joins one blue
and one red strand and carries four darts; the counterclockwise rotation of
the darts at a crossing of sign ``+1`` is ``(bo, ro, bi, ri)`` and at a
crossing of sign ``-1`` it is ``(bo, ri, bi, ro)``.  Here ``bo``/``bi`` are the
outgoing and incoming ends of the blue strand.

Rotation systems alone only describe filling diagrams, so every diagram also
records its complementary components: the genus of each one together with
the boundary circles it is glued to.  A boundary circle is either a face
trace (an orbit of the face permutation on darts, named by its least dart)
or one side of a floating curve, i.e. a curve without crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

BLUE = "blue"
RED = "red"
COLORS = (BLUE, RED)

BO, RO, BI, RI = range(4)
SELECTORS = ("bo", "ro", "bi", "ri")

_ROTATION = {
    1: {BO: RO, RO: BI, BI: RI, RI: BO},
    -1: {BO: RI, RI: BI, BI: RO, RO: BO},
}


def other_color(color: str) -> str:
    return RED if color == BLUE else BLUE


@dataclass(frozen=True, order=True)
class Curve:
    id: int
    color: str
    gen: int


@dataclass(frozen=True, order=True)
class Crossing:
    id: int
    blue: int
    blue_pos: int
    red: int
    red_pos: int
    sign: int

    def curve(self, color: str) -> int:
        return self.blue if color == BLUE else self.red

    def pos(self, color: str) -> int:
        return self.blue_pos if color == BLUE else self.red_pos


@dataclass(frozen=True, order=True)
class FaceRef:
    """Boundary circle given by the face trace through dart ``(crossing, sel)``."""

    crossing: int
    sel: int

    def __str__(self) -> str:
        return f"face:{self.crossing}.{SELECTORS[self.sel]}"


@dataclass(frozen=True, order=True)
class FloatRef:
    """Boundary circle given by the left (``L``) or right (``R``) side of a floating curve."""

    curve: int
    side: str

    def __str__(self) -> str:
        return f"float:{self.curve}:{self.side}"


Circle = "FaceRef | FloatRef"


def circle_key(c) -> tuple:
    if isinstance(c, FaceRef):
        return (0, c.crossing, c.sel, "")
    return (1, c.curve, 0, c.side)


@dataclass(frozen=True)
class Component:
    id: int
    genus: int
    circles: tuple


@dataclass(frozen=True)
class Arc:
    """Arc ``pos`` of a curve, running from its slot ``pos`` to slot ``pos + 1``."""

    curve: int
    pos: int

    def __str__(self) -> str:
        return f"{self.curve}:{self.pos}"


@dataclass(frozen=True)
class BoundarySide:
    """One boundary arc of a face: an arc together with the side the face lies on."""

    arc: Arc
    side: str


@dataclass(frozen=True)
class ComponentInfo:
    id: int
    genus: int
    circles: tuple
    is_disk: bool
    sides: int


@dataclass(frozen=True)
class Issue:
    code: str
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}" if self.detail else self.code


class ValidationReport(list):
    """List of :class:`Issue`; empty iff the diagram is valid."""

    @property
    def codes(self) -> list[str]:
        return [i.code for i in self]

    def __contains__(self, item) -> bool:
        if isinstance(item, str):
            return any(i.code == item for i in self)
        return super().__contains__(item)


@dataclass(frozen=True)
class HeegaardDiagram:
    genus: int
    curves: tuple
    crossings: tuple
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(sorted(self.curves)))
        object.__setattr__(self, "crossings", tuple(sorted(self.crossings)))
        comps = (Component(c.id, c.genus, tuple(sorted(c.circles, key=circle_key))) for c in self.components)
        object.__setattr__(self, "components", tuple(sorted(comps, key=lambda c: c.id)))

    # ----------------------------------------------------------- lookups
    @cached_property
    def curve_by_id(self) -> dict[int, Curve]:
        return {c.id: c for c in self.curves}

    @cached_property
    def crossing_index(self) -> dict[int, int]:
        return {x.id: i for i, x in enumerate(self.crossings)}

    @cached_property
    def slots(self) -> dict[int, list]:
        """Crossing index at each slot of every curve (``None`` marks a missing slot)."""
        lengths: dict[int, int] = {c.id: 0 for c in self.curves}
        for x in self.crossings:
            for color in COLORS:
                cid = x.curve(color)
                if cid in lengths:
                    lengths[cid] = max(lengths[cid], x.pos(color) + 1)
        out = {cid: [None] * n for cid, n in lengths.items()}
        for i, x in enumerate(self.crossings):
            for color in COLORS:
                cid = x.curve(color)
                if cid in out and 0 <= x.pos(color) < len(out[cid]):
                    out[cid][x.pos(color)] = i
        return out

    def curve_length(self, cid: int) -> int:
        return len(self.slots[cid])

    def floating(self) -> list[int]:
        return [c.id for c in self.curves if not self.slots[c.id]]

    def curves_of(self, color: str) -> list[Curve]:
        return sorted((c for c in self.curves if c.color == color), key=lambda c: (c.gen, c.id))

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_darts(self) -> int:
        return 4 * len(self.crossings)

    def arcs(self) -> list[Arc]:
        out = []
        for c in self.curves:
            n = self.curve_length(c.id)
            out.extend(Arc(c.id, i) for i in range(max(n, 1)))
        return out

    # ------------------------------------------------------ dart algebra
    # A dart is the integer ``4 * crossing_index + selector``.

    def dart(self, crossing_id: int, sel: int) -> int:
        return 4 * self.crossing_index[crossing_id] + sel

    def dart_ref(self, d: int) -> FaceRef:
        return FaceRef(self.crossings[d // 4].id, d % 4)

    def sigma(self, d: int) -> int:
        x = self.crossings[d // 4]
        return 4 * (d // 4) + _ROTATION[x.sign][d % 4]

    def alpha(self, d: int) -> int:
        """Dart at the other end of the arc leaving or entering through ``d``."""
        x = self.crossings[d // 4]
        sel = d % 4
        color = BLUE if sel in (BO, BI) else RED
        cid, pos = x.curve(color), x.pos(color)
        seq = self.slots[cid]
        step = 1 if sel in (BO, RO) else -1
        y = seq[(pos + step) % len(seq)]
        partner = {BO: BI, BI: BO, RO: RI, RI: RO}[sel]
        return 4 * y + partner

    def phi(self, d: int) -> int:
        return self.sigma(self.alpha(d))

    def dart_arc(self, d: int) -> BoundarySide:
        """Arc traversed by dart ``d`` and the side of its curve lying to the right of ``d``."""
        x = self.crossings[d // 4]
        sel = d % 4
        color = BLUE if sel in (BO, BI) else RED
        cid, pos = x.curve(color), x.pos(color)
        if sel in (BO, RO):
            return BoundarySide(Arc(cid, pos), "R")
        n = self.curve_length(cid)
        return BoundarySide(Arc(cid, (pos - 1) % n), "L")

    def arc_darts(self, arc: Arc) -> tuple[int, int]:
        """``(out, in)``: the dart running forward along ``arc`` and the one running backward."""
        seq = self.slots[arc.curve]
        color = self.curve_by_id[arc.curve].color
        i = seq[arc.pos]
        j = seq[(arc.pos + 1) % len(seq)]
        if color == BLUE:
            return 4 * i + BO, 4 * j + BI
        return 4 * i + RO, 4 * j + RI

    @cached_property
    def face_traces(self) -> list[tuple[int, ...]]:
        """Face traces ordered by least dart; each starts at its least dart."""
        seen = [False] * self.n_darts
        out = []
        for d in range(self.n_darts):
            if seen[d]:
                continue
            orbit = []
            e = d
            while not seen[e]:
                seen[e] = True
                orbit.append(e)
                e = self.phi(e)
            out.append(tuple(orbit))
        return out

    @cached_property
    def face_of(self) -> list[int]:
        out = [0] * self.n_darts
        for k, orbit in enumerate(self.face_traces):
            for d in orbit:
                out[d] = k
        return out

    def face_ref(self, k: int) -> FaceRef:
        return self.dart_ref(self.face_traces[k][0])

    def face_index(self, ref: FaceRef) -> int:
        return self.face_of[self.dart(ref.crossing, ref.sel)]

    def circle_sides(self, circle) -> list[BoundarySide]:
        if isinstance(circle, FloatRef):
            return [BoundarySide(Arc(circle.curve, 0), circle.side)]
        return [self.dart_arc(d) for d in self.face_traces[self.face_index(circle)]]

    @cached_property
    def component_of_circle(self) -> dict:
        out = {}
        for comp in self.components:
            for c in comp.circles:
                out[c] = comp.id
        return out

    @cached_property
    def component_by_id(self) -> dict[int, Component]:
        return {c.id: c for c in self.components}

    def component_of_face(self, k: int) -> int:
        return self.component_of_circle[self.face_ref(k)]

    def component_of_side(self, arc: Arc, side: str) -> int:
        """Component lying on ``side`` of ``arc``."""
        try:
            return self._side_component[(arc.curve, arc.pos, side)]
        except KeyError:
            raise ValueError(f"no arc {arc} with side {side}") from None

    @cached_property
    def _side_component(self) -> dict:
        out = {}
        for arc in self.arcs():
            for side in "LR":
                if not self.slots[arc.curve]:
                    comp = self.component_of_circle[FloatRef(arc.curve, side)]
                else:
                    o, b = self.arc_darts(arc)
                    comp = self.component_of_face(self.face_of[o if side == "R" else b])
                out[(arc.curve, arc.pos, side)] = comp
        return out

    def component_sides(self, comp_id: int) -> list[BoundarySide]:
        out = []
        for c in self.component_by_id[comp_id].circles:
            out.extend(self.circle_sides(c))
        return out

    def circles_all(self) -> list:
        out = [self.face_ref(k) for k in range(len(self.face_traces))]
        for cid in self.floating():
            out.append(FloatRef(cid, "L"))
            out.append(FloatRef(cid, "R"))
        return out


def derive_components(genus: int, curves, crossings) -> tuple:
    """Components of a diagram all of whose complementary regions are disks."""
    bare = HeegaardDiagram(genus, tuple(curves), tuple(crossings), ())
    return tuple(
        Component(k, 0, (bare.face_ref(k),)) for k in range(len(bare.face_traces))
    )


def canonical_components(comps) -> tuple:
    """Renumber components by their least circle."""
    items = []
    for c in comps:
        circles = tuple(sorted(c.circles, key=circle_key))
        items.append((circle_key(circles[0]) if circles else (2,), c.genus, circles))
    items.sort(key=lambda t: t[0])
    return tuple(Component(i, h, circles) for i, (_, h, circles) in enumerate(items))


# ---------------------------------------------------------------- validation


def validate(d: HeegaardDiagram) -> ValidationReport:
    """Collect every violated structural invariant of ``d``."""
    from .surface import SurfaceMap, homology_rank

    rep = ValidationReport()
    g = d.genus
    if g < 0:
        rep.append(Issue("negative-genus", str(g)))
    ids = [c.id for c in d.curves]
    if len(set(ids)) != len(ids):
        rep.append(Issue("duplicate-curve-id"))
    for color in COLORS:
        cs = [c for c in d.curves if c.color == color]
        if len(cs) != g:
            rep.append(Issue("wrong-curve-count", f"{len(cs)} {color} curves, expected {g}"))
        gens = sorted(c.gen for c in cs)
        if gens != list(range(1, len(cs) + 1)):
            rep.append(Issue("bad-generator-index", f"{color}: {gens}"))
    for c in d.curves:
        if c.color not in COLORS:
            rep.append(Issue("bad-color", f"curve {c.id}"))
    xids = [x.id for x in d.crossings]
    if len(set(xids)) != len(xids):
        rep.append(Issue("duplicate-crossing-id"))
    structural = not rep
    for x in d.crossings:
        for color in COLORS:
            c = d.curve_by_id.get(x.curve(color))
            if c is None:
                rep.append(Issue("unknown-curve", f"crossing {x.id}"))
                structural = False
            elif c.color != color:
                rep.append(Issue("monochromatic-crossing", f"crossing {x.id}"))
                structural = False
        if x.sign not in (1, -1):
            rep.append(Issue("bad-sign", f"crossing {x.id}"))
            structural = False
    used: dict[tuple[int, int], int] = {}
    for x in d.crossings:
        for color in COLORS:
            key = (x.curve(color), x.pos(color))
            if key in used:
                rep.append(Issue("slot-double-use", f"curve {key[0]} slot {key[1]}"))
                structural = False
            used[key] = x.id
    for cid, seq in d.slots.items():
        if any(s is None for s in seq):
            rep.append(Issue("slot-gap", f"curve {cid}"))
            structural = False
    if not structural:
        return rep

    expected = set(d.circles_all())
    seen: dict = {}
    for comp in d.components:
        if comp.genus < 0:
            rep.append(Issue("negative-component-genus", f"component {comp.id}"))
        if not comp.circles:
            rep.append(Issue("empty-component", f"component {comp.id}"))
        for c in comp.circles:
            if c not in expected:
                rep.append(Issue("unknown-circle", str(c)))
            elif c in seen:
                rep.append(Issue("circle-multiply-assigned", str(c)))
            seen[c] = comp.id
    for c in sorted(expected - set(seen), key=circle_key):
        rep.append(Issue("circle-unassigned", str(c)))
    if rep:
        return rep

    V = d.n_crossings
    E = 2 * V
    chi = V - E + sum(2 - 2 * c.genus - len(c.circles) for c in d.components)
    if chi != 2 - 2 * g:
        rep.append(Issue("euler-characteristic-mismatch", f"chi={chi}, expected {2 - 2 * g}"))
        return rep

    sm = SurfaceMap.from_diagram(d)
    if sm.n_vertex_components() != 1:
        rep.append(Issue("disconnected-surface"))
        return rep
    for color in COLORS:
        r = homology_rank(sm, [c.id for c in d.curves if c.color == color])
        if r != g:
            rep.append(Issue(f"rank-deficient {color}", f"rank {r}, expected {g}"))
    return rep


def is_valid(d: HeegaardDiagram) -> bool:
    return not validate(d)


def require_valid(d: HeegaardDiagram) -> None:
    rep = validate(d)
    if rep:
        raise ValueError("invalid diagram: " + "; ".join(map(str, rep)))


def curve_homology_rank(d: HeegaardDiagram, color: str) -> int:
    """Rank of the span of the ``color`` curves in the first homology of the surface."""
    from .surface import SurfaceMap, homology_rank

    return homology_rank(SurfaceMap.from_diagram(d), [c.id for c in d.curves if c.color == color])


def complement_components(d: HeegaardDiagram) -> list[ComponentInfo]:
    require_valid(d)
    out = []
    for comp in d.components:
        disk = comp.genus == 0 and len(comp.circles) == 1 and isinstance(comp.circles[0], FaceRef)
        sides = sum(len(d.circle_sides(c)) for c in comp.circles)
        out.append(ComponentInfo(comp.id, comp.genus, comp.circles, disk, sides))
    return out


def is_filling(d: HeegaardDiagram) -> bool:
    return all(
        c.genus == 0 and len(c.circles) == 1 and isinstance(c.circles[0], FaceRef)
        for c in d.components
    )


def bigons(d: HeegaardDiagram) -> list[int]:
    """Ids of disk components bounded by exactly two arcs."""
    return [c.id for c in complement_components(d) if c.is_disk and c.sides == 2]


def algebraic_intersection_matrix(d: HeegaardDiagram) -> list[list[int]]:
    """Rows are blue curves and columns red curves, both ordered by generator index."""
    blue = {c.id: i for i, c in enumerate(d.curves_of(BLUE))}
    red = {c.id: j for j, c in enumerate(d.curves_of(RED))}
    m = [[0] * len(red) for _ in blue]
    for x in d.crossings:
        m[blue[x.blue]][red[x.red]] += x.sign
    return m


def crossing_words(d: HeegaardDiagram) -> dict[int, tuple]:
    """For each curve, the cyclic sequence of (other curve, sign) met along it."""
    out = {}
    for c in d.curves:
        seq = []
        for i in d.slots[c.id]:
            x = d.crossings[i]
            seq.append((x.curve(other_color(c.color)), x.sign))
        out[c.id] = tuple(seq)
    return out
