"""VH square complexes dual to taut filling diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import BLUE, HeegaardDiagram, bigons, is_filling


class DualizeError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    label: str  # "V" or "H"
    tail: int
    head: int


@dataclass(frozen=True)
class VHSquareComplex:
    """Squares are 4-tuples of ``(edge, direction)`` read counterclockwise.

    ``direction`` is ``+1`` when the square boundary runs from the tail of
    the edge to its head.  The back-reference fields are empty for complexes
    built by hand.
    """

    n_vertices: int
    edges: tuple
    squares: tuple
    square_crossing: tuple = ()
    edge_arc: tuple = ()
    vertex_face: tuple = ()
    edge_curve: tuple = ()
    curve_color: dict = field(default_factory=dict)

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - len(self.edges) + len(self.squares)


@dataclass(frozen=True)
class Hyperplane:
    path: tuple  # ((square, axis), ...) with axis 0 for sides 0/2 and 1 for sides 1/3
    color: str  # "V" or "H"
    two_sided: bool
    edges: tuple  # ((edge, orientation), ...)


@dataclass(frozen=True)
class LinkReport:
    lengths: dict  # vertex -> list of link cycle lengths
    surface: bool
    npc: bool


@dataclass(frozen=True)
class SpecialnessReport:
    vh: bool
    hyperplanes_embedded: bool
    two_sided: bool
    direct_self_osculation: list
    indirect_self_osculation: list
    inter_osculation: list
    clean: bool


def dualize(d: HeegaardDiagram, check: bool = True) -> VHSquareComplex:
    """One square per crossing, one edge per arc, one vertex per face."""
    from .moves import find_problems

    if check:
        if not is_filling(d):
            raise DualizeError("not-filling")
        if find_problems(d):
            raise DualizeError("not-taut")
        if bigons(d):
            raise DualizeError("bigon-present")
    arcs = [a for a in d.arcs() if d.curve_length(a.curve)]
    index = {a: i for i, a in enumerate(arcs)}
    edges = []
    for a in arcs:
        out, back = d.arc_darts(a)
        label = "V" if d.curve_by_id[a.curve].color == BLUE else "H"
        edges.append(Edge(label, d.face_of[back], d.face_of[out]))
    squares = []
    for i, _ in enumerate(d.crossings):
        dd = 4 * i
        sides = []
        for _ in range(4):
            s = d.dart_arc(dd)
            # out-darts cross their arc from right to left, against the edge direction
            sides.append((index[s.arc], -1 if s.side == "R" else 1))
            dd = d.sigma(dd)
        squares.append(tuple(sides))
    return VHSquareComplex(
        n_vertices=len(d.face_traces),
        edges=tuple(edges),
        squares=tuple(squares),
        square_crossing=tuple(x.id for x in d.crossings),
        edge_arc=tuple(arcs),
        vertex_face=tuple(d.face_ref(k) for k in range(len(d.face_traces))),
        edge_curve=tuple(a.curve for a in arcs),
        curve_color={c.id: c.color for c in d.curves},
    )


def _side_ends(sc: VHSquareComplex, e: int, direction: int) -> tuple[int, int]:
    ed = sc.edges[e]
    return (ed.tail, ed.head) if direction > 0 else (ed.head, ed.tail)


def link_report(sc: VHSquareComplex) -> LinkReport:
    """Lengths of the link cycles at every vertex and the curvature verdict."""
    # link nodes are edge ends (edge, 0 tail / 1 head); link edges are square corners
    adj: dict[tuple[int, int], list] = {}
    corner_vertex = {}
    for si, sq in enumerate(sc.squares):
        for k in range(4):
            e1, d1 = sq[k]
            e2, d2 = sq[(k + 1) % 4]
            end1 = (e1, 1 if d1 > 0 else 0)
            end2 = (e2, 0 if d2 > 0 else 1)
            v = _side_ends(sc, e1, d1)[1]
            corner_vertex[(si, k)] = v
            adj.setdefault(end1, []).append((end2, (si, k)))
            adj.setdefault(end2, []).append((end1, (si, k)))
    lengths: dict[int, list[int]] = {v: [] for v in range(sc.n_vertices)}
    surface = all(len(nb) == 2 for nb in adj.values())
    seen: set = set()
    for (si, k), v in sorted(corner_vertex.items()):
        if (si, k) in seen:
            continue
        length = 0
        corner = (si, k)
        e1, d1 = sc.squares[si][k]
        node = (e1, 1 if d1 > 0 else 0)
        while corner not in seen:
            seen.add(corner)
            length += 1
            # move to the far node of this corner, then to the other corner there
            far = next(n for n, c in adj[node] if c == corner)
            nxt = [c for n, c in adj[far] if c != corner]
            if not nxt:
                surface = False
                break
            node, corner = far, nxt[0]
        lengths[v].append(length)
    for v, ls in lengths.items():
        if len(ls) != 1:
            surface = False
    npc = all(all(x >= 4 for x in ls) for ls in lengths.values())
    return LinkReport({v: sorted(ls) for v, ls in lengths.items()}, surface, npc)


def is_vh(sc: VHSquareComplex) -> bool:
    for sq in sc.squares:
        labels = [sc.edges[e].label for e, _ in sq]
        if labels not in (["V", "H", "V", "H"], ["H", "V", "H", "V"]):
            return False
    return True


def trace_hyperplanes(sc: VHSquareComplex) -> list[Hyperplane]:
    """Hyperplanes through midpoints of opposite sides, one per curve of the source."""
    if not is_vh(sc):
        raise DualizeError("complex is not VH")
    sides_of_edge: dict[int, list[tuple[int, int]]] = {}
    for si, sq in enumerate(sc.squares):
        for k, (e, _) in enumerate(sq):
            sides_of_edge.setdefault(e, []).append((si, k))
    visited_edges: set[int] = set()
    out = []
    for e0 in range(len(sc.edges)):
        if e0 in visited_edges or e0 not in sides_of_edge:
            continue
        si, k = sides_of_edge[e0][0]
        # normal orientation +1: the hyperplane's coorientation agrees with the edge direction
        orient = 1
        path = []
        edges = []
        start = (si, k, orient)
        two_sided = True
        while True:
            e, dk = sc.squares[si][k]
            edges.append((e, orient))
            visited_edges.add(e)
            path.append((si, k % 2))
            k2 = (k + 2) % 4
            e2, dk2 = sc.squares[si][k2]
            orient2 = -orient * dk * dk2
            others = [s for s in sides_of_edge[e2] if s != (si, k2)]
            if not others:
                break
            si, k = others[0]
            _, dk_new = sc.squares[si][k]
            # the shared edge is traversed by both squares; keep the orientation relative to the edge
            orient = orient2
            if (si, k) == start[:2]:
                two_sided = orient == start[2]
                break
            if len(path) > 4 * len(sc.squares):
                break
        label = sc.edges[e0].label
        out.append(Hyperplane(tuple(path), label, two_sided, tuple(edges)))
    return out


def specialness_report(sc: VHSquareComplex) -> SpecialnessReport:
    vh = is_vh(sc)
    if not vh:
        return SpecialnessReport(False, False, False, [], [], [], False)
    hps = trace_hyperplanes(sc)
    embedded = True
    for h in hps:
        squares = [s for s, _ in h.path]
        if len(set(h.path)) != len(h.path) or len(set(squares)) != len(squares):
            embedded = False
    two_sided = all(h.two_sided for h in hps)
    # corners: pairs of edge ends meeting in a square corner are not osculations
    corner_pairs = set()
    for sq in sc.squares:
        for k in range(4):
            e1, _ = sq[k]
            e2, _ = sq[(k + 1) % 4]
            corner_pairs.add(frozenset((e1, e2)))
    ends: dict[int, list] = {}
    for hi, h in enumerate(hps):
        for e, o in h.edges:
            ed = sc.edges[e]
            # at the tail the normal points away from the vertex when o = +1
            ends.setdefault(ed.tail, []).append((hi, e, "out" if o > 0 else "in"))
            ends.setdefault(ed.head, []).append((hi, e, "in" if o > 0 else "out"))
    direct, indirect, inter = [], [], []
    crossing_pairs = set()
    for i, hi in enumerate(hps):
        si = {s for s, _ in hi.path}
        for j in range(i + 1, len(hps)):
            if si & {s for s, _ in hps[j].path}:
                crossing_pairs.add((i, j))
    for v in sorted(ends):
        lst = ends[v]
        for a in range(len(lst)):
            for b in range(a + 1, len(lst)):
                h1, e1, s1 = lst[a]
                h2, e2, s2 = lst[b]
                if e1 == e2 or frozenset((e1, e2)) in corner_pairs:
                    continue
                if h1 == h2:
                    (direct if s1 == s2 else indirect).append((v, h1, h1))
                elif (min(h1, h2), max(h1, h2)) in crossing_pairs:
                    inter.append((v, min(h1, h2), max(h1, h2)))
    clean = vh and embedded and not direct
    return SpecialnessReport(vh, embedded, two_sided, direct, indirect, sorted(set(inter)), clean)


def hyperplane_curves(sc: VHSquareComplex, hps) -> list:
    """Source curve of each hyperplane, read through the edge back-references."""
    return [sc.edge_curve[h.edges[0][0]] if sc.edge_curve else None for h in hps]
