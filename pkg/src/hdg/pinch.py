"""Pinched surfaces: collapse every non-disk component to a point."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    BLUE,
    RED,
    Curve,
    FaceRef,
    FloatRef,
    HeegaardDiagram,
    derive_components,
)


class PinchError(ValueError):
    pass


@dataclass(frozen=True)
class Piece:
    """A closed surface piece with the diagram it carries.

    ``diagram`` is ``None`` when the piece cannot carry a diagram (a sphere,
    or unequal numbers of curves and handles).
    """

    id: int
    genus: int
    curves: tuple  # original curve ids
    crossings: tuple  # original crossing ids
    diagram: HeegaardDiagram | None


@dataclass(frozen=True)
class PinchNode:
    component: int
    genus: int
    circles: tuple


@dataclass(frozen=True)
class PinchedSurface:
    genus: int
    pieces: tuple
    nodes: tuple
    edges: tuple  # (piece id, node index, circle)
    obstructed: bool = False

    @property
    def area(self) -> int:
        return sum(len(p.crossings) for p in self.pieces)


@dataclass(frozen=True)
class PinchReport:
    is_tree: bool
    sphere_pieces: list
    pseudo_manifold_flags: list
    s2xs1_obstruction: bool


def _clusters(d: HeegaardDiagram) -> list[tuple[list[int], list[int]]]:
    """Connected clusters of the crossing graph as ``(curve ids, crossing indices)``."""
    parent = {c.id: c.id for c in d.curves}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in d.crossings:
        a, b = find(x.blue), find(x.red)
        if a != b:
            parent[a] = b
    groups: dict[int, list[int]] = {}
    for c in d.curves:
        groups.setdefault(find(c.id), []).append(c.id)
    out = []
    for curves in groups.values():
        cs = set(curves)
        xs = [i for i, x in enumerate(d.crossings) if x.blue in cs]
        out.append((sorted(curves), xs))
    out.sort(key=lambda t: (0, d.crossings[min(t[1])].id) if t[1] else (1, t[0][0]))
    return out


def pinch(d: HeegaardDiagram) -> PinchedSurface:
    from .moves import find_problems

    if find_problems(d):
        raise PinchError("not-taut")
    clusters = _clusters(d)
    cluster_of_curve = {}
    for k, (curves, _) in enumerate(clusters):
        for c in curves:
            cluster_of_curve[c] = k
    face_count = [0] * len(clusters)
    for orbit in d.face_traces:
        x = d.crossings[orbit[0] // 4]
        face_count[cluster_of_curve[x.blue]] += 1
    pieces = []
    for k, (curves, xs) in enumerate(clusters):
        V = len(xs)
        F = face_count[k] if xs else 2
        E = 2 * V if xs else 1
        # a floating curve alone sits on a sphere as an edge loop with one vertex
        chi = V - E + F if xs else 2
        genus = (2 - chi) // 2
        crossings = tuple(d.crossings[i].id for i in xs)
        pieces.append(Piece(k, genus, tuple(curves), crossings, _piece_diagram(d, genus, curves, xs)))
    nodes = []
    edges = []
    for comp in d.components:
        if comp.genus == 0 and len(comp.circles) == 1 and isinstance(comp.circles[0], FaceRef):
            continue
        nodes.append(PinchNode(comp.id, comp.genus, comp.circles))
        for circle in comp.circles:
            if isinstance(circle, FaceRef):
                cid = d.crossings[d.crossing_index[circle.crossing]].blue
            else:
                cid = circle.curve
            edges.append((cluster_of_curve[cid], len(nodes) - 1, circle))
    ps = PinchedSurface(d.genus, tuple(pieces), tuple(nodes), tuple(edges))
    rep = pinch_graph_report(ps)
    if rep.s2xs1_obstruction:
        return PinchedSurface(d.genus, tuple(pieces), tuple(nodes), tuple(edges), obstructed=True)
    return ps


def _piece_diagram(d: HeegaardDiagram, genus: int, curves, xs) -> HeegaardDiagram | None:
    cs = [d.curve_by_id[c] for c in curves]
    blue = sorted((c for c in cs if c.color == BLUE), key=lambda c: c.gen)
    red = sorted((c for c in cs if c.color == RED), key=lambda c: c.gen)
    if not xs or len(blue) != genus or len(red) != genus:
        return None
    new_curves = [Curve(c.id, c.color, i + 1) for i, c in enumerate(blue)]
    new_curves += [Curve(c.id, c.color, i + 1) for i, c in enumerate(red)]
    crossings = [d.crossings[i] for i in xs]
    return HeegaardDiagram(genus, tuple(new_curves), tuple(crossings), derive_components(genus, new_curves, crossings))


def pinch_graph_report(p: PinchedSurface) -> PinchReport:
    n = len(p.pieces) + len(p.nodes)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for piece, node, _ in p.edges:
        a, b = find(piece), find(len(p.pieces) + node)
        if a != b:
            parent[a] = b
    connected = len({find(v) for v in range(n)}) == 1
    is_tree = connected and len(p.edges) == n - 1
    spheres = [pc.id for pc in p.pieces if pc.genus == 0]
    flags = []
    for pc in p.pieces:
        if pc.genus > 0 and pc.diagram is None:
            flags.append(f"piece {pc.id}: curve count differs from genus {pc.genus}")
    for k, node in enumerate(p.nodes):
        if node.genus > 0:
            flags.append(f"node {k}: pinched component has genus {node.genus}")
    seen = set()
    for piece, node, _ in p.edges:
        if (piece, node) in seen:
            flags.append(f"piece {piece} meets node {node} more than once")
        seen.add((piece, node))
    return PinchReport(is_tree, spheres, flags, (not is_tree) or bool(spheres) or bool(flags))


def betti_identity(p: PinchedSurface) -> tuple[int, int]:
    """``(g, sum of piece and node genera plus the first Betti number of the graph)``."""
    n = len(p.pieces) + len(p.nodes)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for piece, node, _ in p.edges:
        a, b = find(piece), find(len(p.pieces) + node)
        if a != b:
            parent[a] = b
    comps = len({find(v) for v in range(n)})
    b1 = len(p.edges) - n + comps
    return p.genus, sum(pc.genus for pc in p.pieces) + sum(nd.genus for nd in p.nodes) + b1


def float_witnesses(p: PinchedSurface, d: HeegaardDiagram) -> list[int]:
    """Floating curves of ``d``; each sits alone on a sphere piece next to a pinch node."""
    return [c for c in d.floating() if any(isinstance(z, FloatRef) and z.curve == c for _, _, z in p.edges)]


def sphere_pieces(p: PinchedSurface) -> list[int]:
    """Ids of genus-one pieces with a single crossing, which carry the one-crossing diagram of S^3."""
    return [pc.id for pc in p.pieces if pc.genus == 1 and len(pc.crossings) == 1]


def collapse_piece(d: HeegaardDiagram, piece_id: int) -> HeegaardDiagram:
    """Remove a one-crossing torus piece that meets a single pinch node.

    The piece is cut off along its circle and replaced by a disk, so the
    node component loses that circle and the genus drops by one.
    """
    from .diagram import Component, canonical_components

    p = pinch(d)
    pc = p.pieces[piece_id]
    if pc.genus != 1 or len(pc.crossings) != 1:
        raise PinchError(f"piece {piece_id} is not a one-crossing torus")
    touching = [(node, circle) for k, node, circle in p.edges if k == piece_id]
    if len(touching) != 1:
        raise PinchError(f"piece {piece_id} meets {len(touching)} pinch nodes, expected 1")
    node, circle = touching[0]
    gone = set(pc.curves)
    curves = []
    for color in (BLUE, RED):
        rest = sorted((c for c in d.curves if c.color == color and c.id not in gone), key=lambda c: c.gen)
        curves += [Curve(c.id, color, i + 1) for i, c in enumerate(rest)]
    crossings = tuple(x for x in d.crossings if x.id not in pc.crossings)
    comp_id = p.nodes[node].component
    comps = []
    for c in d.components:
        if c.id == comp_id:
            circles = tuple(z for z in c.circles if z != circle)
            if not circles:
                raise PinchError(f"piece {piece_id} is the whole surface")
            comps.append(Component(c.id, c.genus, circles))
        elif not any(isinstance(z, FaceRef) and z.crossing in pc.crossings for z in c.circles):
            comps.append(c)
    return HeegaardDiagram(d.genus - 1, tuple(sorted(curves, key=lambda c: c.id)), crossings, canonical_components(comps))
