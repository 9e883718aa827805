"""Cellular maps of the splitting surface with curves drawn on them.

:class:`SurfaceMap` is the mutable workspace behind every move.  It is a
general combinatorial map: edge ``e`` owns the half-edges ``2e`` and
``2e + 1`` (so reversal is ``h ^ 1``) and ``sigma`` is the counterclockwise
rotation at vertices.  Each edge is owned by a curve or is auxiliary.  A
diagram is turned into a map by adding, for every component that is not a
disk, a hub vertex joined by a spoke to each boundary circle and carrying
one pair of loops per handle.  Deleting a curve only turns its edges into
auxiliary ones, so the underlying surface never changes; the diagram is read
back by grouping faces into regions separated by curve edges.

Curves are added in two ways.  A *pushoff* runs parallel to a closed walk
on a chosen side of it.  A *path insertion* follows a prescribed sequence
of transverse crossings with existing curves and may branch over the sub-edges of a
repeatedly crossed arc.  Every insertion checks that it did not change the
Euler characteristic, which catches chords placed in the wrong face.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import (
    BI,
    BLUE,
    BO,
    RED,
    RI,
    RO,
    Arc,
    Component,
    Crossing,
    Curve,
    FaceRef,
    FloatRef,
    HeegaardDiagram,
    canonical_components,
)


class SurgeryError(ValueError):
    """A requested curve cannot be realized on the surface map."""


@dataclass
class Point:
    """A degree-two vertex created on an edge: ``t`` points back to the tail, ``f`` forward."""

    t: int
    f: int


class _Results(list):
    """Collects at most one realization, filtered by an optional predicate."""

    def __init__(self, accept=None):
        super().__init__()
        self.accept = accept

    def append(self, item) -> None:
        if self.accept is None or self.accept(item):
            super().append(item)


class SurfaceMap:
    def __init__(self, genus: int):
        self.genus = genus
        self.sigma: list[int] = []
        self.vert: list[int] = []
        self.owner: list = []  # per edge: curve key or None
        self.tag: list = []  # per edge: (curve, arc pos, forward half) for diagram arcs
        self.walks: dict = {}  # curve key -> list of darts
        self.closed: dict = {}
        self.color: dict = {}  # curve key -> color, or None for passive curves
        self.gen: dict = {}
        self.nv = 0
        self.dmap: list[int] = []  # diagram dart -> map dart, filled by from_diagram
        self._faces = None

    # ---------------------------------------------------------- basics
    def copy(self) -> "SurfaceMap":
        sm = SurfaceMap(self.genus)
        sm.sigma = self.sigma[:]
        sm.vert = self.vert[:]
        sm.owner = self.owner[:]
        sm.tag = self.tag[:]
        sm.walks = {k: v[:] for k, v in self.walks.items()}
        sm.closed = dict(self.closed)
        sm.color = dict(self.color)
        sm.gen = dict(self.gen)
        sm.nv = self.nv
        return sm

    @property
    def n_darts(self) -> int:
        return len(self.sigma)

    @property
    def n_edges(self) -> int:
        return len(self.sigma) // 2

    def new_vertex(self) -> int:
        self.nv += 1
        return self.nv - 1

    def new_edge(self, owner=None, tag=None) -> int:
        d = len(self.sigma)
        self.sigma += [d, d + 1]
        self.vert += [-1, -1]
        self.owner.append(owner)
        self.tag.append(tag)
        self._faces = None
        return d

    def place(self, d: int, v: int) -> None:
        """Make ``d`` the only dart at ``v`` so far."""
        self.vert[d] = v
        self.sigma[d] = d

    def insert_after(self, x: int, a: int) -> None:
        self.vert[a] = self.vert[x]
        self.sigma[a] = self.sigma[x]
        self.sigma[x] = a
        self._faces = None

    def sigma_inv(self, d: int) -> int:
        x = d
        while self.sigma[x] != d:
            x = self.sigma[x]
        return x

    def insert_before(self, x: int, a: int) -> None:
        self.insert_after(self.sigma_inv(x), a)

    def rotation(self, d: int) -> list[int]:
        out = [d]
        x = self.sigma[d]
        while x != d:
            out.append(x)
            x = self.sigma[x]
        return out

    def faces(self) -> tuple[list[int], int]:
        """Face index of every dart (the face to the right of the dart) and the face count."""
        if self._faces is None:
            n = self.n_darts
            face = [-1] * n
            k = 0
            for d in range(n):
                if face[d] >= 0:
                    continue
                e = d
                while face[e] < 0:
                    face[e] = k
                    e = self.sigma[e ^ 1]
                k += 1
            self._faces = (face, k)
        return self._faces

    def euler_characteristic(self) -> int:
        return self.nv - self.n_edges + self.faces()[1]

    def n_vertex_components(self) -> int:
        parent = list(range(self.nv))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in range(self.n_edges):
            a, b = find(self.vert[2 * e]), find(self.vert[2 * e + 1])
            if a != b:
                parent[a] = b
        return len({find(v) for v in range(self.nv)})

    def check_euler(self) -> None:
        chi = self.euler_characteristic()
        if chi != 2 - 2 * self.genus:
            raise SurgeryError(f"surface map has chi={chi}, expected {2 - 2 * self.genus}")

    # -------------------------------------------------------- building
    @classmethod
    def from_diagram(cls, d: HeegaardDiagram) -> "SurfaceMap":
        sm = cls(d.genus)
        dmap = [-1] * d.n_darts
        for _ in d.crossings:
            sm.new_vertex()
        for c in d.curves:
            seq = d.slots[c.id]
            sm.color[c.id] = c.color
            sm.gen[c.id] = c.gen
            sm.closed[c.id] = True
            out_sel, in_sel = (BO, BI) if c.color == BLUE else (RO, RI)
            walk = []
            if not seq:
                a = sm.new_edge(c.id, (c.id, 0, 0))
                v = sm.new_vertex()
                sm.vert[a] = sm.vert[a ^ 1] = v
                sm.sigma[a], sm.sigma[a ^ 1] = a ^ 1, a
                walk.append(a)
            for i in range(len(seq)):
                a = sm.new_edge(c.id, (c.id, i, 0))
                dmap[4 * seq[i] + out_sel] = a
                dmap[4 * seq[(i + 1) % len(seq)] + in_sel] = a ^ 1
                walk.append(a)
            sm.walks[c.id] = walk
        for i, x in enumerate(d.crossings):
            for sel in range(4):
                dd = 4 * i + sel
                sm.vert[dmap[dd]] = i
                sm.sigma[dmap[dd]] = dmap[d.sigma(dd)]
        sm.dmap = dmap
        for comp in d.components:
            if comp.genus == 0 and len(comp.circles) == 1 and isinstance(comp.circles[0], FaceRef):
                continue
            w = sm.new_vertex()
            ring = []
            for circle in comp.circles:
                s = sm.new_edge()
                ring.append(s)
                if isinstance(circle, FaceRef):
                    sm.insert_before(dmap[d.dart(circle.crossing, circle.sel)], s ^ 1)
                else:
                    a = sm.walks[circle.curve][0]
                    sm.insert_after(a if circle.side == "L" else a ^ 1, s ^ 1)
            for _ in range(comp.genus):
                a = sm.new_edge()
                b = sm.new_edge()
                ring += [a, b, a ^ 1, b ^ 1]
            for k, h in enumerate(ring):
                sm.vert[h] = w
                sm.sigma[h] = ring[(k + 1) % len(ring)]
        sm._faces = None
        sm.check_euler()
        return sm

    # --------------------------------------------------------- surgery
    def subdivide(self, d: int, k: int) -> list[Point]:
        """Split the edge of ``d`` by ``k`` new vertices, listed in the direction of ``d``."""
        if k <= 0:
            return []
        e = d >> 1
        owner, tag = self.owner[e], self.tag[e]
        w_old = d ^ 1
        nxt = []
        for _ in range(k):
            ntag = None
            if tag is not None:
                fwd_half = tag[2]
                ntag = (tag[0], tag[1], fwd_half if (d & 1) == 0 else 1 - fwd_half)
            nxt.append(self.new_edge(owner, ntag))
        last = nxt[-1]
        # the far end of the last new edge takes the place of d^1 at its vertex
        if self.sigma[w_old] == w_old:
            self.vert[last ^ 1] = self.vert[w_old]
            self.sigma[last ^ 1] = last ^ 1
        else:
            p = self.sigma_inv(w_old)
            self.vert[last ^ 1] = self.vert[w_old]
            self.sigma[last ^ 1] = self.sigma[w_old]
            self.sigma[p] = last ^ 1
        points = []
        back = w_old
        for f in nxt:
            v = self.new_vertex()
            self.vert[back] = v
            self.vert[f] = v
            self.sigma[back] = f
            self.sigma[f] = back
            points.append(Point(back, f))
            back = f ^ 1
        if owner is not None:
            walk = self.walks[owner]
            out = []
            for x in walk:
                if x == d:
                    out.append(d)
                    out.extend(nxt)
                elif x == w_old:
                    out.extend(f ^ 1 for f in reversed(nxt))
                    out.append(w_old)
                else:
                    out.append(x)
            self.walks[owner] = out
        self._faces = None
        return points

    def add_chord(self, x: int, y: int, owner=None) -> int:
        """New edge from the corner after ``x`` to the corner after ``y``; returns its dart at ``x``."""
        a = self.new_edge(owner)
        self.insert_after(x, a)
        self.insert_after(y, a ^ 1)
        return a

    def delete_curve(self, key) -> None:
        for x in self.walks.pop(key):
            self.owner[x >> 1] = None
            self.tag[x >> 1] = None
        self.closed.pop(key, None)
        self.color.pop(key, None)
        self.gen.pop(key, None)

    def add_curve(self, key, walk, color=None, gen=None, closed=True) -> None:
        if key in self.walks:
            raise SurgeryError(f"curve key {key!r} already present")
        self.walks[key] = list(walk)
        self.closed[key] = closed
        self.color[key] = color
        self.gen[key] = gen
        for x in walk:
            self.owner[x >> 1] = key

    def pushoff(self, walk: list[int], side: str) -> list[int]:
        """Insert a closed curve parallel to ``walk`` on its left (``L``) or right (``R``).

        Returns the darts of the new curve (owner not yet set).
        """
        n = len(walk)
        for k in range(n):
            if self.vert[walk[k] ^ 1] != self.vert[walk[(k + 1) % n]]:
                raise SurgeryError("pushoff walk is not closed")
        pts = []  # (dart to cross, crossing direction)
        for k in range(n):
            din = walk[k] ^ 1
            dout = walk[(k + 1) % n]
            if side == "L":
                seq = []
                x = self.sigma[dout]
                while x != din:
                    seq.append(x)
                    x = self.sigma[x]
                seq.reverse()
                pts.extend((x, "LR") for x in seq)
            else:
                x = self.sigma[din]
                while x != dout:
                    pts.append((x, "RL"))
                    x = self.sigma[x]
        if not pts:
            raise SurgeryError("pushoff crosses nothing")
        used = set()
        for x, _ in pts:
            if x in used:
                raise SurgeryError("pushoff sides overlap")
            used.add(x)
        f0, nf0 = self.faces()
        chi0 = self.euler_characteristic()
        by_edge: dict[int, list[int]] = {}
        for x, _ in pts:
            by_edge.setdefault(x >> 1, []).append(x)
        where: dict[int, Point] = {}
        for e, xs in by_edge.items():
            c = 2 * e
            ordered = [x for x in xs if x == c] + [x for x in xs if x == c + 1]
            made = self.subdivide(c, len(ordered))
            for x in ordered:
                if x == c:
                    where[x] = made[0]
                else:
                    p = made[-1]
                    where[x] = Point(p.f, p.t)
        corners = []
        for x, direction in pts:
            p = where[x]
            if direction == "LR":
                corners.append((p.f, p.t))  # enter after f (left of x), leave after t
            else:
                corners.append((p.t, p.f))
        m = len(corners)
        darts = []
        for i in range(m):
            darts.append(self.add_chord(corners[i][1], corners[(i + 1) % m][0]))
        if self.euler_characteristic() != chi0:
            raise SurgeryError("pushoff chord left its face")
        return darts

    def forward_darts(self, curve, pos) -> list[int]:
        """Darts of the diagram arc ``(curve, pos)`` oriented along the curve."""
        out = []
        for e, t in enumerate(self.tag):
            if t is not None and t[0] == curve and t[1] == pos:
                out.append(2 * e + t[2])
        return out

    def insert_path(self, start, steps, end=None, closed=True, accept=None):
        """Insert a curve transverse to diagram arcs.

        ``steps`` is a list of ``((curve, pos), sign)``; sign ``+1`` crosses the
        arc from its right to its left.  For an open path, ``start`` and ``end``
        are ``((curve, pos), side)`` attachments on the given side of an arc.
        Returns ``(map, darts, first point, last point)`` for the first
        realization found that ``accept`` (when given) approves; the receiver
        is left untouched.
        """
        if closed and not steps:
            raise SurgeryError("a closed path needs at least one crossing")
        results = _Results(accept)
        self._insert_rec(self.copy(), start, list(steps), end, closed, None, [], None, results)
        if not results:
            raise SurgeryError("path cannot be realized as a simple curve")
        return results[0]

    def _candidates(self, sm, arc, side_needed, face_now):
        face, _ = sm.faces()
        out = []
        for x in sm.forward_darts(*arc):
            side_dart = x if side_needed == "R" else x ^ 1
            if face_now is None or face[side_dart] == face_now:
                out.append(x)
        return out

    @staticmethod
    def _split(sm, x):
        """Subdivide ``x`` once; returns the point and a function fixing older references.

        Subdividing moves ``x ^ 1`` onto the new vertex, so a reference to it
        that meant the old far endpoint must follow the new edge instead.
        """
        p = sm.subdivide(x, 1)[0]
        moved, repl = x ^ 1, p.f ^ 1

        def fix(y):
            return repl if y == moved else y

        def fix_point(q):
            return None if q is None else Point(fix(q.t), fix(q.f))

        return p, fix, fix_point

    def _insert_rec(self, sm, start, steps, end, closed, exit_corner, darts, first, results):
        if results:
            return
        if first is None:
            if closed:
                arc, sign = steps[0]
                for x in self._candidates(sm, arc, None, None):
                    sm2 = sm.copy()
                    p, _, _ = self._split(sm2, x)
                    # right-to-left crossing enters after t and leaves after f
                    cin, cout = (p.t, p.f) if sign > 0 else (p.f, p.t)
                    self._insert_rec(sm2, start, steps[1:], end, closed, cout, [], (cin, p), results)
                    if results:
                        return
            else:
                arc, side = start
                for x in self._candidates(sm, arc, None, None):
                    sm2 = sm.copy()
                    p, _, _ = self._split(sm2, x)
                    cout = p.f if side == "L" else p.t
                    self._insert_rec(sm2, start, steps, end, closed, cout, [], (None, p), results)
                    if results:
                        return
            return
        face, _ = sm.faces()
        here = face[exit_corner ^ 1]
        if not steps:
            if closed:
                cin, p0 = first
                if face[cin ^ 1] != here:
                    return
                sm2 = sm.copy()
                chi0 = sm2.euler_characteristic()
                a = sm2.add_chord(exit_corner, cin)
                if sm2.euler_characteristic() != chi0:
                    return
                results.append((sm2, darts + [a], p0, p0))
                return
            arc, side = end
            need = "R" if side == "R" else "L"
            for x in self._candidates(sm, arc, need, here):
                sm2 = sm.copy()
                chi0 = sm2.euler_characteristic()
                p, fix, fix_point = self._split(sm2, x)
                cin = p.f if side == "L" else p.t
                a = sm2.add_chord(fix(exit_corner), cin)
                if sm2.euler_characteristic() != chi0:
                    continue
                results.append((sm2, darts + [a], fix_point(first[1]), p))
                if results:
                    return
            return
        arc, sign = steps[0]
        need = "R" if sign > 0 else "L"
        for x in self._candidates(sm, arc, need, here):
            sm2 = sm.copy()
            chi0 = sm2.euler_characteristic()
            p, fix, fix_point = self._split(sm2, x)
            cin, cout = (p.t, p.f) if sign > 0 else (p.f, p.t)
            a = sm2.add_chord(fix(exit_corner), cin)
            if sm2.euler_characteristic() != chi0:
                continue
            nfirst = (None if first[0] is None else fix(first[0]), fix_point(first[1]))
            self._insert_rec(sm2, start, steps[1:], end, closed, cout, darts + [a], nfirst, results)
            if results:
                return

    # --------------------------------------------------------- regions
    def regions(self, walls) -> tuple[list[int], list[int]]:
        """Group faces into regions separated by edges owned by curves in ``walls``.

        Returns the region of every face and the Euler characteristic of every region.
        """
        face, nf = self.faces()
        parent = list(range(nf))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in range(self.n_edges):
            if self.owner[e] in walls:
                continue
            a, b = find(face[2 * e]), find(face[2 * e + 1])
            if a != b:
                parent[a] = b
        roots: dict[int, int] = {}
        region = [roots.setdefault(find(f), len(roots)) for f in range(nf)]
        chi = [0] * len(roots)
        for f in range(nf):
            chi[region[f]] += 1
        for e in range(self.n_edges):
            if self.owner[e] not in walls:
                chi[region[face[2 * e]]] -= 1
        walled = [False] * self.nv
        rep = [-1] * self.nv
        for dd in range(self.n_darts):
            v = self.vert[dd]
            rep[v] = dd
            if self.owner[dd >> 1] in walls:
                walled[v] = True
        for v in range(self.nv):
            if not walled[v] and rep[v] >= 0:
                chi[region[face[rep[v]]]] += 1
        return region, chi

    def visits(self, keys) -> dict[int, list]:
        """Vertex -> list of ``(key, in dart, out dart)`` for the closed curves ``keys``."""
        out: dict[int, list] = {}
        for key in keys:
            walk = self.walks[key]
            n = len(walk)
            for k in range(n):
                if not self.closed[key] and k == 0:
                    continue
                din = walk[k - 1] ^ 1
                dout = walk[k]
                out.setdefault(self.vert[dout], []).append((key, din, dout))
        return out

    def crossing_sign(self, c_in, c_out, p_in, p_out) -> int:
        """+1 if the second strand passes from the right of the first to its left."""
        order = [x for x in self.rotation(c_out) if x in (c_in, p_in, p_out)]
        if order == [p_out, c_in, p_in]:
            return 1
        if order == [p_in, c_in, p_out]:
            return -1
        raise SurgeryError("strands touch without crossing")


# --------------------------------------------------------------- extraction


@dataclass
class Extraction:
    diagram: HeegaardDiagram
    sm: SurfaceMap
    region: list
    comp_of_region: dict
    edge_arc: dict = field(default_factory=dict)  # edge -> (curve id, arc pos)
    crossing_vertex: dict = field(default_factory=dict)  # vertex -> crossing id


def extract(sm: SurfaceMap) -> Extraction:
    """Read the diagram drawn by the coloured curves of ``sm``."""
    keys = sorted(k for k, c in sm.color.items() if c is not None)
    walls = set(keys)
    vis = sm.visits(keys)
    crossing_at: dict[int, dict] = {}
    for v, lst in vis.items():
        if len(lst) == 1:
            continue
        colors = sorted(sm.color[k] for k, _, _ in lst)
        if colors != [BLUE, RED]:
            raise SurgeryError(f"curves meet badly at a vertex: {colors}")
        b = next(t for t in lst if sm.color[t[0]] == BLUE)
        r = next(t for t in lst if sm.color[t[0]] == RED)
        sign = sm.crossing_sign(b[1], b[2], r[1], r[2])
        crossing_at[v] = {"b": b, "r": r, "sign": sign}
    # slots along each curve, starting from the first crossing vertex of the walk
    positions: dict = {}
    edge_arc: dict = {}
    for key in keys:
        walk = sm.walks[key]
        n = len(walk)
        hits = [k for k in range(n) if sm.vert[walk[k]] in crossing_at]
        if not hits:
            positions[key] = []
            for x in walk:
                edge_arc[x >> 1] = (key, 0, x)
            continue
        start = hits[0]
        order = []
        pos = -1
        for j in range(n):
            k = (start + j) % n
            x = walk[k]
            if sm.vert[x] in crossing_at:
                pos += 1
                order.append(sm.vert[x])
            edge_arc[x >> 1] = (key, pos, x)
        positions[key] = order
    # crossing ids by traversal order from the least curve
    xid: dict[int, int] = {}
    for key in keys:
        for v in positions[key]:
            if v not in xid:
                xid[v] = len(xid)
    slot: dict = {}
    for key in keys:
        for i, v in enumerate(positions[key]):
            slot[(v, sm.color[key])] = (key, i)
    crossings = []
    for v, info in crossing_at.items():
        bkey, bpos = slot[(v, BLUE)]
        rkey, rpos = slot[(v, RED)]
        crossings.append(Crossing(xid[v], bkey, bpos, rkey, rpos, info["sign"]))
    curves = [Curve(k, sm.color[k], sm.gen[k]) for k in keys]
    bare = HeegaardDiagram(sm.genus, tuple(curves), tuple(crossings), ())
    region, chi = sm.regions(walls)
    face, _ = sm.faces()
    inv = {xid[v]: v for v in xid}
    circles_of: dict[int, list] = {}
    for k, orbit in enumerate(bare.face_traces):
        dd = orbit[0]
        xc = bare.crossings[dd // 4]
        info = crossing_at[inv[xc.id]]
        b, r = info["b"], info["r"]
        am = {BO: b[2], BI: b[1], RO: r[2], RI: r[1]}[dd % 4]
        circles_of.setdefault(region[face[am]], []).append(bare.face_ref(k))
    for key in keys:
        if positions[key]:
            continue
        a = sm.walks[key][0]
        circles_of.setdefault(region[face[a ^ 1]], []).append(FloatRef(key, "L"))
        circles_of.setdefault(region[face[a]], []).append(FloatRef(key, "R"))
    comps = []
    for reg, circles in circles_of.items():
        h2 = 2 - chi[reg] - len(circles)
        if h2 < 0 or h2 % 2:
            raise SurgeryError("region with impossible topology")
        comps.append((reg, Component(0, h2 // 2, tuple(circles))))
    if len(circles_of) != len(chi):
        raise SurgeryError("region without boundary")
    canon = canonical_components([c for _, c in comps])
    canon_id = {frozenset(cc.circles): cc.id for cc in canon}
    comp_of_region = {reg: canon_id[frozenset(c.circles)] for reg, c in comps}
    d = HeegaardDiagram(sm.genus, tuple(curves), tuple(crossings), canon)
    return Extraction(d, sm, region, comp_of_region, edge_arc, {v: xid[v] for v in xid})


def path_steps(ex: Extraction, key) -> list:
    """Read a passive closed curve of ``ex.sm`` as ``(component, Arc, sign)`` steps."""
    sm = ex.sm
    walk = sm.walks[key]
    face, _ = sm.faces()
    diag_keys = [k for k, c in sm.color.items() if c is not None]
    on_curve: dict[int, tuple] = {}
    for k in diag_keys:
        w = sm.walks[k]
        for i, x in enumerate(w):
            on_curve[sm.vert[x]] = (k, w[i - 1] ^ 1, x)
    steps = []
    n = len(walk)
    for i in range(n):
        din = walk[i - 1] ^ 1
        dout = walk[i]
        v = sm.vert[dout]
        if v not in on_curve:
            continue
        if v in ex.crossing_vertex:
            raise SurgeryError("path runs through a crossing")
        k, cin, cout = on_curve[v]
        sign = sm.crossing_sign(cin, cout, din, dout)
        cid, pos, _ = ex.edge_arc[cout >> 1]
        comp = ex.comp_of_region[ex.region[face[din ^ 1]]]
        steps.append((comp, Arc(cid, pos), sign))
    return steps


# ----------------------------------------------------------------- homology


def _rank(rows: list[list[int]]) -> int:
    m = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def intersection_coordinates(sm: SurfaceMap, keys) -> list[list[int]]:
    """Algebraic intersection of each closed curve with a basis of dual cycles.

    The dual cycles come from a tree-cotree decomposition, so the rows span a
    lattice isomorphic to the span of the curve classes in homology.
    """
    from collections import deque

    nv = sm.nv
    face, nf = sm.faces()
    adj: list[list[int]] = [[] for _ in range(nv)]
    for dd in range(sm.n_darts):
        adj[sm.vert[dd]].append(dd)
    in_tree = [False] * sm.n_edges
    seen = [False] * nv
    for root in range(nv):
        if seen[root] or not adj[root]:
            continue
        seen[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for dd in adj[v]:
                w = sm.vert[dd ^ 1]
                if not seen[w]:
                    seen[w] = True
                    in_tree[dd >> 1] = True
                    q.append(w)
    dual_adj: list[list[tuple[int, int]]] = [[] for _ in range(nf)]
    for e in range(sm.n_edges):
        if not in_tree[e]:
            dual_adj[face[2 * e]].append((e, face[2 * e + 1]))
            dual_adj[face[2 * e + 1]].append((e, face[2 * e]))
    in_cotree = [False] * sm.n_edges
    parent: list = [None] * nf
    depth = [0] * nf
    fseen = [False] * nf
    fseen[0] = True
    q = deque([0])
    while q:
        f = q.popleft()
        for e, g in dual_adj[f]:
            if not fseen[g]:
                fseen[g] = True
                in_cotree[e] = True
                parent[g] = (e, f)
                depth[g] = depth[f] + 1
                q.append(g)
    leftover = [e for e in range(sm.n_edges) if not in_tree[e] and not in_cotree[e]]

    def crossing_sign(e, frm):
        # +1 when a dual path crosses edge e from the right of 2e to its left
        return 1 if face[2 * e] == frm else -1

    cycles = []
    for e in leftover:
        # path in the cotree from face right of 2e to face left of 2e, then across e
        start, goal = face[2 * e], face[2 * e + 1]
        up_s, up_g = [], []
        x, y = start, goal
        while depth[x] > depth[y]:
            up_s.append(parent[x])
            x = parent[x][1]
        while depth[y] > depth[x]:
            up_g.append(parent[y])
            y = parent[y][1]
        while x != y:
            up_s.append(parent[x])
            x = parent[x][1]
            up_g.append(parent[y])
            y = parent[y][1]
        terms = {}
        cur = start
        for ee, par in up_s:
            terms[ee] = terms.get(ee, 0) + crossing_sign(ee, cur)
            cur = par
        for ee, par in reversed(up_g):
            terms[ee] = terms.get(ee, 0) + crossing_sign(ee, par)
        terms[e] = terms.get(e, 0) + crossing_sign(e, goal)
        cycles.append(terms)
    rows = []
    for key in keys:
        count: dict[int, int] = {}
        for x in sm.walks[key]:
            count[x >> 1] = count.get(x >> 1, 0) + (1 if x % 2 == 0 else -1)
        rows.append([sum(s * count.get(e, 0) for e, s in cyc.items()) for cyc in cycles])
    return rows


def homology_rank(sm: SurfaceMap, keys) -> int:
    rows = intersection_coordinates(sm, keys)
    if not rows or not rows[0]:
        return 0
    return _rank(rows)
