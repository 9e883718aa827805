"""Text formats for diagrams, dual paths and square complexes.

Diagram files::

    HDG 1
    genus 1
    curve 0 blue 1
    curve 1 red 1
    x 0 0 0 1 0 +
    comp 0 genus 0 circles face:0.bo

Circle references are ``face:<crossing>.<selector>``, naming a dart of
the face trace (serialized as the least one), or ``float:<curve>:<L|R>``.
Component lines may be left out when every component is a disk.
"""

from __future__ import annotations

from .diagram import (
    COLORS,
    SELECTORS,
    Arc,
    Component,
    Crossing,
    Curve,
    FaceRef,
    FloatRef,
    HeegaardDiagram,
    canonical_components,
    derive_components,
)
from .reduction import DualPath
from .squares import Edge, VHSquareComplex


class ParseError(ValueError):
    def __init__(self, line: int, col: int, msg: str):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col
        self.msg = msg


def _tokens(text: str):
    """Yield ``(line number, [(column, token), ...])`` for non-blank, non-comment lines."""
    for n, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].rstrip("\r")
        toks = []
        col = 0
        for part in line.split(" "):
            if part:
                toks.append((col + 1, part))
            col += len(part) + 1
        yield n, toks


def _int(n: int, tok, what: str) -> int:
    col, s = tok
    try:
        return int(s)
    except ValueError:
        raise ParseError(n, col, f"expected integer {what}, got {s!r}") from None


def _need(n: int, toks, count: int, usage: str) -> None:
    if len(toks) != count:
        col = toks[min(len(toks), count) - 1][0] if toks else 1
        raise ParseError(n, col, f"expected `{usage}`")


def parse_circle(s: str):
    if s.startswith("face:"):
        c, _, sel = s[5:].partition(".")
        if sel not in SELECTORS:
            raise ValueError(f"bad selector in {s!r}")
        return FaceRef(int(c), SELECTORS.index(sel))
    if s.startswith("float:"):
        parts = s.split(":")
        if len(parts) != 3 or parts[2] not in ("L", "R"):
            raise ValueError(f"bad float reference {s!r}")
        return FloatRef(int(parts[1]), parts[2])
    raise ValueError(f"bad circle reference {s!r}")


def _sign(n: int, tok) -> int:
    col, s = tok
    if s not in ("+", "-"):
        raise ParseError(n, col, f"expected + or -, got {s!r}")
    return 1 if s == "+" else -1


def parse(text: str) -> HeegaardDiagram:
    lines = [(n, t) for n, t in _tokens(text) if t]
    if not lines:
        raise ParseError(1, 1, "missing header")
    n, toks = lines[0]
    if [s for _, s in toks] != ["HDG", "1"]:
        raise ParseError(n, 1, "missing header")
    genus = None
    curves, crossings, comps, floats = [], [], [], []
    for n, toks in lines[1:]:
        head = toks[0][1]
        if head == "genus":
            _need(n, toks, 2, "genus <g>")
            if genus is not None:
                raise ParseError(n, 1, "genus given twice")
            genus = _int(n, toks[1], "genus")
        elif head == "curve":
            _need(n, toks, 4, "curve <id> <blue|red> <gen>")
            if toks[2][1] not in COLORS:
                raise ParseError(n, toks[2][0], f"unknown colour {toks[2][1]!r}")
            curves.append(Curve(_int(n, toks[1], "id"), toks[2][1], _int(n, toks[3], "generator")))
        elif head == "x":
            _need(n, toks, 7, "x <id> <blue> <blue-pos> <red> <red-pos> <+|->")
            vals = [_int(n, t, "field") for t in toks[1:6]]
            crossings.append(Crossing(*vals, _sign(n, toks[6])))
        elif head == "float":
            _need(n, toks, 4, "float <id> <component> <L|R>")
            if toks[3][1] not in ("L", "R"):
                raise ParseError(n, toks[3][0], "side hint must be L or R")
            floats.append((n, _int(n, toks[1], "id"), _int(n, toks[2], "component"), toks[3][1]))
        elif head == "comp":
            if len(toks) < 6 or toks[2][1] != "genus" or toks[4][1] != "circles":
                raise ParseError(n, 1, "expected `comp <id> genus <h> circles <ref,...>`")
            refs = []
            for col, s in toks[5:]:
                for part in s.split(","):
                    if not part:
                        continue
                    try:
                        refs.append(parse_circle(part))
                    except ValueError as exc:
                        raise ParseError(n, col, str(exc)) from None
            comps.append(Component(_int(n, toks[1], "id"), _int(n, toks[3], "genus"), tuple(refs)))
        else:
            raise ParseError(n, toks[0][0], f"unknown directive {head!r}")
    if genus is None:
        raise ParseError(lines[-1][0], 1, "missing genus line")
    curves.sort(key=lambda c: c.id)
    crossings.sort(key=lambda x: x.id)
    if not comps:
        comps = list(derive_components(genus, curves, crossings)) if crossings or not curves else []
    bare = HeegaardDiagram(genus, tuple(curves), tuple(crossings), tuple(comps))
    comps = [Component(c.id, c.genus, tuple(_canonical_ref(bare, z) for z in c.circles)) for c in comps]
    d = HeegaardDiagram(genus, tuple(curves), tuple(crossings), canonical_components(comps))
    for n, cid, comp, side in floats:
        got = d.component_of_circle.get(FloatRef(cid, side))
        if got is not None and got != comp:
            raise ParseError(n, 1, f"float {cid} side {side} lies in component {got}, not {comp}")
    return d


def _canonical_ref(d: HeegaardDiagram, ref):
    """Replace a face reference by the least dart of its face when the crossings allow it."""
    if not isinstance(ref, FaceRef):
        return ref
    try:
        return d.face_ref(d.face_index(ref))
    except (KeyError, IndexError, ValueError):
        return ref


def serialize(d: HeegaardDiagram) -> str:
    out = ["HDG 1", f"genus {d.genus}"]
    for c in sorted(d.curves, key=lambda c: c.id):
        out.append(f"curve {c.id} {c.color} {c.gen}")
    for x in sorted(d.crossings, key=lambda x: x.id):
        s = "+" if x.sign > 0 else "-"
        out.append(f"x {x.id} {x.blue} {x.blue_pos} {x.red} {x.red_pos} {s}")
    for cid in sorted(d.floating()):
        out.append(f"float {cid} {d.component_of_circle[FloatRef(cid, 'L')]} L")
    for comp in d.components:
        refs = ",".join(str(z) for z in comp.circles)
        out.append(f"comp {comp.id} genus {comp.genus} circles {refs}")
    return "\n".join(out) + "\n"


# ------------------------------------------------------------ dual paths


def parse_paths(text: str) -> list[DualPath]:
    """Dual paths separated by blank lines: ``p <comp> <curve:pos> <+|->`` or ``b <circle>``."""
    paths = []
    cur: list = []
    boundary = None

    def flush():
        nonlocal cur, boundary
        if cur or boundary is not None:
            paths.append(DualPath(tuple(cur), boundary))
        cur, boundary = [], None

    for n, raw in enumerate(text.split("\n"), start=1):
        if not raw.split("#", 1)[0].strip():
            if not raw.strip():
                flush()
            continue
        toks = next(_tokens(raw))[1]
        head = toks[0][1]
        if head == "p":
            _need(n, toks, 4, "p <component> <curve:pos> <+|->")
            if boundary is not None:
                raise ParseError(n, 1, "crossing step after a boundary line")
            col, s = toks[2]
            c, _, pos = s.partition(":")
            try:
                arc = Arc(int(c), int(pos))
            except ValueError:
                raise ParseError(n, col, f"bad arc {s!r}") from None
            cur.append((_int(n, toks[1], "component"), arc, _sign(n, toks[3])))
        elif head == "b":
            _need(n, toks, 2, "b <circle>")
            if cur or boundary is not None:
                raise ParseError(n, 1, "boundary line inside another path")
            try:
                boundary = parse_circle(toks[1][1])
            except ValueError as exc:
                raise ParseError(n, toks[1][0], str(exc)) from None
        else:
            raise ParseError(n, toks[0][0], f"unknown directive {head!r}")
    flush()
    return paths


def serialize_paths(paths) -> str:
    blocks = []
    for p in paths:
        if not p.steps:
            blocks.append(f"b {p.boundary}\n")
        else:
            blocks.append("".join(f"p {c} {a} {'+' if s > 0 else '-'}\n" for c, a, s in p.steps))
    return "\n".join(blocks)


# ------------------------------------------------------- square complexes


def serialize_complex(sc: VHSquareComplex) -> str:
    out = ["VHS 1", f"vertices {sc.n_vertices}"]
    for i, e in enumerate(sc.edges):
        out.append(f"edge {i} {e.label} {e.tail} {e.head}")
    for i, sq in enumerate(sc.squares):
        sides = " ".join(f"{e}{'+' if s > 0 else '-'}" for e, s in sq)
        out.append(f"square {i} {sides}")
    return "\n".join(out) + "\n"


def parse_complex(text: str) -> VHSquareComplex:
    lines = [(n, t) for n, t in _tokens(text) if t]
    if not lines or [s for _, s in lines[0][1]] != ["VHS", "1"]:
        raise ParseError(1, 1, "missing header")
    nv = None
    edges: dict[int, Edge] = {}
    squares: dict[int, tuple] = {}
    for n, toks in lines[1:]:
        head = toks[0][1]
        if head == "vertices":
            _need(n, toks, 2, "vertices <n>")
            nv = _int(n, toks[1], "count")
        elif head == "edge":
            _need(n, toks, 5, "edge <id> <V|H> <tail> <head>")
            if toks[2][1] not in ("V", "H"):
                raise ParseError(n, toks[2][0], "edge label must be V or H")
            edges[_int(n, toks[1], "id")] = Edge(toks[2][1], _int(n, toks[3], "tail"), _int(n, toks[4], "head"))
        elif head == "square":
            _need(n, toks, 6, "square <id> <e+|-> x4")
            sides = []
            for col, s in toks[2:]:
                if s[-1:] not in ("+", "-"):
                    raise ParseError(n, col, f"bad side {s!r}")
                sides.append((_int(n, (col, s[:-1]), "edge"), 1 if s[-1] == "+" else -1))
            squares[_int(n, toks[1], "id")] = tuple(sides)
        else:
            raise ParseError(n, toks[0][0], f"unknown directive {head!r}")
    if nv is None:
        raise ParseError(lines[-1][0], 1, "missing vertices line")
    if sorted(edges) != list(range(len(edges))) or sorted(squares) != list(range(len(squares))):
        raise ParseError(lines[-1][0], 1, "edge and square ids must be 0..n-1")
    return VHSquareComplex(nv, tuple(edges[i] for i in range(len(edges))), tuple(squares[i] for i in range(len(squares))))
