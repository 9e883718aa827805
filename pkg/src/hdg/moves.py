"""Handle slides, wave moves and tautification."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .diagram import (
    Arc,
    HeegaardDiagram,
    algebraic_intersection_matrix,
    other_color,
    require_valid,
    validate,
)
from .invariants import smith_normal_form
from .surface import SurfaceMap, SurgeryError, extract


class MoveError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Problem:
    """A component touching the same side of one curve along two different arcs."""

    component: int
    curve: int
    arc1: int
    arc2: int
    side: str


@dataclass(frozen=True)
class WaveArc:
    """Arc leaving ``start`` and returning to ``end`` on the same side of one curve.

    ``crossings`` lists the arcs of other curves met on the way with the sign
    of each crossing (``+1`` passes from the right of the crossed curve to its left).
    """

    start: Arc
    end: Arc
    side: str
    crossings: tuple = ()


@dataclass(frozen=True)
class Band:
    """Path from a side of one curve to a side of another, crossing only the opposite colour."""

    start: Arc
    start_side: str
    end: Arc
    end_side: str
    crossings: tuple = ()


@dataclass(frozen=True)
class WaveStep:
    delta: int
    arc: WaveArc

    def __str__(self) -> str:
        return f"wave δ={self.delta} arc={_fmt_arc_fields(self.arc)}"


@dataclass(frozen=True)
class SlideStep:
    gamma: int
    delta: int
    band: Band

    def __str__(self) -> str:
        b = self.band
        fields = [str(b.start), b.start_side, str(b.end), b.end_side] + _fmt_crossings(b.crossings)
        return f"slide γ={self.gamma} δ={self.delta} band={','.join(fields)}"


def _fmt_crossings(crossings) -> list[str]:
    return [f"{a}{'+' if s > 0 else '-'}" for a, s in crossings]


def _fmt_arc_fields(w: WaveArc) -> str:
    return ",".join([str(w.start), str(w.end), w.side] + _fmt_crossings(w.crossings))


def _parse_arc(tok: str) -> Arc:
    c, p = tok.split(":")
    return Arc(int(c), int(p))


def _parse_crossings(toks) -> tuple:
    out = []
    for t in toks:
        if not t or t[-1] not in "+-":
            raise ValueError(f"bad crossing token {t!r}")
        out.append((_parse_arc(t[:-1]), 1 if t[-1] == "+" else -1))
    return tuple(out)


def _side(tok: str) -> str:
    if tok not in ("L", "R"):
        raise ValueError(f"bad side {tok!r}")
    return tok


def parse_step(line: str):
    """Inverse of ``str`` on :class:`WaveStep` and :class:`SlideStep`."""
    parts = line.split()
    try:
        if parts[0] == "wave" and len(parts) == 3:
            delta = int(parts[1].removeprefix("δ="))
            f = parts[2].removeprefix("arc=").split(",")
            arc = WaveArc(_parse_arc(f[0]), _parse_arc(f[1]), _side(f[2]), _parse_crossings(f[3:]))
            return WaveStep(delta, arc)
        if parts[0] == "slide" and len(parts) == 4:
            gamma = int(parts[1].removeprefix("γ="))
            delta = int(parts[2].removeprefix("δ="))
            f = parts[3].removeprefix("band=").split(",")
            band = Band(_parse_arc(f[0]), _side(f[1]), _parse_arc(f[2]), _side(f[3]), _parse_crossings(f[4:]))
            return SlideStep(gamma, delta, band)
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad trace line {line!r}: {exc}") from None
    raise ValueError(f"bad trace line {line!r}")


def apply_step(d: HeegaardDiagram, step) -> HeegaardDiagram:
    if isinstance(step, WaveStep):
        return wave_move(d, step.delta, step.arc)
    return handle_slide(d, step.gamma, step.delta, step.band)


def replay(d: HeegaardDiagram, steps) -> HeegaardDiagram:
    for s in steps:
        d = apply_step(d, parse_step(s) if isinstance(s, str) else s)
    return d


# -------------------------------------------------------------------- problems


def find_problems(d: HeegaardDiagram) -> list[Problem]:
    require_valid(d)
    out = []
    for comp in d.components:
        arcs: dict[tuple[int, str], set[int]] = {}
        for s in d.component_sides(comp.id):
            arcs.setdefault((s.arc.curve, s.side), set()).add(s.arc.pos)
        for (cid, side), positions in sorted(arcs.items()):
            ps = sorted(positions)
            for i in range(len(ps)):
                for j in range(i + 1, len(ps)):
                    out.append(Problem(comp.id, cid, ps[i], ps[j], side))
    out.sort(key=lambda p: (p.component, p.curve, p.arc1, p.arc2, p.side))
    return out


def is_taut(d: HeegaardDiagram) -> bool:
    return not find_problems(d)


# ------------------------------------------------------------------ surgery


def snf(d: HeegaardDiagram) -> tuple[int, ...]:
    m = algebraic_intersection_matrix(d)
    return smith_normal_form(m).factors if m else ()


def _loop_from(walk: list[int], start: int) -> list[int]:
    """The closed walk read once around from dart ``start``."""
    i = walk.index(start)
    return walk[i:] + walk[:i]


def _loop_back(walk: list[int], last: int) -> list[int]:
    """The closed walk read backwards, starting with the reverse of dart ``last``."""
    i = walk.index(last)
    n = len(walk)
    return [walk[(i - k) % n] ^ 1 for k in range(n)]


def _segment(walk: list[int], first: int, stop: int) -> list[int]:
    """Darts of ``walk`` from ``first`` up to, but excluding, ``stop``."""
    i = walk.index(first)
    out = []
    n = len(walk)
    for k in range(n):
        x = walk[(i + k) % n]
        if x == stop:
            return out
        out.append(x)
    raise SurgeryError("segment end not on walk")


def _left_of_visit(sm: SurfaceMap, din: int, dout: int) -> set[int]:
    out = set()
    x = sm.sigma[dout]
    while x != din:
        out.add(x)
        x = sm.sigma[x]
    return out


def _finish(sm: SurfaceMap, old_key, new_darts, color, gen, extra_deleted) -> HeegaardDiagram:
    sm.delete_curve(old_key)
    for k in extra_deleted:
        sm.delete_curve(k)
    sm.add_curve(old_key, new_darts, color, gen)
    return extract(sm).diagram


def _wave_candidates(d: HeegaardDiagram, delta: int, arc: WaveArc, passive=None):
    """Yield the two candidate results (as surface maps) of a wave move."""
    sm = SurfaceMap.from_diagram(d)
    if passive is not None:
        passive(sm)
    sm, gdarts, p1, p2 = sm.insert_path(*_wave_route(delta, arc), closed=False)
    yield from _cuffs(sm, delta, gdarts, p1, p2)


def _wave_route(delta: int, arc: WaveArc):
    return (
        ((delta, arc.start.pos), arc.side),
        [((a.curve, a.pos), s) for a, s in arc.crossings],
        ((delta, arc.end.pos), arc.side),
    )


def _cuffs(sm: SurfaceMap, delta, gdarts, p1, p2):
    """The two boundary curves of a neighbourhood of ``delta`` and the inserted arc."""
    walk = sm.walks[delta]
    grev = [x ^ 1 for x in reversed(gdarts)]
    for first, stop, tail, p_start, p_end in (
        (p1.f, p2.f, grev, p1, p2),
        (p2.f, p1.f, gdarts, p2, p1),
    ):
        w = _segment(walk, first, stop) + tail
        # the other strand of delta leaves p_start through p_start.t
        left = _left_of_visit(sm, tail[-1] ^ 1, first)
        side = "R" if p_start.t in left else "L"
        left_end = _left_of_visit(sm, p_end.t, tail[0])
        inside_end = (p_end.f in left_end) == (side == "L")
        if inside_end:
            raise SurgeryError("wave arc attaches to opposite sides")
        sm2 = sm.copy()
        darts = sm2.pushoff(w, side)
        sm2.add_curve(("gamma",), gdarts)
        yield sm2, darts


def wave_move(d: HeegaardDiagram, delta: int, arc: WaveArc, *, check: bool = True) -> HeegaardDiagram:
    """Replace ``delta`` by a boundary curve of the pair of pants around ``delta`` and ``arc``."""
    require_valid(d)
    _check_wave(d, delta, arc)
    before = snf(d)
    c = d.curve_by_id[delta]
    attempts = []
    for sm, darts in _wave_candidates(d, delta, arc):
        out = _finish(sm, delta, darts, c.color, c.gen, [("gamma",)])
        rep = validate(out)
        if not rep:
            if check and snf(out) != before:
                raise MoveError("wave move changed the homology invariants")
            return out
        attempts.append(rep)
    raise MoveError(f"neither cuff gives a valid diagram: {attempts}")


def _check_wave(d: HeegaardDiagram, delta: int, arc: WaveArc) -> None:
    if delta not in d.curve_by_id:
        raise MoveError(f"unknown curve {delta}")
    n = max(d.curve_length(delta), 1)
    if arc.start.curve != delta or arc.end.curve != delta:
        raise MoveError("wave arc must start and end on the moved curve")
    if not (0 <= arc.start.pos < n and 0 <= arc.end.pos < n):
        raise MoveError("wave arc attaches to a missing arc")
    if arc.side not in ("L", "R"):
        raise MoveError("side must be L or R")
    color = d.curve_by_id[delta].color
    for a, s in arc.crossings:
        c = d.curve_by_id.get(a.curve)
        if c is None or c.color == color:
            raise MoveError("wave arc may only cross curves of the other colour")
        if s not in (1, -1):
            raise MoveError("crossing sign must be +1 or -1")
    _check_route(d, (arc.start, arc.side), arc.crossings, (arc.end, arc.side))


def _check_route(d, start, crossings, end) -> None:
    """The components on both sides of consecutive crossings must agree."""
    arc, side = start
    comp = d.component_of_side(arc, side)
    for a, s in crossings:
        if d.component_of_side(a, "R" if s > 0 else "L") != comp:
            raise MoveError(f"route does not reach arc {a} from the expected side")
        comp = d.component_of_side(a, "L" if s > 0 else "R")
    arc, side = end
    if d.component_of_side(arc, side) != comp:
        raise MoveError("route does not end next to its target arc")


def handle_slide(d: HeegaardDiagram, gamma: int, delta: int, band: Band) -> HeegaardDiagram:
    """Band-sum ``gamma`` with ``delta`` along ``band``; ``gamma`` is replaced."""
    require_valid(d)
    if gamma == delta:
        raise MoveError("a curve cannot slide over itself")
    cg, cd = d.curve_by_id.get(gamma), d.curve_by_id.get(delta)
    if cg is None or cd is None:
        raise MoveError("unknown curve")
    if cg.color != cd.color:
        raise MoveError("handle slides need two curves of the same colour")
    if band.start.curve != gamma or band.end.curve != delta:
        raise MoveError("band must run from the slid curve to the other one")
    for a, s in band.crossings:
        c = d.curve_by_id.get(a.curve)
        if c is None or c.color == cg.color:
            raise MoveError("band crosses a curve of its own colour")
    _check_route(d, (band.start, band.start_side), band.crossings, (band.end, band.end_side))
    before = snf(d)
    sm = SurfaceMap.from_diagram(d)
    try:
        sm, tdarts, p, q = sm.insert_path(
            ((gamma, band.start.pos), band.start_side),
            [((a.curve, a.pos), s) for a, s in band.crossings],
            ((delta, band.end.pos), band.end_side),
            closed=False,
        )
    except SurgeryError:
        raise MoveError("band cannot be drawn as a simple arc") from None
    # traverse each curve so that the band leaves it on the left
    gw, dw = sm.walks[gamma], sm.walks[delta]
    gloop = _loop_from(gw, p.f) if band.start_side == "L" else _loop_back(gw, p.t ^ 1)
    dloop = _loop_from(dw, q.f) if band.end_side == "L" else _loop_back(dw, q.t ^ 1)
    w = gloop + tdarts + dloop + [x ^ 1 for x in reversed(tdarts)]
    darts = sm.pushoff(w, "L")
    sm.add_curve(("band",), tdarts)
    out = _finish(sm, gamma, darts, cg.color, cg.gen, [("band",)])
    rep = validate(out)
    if rep:
        raise MoveError(f"slide produced an invalid diagram: {rep}")
    if snf(out) != before:
        raise MoveError("handle slide changed the homology invariants")
    return out


# ---------------------------------------------------------------- tautify


def problem_arc(p: Problem) -> WaveArc:
    return WaveArc(Arc(p.curve, p.arc1), Arc(p.curve, p.arc2), p.side)


def tautify(d: HeegaardDiagram) -> tuple[HeegaardDiagram, list[WaveStep]]:
    """Apply wave moves across problems until none is left."""
    require_valid(d)
    trace = []
    while True:
        probs = find_problems(d)
        if not probs:
            return d, trace
        p = probs[0]
        step = WaveStep(p.curve, problem_arc(p))
        nd = wave_move(d, p.curve, step.arc)
        if nd.n_crossings >= d.n_crossings:
            raise MoveError("wave move did not reduce the crossing count")
        trace.append(step)
        d = nd


# ------------------------------------------------------------ random slides


def _dual_neighbours(d: HeegaardDiagram, comp: int, color: str):
    """Crossings out of ``comp`` through arcs of ``color``: ``(arc, sign, next component)``."""
    out = []
    for s in d.component_sides(comp):
        if d.curve_by_id[s.arc.curve].color != color:
            continue
        sign = 1 if s.side == "R" else -1
        nxt = d.component_of_side(s.arc, "L" if s.side == "R" else "R")
        out.append((s.arc, sign, nxt))
    return out


def random_band(d: HeegaardDiagram, gamma: int, delta: int, rng: random.Random, wander: int = 2) -> Band:
    """A random band from ``gamma`` to ``delta`` crossing only curves of the other colour."""
    color = other_color(d.curve_by_id[gamma].color)
    g_arcs = [a for a in d.arcs() if a.curve == gamma]
    start = rng.choice(g_arcs)
    start_side = rng.choice("LR")
    comp = d.component_of_side(start, start_side)
    route = []
    for _ in range(rng.randint(0, wander)):
        nb = _dual_neighbours(d, comp, color)
        if not nb:
            break
        arc, sign, comp = rng.choice(nb)
        route.append((arc, sign))
    targets = {}
    for a in d.arcs():
        if a.curve == delta:
            for side in "LR":
                targets.setdefault(d.component_of_side(a, side), []).append((a, side))
    prev = {comp: None}
    queue = deque([comp])
    while queue:
        c = queue.popleft()
        if c in targets:
            end, end_side = rng.choice(targets[c])
            tail = []
            while prev[c] is not None:
                c, arc, sign = prev[c]
                tail.append((arc, sign))
            return Band(start, start_side, end, end_side, tuple(route + tail[::-1]))
        nb = _dual_neighbours(d, c, color)
        rng.shuffle(nb)
        for arc, sign, nxt in nb:
            if nxt not in prev:
                prev[nxt] = (c, arc, sign)
                queue.append(nxt)
    raise MoveError("no band exists")


def random_slide(d: HeegaardDiagram, rng: random.Random) -> SlideStep:
    color = rng.choice(["blue", "red"])
    curves = [c.id for c in d.curves if c.color == color]
    if len(curves) < 2:
        raise MoveError("no second curve of the same colour to slide over")
    gamma, delta = rng.sample(curves, 2)
    return SlideStep(gamma, delta, random_band(d, gamma, delta, rng))
