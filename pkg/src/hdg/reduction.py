"""Reducing curves, their intersection words and the area of augmented diagrams.

A dual path is a closed curve transverse to the diagram, recorded as the
cyclic list of arcs it crosses.  Its word lives in F_g x F_g: blue letters
in one factor and red letters in the other, and the two factors commute.
Reducing the word to the identity pairs the letters of each colour by a
non-crossing matching; a blue pair and a red pair whose endpoints alternate
around the cycle are *linked*, and each linked couple is one square of the
disk the curve bounds in the product of trees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .diagram import BLUE, RED, Arc, FaceRef, FloatRef, HeegaardDiagram, require_valid, validate
from .moves import (
    MoveError,
    WaveArc,
    WaveStep,
    _check_wave,
    _cuffs,
    _wave_route,
    find_problems,
    snf,
    tautify,
)
from .pinch import PinchedSurface, pinch
from .surface import SurfaceMap, SurgeryError, extract, path_steps

PATH = ("path",)


class ReductionError(ValueError):
    pass


@dataclass(frozen=True)
class DualPath:
    """Cyclic sequence of ``(component, arc, sign)`` crossings.

    Each step starts in ``component`` and crosses ``arc``; sign ``+1`` passes
    from the right of the crossed curve to its left.  A path that crosses
    nothing is described instead by ``boundary``, a boundary circle of a
    non-disk component, and runs parallel to it inside that component.
    """

    steps: tuple = ()
    boundary: object = None

    def __len__(self) -> int:
        return len(self.steps)

    def key(self) -> tuple:
        """Canonical key up to rotation and reversal."""
        if not self.steps:
            return ((), str(self.boundary))
        seq = [(a.curve, a.pos, s) for _, a, s in self.steps]
        rev = [(c, p, -s) for c, p, s in reversed(seq)]
        best = min(tuple(x[i:] + x[:i]) for x in (seq, rev) for i in range(len(x)))
        return (best, "")

    def __str__(self) -> str:
        if not self.steps:
            return f"boundary {self.boundary}"
        return " ".join(f"{a}{'+' if s > 0 else '-'}" for _, a, s in self.steps)


@dataclass(frozen=True)
class CurveWord:
    letters: tuple  # (color, gen, sign)
    matchings: dict = field(default_factory=dict)  # color -> ((i, j), ...) as word positions

    def projection(self, color: str) -> tuple:
        return tuple(x for x in self.letters if x[0] == color)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"{c[0]}{g}{'' if s > 0 else '^-1'}" for c, g, s in self.letters)


@dataclass(frozen=True)
class AugmentedDiagram:
    pinched: PinchedSurface
    disks: tuple  # ((DualPath, area), ...)

    @property
    def area(self) -> int:
        return self.pinched.area + sum(a for _, a in self.disks)


@dataclass
class MinimizationRound:
    area: int
    crossings: int
    curve: DualPath | None
    disk_area: int
    steps: list


@dataclass
class MinimizationTrace:
    rounds: list
    search_complete: bool

    @property
    def areas(self) -> list[int]:
        return [r.area for r in self.rounds]


class CurveList(list):
    """Search output; ``complete`` is false when the node budget ran out."""

    complete: bool = True


# ---------------------------------------------------------------- words


def check_path(d: HeegaardDiagram, p: DualPath) -> None:
    if not p.steps:
        if p.boundary is None:
            raise ReductionError("inconsistent path: no crossings and no boundary circle")
        if p.boundary not in d.component_of_circle:
            raise ReductionError(f"inconsistent path: unknown circle {p.boundary}")
        return
    n = len(p.steps)
    for i, (comp, arc, sign) in enumerate(p.steps):
        if arc.curve not in d.curve_by_id or not 0 <= arc.pos < max(d.curve_length(arc.curve), 1):
            raise ReductionError(f"inconsistent path: unknown arc {arc}")
        if sign not in (1, -1):
            raise ReductionError("inconsistent path: sign must be +1 or -1")
        if d.component_of_side(arc, "R" if sign > 0 else "L") != comp:
            raise ReductionError(f"inconsistent path: step {i} does not start next to {arc}")
        nxt = p.steps[(i + 1) % n][0]
        if d.component_of_side(arc, "L" if sign > 0 else "R") != nxt:
            raise ReductionError(f"inconsistent path: step {i} does not lead to component {nxt}")


def _reduce(letters) -> list:
    stack: list = []
    for x in letters:
        if stack and stack[-1][0] == x[0] and stack[-1][1] == -x[1]:
            stack.pop()
        else:
            stack.append(x)
    return stack


def _inverse(a, b) -> bool:
    return a[0] == b[0] and a[1] == b[1] and a[2] == -b[2]


def word_of_path(d: HeegaardDiagram, p: DualPath) -> CurveWord:
    check_path(d, p)
    letters = []
    for _, arc, sign in p.steps:
        c = d.curve_by_id[arc.curve]
        letters.append((c.color, c.gen, sign))
    letters = tuple(letters)
    best = _best_matchings(letters)
    return CurveWord(letters, {} if best is None else best[1])


def is_trivial(letters) -> bool:
    """Both colour projections of the cyclic word reduce to the identity."""
    for color in (BLUE, RED):
        if _reduce([(x[1], x[2]) for x in letters if x[0] == color]):
            return False
    return True


def noncrossing_matchings(letters, color):
    """All non-crossing matchings of the ``color`` letters into inverse pairs."""
    pos = [i for i, x in enumerate(letters) if x[0] == color]

    @lru_cache(maxsize=None)
    def rec(lo: int, hi: int) -> tuple:
        if lo > hi:
            return ((),)
        out = []
        for k in range(lo + 1, hi + 1, 2):
            if _inverse(letters[pos[lo]], letters[pos[k]]):
                for inner in rec(lo + 1, k - 1):
                    for outer in rec(k + 1, hi):
                        out.append(((pos[lo], pos[k]),) + inner + outer)
        return tuple(out)

    if len(pos) % 2:
        return ()
    return rec(0, len(pos) - 1)


def leftmost_innermost(letters, color) -> tuple | None:
    """The matching produced by free reduction from the left, or ``None``."""
    stack = []
    pairs = []
    for i, x in enumerate(letters):
        if x[0] != color:
            continue
        if stack and _inverse(letters[stack[-1]], x):
            pairs.append((stack.pop(), i))
        else:
            stack.append(i)
    return None if stack else tuple(sorted(pairs))


def linked(p, q) -> bool:
    a, b = p
    return (a < q[0] < b) != (a < q[1] < b)


def linked_count(m1, m2) -> int:
    return sum(1 for p in m1 for q in m2 if linked(p, q))


def _min_matching(letters, color, weight):
    """Least total weight non-crossing matching of ``color`` letters (interval DP)."""
    pos = [i for i, x in enumerate(letters) if x[0] == color]
    n = len(pos)
    if n % 2:
        return None
    memo: dict = {}

    def rec(lo, hi):
        if lo > hi:
            return 0, ()
        if (lo, hi) in memo:
            return memo[(lo, hi)]
        best = None
        for k in range(lo + 1, hi + 1, 2):
            if not _inverse(letters[pos[lo]], letters[pos[k]]):
                continue
            a = rec(lo + 1, k - 1)
            b = rec(k + 1, hi)
            if a is None or b is None:
                continue
            cost = weight(pos[lo], pos[k]) + a[0] + b[0]
            if best is None or cost < best[0]:
                best = (cost, ((pos[lo], pos[k]),) + a[1] + b[1])
        memo[(lo, hi)] = best
        return best

    return rec(0, n - 1)


def _best_matchings(letters):
    """``(linked count, {color: matching})`` minimising the linked count, or ``None``."""
    nb = sum(1 for x in letters if x[0] == BLUE)
    nr = len(letters) - nb
    # enumerate the sparser colour, optimise the other exactly
    enum, opt = (BLUE, RED) if nb <= nr else (RED, BLUE)
    best = None
    for m in noncrossing_matchings(letters, enum):
        res = _min_matching(letters, opt, lambda i, j, m=m: sum(1 for q in m if linked((i, j), q)))
        if res is None:
            return None
        if best is None or res[0] < best[0]:
            best = (res[0], {enum: tuple(sorted(m)), opt: tuple(sorted(res[1]))})
    if best is None:
        return None
    return best


def word_disk_area(letters) -> int:
    best = _best_matchings(tuple(letters))
    if best is None:
        raise ReductionError("word is not trivial in both factors")
    return best[0]


# --------------------------------------------------------- realization


def _circle_walk(sm: SurfaceMap, d: HeegaardDiagram, circle):
    """Closed walk along a boundary circle with the component on the returned side."""
    if isinstance(circle, FloatRef):
        return list(sm.walks[circle.curve]), circle.side
    walk = []
    for s in d.circle_sides(circle):
        # the component lies right of out-darts, so left sides are walked backwards
        seg = [x for x in sm.walks[s.arc.curve] if sm.tag[x >> 1][1] == s.arc.pos]
        walk += seg if s.side == "R" else [x ^ 1 for x in reversed(seg)]
    return walk, "R"


def realize(d: HeegaardDiagram, p: DualPath, sm: SurfaceMap | None = None, key=PATH) -> SurfaceMap:
    """Draw ``p`` as a passive simple closed curve; raises if it is not simple."""
    check_path(d, p)
    sm = SurfaceMap.from_diagram(d) if sm is None else sm.copy()
    if p.steps:
        try:
            sm, darts, _, _ = sm.insert_path(None, [((a.curve, a.pos), s) for _, a, s in p.steps], closed=True)
        except SurgeryError as exc:
            raise ReductionError(f"non-simple path: {exc}") from None
    else:
        if _bounds_disk(d, p):
            raise ReductionError(f"inessential path: {p.boundary} bounds a disk")
        walk, side = _circle_walk(sm, d, p.boundary)
        try:
            darts = sm.pushoff(walk, side)
        except SurgeryError as exc:
            raise ReductionError(f"cannot draw boundary path: {exc}") from None
    sm.add_curve(key, darts)
    return sm


def _bounds_disk(d: HeegaardDiagram, p: DualPath) -> bool:
    if p.steps:
        return False
    c = d.component_by_id[d.component_of_circle[p.boundary]]
    return c.genus == 0 and len(c.circles) == 1


def _cut_regions(sm: SurfaceMap, keys):
    """Regions of the surface cut along ``keys``: ``(chi, boundary sides)`` per region."""
    region, chi = sm.regions(set(keys))
    face, _ = sm.faces()
    sides: dict[int, list] = {}
    for k in keys:
        a = sm.walks[k][0]
        sides.setdefault(region[face[a ^ 1]], []).append((k, "L"))
        sides.setdefault(region[face[a]], []).append((k, "R"))
    return [(chi[r], sides.get(r, [])) for r in range(len(chi))]


def is_simple(d: HeegaardDiagram, p: DualPath) -> bool:
    check_path(d, p)
    if _bounds_disk(d, p):
        return True
    try:
        realize(d, p)
    except ReductionError:
        return False
    return True


def is_essential(d: HeegaardDiagram, p: DualPath) -> bool:
    check_path(d, p)
    if _bounds_disk(d, p):
        return False
    sm = realize(d, p)
    return all(chi != 1 for chi, _ in _cut_regions(sm, [PATH]))


def is_reducing(d: HeegaardDiagram, p: DualPath) -> bool:
    check_path(d, p)
    if _bounds_disk(d, p):
        raise ReductionError("inessential path")
    sm = realize(d, p)
    if any(chi == 1 for chi, _ in _cut_regions(sm, [PATH])):
        raise ReductionError("inessential path")
    return is_trivial(word_of_path(d, p).letters)


def disk_area(d: HeegaardDiagram, p: DualPath) -> int:
    if not is_reducing(d, p):
        raise ReductionError("path is not reducing")
    return word_disk_area(word_of_path(d, p).letters)


# --------------------------------------------------------------- search


def boundary_curves(d: HeegaardDiagram) -> list[DualPath]:
    """Essential curves parallel to boundary circles of non-disk components, one per isotopy class."""
    out = []
    for comp in d.components:
        if comp.genus == 0 and len(comp.circles) == 1 and isinstance(comp.circles[0], FaceRef):
            continue
        circles = comp.circles[:1] if comp.genus == 0 and len(comp.circles) == 2 else comp.circles
        for circle in circles:
            p = DualPath((), circle)
            if is_essential(d, p):
                out.append(p)
    return out


def _disk_positions(d: HeegaardDiagram) -> dict:
    """``(curve, pos, side) -> index`` around the boundary of each disk component."""
    out = {}
    for comp in d.components:
        if comp.genus == 0 and len(comp.circles) == 1 and isinstance(comp.circles[0], FaceRef):
            for i, s in enumerate(d.circle_sides(comp.circles[0])):
                out[(s.arc.curve, s.arc.pos, s.side)] = i
    return out


def _interleaved(c1, c2) -> bool:
    if len({*c1, *c2}) < 4:
        return False
    a, b = sorted(c1)
    return (a < c2[0] < b) != (a < c2[1] < b)


def search_reducing_curves(
    d: HeegaardDiagram, max_len: int | None = None, budget: int = 200_000, jobs: int = 1
) -> CurveList:
    """Simple essential reducing dual paths up to ``max_len`` crossings.

    The search walks dual paths while tracking the reduced word in each free
    factor, pruning once the reduced words are longer than the remaining
    length.  A path never revisits a lifted state (component, reduced blue
    word, reduced red word) except to close up, and two of its chords in a
    disk component may not join interleaved boundary arcs, since those would
    have to cross.  Each start component gets ``budget`` expanded nodes;
    ``complete`` on the result reports whether that sufficed everywhere.
    Start components are searched independently (in ``jobs`` processes) and
    merged in a fixed order, so the output does not depend on ``jobs``.
    """
    require_valid(d)
    if max_len is None:
        max_len = 2 * len(d.arcs())
    boundary = boundary_curves(d)
    comps = sorted(c.id for c in d.components)
    args = [(d, c0, max_len, budget) for c0 in comps]
    if jobs > 1 and len(comps) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search_from, *zip(*args)))
    else:
        parts = [_search_from(*a) for a in args]
    seen = {p.key() for p in boundary}
    found = []
    complete = True
    for cands, ok in parts:
        complete = complete and ok
        for cand in cands:
            k = cand.key()
            if k not in seen:
                seen.add(k)
                found.append(cand)
    found.sort(key=lambda p: (len(p), p.key()))
    res = CurveList(boundary + found)
    res.complete = complete
    return res


def _search_from(d: HeegaardDiagram, c0: int, max_len: int, budget: int):
    """Reducing paths starting in ``c0``; returns ``(paths, finished within budget)``."""
    disk_pos = _disk_positions(d)
    moves: dict[int, list] = {}
    for comp in d.components:
        lst = []
        for s in d.component_sides(comp.id):
            sign = 1 if s.side == "R" else -1
            other = "L" if sign > 0 else "R"
            nxt = d.component_of_side(s.arc, other)
            col = d.curve_by_id[s.arc.curve]
            exit_key = disk_pos.get((s.arc.curve, s.arc.pos, s.side))
            entry_key = disk_pos.get((s.arc.curve, s.arc.pos, other))
            lst.append((s.arc, sign, nxt, (col.gen, sign), col.color == BLUE, exit_key, entry_key))
        lst.sort(key=lambda t: (t[0].curve, t[0].pos, t[1]))
        moves[comp.id] = lst
    candidates = []
    seen_keys: set = set()
    nodes = 0
    complete = True
    path: list = []
    visited = {(c0, (), ())}
    chords: dict[int, list] = {}
    first_exit = [None]

    def push(stack, letter):
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            return stack[:-1]
        return stack + (letter,)

    def fits(comp, chord):
        return not any(_interleaved(chord, c) for c in chords.get(comp, ()))

    def dfs(comp, entry, bw, rw):
        nonlocal nodes, complete
        nodes += 1
        if nodes > budget:
            complete = False
            return
        remaining = max_len - len(path)
        for arc, sign, nxt, letter, is_blue, exit_key, entry_key in moves[comp]:
            if not complete:
                return
            if path and path[-1][1] == arc and path[-1][2] == -sign:
                continue
            nb = push(bw, letter) if is_blue else bw
            nr = rw if is_blue else push(rw, letter)
            if len(nb) + len(nr) > remaining - 1:
                continue
            chord = None
            if entry is not None and exit_key is not None:
                chord = (entry, exit_key)
                if not fits(comp, chord):
                    continue
            if not path:
                first_exit[0] = exit_key
            if chord:
                chords.setdefault(comp, []).append(chord)
            path.append((comp, arc, sign))
            if nxt == c0 and not nb and not nr:
                close = None if entry_key is None or first_exit[0] is None else (entry_key, first_exit[0])
                if close is None or fits(c0, close):
                    cand = DualPath(tuple(path))
                    k = cand.key()
                    if k not in seen_keys:
                        seen_keys.add(k)
                        candidates.append(cand)
            else:
                state = (nxt, nb, nr)
                if state not in visited and remaining > 1:
                    visited.add(state)
                    dfs(nxt, entry_key, nb, nr)
                    visited.discard(state)
            path.pop()
            if chord:
                chords[comp].pop()

    dfs(c0, None, (), ())
    out = []
    for cand in candidates:
        try:
            if is_reducing(d, cand):
                out.append(cand)
        except ReductionError:
            continue
    return out, complete


# --------------------------------------------------------- guided pinch


def _innermost_pairs(letters) -> list:
    """Positions ``(i, j)`` of inverse letters of one colour with only the other colour between.

    Pairs with fewer letters between them come first, since each of those
    letters becomes a new crossing.
    """
    n = len(letters)
    out = []
    for i in range(n):
        for step in range(1, n):
            j = (i + step) % n
            if letters[j][0] == letters[i][0]:
                if _inverse(letters[i], letters[j]):
                    out.append((step - 1, i, j))
                break
    return [(i, j) for _, i, j in sorted(out)]


def guided_pinch(d: HeegaardDiagram, p: DualPath) -> tuple[HeegaardDiagram, list[WaveStep], DualPath]:
    """Wave-move the diagram off ``p`` along innermost cancelling pairs of its word.

    Returns the new diagram, the trace, and ``p`` redrawn on the new diagram.
    """
    if disk_area(d, p) == 0:
        raise ReductionError("path already bounds a disk of zero area")
    trace = []
    before = snf(d)
    while p.steps:
        pairs = _innermost_pairs(word_of_path(d, p).letters)
        if not pairs:
            raise ReductionError("no innermost cancelling pair")
        for i, j in pairs:
            try:
                d2, step, p2 = _wave_along(d, p, i, j)
                break
            except (ReductionError, MoveError):
                continue
        else:
            raise ReductionError("no innermost cancelling pair gives a wave move")
        d, p = d2, p2
        p = tighten(d, p)
        trace.append(step)
        if snf(d) != before:
            raise MoveError("guided pinch changed the homology invariants")
    return d, trace, p


def tighten(d: HeegaardDiagram, p: DualPath) -> DualPath:
    """Remove consecutive crossings of one arc in opposite directions while the path stays simple.

    Such a pair bounds a bigon with the arc, so dropping it is an isotopy.
    """
    steps = list(p.steps)
    changed = True
    while changed and len(steps) >= 2:
        changed = False
        n = len(steps)
        for i in range(n):
            j = (i + 1) % n
            if steps[i][1] == steps[j][1] and steps[i][2] == -steps[j][2]:
                rest = [steps[k] for k in range(n) if k not in (i, j)]
                if not rest:
                    circle = _circle_of_component(d, steps[i][0])
                    if circle is None:
                        continue
                    return DualPath((), circle)
                cand = DualPath(tuple(rest))
                try:
                    check_path(d, cand)
                    realize(d, cand)
                except ReductionError:
                    continue
                steps = rest
                changed = True
                break
    return DualPath(tuple(steps)) if steps else p


def _circle_of_component(d: HeegaardDiagram, comp: int):
    c = d.component_by_id[comp]
    if c.genus == 0 and len(c.circles) == 1:
        return None
    return c.circles[0]


def _wave_along(d: HeegaardDiagram, p: DualPath, i: int, j: int):
    n = len(p.steps)
    _, a_i, s_i = p.steps[i]
    _, a_j, _ = p.steps[j]
    side = "L" if s_i > 0 else "R"
    between = []
    k = (i + 1) % n
    while k != j:
        between.append((p.steps[k][1], p.steps[k][2]))
        k = (k + 1) % n
    delta = a_i.curve
    arc = WaveArc(a_i, a_j, side, tuple(between))
    _check_wave(d, delta, arc)
    color = d.curve_by_id[delta].color
    gen = d.curve_by_id[delta].gen
    old_len = len(p.steps)
    before = snf(d)
    base = realize(d, p)
    found = []

    def accept(res):
        sm, gdarts, p1, p2 = res
        try:
            for sm2, darts in _cuffs(sm, delta, gdarts, p1, p2):
                sm2.delete_curve(delta)
                sm2.delete_curve(("gamma",))
                sm2.add_curve(delta, darts, color, gen)
                try:
                    ex = extract(sm2)
                except SurgeryError:
                    continue
                if validate(ex.diagram) or snf(ex.diagram) != before:
                    continue
                steps = path_steps(ex, PATH)
                if len(steps) <= old_len - 2:
                    found.append((ex.diagram, DualPath(tuple(steps)) if steps else _as_boundary(ex)))
                    return True
        except SurgeryError:
            return False
        return False

    try:
        base.insert_path(*_wave_route(delta, arc), closed=False, accept=accept)
    except SurgeryError:
        pass
    if not found:
        raise ReductionError(f"no wave move along positions {i}, {j} shortens the path")
    nd, np_ = found[0]
    return nd, WaveStep(delta, arc), np_


def _as_boundary(ex) -> DualPath:
    """A path that crosses nothing, named by a boundary circle of its component."""
    sm = ex.sm
    face, _ = sm.faces()
    comp = ex.comp_of_region[ex.region[face[sm.walks[PATH][0]]]]
    c = ex.diagram.component_by_id[comp]
    return DualPath((), c.circles[0])


# ------------------------------------------------------------ augmented


def build_augmented(d: HeegaardDiagram, curves) -> AugmentedDiagram:
    """Attach a disk along each curve; curve-set violations name the offending curves."""
    if find_problems(d):
        raise ReductionError("diagram is not taut")
    curves = list(curves)
    disks = []
    for n, c in enumerate(curves):
        if not is_simple(d, c):
            raise ReductionError(f"curve {n} is not simple")
        if not is_essential(d, c):
            raise ReductionError(f"curve {n} is inessential")
        if not is_reducing(d, c):
            raise ReductionError(f"curve {n} is not reducing")
        disks.append((c, disk_area(d, c)))
    sm = SurfaceMap.from_diagram(d)
    keys = []
    # boundary pushoffs go first: later path insertions then avoid them
    for n in sorted(range(len(curves)), key=lambda n: bool(curves[n].steps)):
        key = ("aug", n)
        try:
            sm = realize(d, curves[n], sm, key)
        except (ReductionError, SurgeryError):
            raise ReductionError(f"curve {n} meets another curve of the family") from None
        keys.append(key)
    for chi, sides in _cut_regions(sm, keys) if keys else []:
        ks = {k for k, _ in sides}
        if chi == 0 and len(sides) == 2 and len(ks) == 2:
            a, b = sorted(k[1] for k in ks)
            raise ReductionError(f"curves {a} and {b} are isotopic")
    return AugmentedDiagram(pinch(d), tuple(disks))


def disjoint_family(d: HeegaardDiagram, curves) -> list[DualPath]:
    """Greedy maximal disjoint, pairwise non-isotopic subfamily in the given order."""
    fam: list[DualPath] = []
    for c in curves:
        try:
            build_augmented(d, fam + [c])
        except ReductionError:
            continue
        fam.append(c)
    return fam


def minimize_area(d: HeegaardDiagram, max_len: int | None = None, budget: int = 200_000, jobs: int = 1):
    """Pinch reducing curves of positive disk area until none is found within the bound.

    Returns the final diagram, its augmented diagram and a
    :class:`MinimizationTrace` whose ``areas`` strictly decrease.
    """
    if find_problems(d):
        raise ReductionError("diagram is not taut")
    rounds = []
    complete = True
    while True:
        if pinch(d).obstructed:
            raise ReductionError("S2xS1 obstruction")
        found = search_reducing_curves(d, max_len, budget, jobs)
        complete = complete and found.complete
        scored = sorted(((disk_area(d, c), c) for c in found), key=lambda t: (t[0], len(t[1]), t[1].key()))
        fam = disjoint_family(d, [c for _, c in scored])
        aug = build_augmented(d, fam)
        positive = [c for c, a in aug.disks if a > 0]
        if not positive:
            rounds.append(MinimizationRound(aug.area, d.n_crossings, None, 0, []))
            return d, aug, MinimizationTrace(rounds, complete)
        c = positive[0]
        nd, steps, _ = guided_pinch(d, c)
        nd, waves = tautify(nd)
        rounds.append(MinimizationRound(aug.area, d.n_crossings, c, disk_area(d, c), steps + waves))
        if len(rounds) > 1 and rounds[-1].area >= rounds[-2].area:
            raise ReductionError(f"augmented area did not decrease: {rounds[-2].area} -> {rounds[-1].area}")
        d = nd
