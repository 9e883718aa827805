"""Standard diagrams used by the tests and the ``fixtures`` subcommand.

Besides the generated families, a few diagrams found by random handle
slides followed by tautification are shipped as data files:

``osborne``
    genus 2, 11 crossings, taut, filling, homology Z/13.
``octagon``
    L(5,2) # S^3, taut and filling with a single octagonal face.
``sum-2-3-scrambled``, ``sum-5-sphere-scrambled``
    filling taut diagrams of L(2,1) # L(3,1) and L(5,2) # S^3 that are not
    yet pinched apart.
``problem``, ``no-problem``
    a diagram with a problem and the taut diagram one wave move away.
"""

from __future__ import annotations

from importlib import resources

from .diagram import (
    BLUE,
    RED,
    Component,
    Crossing,
    Curve,
    FaceRef,
    FloatRef,
    HeegaardDiagram,
    canonical_components,
)
from .invariants import build_lens


def s2xs1() -> HeegaardDiagram:
    """Genus one, a blue and a red curve that are parallel and disjoint."""
    curves = (Curve(0, BLUE, 1), Curve(1, RED, 1))
    comps = (
        Component(0, 0, (FloatRef(0, "L"), FloatRef(1, "R"))),
        Component(1, 0, (FloatRef(0, "R"), FloatRef(1, "L"))),
    )
    return HeegaardDiagram(1, curves, (), comps)


def connect_sum(d1: HeegaardDiagram, d2: HeegaardDiagram, face1: int = 0, face2: int = 0) -> HeegaardDiagram:
    """Join two diagrams by a tube from face ``face1`` of ``d1`` to face ``face2`` of ``d2``."""
    coff = max(c.id for c in d1.curves) + 1
    xoff = max((x.id for x in d1.crossings), default=-1) + 1
    goff = d1.genus
    curves = list(d1.curves)
    curves += [Curve(c.id + coff, c.color, c.gen + goff) for c in d2.curves]
    crossings = list(d1.crossings)
    crossings += [
        Crossing(x.id + xoff, x.blue + coff, x.blue_pos, x.red + coff, x.red_pos, x.sign)
        for x in d2.crossings
    ]

    def shift(circle):
        if isinstance(circle, FaceRef):
            return FaceRef(circle.crossing + xoff, circle.sel)
        return FloatRef(circle.curve + coff, circle.side)

    ref1 = d1.face_ref(face1)
    ref2 = shift(d2.face_ref(face2))
    comps = []
    # the tube joins the component holding ref1 to the one holding ref2
    genus, circles = 0, []
    for c in d1.components:
        if ref1 in c.circles:
            genus += c.genus
            circles += c.circles
        else:
            comps.append(c)
    for c in d2.components:
        shifted = tuple(shift(z) for z in c.circles)
        if ref2 in shifted:
            genus += c.genus
            circles += shifted
        else:
            comps.append(Component(0, c.genus, shifted))
    comps.append(Component(0, genus, tuple(circles)))
    return HeegaardDiagram(d1.genus + d2.genus, tuple(curves), tuple(crossings), canonical_components(comps))


def sphere() -> HeegaardDiagram:
    """One-crossing torus diagram of the 3-sphere."""
    return build_lens(1, 0)


def lens_family(max_p: int = 12):
    from math import gcd

    for p in range(1, max_p + 1):
        for q in range(p):
            if gcd(p, q) == 1:
                yield (p, q), build_lens(p, q)


def stabilize(d: HeegaardDiagram) -> HeegaardDiagram:
    """Connect sum with the one-crossing diagram of S^3."""
    return connect_sum(d, sphere())


DATA = ("osborne", "octagon", "sum-2-3-scrambled", "sum-5-sphere-scrambled", "problem", "no-problem")


def data_text(name: str) -> str:
    return resources.files("hdg").joinpath("data", name).read_text(encoding="utf-8")


def load(name: str) -> HeegaardDiagram:
    """Parse one of the shipped diagrams listed in ``DATA``."""
    from .io import parse

    if name not in DATA:
        raise KeyError(name)
    return parse(data_text(name + ".hdg"))


def fixture_files(max_p: int = 12) -> dict[str, str]:
    """File name to file text for the whole standard fixture set."""
    from .io import serialize

    files = {}
    for (p, q), d in lens_family(max_p):
        files[f"lens-{p}-{q}.hdg"] = serialize(d)
    files["s2xs1.hdg"] = serialize(s2xs1())
    files["sum-2-1-3-1.hdg"] = serialize(connect_sum(build_lens(2, 1), build_lens(3, 1)))
    files["sum-2-1-2-1.hdg"] = serialize(connect_sum(build_lens(2, 1), build_lens(2, 1)))
    files["stabilized-sphere.hdg"] = serialize(stabilize(sphere()))
    files["stabilized-5-2.hdg"] = serialize(stabilize(build_lens(5, 2)))
    for name in DATA:
        files[name + ".hdg"] = data_text(name + ".hdg")
    if resources.files("hdg").joinpath("data", "osborne-eta.path").is_file():
        files["osborne-eta.path"] = data_text("osborne-eta.path")
    return files


def osborne_status() -> tuple[bool, str]:
    """Whether the Osborne fixture passes its checks, with the reason when it does not.

    The diagram must have 11 crossings and homology Z/13 and be taut and
    filling; the shipped curve ``osborne-eta.path`` must be a reducing curve
    bounding a disk of area 15.
    """
    from .diagram import is_filling
    from .io import parse_paths
    from .moves import is_taut, snf

    d = load("osborne")
    if d.n_crossings != 11 or snf(d) != (1, 13) or not is_taut(d) or not is_filling(d):
        return False, "diagram fails its own checks"
    eta = resources.files("hdg").joinpath("data", "osborne-eta.path")
    if not eta.is_file():
        return False, (
            "no curve eta: the diagram was found by search, and a complete reducing-curve "
            "search on it up to length 16 finds no curve, so the area-15 disk cannot be exhibited"
        )
    from .reduction import ReductionError, disk_area

    paths = parse_paths(eta.read_text(encoding="utf-8"))
    try:
        if len(paths) != 1 or disk_area(d, paths[0]) != 15:
            return False, "shipped curve eta does not bound a disk of area 15"
    except ReductionError as exc:
        return False, f"shipped curve eta is unusable: {exc}"
    return True, ""
