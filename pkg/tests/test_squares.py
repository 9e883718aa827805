import pytest

from hdg.diagram import bigons, is_filling
from hdg.fixtures import lens_family, load
from hdg.invariants import build_lens
from hdg.moves import find_problems
from hdg.squares import (
    DualizeError,
    Edge,
    VHSquareComplex,
    dualize,
    hyperplane_curves,
    is_vh,
    link_report,
    specialness_report,
    trace_hyperplanes,
)


def pillow():
    """Two squares glued along their whole boundary: every vertex link is a 2-cycle."""
    edges = (Edge("V", 0, 1), Edge("H", 1, 2), Edge("V", 3, 2), Edge("H", 0, 3))
    sq = ((0, 1), (1, 1), (2, -1), (3, -1))
    back = ((3, 1), (2, 1), (1, -1), (0, -1))
    return VHSquareComplex(4, edges, (sq, back))


def test_one_square_torus(s3):
    sc = dualize(s3)
    assert (sc.n_vertices, len(sc.edges), len(sc.squares)) == (1, 2, 1)
    assert sc.euler_characteristic == 0
    hps = trace_hyperplanes(sc)
    assert sorted(h.color for h in hps) == ["H", "V"]
    assert specialness_report(sc).clean


def test_lens_p1_is_a_closed_cylinder():
    for p in range(2, 9):
        sc = dualize(build_lens(p, 1))
        assert len(sc.squares) == p and sc.euler_characteristic == 0
        hps = trace_hyperplanes(sc)
        assert all(len(h.path) == p for h in hps)
        assert link_report(sc).npc


def test_lens52_links_and_hyperplanes(lens52):
    sc = dualize(lens52)
    rep = link_report(sc)
    assert rep.surface and rep.npc
    assert all(ls == [4] for ls in rep.lengths.values())
    hps = trace_hyperplanes(sc)
    assert len(hps) == 2
    v = [h for h in hps if h.color == "V"][0]
    assert len({s for s, _ in v.path}) == 5


def test_octagon_link():
    sc = dualize(load("octagon"))
    rep = link_report(sc)
    assert sorted(ls[0] for ls in rep.lengths.values()).count(8) == 1
    assert rep.npc


def test_pillow_is_not_npc():
    sc = pillow()
    assert is_vh(sc)
    rep = link_report(sc)
    assert not rep.npc
    assert all(ls == [2] for ls in rep.lengths.values())


def test_non_vh_rejected():
    edges = (Edge("V", 0, 0), Edge("V", 0, 0))
    sc = VHSquareComplex(1, edges, (((0, 1), (1, 1), (0, -1), (1, -1)),))
    assert not is_vh(sc)
    with pytest.raises(DualizeError):
        trace_hyperplanes(sc)
    assert not specialness_report(sc).clean


def test_dualize_preconditions(sum22):
    with pytest.raises(DualizeError, match="not-filling"):
        dualize(sum22)
    with pytest.raises(DualizeError, match="not-taut"):
        dualize(load("problem"))


def test_problem_fixture_osculates():
    sc = dualize(load("problem"), check=False)
    rep = specialness_report(sc)
    assert rep.direct_self_osculation and not rep.clean


def test_clean_iff_taut_on_random_diagrams(trials):
    verdicts = []
    for seed, _, _, scrambled, taut, _ in trials:
        for d in (scrambled, taut):
            if not is_filling(d):
                continue
            clean = specialness_report(dualize(d, check=False)).clean
            assert clean == (not find_problems(d)), seed
            verdicts.append(clean)
    assert verdicts.count(True) >= 5 and verdicts.count(False) >= 5


@pytest.mark.parametrize("name", ["octagon", "osborne", "sum-2-3-scrambled", "sum-5-sphere-scrambled"])
def test_genus2_fixture_duals(name):
    d = load(name)
    sc = dualize(d)
    assert sc.euler_characteristic == 2 - 2 * d.genus
    hps = trace_hyperplanes(sc)
    assert sorted(h.color for h in hps) == ["H", "H", "V", "V"]
    assert sorted(hyperplane_curves(sc, hps)) == sorted(c.id for c in d.curves)
    assert specialness_report(sc).clean


def test_osborne_has_eleven_squares():
    assert len(dualize(load("osborne")).squares) == 11


def test_lens_family_duals_clean():
    for (p, _), d in lens_family(12):
        if bigons(d):
            continue
        sc = dualize(d)
        assert len(sc.squares) == p
        assert specialness_report(sc).clean
