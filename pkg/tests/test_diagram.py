from dataclasses import replace

from hdg.diagram import (
    BLUE,
    RED,
    Component,
    Crossing,
    Curve,
    FaceRef,
    FloatRef,
    HeegaardDiagram,
    algebraic_intersection_matrix,
    bigons,
    canonical_components,
    complement_components,
    curve_homology_rank,
    derive_components,
    is_filling,
    validate,
)
from hdg.fixtures import load, s2xs1
from hdg.invariants import build_lens, smith_normal_form


def parallel_blue():
    """Genus 2 with both blue curves crossing the first red curve once, so they are parallel."""
    curves = (Curve(0, BLUE, 1), Curve(1, RED, 1), Curve(2, BLUE, 2), Curve(3, RED, 2))
    xs = (Crossing(0, 0, 0, 1, 0, 1), Crossing(1, 2, 0, 1, 1, 1))
    comps = [
        Component(0, 0, (FaceRef(0, 0),)),
        Component(0, 0, (FaceRef(0, 1), FloatRef(3, "L"), FloatRef(3, "R"))),
    ]
    return HeegaardDiagram(2, curves, xs, canonical_components(comps))


def test_one_crossing_torus_is_valid(s3):
    assert validate(s3) == []
    comps = complement_components(s3)
    assert len(comps) == 1 and comps[0].is_disk and comps[0].sides == 4


def test_corrupted_sign_breaks_euler_characteristic():
    d = build_lens(2, 1)
    xs = list(d.crossings)
    xs[1] = replace(xs[1], sign=-xs[1].sign)
    bad = HeegaardDiagram(1, d.curves, tuple(xs), derive_components(1, d.curves, xs))
    assert "euler-characteristic-mismatch" in [i.code for i in validate(bad)]


def test_parallel_blue_curves_are_rank_deficient():
    d = parallel_blue()
    assert "rank-deficient blue" in [i.code for i in validate(d)]
    assert curve_homology_rank(d, BLUE) == 1
    assert curve_homology_rank(d, RED) == 2


def test_validity_implies_full_rank(sum23):
    for color in (BLUE, RED):
        assert curve_homology_rank(sum23, color) == 2


def test_duplicate_and_missing_circles_reported(lens52):
    comps = lens52.components
    dup = HeegaardDiagram(1, lens52.curves, lens52.crossings, comps + (comps[0],))
    assert "circle-multiply-assigned" in [i.code for i in validate(dup)]
    short = HeegaardDiagram(1, lens52.curves, lens52.crossings, comps[1:])
    assert "circle-unassigned" in [i.code for i in validate(short)]


def test_wrong_curve_count():
    d = build_lens(3, 1)
    bad = HeegaardDiagram(2, d.curves, d.crossings, d.components)
    assert "wrong-curve-count" in [i.code for i in validate(bad)]


def test_lens_complement_is_five_squares(lens52):
    comps = complement_components(lens52)
    assert len(comps) == 5
    assert all(c.is_disk and c.sides == 4 for c in comps)
    assert is_filling(lens52) and bigons(lens52) == []


def test_s2xs1_complement_is_two_annuli():
    comps = complement_components(s2xs1())
    assert len(comps) == 2
    assert all(not c.is_disk and c.genus == 0 and len(c.circles) == 2 for c in comps)


def test_connect_sum_has_one_annulus(sum22):
    non_disk = [c for c in complement_components(sum22) if not c.is_disk]
    assert len(non_disk) == 1
    assert non_disk[0].genus == 0 and len(non_disk[0].circles) == 2
    assert not is_filling(sum22)


def test_intersection_matrices(lens52):
    assert [abs(v) for row in algebraic_intersection_matrix(lens52) for v in row] == [5]
    assert algebraic_intersection_matrix(s2xs1()) == [[0]]
    m = algebraic_intersection_matrix(load("osborne"))
    assert len(m) == 2 and smith_normal_form(m).factors == (1, 13)


def test_face_traces_partition_darts(sum23):
    darts = sorted(x for f in sum23.face_traces for x in f)
    assert darts == list(range(4 * sum23.n_crossings))


def test_octagon_fixture_faces():
    d = load("octagon")
    sides = sorted(c.sides for c in complement_components(d))
    assert sides.count(8) == 1 and is_filling(d) and not bigons(d)
