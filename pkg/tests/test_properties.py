"""Property tests over randomly scrambled genus-2 diagrams."""

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import SEEDS

from hdg.diagram import bigons, is_filling, validate
from hdg.io import parse, serialize
from hdg.moves import MoveError, apply_step, is_taut, random_slide, snf, tautify
from hdg.pinch import betti_identity, pinch, pinch_graph_report
from hdg.reduction import PATH, DualPath, disk_area, realize, search_reducing_curves
from hdg.squares import dualize, link_report, specialness_report, trace_hyperplanes
from hdg.surface import extract, path_steps

SETTINGS = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def scrambled(seed_name, seed, slides):
    d = SEEDS[seed_name]()
    rng = random.Random(seed)
    for _ in range(slides):
        try:
            d = apply_step(d, random_slide(d, rng))
        except MoveError:
            pass
    return d


diagrams = st.builds(scrambled, st.sampled_from(sorted(SEEDS)), st.integers(0, 10**6), st.integers(1, 3))


@SETTINGS
@given(diagrams)
def test_slides_keep_validity_and_homology(d):
    assert validate(d) == []
    assert snf(d) in {snf(s()) for s in SEEDS.values()}


@SETTINGS
@given(diagrams)
def test_tautify_monotone_and_invariant(d):
    out, trace = tautify(d)
    assert is_taut(out) and snf(out) == snf(d)
    counts = [d.n_crossings]
    cur = d
    for step in trace:
        cur = apply_step(cur, step)
        counts.append(cur.n_crossings)
    assert all(a > b for a, b in zip(counts, counts[1:]))


@SETTINGS
@given(diagrams)
def test_canonical_serialization(d):
    text = serialize(d)
    assert serialize(parse(text)) == text
    assert parse(text) == d


@SETTINGS
@given(diagrams)
def test_pinch_of_tautified(d):
    t, _ = tautify(d)
    p = pinch(t)
    rep = pinch_graph_report(p)
    assert rep.is_tree and not rep.pseudo_manifold_flags
    g, total = betti_identity(p)
    assert g == total
    assert sum(pc.genus for pc in p.pieces) == t.genus
    for pc in p.pieces:
        assert is_taut(pc.diagram) and is_filling(pc.diagram)


@SETTINGS
@given(diagrams)
def test_dual_of_taut_filling(d):
    t, _ = tautify(d)
    pieces = [t] if is_filling(t) else [pc.diagram for pc in pinch(t).pieces]
    for x in pieces:
        if bigons(x):
            continue
        sc = dualize(x)
        assert sc.euler_characteristic == 2 - 2 * x.genus
        rep = link_report(sc)
        assert rep.surface and rep.npc
        assert len(trace_hyperplanes(sc)) == 2 * x.genus
        assert specialness_report(sc).clean


@settings(max_examples=10, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(diagrams)
def test_found_curves(d):
    t, _ = tautify(d)
    for p in search_reducing_curves(t, max_len=6):
        area = disk_area(t, p)
        assert (area == 0) == (not p.steps)
        if p.steps:
            ex = extract(realize(t, p))
            assert serialize(ex.diagram) == serialize(t)
            assert DualPath(tuple(path_steps(ex, PATH))).key() == p.key()
