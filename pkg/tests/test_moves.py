from collections import Counter

import pytest

from hdg.diagram import Arc, complement_components
from hdg.fixtures import load
from hdg.io import serialize
from hdg.moves import (
    Band,
    MoveError,
    WaveArc,
    find_problems,
    handle_slide,
    is_taut,
    parse_step,
    problem_arc,
    replay,
    snf,
    tautify,
    wave_move,
)


def signed_with(d, curve, other):
    return sum(x.sign for x in d.crossings if {x.blue, x.red} == {curve, other})


def test_lens_is_taut(lens52):
    assert find_problems(lens52) == []


def test_problem_fixture():
    d = load("problem")
    probs = find_problems(d)
    # the offending arc pair shows up once from each face beside it
    assert len({(p.curve, p.arc1, p.arc2) for p in probs}) == 1
    assert sorted(p.side for p in probs) == ["L", "R"]
    sides = {c.id: c.sides for c in complement_components(d)}
    assert all(sides[p.component] == 8 for p in probs)


def test_wave_across_problem_gives_no_problem_fixture():
    d = load("problem")
    p = find_problems(d)[0]
    out = wave_move(d, p.curve, problem_arc(p))
    assert serialize(out) == serialize(load("no-problem"))
    assert is_taut(out) and out.n_crossings < d.n_crossings


def test_tautify_problem_fixture_single_move():
    d = load("problem")
    out, trace = tautify(d)
    assert len(trace) == 1 and is_taut(out)
    assert snf(out) == snf(d)


def test_tautify_on_taut_input_is_identity():
    d = load("osborne")
    out, trace = tautify(d)
    assert trace == [] and out == d


def test_wave_creating_one_crossing():
    d = load("sum-2-3-scrambled")
    arc = WaveArc(Arc(2, 0), Arc(2, 3), "R", ((Arc(3, 0), 1),))
    out = wave_move(d, 2, arc)
    assert out.n_crossings == d.n_crossings - 1
    assert out.curve_length(2) == d.curve_length(2) - 1
    assert snf(out) == snf(d)


def test_slide_along_empty_band_concatenates(sum22):
    out = handle_slide(sum22, 0, 2, Band(Arc(0, 0), "R", Arc(2, 0), "R"))
    reds = Counter(x.red for x in out.crossings if x.blue == 0)
    before = Counter(x.red for x in sum22.crossings if x.blue in (0, 2))
    assert reds == before
    assert out.curve_length(0) == sum22.curve_length(0) + sum22.curve_length(2)
    assert snf(out) == snf(sum22)


def test_slide_band_crossing_red_once(sum22):
    # both edges of the band cross r1, with opposite signs along the new curve
    band = Band(Arc(0, 1), "R", Arc(2, 1), "L", ((Arc(1, 0), 1),))
    out = handle_slide(sum22, 0, 2, band)
    assert out.curve_length(0) == sum22.curve_length(0) + sum22.curve_length(2) + 2
    # the slid curve may come back with the opposite orientation
    assert abs(signed_with(out, 0, 1)) == abs(signed_with(sum22, 0, 1) + signed_with(sum22, 2, 1))
    assert snf(out) == snf(sum22)


def test_band_crossings_count_twice(sum22):
    band = Band(Arc(0, 0), "R", Arc(2, 0), "R", ((Arc(1, 0), -1), (Arc(1, 0), 1)))
    out = handle_slide(sum22, 0, 2, band)
    plain = handle_slide(sum22, 0, 2, Band(Arc(0, 0), "R", Arc(2, 0), "R"))
    assert out.curve_length(0) == plain.curve_length(0) + 4
    assert abs(signed_with(out, 0, 1)) == abs(signed_with(plain, 0, 1))


def test_slide_needs_second_curve(lens52):
    with pytest.raises(MoveError):
        handle_slide(lens52, 0, 0, Band(Arc(0, 0), "R", Arc(0, 1), "R"))


def test_wave_rejects_bad_arcs(sum22):
    with pytest.raises(MoveError):
        wave_move(sum22, 0, WaveArc(Arc(0, 0), Arc(2, 0), "L"))
    with pytest.raises(MoveError):
        wave_move(sum22, 0, WaveArc(Arc(0, 0), Arc(0, 1), "L", ((Arc(2, 0), 1),)))


def test_random_trials_taut_and_monotone(trials):
    for seed, _, _, scrambled, taut, waves in trials:
        assert is_taut(taut), seed
        d = scrambled
        for w in waves:
            nxt = replay(d, [str(w)])
            assert nxt.n_crossings < d.n_crossings, seed
            assert snf(nxt) == snf(d), seed
            d = nxt
        assert serialize(d) == serialize(taut)


def test_step_text_round_trip(trials):
    for _, _, slides, _, _, waves in trials[:10]:
        for s in slides + waves:
            assert parse_step(str(s)) == s
