import json

import pytest

from leapers.errors import UnknownSuite
from leapers.suites import (
    DEFAULT_MAX_SUM,
    SUITES,
    basic_skew,
    cycle_descent,
    run_suite,
    suite_names,
    symmetric_about_centroid,
    third_leaper_instances,
)
from leapers.board import Leaper, decompose_center_board

SMALL = {
    "second-leaper": 11,
    "seclen-symm": 11,
    "third-leaper": 13,
    "knuth": 7,
    "dirgraph": 9,
    "flip-equiv": 2,
    "perfect": 1,
    "displacement": 11,
    "pinwheel": 5,
    "counts": 9,
}


def test_every_suite_has_a_default():
    assert set(DEFAULT_MAX_SUM) == set(SUITES) == set(SMALL)


@pytest.mark.parametrize("name", [n for n in suite_names() if n != "dirgraph"])
def test_small_bounds_pass(name):
    res = run_suite(name, SMALL[name])
    assert res.cases > 0
    assert res.ok, res.failures[:5]
    assert res.exit_code == 0


def test_small_dirgraph():
    # the identity part dominates; keep its descents short here
    cases = list(SUITES["dirgraph"](SMALL["dirgraph"], identity_len=2))
    assert cases and all(why is None for _, why in cases)


def test_alias():
    assert run_suite("displ", 5).name == "displacement"


def test_unknown():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_emit_lines():
    lines = []
    res = run_suite("counts", 7, emit=lines.append)
    last = json.loads(lines[-1])
    assert last == {"suite": "counts", "done": True, "cases": res.cases, "failures": 0}
    assert res.as_json()["failures"] == []


def test_basic_skew():
    assert [(L.p, L.q) for L in basic_skew(7)] == [(1, 2), (1, 4), (2, 3), (1, 6), (2, 5), (3, 4)]


def test_cycle_descent():
    # type i of (18,41) sees the descent up to the i-th g/h
    assert [cycle_descent(Leaper(18, 41), i) for i in (1, 2, 3, 4)] == ["", "hf", "hfg", "hfgh"]


def test_third_leaper_instances():
    assert third_leaper_instances() == {Leaper(2, 3): (True, 16), Leaper(2, 5): (True, 32)}


def test_centroid_symmetry():
    knight = decompose_center_board(Leaper(1, 2)).cycles[0]
    assert symmetric_about_centroid(knight)
    assert symmetric_about_centroid([(x + 10, y - 4) for x, y in knight])
    assert not symmetric_about_centroid([(0, 0), (2, 4), (6, 0)])
