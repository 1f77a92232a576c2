"""Chord-diagram model: validation, crossing geometry, rotation."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncfsieve.forest import (
    NonCrossingForest,
    chord,
    check_vertex,
    crosses,
    distance,
    rotate_label,
)


def test_chord_normalizes():
    assert chord(5, 2) == (2, 5)
    assert chord(2, 5) == (2, 5)


def test_chord_rejects_loops():
    with pytest.raises(ValueError):
        chord(3, 3)


def test_check_vertex():
    check_vertex(1, 4)
    check_vertex(4, 4)
    for bad in (0, 5, -1, True, 1.0, "2"):
        with pytest.raises(ValueError):
            check_vertex(bad, 4)


def test_distance_convention():
    # clockwise walk length counting the arrival vertex
    assert distance(1, 1, 4) == 1
    assert distance(1, 2, 4) == 2
    assert distance(2, 1, 4) == 4
    assert distance(4, 1, 4) == 2


def test_rotate_label_convention():
    # one step clockwise sends i to i+1, wrapping n to 1
    assert rotate_label(1, 1, 4) == 2
    assert rotate_label(4, 1, 4) == 1
    assert rotate_label(3, -1, 4) == 2
    assert rotate_label(2, 8, 4) == 2


# ------------------------------------------------------------------ crossing


def test_crosses_frozen():
    n = 6
    assert crosses((1, 3), (2, 4), n)
    assert not crosses((1, 2), (3, 4), n)
    assert not crosses((1, 4), (2, 3), n)  # nested
    assert crosses((2, 5), (3, 6), n)


def test_shared_endpoint_never_crosses():
    n = 8
    for b in range(2, 9):
        for d in range(2, 9):
            if b == d:
                continue
            assert not crosses((1, b), (1, d), n)


def _crosses_by_alternation(e1, e2, n):
    """Oracle: two chords cross iff their endpoints alternate around the
    circle. Walk the circle once and record which chord each endpoint
    belongs to."""
    if set(e1) & set(e2):
        return False
    walk = [v for v in range(1, n + 1) if v in e1 or v in e2]
    pattern = tuple(1 if v in e1 else 2 for v in walk)
    return pattern in ((1, 2, 1, 2), (2, 1, 2, 1))


@given(st.integers(4, 12), st.data())
def test_crosses_matches_alternation_oracle(n, data):
    pick = st.lists(
        st.integers(1, n), min_size=4, max_size=4, unique=True
    )
    a, b, c, d = data.draw(pick)
    e1, e2 = chord(a, b), chord(c, d)
    assert crosses(e1, e2, n) == _crosses_by_alternation(e1, e2, n)
    assert crosses(e2, e1, n) == crosses(e1, e2, n)


# ---------------------------------------------------------------- validation


def test_valid_forest():
    f = NonCrossingForest(4, [(2, 1), (3, 4)])
    assert f.n == 4
    assert f.edges == ((1, 2), (3, 4))


def test_rejects_crossing():
    with pytest.raises(ValueError, match="cross"):
        NonCrossingForest(4, [(1, 3), (2, 4)])


def test_rejects_cycle():
    with pytest.raises(ValueError, match="cycle"):
        NonCrossingForest(3, [(1, 2), (2, 3), (1, 3)])


def test_rejects_duplicate_edge():
    with pytest.raises(ValueError, match="duplicate"):
        NonCrossingForest(4, [(1, 2), (2, 1)])


def test_rejects_out_of_range():
    with pytest.raises(ValueError):
        NonCrossingForest(4, [(1, 5)])
    with pytest.raises(ValueError):
        NonCrossingForest(0, [])


def test_edges_sorted_canonically():
    f = NonCrossingForest(6, [(5, 6), (1, 2), (3, 4)])
    assert f.edges == ((1, 2), (3, 4), (5, 6))


def test_equality_and_hash():
    a = NonCrossingForest(4, [(1, 2)])
    b = NonCrossingForest(4, [(2, 1)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != NonCrossingForest(5, [(1, 2)])


# ---------------------------------------------------------------- structure


def test_components_and_neighbors():
    f = NonCrossingForest(12, [(1, 2), (1, 8), (3, 7), (4, 7), (9, 11)])
    comps = f.components()
    assert comps[0] == frozenset({1, 2, 8})
    assert frozenset({3, 4, 7}) in comps
    assert frozenset({5}) in comps
    assert f.component_count() == 7
    assert f.neighbors(1) == (2, 8)
    assert f.neighbors(5) == ()


def test_component_count_is_n_minus_edges():
    f = NonCrossingForest(8, [(3, 4), (5, 8), (6, 8), (2, 8)])
    assert f.component_count() == 8 - len(f.edges) == 4


# ------------------------------------------------------------------ rotation


def test_rotate_identity_and_period():
    f = NonCrossingForest(6, [(1, 2), (4, 6)])
    assert f.rotate(0) == f
    assert f.rotate(6) == f
    assert f.rotate(2).rotate(4) == f
    assert f.rotate(1) == NonCrossingForest(6, [(2, 3), (5, 1)])


def test_is_d_invariant():
    f = NonCrossingForest(4, [(1, 2), (3, 4)])
    assert f.is_d_invariant(1)
    assert f.is_d_invariant(2)
    assert not f.is_d_invariant(4)
    with pytest.raises(ValueError):
        f.is_d_invariant(3)
    with pytest.raises(ValueError):
        f.is_d_invariant(0)


def test_rotation_preserves_validity():
    f = NonCrossingForest(12, [(1, 2), (1, 8), (3, 7), (4, 7), (9, 11)])
    for s in range(12):
        g = f.rotate(s)
        # revalidate from scratch
        assert NonCrossingForest(g.n, g.edges) == g
        assert g.component_count() == f.component_count()


# ---------------------------------------------------------------------- JSON


def test_json_round_trip():
    f = NonCrossingForest(8, [(3, 4), (5, 8), (6, 8), (2, 8)])
    blob = json.dumps(f.to_json())
    assert NonCrossingForest.from_json(json.loads(blob)) == f


def test_from_json_validates():
    with pytest.raises(ValueError):
        NonCrossingForest.from_json({"n": 4})
    with pytest.raises(ValueError):
        NonCrossingForest.from_json({"n": 4, "edges": [[1, 3], [2, 4]]})
    with pytest.raises(ValueError):
        NonCrossingForest.from_json({"n": 4, "edges": [[1]]})
    with pytest.raises(ValueError):
        NonCrossingForest.from_json([4, []])


def test_to_dot_mentions_every_edge():
    f = NonCrossingForest(4, [(1, 2), (2, 3)])
    dot = f.to_dot(name="x")
    assert dot.startswith("graph x")
    assert "1 -- 2" in dot and "2 -- 3" in dot


# ------------------------------------------------------------------ escape


def test_unchecked_matches_checked_on_valid_input():
    edges = ((1, 2), (3, 7), (4, 7))
    assert NonCrossingForest._unchecked(8, edges) == NonCrossingForest(8, edges)
