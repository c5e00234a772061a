"""Hexagon complex combinatorics: counts, boundary, cycle enumeration."""

import pytest

from hexmetric.surface import HexComplex, InvalidComplexError, build, opposite_position


def test_opposite_position():
    assert [opposite_position(p) for p in range(6)] == [3, 4, 5, 0, 1, 2]


def test_pants_counts(pants):
    assert pants.n == 2
    assert pants.num_edges == 3
    assert pants.num_arcs == 6
    assert pants.euler_characteristic() == -1
    assert len(pants.boundary_components()) == 3


def test_torus_counts(torus):
    assert torus.num_edges == 3
    assert torus.euler_characteristic() == -1
    assert len(torus.boundary_components()) == 1
    bc = torus.boundary_components()[0]
    assert len(bc.arcs) == 6  # one circle through all six arcs
    assert sorted(bc.edges) == [0, 0, 1, 1, 2, 2]


def test_four_counts(four):
    assert four.n == 4
    assert four.num_edges == 6
    assert four.num_arcs == 12
    assert four.euler_characteristic() == -2
    assert len(four.boundary_components()) == 4


def test_pants_boundary_edge_cycles(pants):
    cycles = {tuple(sorted(bc.edges)) for bc in pants.boundary_components()}
    assert cycles == {(0, 2), (0, 1), (1, 2)}
    for bc in pants.boundary_components():
        assert len(bc.arcs) == 2


def test_facing_and_adjacent_arcs(pants):
    # edge 0 glues (0,1)-(1,1); facing arcs are opposite x-slots (0,4),(1,4)
    assert set(pants.facing_arcs(0)) == {pants.arc_index((0, 4)), pants.arc_index((1, 4))}
    adj = pants.adjacent_arcs(0)
    assert sorted(adj) == sorted(
        [
            pants.arc_index((0, 0)),
            pants.arc_index((0, 2)),
            pants.arc_index((1, 0)),
            pants.arc_index((1, 2)),
        ]
    )


def test_arc_indexing_round_trip(four):
    for arc in range(four.num_arcs):
        assert four.arc_index(four.arc_slot(arc)) == arc


def test_arc_to_edge_inverts_facing(four):
    for e in range(four.num_edges):
        for side, arc in enumerate(four.facing_arcs(e)):
            assert four.arc_to_edge(arc) == (e, side)


def test_enumeration_pants_exactly_three(pants):
    enum = pants.enumerate_fundamental_cycles()
    assert not enum.truncated
    keys = sorted(c.multiplicities(3) for c in enum.cycles)
    assert keys == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    # the boundary edge cycles coincide with the enumerated ones
    bkeys = sorted(c.multiplicities(3) for c in pants.boundary_edge_cycles())
    assert bkeys == keys


def test_enumeration_contains_boundary(torus, four):
    for cx in (torus, four):
        enum = cx.enumerate_fundamental_cycles()
        keys = {c.multiplicities(cx.num_edges) for c in enum.cycles}
        for bc in cx.boundary_edge_cycles():
            assert bc.multiplicities(cx.num_edges) in keys


def test_enumeration_cycles_are_fundamental(four):
    for cyc in four.enumerate_fundamental_cycles().cycles:
        assert cyc.fundamental
        assert len(cyc.corner_arcs) == len(cyc.edges) == len(cyc.steps)


def test_enumeration_truncation(four):
    enum = four.enumerate_fundamental_cycles(limit=2)
    assert enum.truncated
    assert len(enum.cycles) == 2


def test_validation_errors():
    with pytest.raises(InvalidComplexError):
        HexComplex(n=1, gluings=[])  # odd count
    with pytest.raises(InvalidComplexError):
        HexComplex(n=2, gluings=[((0, 1), (1, 1), False)])  # missing pairs
    with pytest.raises(InvalidComplexError):
        HexComplex(
            n=2,
            gluings=[
                ((0, 1), (1, 1), False),
                ((0, 1), (1, 3), False),  # slot reused
                ((0, 5), (1, 5), False),
            ],
        )
    with pytest.raises(InvalidComplexError):
        HexComplex(
            n=2,
            gluings=[
                ((0, 0), (1, 1), False),  # x-slot in a gluing
                ((0, 3), (1, 3), False),
                ((0, 5), (1, 5), False),
            ],
        )
    with pytest.raises(InvalidComplexError):
        # two disjoint pants pieces: disconnected
        HexComplex(
            n=4,
            gluings=[
                ((0, 1), (1, 1), False),
                ((0, 3), (1, 3), False),
                ((0, 5), (1, 5), False),
                ((2, 1), (3, 1), False),
                ((2, 3), (3, 3), False),
                ((2, 5), (3, 5), False),
            ],
        )


def test_duplicate_labels_rejected():
    with pytest.raises(InvalidComplexError):
        HexComplex(
            n=2,
            gluings=[
                ((0, 1), (1, 1), False),
                ((0, 3), (1, 3), False),
                ((0, 5), (1, 5), False),
            ],
            labels=["a", "a", "b"],
        )


def test_build_from_dict(pants):
    doc = {
        "hexagons": 2,
        "gluings": [
            {"a": [0, 1], "b": [1, 1], "reversed": False},
            {"a": [0, 3], "b": [1, 3]},
            {"a": [0, 5], "b": [1, 5], "reversed": False},
        ],
    }
    cx = build(doc)
    assert cx.gluings == pants.gluings
    assert cx.labels == ["e0", "e1", "e2"]
    with pytest.raises(InvalidComplexError):
        build({"hexagons": 2})
    with pytest.raises(InvalidComplexError):
        build({"hexagons": 2, "gluings": [{"a": [0, 1]}]})
