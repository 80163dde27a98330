from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import congruent, free_polyhex_count, graph_of, has_hole
from sextet.hexsys import (
    NAMED,
    DisconnectedCells,
    HasHole,
    HexSystemError,
    UnknownFamily,
    build_from_cells,
    canonical_code_of_cells,
    count_by_size,
    enumerate_polyhexes,
    families_builder,
    from_code,
    is_bipartite,
    is_two_connected,
    parse_code,
    symmetry_images,
)


def test_benzene_and_coronene_sizes():
    b = build_from_cells(NAMED["benzene"])
    assert (len(b.vertices), len(b.edges)) == (6, 6)
    c = build_from_cells(NAMED["coronene"])
    assert (len(c.vertices), len(c.edges)) == (24, 30)


@pytest.mark.parametrize("name", sorted(NAMED))
def test_named_systems_match_oracle_graph(name):
    h = build_from_cells(NAMED[name])
    verts, edges, _ = graph_of(NAMED[name])
    assert set(h.vertices) == verts
    assert h.edges == frozenset(tuple(sorted(e)) for e in edges)
    assert is_bipartite(h) and is_two_connected(h)


def test_disconnected_and_holey_inputs_rejected():
    with pytest.raises(DisconnectedCells):
        build_from_cells([(0, 0), (2, 0)])
    ring = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)]
    with pytest.raises(HasHole):
        build_from_cells(ring)
    with pytest.raises(HexSystemError):
        build_from_cells([])


def test_corner_touching_cells_are_disconnected():
    # (0,0) and (1,1) share only a vertex
    with pytest.raises(DisconnectedCells):
        build_from_cells([(0, 0), (1, 1)])


def test_code_round_trip_and_symmetry_invariance():
    cells = NAMED["phenanthrene"]
    code = canonical_code_of_cells(cells)
    for img in symmetry_images(cells):
        assert canonical_code_of_cells(img) == code
    assert from_code(code).code == code
    assert len(parse_code(code)) == 3
    with pytest.raises(HexSystemError):
        parse_code(" ; ")


def test_twelve_images():
    assert len(symmetry_images(NAMED["benzene"])) == 12


def test_enumeration_counts_match_congruence_oracle():
    counts = count_by_size(5)
    assert counts == {k: free_polyhex_count(k) for k in range(1, 6)}
    assert counts == {1: 1, 2: 1, 3: 3, 4: 7, 5: 22}


def test_enumeration_sorted_and_unique():
    systems = list(enumerate_polyhexes(5))
    keys = [(len(h.cells), h.code) for h in systems]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for i, a in enumerate(systems):
        for b in systems[i + 1:]:
            if len(a.cells) == len(b.cells):
                assert not congruent(a.cells, b.cells)


def test_six_cell_count_excludes_coronene_hole():
    # 82 free hexagonal polyhexes of size 6, one of which (the ring) has a hole
    assert count_by_size(6)[6] == free_polyhex_count(6) == 81


def test_family_builders():
    assert len(families_builder("pyrene", 3).cells) == 12
    assert len(families_builder("line-m", 3, 4).cells) == 3 * (4 - 1)
    assert families_builder("triphenylene", 1).code == canonical_code_of_cells(NAMED["triphenylene"])
    with pytest.raises(UnknownFamily):
        families_builder("delannoy", 2)
    with pytest.raises(ValueError):
        families_builder("line-m", 2)


cells_strategy = st.sets(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=1, max_size=7)


@given(cells_strategy)
@settings(max_examples=150)
def test_build_accepts_exactly_connected_holefree_sets(cells):
    connected = _connected(cells)
    try:
        h = build_from_cells(cells)
    except DisconnectedCells:
        assert not connected
        return
    except HasHole:
        assert connected and has_hole(cells)
        return
    assert connected and not has_hole(cells)
    n = len(cells)
    assert len(h.vertices) <= 4 * n + 2
    assert len(h.edges) == len(h.vertices) + n - 1  # Euler for a hole-free system


@given(cells_strategy)
@settings(max_examples=100)
def test_canonical_code_is_a_congruence_invariant(cells):
    code = canonical_code_of_cells(cells)
    for img in symmetry_images(cells):
        assert canonical_code_of_cells(img) == code
    assert congruent(frozenset(tuple(c) for c in parse_code(code)), _origin(cells))


def _origin(cells):
    q0 = min(q for q, _ in cells)
    r0 = min(r for _, r in cells)
    return frozenset((q - q0, r - r0) for q, r in cells)


def _connected(cells):
    cells = set(cells)
    start = next(iter(cells))
    seen, stack = {start}, [start]
    while stack:
        q, r = stack.pop()
        for dq, dr in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)):
            c = (q + dq, r + dr)
            if c in cells and c not in seen:
                seen.add(c)
                stack.append(c)
    return len(seen) == len(cells)
