"""
Triangulations: flips, locking, validation and canonical keys.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fliplab.errors import NotFlippable
from fliplab.generators import convex_gon, random_points
from fliplab.geometry import assert_general_position
from fliplab.triangulations import (
    FULL,
    PARTIAL,
    Edge,
    Triangulation,
    bistellar_flip_rule,
    canonical_key,
    edge_flip_rule,
    edge_set,
    element_label,
    flip_closure,
    is_locked,
    iter_closure,
    locked_endpoints,
    parse_element,
    seed_full_triangulation,
    triangulation_from_key,
)

# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def triangle_center():
    return assert_general_position([(0, 0), (30, 0), (0, 30), (10, 10)])


@pytest.fixture(scope="session")
def square():
    return assert_general_position([(0, 0), (4, 0), (4, 4), (0, 4)])


@pytest.fixture(scope="session")
def hexagon():
    return convex_gon(6)


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------


def test_seed_triangulation_counts(hexagon):
    t = seed_full_triangulation(hexagon)
    assert t.is_valid()
    assert t.kind == FULL
    assert len(t.edges) == 3 * 6 - 3 - 6
    assert len(t.triangles) == 2 * 6 - 2 - 6


def test_seed_requires_hull(triangle_center):
    with pytest.raises(ValueError):
        seed_full_triangulation(triangle_center, vertices=[0, 1, 3])


def test_hull_only_is_partial(triangle_center):
    t = seed_full_triangulation(triangle_center, vertices=[0, 1, 2])
    assert t.kind == PARTIAL
    assert t.skipped == frozenset({3})
    assert t.is_valid()


def test_crossing_diagonals_rejected(square):
    both = edge_set([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)])
    violations = Triangulation(square, square.indices, both).validate()
    assert [v.kind for v in violations] == ["crossing"]


def test_missing_hull_edge_reported(square):
    edges = edge_set([(0, 1), (1, 2), (2, 3), (0, 2)])
    violations = Triangulation(square, square.indices, edges).validate()
    assert any(v.kind == "missing-hull-edge" for v in violations)


def test_isolated_vertex_is_invalid(triangle_center):
    edges = edge_set([(0, 1), (1, 2), (0, 2)])
    t = Triangulation(triangle_center, triangle_center.indices, edges)
    assert not t.is_valid()


# ---------------------------------------------------------------------------
# Flips
# ---------------------------------------------------------------------------


def test_convex_triangulation_has_n_minus_3_flippable_edges(hexagon):
    t = seed_full_triangulation(hexagon)
    assert t.flippable_edges == t.inner_edges
    assert len(t.flippable_edges) == 3


def test_edge_flip_is_an_involution(hexagon):
    t = seed_full_triangulation(hexagon)
    e = sorted(t.flippable_edges)[0]
    u = t.edge_flip(e)
    assert u.is_valid()
    assert e not in u.edges and e in t.edges
    back = u.edge_flip(t.inverse_element(e))
    assert back.key == t.key


def test_hull_edge_not_flippable(hexagon):
    t = seed_full_triangulation(hexagon)
    hull_edge = sorted(t.hull_edges)[0]
    with pytest.raises(NotFlippable) as err:
        t.edge_flip(hull_edge)
    assert err.value.element == hull_edge


def test_triangle_with_center(triangle_center):
    t = seed_full_triangulation(triangle_center)
    assert t.flippable_edges == frozenset()
    assert t.removable_points == frozenset({3})
    assert t.flippable_elements == (3,)

    hull_only = t.apply_flip(3)
    assert hull_only.vertices == frozenset({0, 1, 2})
    assert hull_only.flippable_elements == (3,)
    assert hull_only.apply_flip(3).key == t.key
    assert hull_only.locate(3) == hull_only.triangles[0]


def test_apexes_and_territory(square):
    edges = edge_set([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    t = Triangulation(square, square.indices, edges)
    e = Edge.of(0, 2)
    assert set(t.apexes(e)) == {1, 3}
    assert set(t.territory(e)) == {0, 1, 2, 3}
    assert t.edge_flip(e).edges - t.hull_edges == {Edge.of(1, 3)}


def test_unknown_element_not_flippable(hexagon):
    t = seed_full_triangulation(hexagon)
    with pytest.raises(NotFlippable):
        t.apply_flip(0)


# ---------------------------------------------------------------------------
# Locking
# ---------------------------------------------------------------------------


def test_spokes_lock_at_the_center(triangle_center):
    t = seed_full_triangulation(triangle_center)
    for q in (0, 1, 2):
        e = Edge.of(q, 3)
        assert locked_endpoints(t, e) == frozenset({3})
        assert is_locked(t, e)


def test_flippable_edges_are_unlocked(hexagon):
    t = seed_full_triangulation(hexagon)
    assert not any(is_locked(t, e) for e in t.flippable_edges)
    assert all(locked_endpoints(t, e) == frozenset(e) for e in t.hull_edges)


# ---------------------------------------------------------------------------
# Encodings
# ---------------------------------------------------------------------------


def test_key_ignores_edge_order(square):
    a = edge_set([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    b = edge_set([(2, 0), (3, 0), (3, 2), (2, 1), (1, 0)])
    a, b = (Triangulation(square, square.indices, e) for e in (a, b))
    assert canonical_key(a) == canonical_key(b) == a.key


def test_key_decodes(hexagon):
    t = seed_full_triangulation(hexagon)
    assert triangulation_from_key(hexagon, t.key) == t
    assert triangulation_from_key(hexagon, bytes.fromhex(t.key.hex())).key == t.key


def test_json_round_trip(triangle_center):
    t = seed_full_triangulation(triangle_center)
    assert Triangulation.from_json(triangle_center, t.to_json()) == t


def test_element_labels():
    assert element_label(Edge.of(3, 0)) == "e0-3"
    assert element_label(4) == "p4"
    assert parse_element("e0-3") == Edge(0, 3)
    assert parse_element("p4") == 4
    with pytest.raises(ValueError):
        parse_element("x1")


# ---------------------------------------------------------------------------
# Closure
# ---------------------------------------------------------------------------


def test_pentagon_closure():
    t = seed_full_triangulation(convex_gon(5))
    nodes, adjacency = flip_closure(t, edge_flip_rule)
    assert len(nodes) == 5
    assert len(adjacency) == 5


def test_bistellar_closure_of_triangle_with_center(triangle_center):
    nodes, adjacency = flip_closure(
        seed_full_triangulation(triangle_center), bistellar_flip_rule
    )
    assert len(nodes) == 2
    assert list(adjacency.values()) == [3]


@settings(max_examples=15, deadline=None)
@given(
    st.integers(min_value=4, max_value=8), st.integers(min_value=0, max_value=10**4)
)
def test_every_flip_stays_valid_and_reverts(n, seed):
    ps = random_points(n, seed=seed)
    t = seed_full_triangulation(ps)
    assert len(t.edges) == 3 * n - 3 - ps.h
    for x in t.flippable_elements:
        u = t.apply_flip(x)
        assert u.is_valid()
        assert u.apply_flip(t.inverse_element(x)).key == t.key
        assert len(t.edges ^ u.edges) == (2 if isinstance(x, Edge) else 3)


@pytest.mark.parametrize("n, seed", [(5, 0), (7, 3), (9, 11)])
def test_random_flip_walk_stays_valid(n, seed):
    ps = random_points(n, seed=seed)
    rng = random.Random(seed)
    t = seed_full_triangulation(ps)
    for _ in range(100):
        t = t.apply_flip(rng.choice(t.flippable_elements))
        assert t.is_valid()
        assert len(t.flippable_elements) >= n - 3


def test_lazy_closure_matches_flip_closure(triangle_center):
    for ps, rule in [
        (convex_gon(6), edge_flip_rule),
        (triangle_center, bistellar_flip_rule),
    ]:
        seed = seed_full_triangulation(ps)
        nodes, _ = flip_closure(seed, rule)
        lazy = [t.key for t in iter_closure(seed, rule)]
        assert lazy[0] == seed.key
        assert len(lazy) == len(set(lazy))
        assert set(lazy) == set(nodes)
