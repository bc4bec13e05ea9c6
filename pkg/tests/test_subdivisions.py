"""
Subdivisions, coarseners, the refinement poset and the counting audits.
"""

from itertools import combinations

import networkx as nx
import pytest

from fliplab.errors import CapExceeded, ConvexityViolation, NotWellOriented
from fliplab.flipgraphs import refinement_cycle, subdivision_covers, subdivision_keys
from fliplab.generators import convex_gon, random_points
from fliplab.geometry import assert_general_position
from fliplab.subdivisions import (
    COARSENER,
    POINT,
    Subdivision,
    build_full_poset,
    build_poset,
    coarsening_moves,
    full_coarsening_audit,
    full_coarsening_bound,
    incident_edges,
    is_coarsener,
    is_refinement,
    join,
    locking_orientation,
    make_subdivision,
    maximal_elements,
    maximal_full_coarsening,
    meet,
    partial_flip,
    partial_flip_pair,
    perfect_coarsenings,
    prime_coarseners,
    unoriented_edges_audit,
    well_oriented_violation,
)
from fliplab.triangulations import Edge, edge_set, seed_full_triangulation

# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def triangle_center():
    return assert_general_position([(0, 0), (30, 0), (0, 30), (10, 10)])


@pytest.fixture(scope="session")
def square_center():
    return assert_general_position([(0, 0), (40, 0), (40, 40), (0, 40), (10, 17)])


@pytest.fixture(scope="session")
def pentagon():
    return convex_gon(5)


@pytest.fixture(scope="session")
def hexagon():
    return convex_gon(6)


@pytest.fixture(scope="session")
def random_six():
    return random_points(6, seed=7)


@pytest.fixture(scope="session")
def random_six_poset(random_six):
    return build_poset(random_six)


# ---------------------------------------------------------------------------
# Regions and slack
# ---------------------------------------------------------------------------


def test_trivial_convex(hexagon):
    s = Subdivision.trivial(hexagon)
    assert s.is_valid()
    assert s.kind == "full"
    assert len(s.regions) == 1
    assert s.slack == 3 == s.closed_form_slack
    assert s.refined_slack == 2


def test_trivial_with_bystander(triangle_center):
    s = Subdivision.trivial(triangle_center)
    assert s.bystanders == frozenset({3})
    assert s.kind == "partial"
    assert s.regions[0].bystanders_inside == frozenset({3})
    assert s.slack == 1 == s.closed_form_slack
    assert not s.is_triangulation


def test_triangulations_have_slack_zero(triangle_center):
    s = Subdivision.of(seed_full_triangulation(triangle_center))
    assert s.slack == 0
    assert s.is_triangulation


def test_reflex_region():
    ps = assert_general_position([(0, 0), (10, 0), (10, 10), (0, 10), (5, 3)])
    edges = edge_set([(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)])
    s = Subdivision(ps, ps.indices, edges)
    assert [v.kind for v in s.validate()] == ["nonconvex-region"]
    assert make_subdivision(ps, ps.indices, edges) is None
    with pytest.raises(ConvexityViolation):
        s.regions


def test_json_keeps_bystanders(triangle_center):
    s = Subdivision.trivial(triangle_center)
    assert Subdivision.from_json(triangle_center, s.to_json()) == s


# ---------------------------------------------------------------------------
# Refinement, meet, join, partial flips
# ---------------------------------------------------------------------------


def test_triangulation_refines_trivial(hexagon):
    t = seed_full_triangulation(hexagon)
    assert is_refinement(t, Subdivision.trivial(hexagon))
    assert not is_refinement(Subdivision.trivial(hexagon), t)


def test_partial_flip_has_slack_one(hexagon):
    t = seed_full_triangulation(hexagon)
    for e in t.flippable_edges:
        s = partial_flip(t, e)
        assert s.slack == 1
        assert is_refinement(t, s) and is_refinement(t.apply_flip(e), s)


def test_meet_and_join_of_partial_flips(hexagon):
    t = seed_full_triangulation(hexagon)
    fan = sorted(t.inner_edges)
    x, y = fan[0], fan[-1]
    sx, sy = partial_flip(t, x), partial_flip(t, y)
    assert meet(sx, sy).key == t.key
    joined = join(sx, sy)
    assert joined.slack == 2
    assert partial_flip_pair(t, x, y).key == joined.key


def test_meet_of_crossing_triangulations_is_none(hexagon):
    t = seed_full_triangulation(hexagon)
    e = sorted(t.flippable_edges)[0]
    assert meet(t, t.apply_flip(e)) is None


# ---------------------------------------------------------------------------
# Coarseners and moves
# ---------------------------------------------------------------------------


def test_center_is_a_perfect_coarsener(triangle_center):
    t = seed_full_triangulation(triangle_center)
    s = Subdivision.of(t)
    (c,) = prime_coarseners(s)
    assert c.points == frozenset({3})
    assert c.increment == 1 and c.is_perfect
    assert is_coarsener(s, {3})
    assert not is_coarsener(s, {0})
    (move,) = coarsening_moves(s)
    assert move.move.kind == COARSENER
    assert move.move.label() == "-U3"
    assert move.result.key == Subdivision.trivial(triangle_center).key


def test_skipped_point_becomes_bystander(triangle_center):
    hull_only = seed_full_triangulation(triangle_center, vertices=[0, 1, 2])
    (move,) = coarsening_moves(Subdivision.of(hull_only))
    assert move.move.kind == POINT and move.move.label() == "+p3"
    assert move.perfect
    assert move.result.bystanders == frozenset({3})


def test_convex_coarsenings_remove_single_edges(hexagon):
    s = Subdivision.of(seed_full_triangulation(hexagon))
    moves = coarsening_moves(s)
    assert sorted(m.move.target for m in moves) == sorted(s.inner_edges)
    assert all(m.perfect for m in moves)


def test_perfect_coarsening_count(random_six_poset, random_six):
    for s in random_six_poset.subdivisions:
        assert len(perfect_coarsenings(s)) >= random_six.n - 3 - s.slack


def test_maximal_full_coarsening_of_convex_is_trivial(hexagon):
    s = maximal_full_coarsening(Subdivision.of(seed_full_triangulation(hexagon)))
    assert s.key == Subdivision.trivial(hexagon).key


# ---------------------------------------------------------------------------
# Poset
# ---------------------------------------------------------------------------


def test_triangle_center_poset(triangle_center):
    poset = build_poset(triangle_center)
    assert len(poset) == 3
    assert poset.hasse.number_of_edges() == 2
    assert poset.height_max == 1
    assert poset.is_perfect_everywhere
    assert poset.height_equals_slack
    assert [s.key for s in maximal_elements(poset)] == [
        Subdivision.trivial(triangle_center).key
    ]


def test_pentagon_poset(pentagon):
    poset = build_poset(pentagon)
    assert len(poset) == 11
    assert poset.hasse.number_of_edges() == 15
    assert poset.height_max == 2
    slacks = sorted(poset.slack(k) for k in poset.hasse.nodes)
    assert slacks == [0] * 5 + [1] * 5 + [2]


def test_full_poset_of_pentagon(pentagon):
    poset = build_full_poset(pentagon)
    assert len(poset) == 11
    (top,) = maximal_elements(poset)
    assert full_coarsening_audit(top)


def test_poset_invariants(random_six_poset):
    poset = random_six_poset
    hasse = poset.hasse
    for key in hasse.nodes:
        s = poset.subdivision(key)
        assert s.is_valid()
        assert s.slack == s.closed_form_slack
        assert poset.height(key) >= s.slack
    for a, b, data in hasse.edges(data=True):
        gained = poset.slack(b) - poset.slack(a)
        assert gained <= 1
        assert data["perfect"] == (gained == 1)
        assert is_refinement(poset.subdivision(a), poset.subdivision(b))


def test_poset_cap(random_six):
    with pytest.raises(CapExceeded):
        build_poset(random_six, cap=5)
    with pytest.raises(CapExceeded):
        build_full_poset(random_six, cap=5)


def test_square_with_one_interior_point(square_center):
    poset = build_poset(square_center)
    assert len(poset) == 11
    assert poset.hasse.number_of_edges() == 15
    slacks = [poset.slack(k) for k in poset.hasse.nodes]
    assert [slacks.count(level) for level in range(3)] == [5, 5, 1]
    assert set(poset.hasse.nodes) == subdivision_keys(square_center)
    assert set(poset.hasse.edges) == subdivision_covers(poset.subdivisions)


def test_hasse_edges_are_covering_pairs(random_six_poset):
    covers = subdivision_covers(random_six_poset.subdivisions)
    assert set(random_six_poset.hasse.edges) == covers


def test_unique_top_and_height(random_six_poset, random_six):
    (top,) = maximal_elements(random_six_poset)
    assert top.key == Subdivision.trivial(random_six).key
    height = random_six_poset.height(top.key)
    assert height >= random_six.n - 3
    assert (height == random_six.n - 3) == random_six_poset.is_perfect_everywhere


def test_prime_coarseners_are_disjoint_and_connected(random_six_poset):
    for s in random_six_poset.subdivisions:
        found = prime_coarseners(s)
        for i, a in enumerate(found):
            assert all(not a.points & b.points for b in found[i + 1 :])
            graph = nx.Graph((e.u, e.v) for e in s.edges)
            assert nx.is_connected(graph.subgraph(a.points))
            assert a.increment <= 1


def test_coarsening_increments_follow_the_move(random_six_poset):
    poset = random_six_poset
    for s in poset.subdivisions:
        for move in coarsening_moves(s):
            assert move.result.slack == s.slack + move.increment
            if move.move.kind == COARSENER:
                u = move.move.target
                assert move.increment == len(incident_edges(s, u)) - 2 * len(u)
            else:
                assert move.increment == 1
            assert poset.hasse.has_edge(s.key, move.result.key)


@pytest.mark.parametrize("name", ["pentagon", "square-center"])
def test_trivial_of_five_points_is_refined_by_a_five_cycle(
    name, pentagon, square_center
):
    ps = pentagon if name == "pentagon" else square_center
    trivial = Subdivision.trivial(ps)
    start = seed_full_triangulation(ps)
    assert trivial.slack == 2
    cycle = refinement_cycle(trivial, start)
    assert len(cycle) == 5
    assert cycle[0].key == start.key
    assert all(is_refinement(t, trivial) for t in cycle)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_compatible_flip_pairs_close_short_cycles(seed):
    t = seed_full_triangulation(random_points(6, seed=seed))
    for x, y in combinations(t.flippable_elements, 2):
        s = partial_flip_pair(t, x, y)
        if s is not None:
            assert s.slack == 2
            assert len(refinement_cycle(s, t)) in (4, 5)


# ---------------------------------------------------------------------------
# Audits
# ---------------------------------------------------------------------------


def test_locking_orientation_of_triangle_center(triangle_center):
    s = Subdivision.of(seed_full_triangulation(triangle_center))
    orientation = locking_orientation(s)
    assert set(orientation.values()) == {3}
    audit = unoriented_edges_audit(s, orientation, require_well_oriented=True)
    assert audit.well_oriented
    assert audit.histogram == {3: 1}
    assert audit.unoriented == 0
    assert audit.exact_count == 0
    assert audit.holds


def test_orientation_into_hull_is_not_well_oriented(hexagon):
    s = Subdivision.of(seed_full_triangulation(hexagon))
    e = sorted(s.inner_edges)[0]
    orientation = {f: None for f in s.inner_edges}
    orientation[e] = e.u
    assert well_oriented_violation(s, orientation) == e.u
    with pytest.raises(NotWellOriented):
        unoriented_edges_audit(s, orientation, require_well_oriented=True)


def test_audit_rejects_bystanders(triangle_center):
    s = Subdivision.trivial(triangle_center)
    with pytest.raises(ValueError):
        unoriented_edges_audit(s, locking_orientation(s))


def test_audit_holds_on_every_subdivision(random_six_poset):
    for s in random_six_poset.subdivisions:
        if s.bystanders:
            continue
        assert unoriented_edges_audit(s, locking_orientation(s)).holds


def test_full_coarsening_bound(hexagon, pentagon):
    assert full_coarsening_bound(Subdivision.trivial(hexagon)) == 3
    assert full_coarsening_audit(Subdivision.trivial(pentagon))
    with pytest.raises(ValueError):
        full_coarsening_audit(Subdivision.of(seed_full_triangulation(pentagon)))


def test_edge_target_on_moves(pentagon):
    s = Subdivision.of(seed_full_triangulation(pentagon))
    assert all(isinstance(m.move.target, Edge) for m in coarsening_moves(s))
