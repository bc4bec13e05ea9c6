"""
Exact predicates, point-set validation and point files.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fliplab.errors import (
    CollinearTriple,
    CoordinateOutOfRange,
    DuplicatePoint,
    InvalidFormatError,
)
from fliplab.flipgraphs import definitional_hull
from fliplab.generators import random_points
from fliplab.geometry import (
    COORD_BOUND,
    Point,
    assert_general_position,
    compare_directions,
    format_points,
    in_convex_polygon,
    in_open_half_plane,
    in_triangle,
    orient,
    parse_points,
    radial_sort,
    read_points,
    segments_cross,
    write_points,
)

coords = st.integers(min_value=-(10**6), max_value=10**6)
points = st.builds(Point, coords, coords)

# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def square_with_center():
    return assert_general_position([(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)])


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


def test_orient_signs():
    a, b, c = Point(0, 0), Point(1, 0), Point(0, 1)
    assert orient(a, b, c) == 1
    assert orient(a, c, b) == -1
    assert orient(a, b, Point(5, 0)) == 0


@given(points, points, points)
def test_orient_is_antisymmetric_and_cyclic(p, q, r):
    assert orient(p, q, r) == -orient(q, p, r)
    assert orient(p, q, r) == orient(q, r, p)


def test_segments_cross():
    a, b = Point(0, 0), Point(4, 4)
    assert segments_cross(a, b, Point(0, 4), Point(4, 0))
    assert not segments_cross(a, b, Point(4, 4), Point(8, 0))  # shared endpoint
    assert not segments_cross(a, b, Point(5, 0), Point(6, 1))


def test_in_triangle_is_strict():
    a, b, c = Point(0, 0), Point(6, 0), Point(0, 6)
    assert in_triangle(Point(1, 1), a, b, c)
    assert in_triangle(Point(1, 1), a, c, b)
    assert not in_triangle(Point(3, 0), a, b, c)
    assert not in_triangle(Point(5, 5), a, b, c)


def test_in_convex_polygon():
    square = [Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)]
    assert in_convex_polygon(Point(2, 2), square)
    assert not in_convex_polygon(Point(4, 2), square)


def test_compare_directions_starts_at_positive_x():
    assert compare_directions((1, 0), (0, 1)) == -1
    assert compare_directions((0, -1), (-1, 1)) == 1
    assert compare_directions((2, 2), (1, 1)) == 0


def test_radial_sort_is_ccw():
    center = Point(0, 0)
    others = [
        (0, Point(0, -1)),
        (1, Point(-1, 0)),
        (2, Point(1, 0)),
        (3, Point(0, 1)),
    ]
    assert radial_sort(center, others) == [2, 3, 1, 0]


def test_in_open_half_plane():
    assert in_open_half_plane([(1, 0), (1, 1), (0, 1)])
    assert not in_open_half_plane([(1, 0), (-1, 1), (-1, -1)])
    assert not in_open_half_plane([])


# ---------------------------------------------------------------------------
# Point sets
# ---------------------------------------------------------------------------


def test_hull_and_inner(square_with_center):
    ps = square_with_center
    assert ps.n == 5 and ps.h == 4
    assert ps.inner == frozenset({4})
    assert ps.hull[0] == 0
    pts = ps.points
    for i in range(ps.h):
        a, b, c = (ps.hull[(i + j) % ps.h] for j in range(3))
        assert orient(pts[a], pts[b], pts[c]) > 0


def test_radial_orders_cover_every_other_point(square_with_center):
    for v, order in enumerate(square_with_center.radial):
        assert sorted(order) == [u for u in range(5) if u != v]


def test_subset_maps_back(square_with_center):
    sub, chosen = square_with_center.subset([4, 0, 2, 1])
    assert chosen == (0, 1, 2, 4)
    assert sub.points == tuple(square_with_center.points[i] for i in chosen)


def test_duplicate_point_rejected():
    with pytest.raises(DuplicatePoint) as err:
        assert_general_position([(0, 0), (1, 0), (0, 1), (1, 0)])
    assert (err.value.i, err.value.j) == (1, 3)


def test_collinear_triple_rejected():
    with pytest.raises(CollinearTriple) as err:
        assert_general_position([(0, 0), (5, 7), (1, 1), (2, 2)])
    assert err.value.triple == (0, 2, 3)


def test_coordinate_bound():
    assert_general_position([(0, 0), (COORD_BOUND, 0), (0, COORD_BOUND)])
    with pytest.raises(CoordinateOutOfRange) as err:
        assert_general_position([(0, 0), (COORD_BOUND + 1, 0), (0, 1)])
    assert err.value.index == 1


@settings(max_examples=25, deadline=None)
@given(
    st.integers(min_value=4, max_value=8), st.integers(min_value=0, max_value=10**4)
)
def test_hull_matches_definition(n, seed):
    ps = random_points(n, seed=seed)
    assert definitional_hull(ps) == frozenset(ps.hull)


# ---------------------------------------------------------------------------
# Point files
# ---------------------------------------------------------------------------


def test_parse_text_with_comments():
    ps = parse_points("# a triangle\n0 0\n10 0  # right corner\n\n0 10\n")
    assert ps.points == (Point(0, 0), Point(10, 0), Point(0, 10))


def test_parse_json():
    ps = parse_points('{"points": [[0, 0], [10, 0], [0, 10], [2, 3]]}')
    assert ps.n == 4 and ps.inner == frozenset({3})


@pytest.mark.parametrize(
    "text",
    [
        "0 0\n1\n0 1\n",
        "0 0\n1 x\n0 1\n",
        '{"points": [[0, 0], [1]]}',
        '{"pts": []}',
    ],
)
def test_malformed_input(text):
    with pytest.raises(InvalidFormatError):
        parse_points(text)


def test_write_and_read(tmp_path, square_with_center):
    path = tmp_path / "points.txt"
    write_points(square_with_center, path)
    assert path.read_text().splitlines()[0] == "0 0"
    assert read_points(path).points == square_with_center.points
    assert '"points"' in format_points(square_with_center, "json")
