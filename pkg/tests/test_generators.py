"""
Point-set generators.
"""

import pytest

import fliplab.generators as generators
import fliplab.generators.twisted as twisted_module
from fliplab.errors import CollinearTriple, ConstructionFailed
from fliplab.generators import (
    CONCURRENT,
    NON_CONCURRENT,
    SUPPORTED_FAMILIES,
    concurrency_determinant,
    convex_gon,
    mother_example,
    order_type,
    random_points,
    random_superset,
    stacked_points,
    stacked_triangulation,
    twisted_conditions,
    twisted_double_gon,
    twisted_subdivision,
)
from fliplab.geometry import assert_general_position


def test_supported_families_resolve():
    for family, name in SUPPORTED_FAMILIES.items():
        assert callable(getattr(generators, name)), family
        assert name in generators.__all__


# ---------------------------------------------------------------------------
# Convex and random
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5, 8, 12])
def test_convex_gon(n):
    ps = convex_gon(n)
    assert ps.n == ps.h == n
    assert ps.hull == tuple(sorted(ps.hull, key=lambda i: (i - ps.hull[0]) % n))


def test_convex_gon_needs_three_points():
    with pytest.raises(ValueError):
        convex_gon(2)


def test_random_points_are_seeded():
    a = random_points(8, seed=42)
    assert a.points == random_points(8, seed=42).points
    assert a.points != random_points(8, seed=43).points
    assert all(0 <= p.x <= 1000 and 0 <= p.y <= 1000 for p in a.points)


@pytest.mark.parametrize("extra", [1, 3])
def test_random_superset_keeps_the_original_points(extra):
    ps = convex_gon(5)
    bigger = random_superset(ps, extra=extra, seed=7)
    assert bigger.n == ps.n + extra
    assert bigger.points[: ps.n] == ps.points
    assert bigger.points == random_superset(ps, extra=extra, seed=7).points


@pytest.mark.parametrize("n, box", [(2, 100), (10, 5)])
def test_random_points_rejects_bad_arguments(n, box):
    with pytest.raises(ValueError):
        random_points(n, box=box)


# ---------------------------------------------------------------------------
# Twisted double-gons
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("k", [3, 4, 5])
def test_twisted_double_gon(k):
    ps = twisted_double_gon(k)
    assert ps.n == 2 * k and ps.h == k
    assert all(twisted_conditions(ps, k).values())
    s = twisted_subdivision(ps)
    assert s.slack == ps.n - 3
    assert s.is_valid()


def test_twisted_needs_k_three():
    with pytest.raises(ValueError):
        twisted_double_gon(2)


def test_twisted_retries_at_a_larger_radius(monkeypatch):
    search = twisted_module._search
    tried = []

    def fail_at_base_radius(k, radius):
        tried.append(radius)
        return None if radius == twisted_module.RADIUS else search(k, radius)

    monkeypatch.setattr(twisted_module, "_search", fail_at_base_radius)
    ps = twisted_double_gon(3)
    growth = twisted_module.RADIUS_GROWTH
    assert tried == [twisted_module.RADIUS, twisted_module.RADIUS * growth]
    assert max(abs(c) for p in ps.points for c in p) > twisted_module.RADIUS
    assert all(twisted_conditions(ps, 3).values())


def test_twisted_gives_up_after_every_radius(monkeypatch):
    tried = []
    monkeypatch.setattr(
        twisted_module, "_search", lambda k, radius: tried.append(radius)
    )
    with pytest.raises(ConstructionFailed):
        twisted_double_gon(3)
    assert len(tried) == twisted_module.RADIUS_RETRIES + 1


# ---------------------------------------------------------------------------
# Mother of examples
# ---------------------------------------------------------------------------


def test_mother_constants():
    assert len(CONCURRENT) == len(NON_CONCURRENT) == 6
    concurrent, other = mother_example(True), mother_example(False)
    assert concurrency_determinant(concurrent) == 0
    assert concurrency_determinant(other) != 0
    assert order_type(concurrent) == order_type(other)
    assert concurrent.hull == (0, 1, 2)


def test_mother_is_a_twisted_triangle():
    ps = mother_example(True)
    assert all(twisted_conditions(ps, 3).values())


# ---------------------------------------------------------------------------
# Stacked
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("depth", [0, 1, 4])
def test_stacked_points(depth):
    ps = stacked_points(depth)
    assert ps.n == 3 + depth and ps.h == 3
    t = stacked_triangulation(ps)
    assert t.is_valid() and t.kind == "full"
    assert all(len(t.rotation[p]) >= 3 for p in ps.inner)


def test_stacked_needs_a_triangle():
    with pytest.raises(ValueError):
        stacked_triangulation(convex_gon(4))


def test_general_position_still_enforced():
    with pytest.raises(CollinearTriple):
        assert_general_position(list(CONCURRENT[:3]) + [(30, 30)])
