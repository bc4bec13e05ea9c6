"""
Verification suites.

Each suite runs one family of checks over the standard test sets (convex polygons,
twisted double-gons, both mother configurations, stacked sets, a triangle with its
center and seeded random sets) and yields one CheckRecord per instance. A
VerificationReport collects the records; its JSON form is the source of truth and the
human table is rendered from the same records. Every record names the claim family it
traces back to, and both renderings end with that traceability table.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Optional

import networkx as nx
import pandas as pd
from loguru import logger

from ..errors import FlipLabError
from ..flipgraphs import (
    build_bistellar_flip_graph,
    build_edge_flip_graph,
    complement_has_c4,
    full_triangulation_keys,
    is_triangle_free,
    lift_link_edge,
    link_of,
    local_menger_connectivity,
    max_simultaneously_flippable,
    min_degree,
    partial_triangulation_keys,
    refinement_cycle,
    subdivision_covers,
    subdivision_keys,
    vertex_connectivity,
)
from ..generators import (
    concurrency_determinant,
    convex_gon,
    mother_example,
    mother_triangulations,
    order_type,
    random_points,
    random_superset,
    stacked_points,
    stacked_triangulation,
    twisted_conditions,
    twisted_double_gon,
    twisted_subdivision,
)
from ..geometry import PointSet, assert_general_position
from ..regularity import (
    all_regular_predicates,
    compliant_dim,
    delaunay_triangulation,
    find_non_regular_triangulation,
    is_regular_subdivision,
    is_regular_triangulation,
    perfect_chain_to_trivial,
    perfect_coarsener_label_constancy,
    regularity_preservation_check,
)
from ..subdivisions import (
    COARSENER,
    Subdivision,
    build_full_poset,
    build_poset,
    coarsening_moves,
    full_coarsening_audit,
    incident_edges,
    locking_orientation,
    maximal_elements,
    partial_flip_pair,
    perfect_coarsenings,
    prime_coarseners,
    unoriented_edges_audit,
)
from ..triangulations import FULL, PARTIAL, Edge, seed_full_triangulation
from ..utils import Settings

TRIANGLE_WITH_CENTER = ((0, 0), (30, 0), (0, 30), (10, 10))
SUBSET_SAMPLE = 200
PAIR_SAMPLE = 50
WALK_LENGTH = 100
DEFAULT_N_MAX = 7

REFERENCES = {
    "flippable-edges": "thm2: flippable edges of full triangulations",
    "flippable-edges-oracle": "thm2: flip-BFS against maximal non-crossing sets",
    "bistellar-degree": "thm4: flips of partial triangulations",
    "bistellar-degree-oracle": "thm4: flip-BFS against per-subset enumeration",
    "flip-symmetry": "flip algebra: inverse flips and edge differences",
    "flip-walk": "flip algebra: validity along a random flip walk",
    "triangle-free": "flip algebra: triangle-free flip graphs",
    "bistellar-connectivity": "thm5: connectivity of the bistellar flip graph",
    "local-menger": "local Menger: disjoint paths between distance-2 pairs",
    "edge-connectivity": "thm3ii: connectivity of the edge flip graph",
    "links-full": "links of full triangulations",
    "links-partial": "links of partial triangulations",
    "coarsening-perfect": "coarsening lemma for partial subdivisions",
    "coarsening-full": "coarsening lemma for full subdivisions",
    "coarsening-unoriented": "unoriented edges lemma",
    "coarsening-coarseners": "prime coarseners and slack increments",
    "coarsening-slack-two": "refinements of slack-2 subdivisions",
    "simultaneous": "simultaneously flippable edges",
    "regularity-delaunay": "regularity of Delaunay triangulations",
    "regularity-chains": "perfect chains to the trivial subdivision",
    "regularity-stacked": "regularity of stacked triangulations",
    "regularity-predicates": "equivalent all-regular conditions",
    "regularity-preservation": "regularity preservation under perfect refinement",
    "regularity-labels": "label constancy at perfect coarseners",
    "twisted-conditions": "twisted double-gons: construction",
    "twisted-non-regular": "twisted double-gons: some triangulation non-regular",
    "twisted-subsets": "twisted double-gons: proper subsets only regular",
    "twisted-hereditary": "hereditary non-regularity of supersets",
    "mother-verdicts": "mother of examples: regularity verdicts",
    "mother-order-type": "mother of examples: one order type, two verdicts",
    "poset": "refinement poset: unique top and its height",
    "poset-oracle": "refinement poset against brute-force enumeration",
    "poset-covers": "Hasse edges are exactly the covering pairs",
}


@dataclass
class CheckRecord:
    check: str
    claim: str
    instance: str
    n: int
    expected: str
    observed: str
    passed: bool
    reference: str = ""
    seconds: float = 0.0


@dataclass
class VerificationReport:
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def sorted_records(self) -> list[CheckRecord]:
        return sorted(self.records, key=lambda r: (r.check, r.instance))

    def traceability(self) -> dict[str, str]:
        """Check id -> claim reference, for every check that ran."""
        return {r.check: r.reference for r in self.sorted_records()}

    def to_json(self) -> str:
        payload = {
            "passed": self.passed,
            "checks": len(self.records),
            "failures": len(self.failures),
            "records": [asdict(r) for r in self.sorted_records()],
            "traceability": self.traceability(),
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    def to_frame(self) -> pd.DataFrame:
        columns = [f.name for f in CheckRecord.__dataclass_fields__.values()]
        rows = [asdict(r) for r in self.sorted_records()]
        return pd.DataFrame(rows, columns=columns)

    def to_table(self) -> str:
        df = self.to_frame()
        if df.empty:
            return "no checks ran"
        df["seconds"] = df["seconds"].map(lambda s: f"{s:.2f}")
        trace = pd.DataFrame(
            sorted(self.traceability().items()), columns=["check", "reference"]
        )
        records = df.drop(columns="reference").to_string(index=False)
        return f"{records}\n\n{trace.to_string(index=False)}"


# ---------------------------------------------------------------------------
# Test sets
# ---------------------------------------------------------------------------


def standard_sets(
    n_max: int, seed: int = 0, per_size: int = 3
) -> Iterator[tuple[str, PointSet]]:
    """Named point sets with at most n_max points, smallest first."""
    sets = [("triangle-center", assert_general_position(TRIANGLE_WITH_CENTER))]
    sets += [(f"convex-{n}", convex_gon(n)) for n in range(4, n_max + 1)]
    sets += [(f"twisted-{k}", twisted_double_gon(k)) for k in range(3, n_max // 2 + 1)]
    if n_max >= 6:
        sets.append(("mother-concurrent", mother_example(True)))
        sets.append(("mother-non-concurrent", mother_example(False)))
    sets += [(f"stacked-{d}", stacked_points(d)) for d in range(1, n_max - 2)]
    for n in range(5, n_max + 1):
        for s in range(seed, seed + per_size):
            sets.append((f"random-{n}-s{s}", random_points(n, seed=s)))
    yield from sorted(sets, key=lambda item: (item[1].n, item[0]))


def _sets(settings: Settings, n_max: int) -> Iterator[tuple[str, PointSet]]:
    return standard_sets(n_max, settings.seed, settings.random_sets_per_size)


Check = Callable[[str, PointSet], Optional[CheckRecord]]


def _timed(check: Check, name: str, ps: PointSet) -> Optional[CheckRecord]:
    start = time.perf_counter()
    try:
        record = check(name, ps)
    except FlipLabError as e:
        logger.error(f"{check.__name__} on {name}: {type(e).__name__}: {e}")
        record = CheckRecord(
            check=check.__name__.strip("_").replace("_", "-"),
            claim="check raised",
            instance=name,
            n=ps.n,
            expected="no error",
            observed=f"{type(e).__name__}: {e}",
            passed=False,
        )
    if record is not None:
        record.seconds = time.perf_counter() - start
        if not record.passed:
            logger.error(f"FAILED {record.check} on {name}: {record.observed}")
    return record


def _run(checks, name: str, ps: PointSet) -> Iterator[CheckRecord]:
    for check in checks:
        record = _timed(check, name, ps)
        if record is not None:
            yield record


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def flippable_edges_suite(settings: Settings, n_max: int) -> Iterator[CheckRecord]:
    limit = min(n_max, settings.edge_flip_cap, 9)

    def flippable_edges(name: str, ps: PointSet) -> CheckRecord:
        g = build_edge_flip_graph(ps, cap=settings.edge_flip_cap)
        bound = max(0, math.ceil(ps.n / 2 - 2))
        observed = min(len(t.flippable_edges) for t in g.triangulations)
        return CheckRecord(
            "flippable-edges",
            "every full triangulation has at least ceil(n/2 - 2) flippable edges",
            name,
            ps.n,
            f">= {bound}",
            str(observed),
            observed >= bound,
        )

    def full_oracle(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 7:
            return None
        g = build_edge_flip_graph(ps, cap=settings.edge_flip_cap)
        brute = full_triangulation_keys(ps)
        return CheckRecord(
            "flippable-edges-oracle",
            "flip-BFS finds exactly the maximal non-crossing edge sets",
            name,
            ps.n,
            f"{len(brute)} triangulations",
            f"{len(g)} triangulations",
            set(g.keys) == brute,
        )

    for name, ps in _sets(settings, limit):
        yield from _run((flippable_edges, full_oracle), name, ps)


def bistellar_degree_suite(settings: Settings, n_max: int) -> Iterator[CheckRecord]:
    limit = min(n_max, settings.bistellar_cap)

    def bistellar_degree(name: str, ps: PointSet) -> CheckRecord:
        g = build_bistellar_flip_graph(ps, cap=settings.bistellar_cap)
        hull_only = [t for t in g.triangulations if t.vertices == frozenset(ps.hull)]
        hull_degree = g.degree(hull_only[0].key)
        observed = min_degree(g)
        return CheckRecord(
            "bistellar-degree",
            "every partial triangulation allows at least n - 3 flips",
            name,
            ps.n,
            f">= {ps.n - 3}, hull-only = {ps.n - 3}",
            f"min {observed}, hull-only {hull_degree}",
            observed >= ps.n - 3 and hull_degree == ps.n - 3,
        )

    def partial_oracle(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 7:
            return None
        g = build_bistellar_flip_graph(ps, cap=settings.bistellar_cap)
        brute = partial_triangulation_keys(ps)
        return CheckRecord(
            "bistellar-degree-oracle",
            "flip-BFS finds every partial triangulation of each hull-containing subset",
            name,
            ps.n,
            f"{len(brute)} triangulations",
            f"{len(g)} triangulations",
            set(g.keys) == brute,
        )

    def flip_symmetry(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 7:
            return None
        g = build_bistellar_flip_graph(ps, cap=settings.bistellar_cap)
        broken = 0
        for a, b in g.graph.edges:
            x = g.flip_between(a, b)
            t, u = g.triangulation(a), g.triangulation(b)
            changed = len(t.edges ^ u.edges)
            ok = t.apply_flip(x).key == b
            ok = ok and u.apply_flip(t.inverse_element(x)).key == a
            ok = ok and changed == (2 if isinstance(x, Edge) else 3)
            broken += not ok
        return CheckRecord(
            "flip-symmetry",
            "every flip is undone by its inverse; edge flips swap two edges, "
            "point flips three",
            name,
            ps.n,
            "0 broken",
            f"{broken} broken of {g.graph.number_of_edges()}",
            broken == 0,
        )

    def flip_walk(name: str, ps: PointSet) -> CheckRecord:
        rng = random.Random(settings.seed)
        t = seed_full_triangulation(ps)
        broken = []
        for step in range(WALK_LENGTH):
            x = rng.choice(t.flippable_elements)
            u = t.apply_flip(x)
            if not u.is_valid() or len(u.flippable_elements) < ps.n - 3:
                broken.append(step)
            t = u
        return CheckRecord(
            "flip-walk",
            f"{WALK_LENGTH} random flips keep the triangulation valid",
            name,
            ps.n,
            "every step valid",
            f"{WALK_LENGTH - len(broken)} valid steps",
            not broken,
        )

    def triangle_free(name: str, ps: PointSet) -> CheckRecord:
        g = build_bistellar_flip_graph(ps, cap=settings.bistellar_cap)
        free = is_triangle_free(g)
        if not free:
            logger.warning(f"{name}: bistellar flip graph contains a triangle")
        return CheckRecord(
            "triangle-free",
            "reported only: whether the bistellar flip graph is triangle-free",
            name,
            ps.n,
            "reported",
            "triangle-free" if free else "has triangles",
            True,
        )

    checks = (bistellar_degree, partial_oracle, flip_symmetry, flip_walk, triangle_free)
    for name, ps in _sets(settings, limit):
        yield from _run(checks, name, ps)


def bistellar_connectivity_suite(
    settings: Settings, n_max: int
) -> Iterator[CheckRecord]:
    limit = min(n_max, settings.bistellar_cap)

    def bistellar_connectivity(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 7 and not name.startswith(("convex", "twisted")):
            return None
        g = build_bistellar_flip_graph(ps, cap=settings.bistellar_cap)
        kappa = vertex_connectivity(g.graph)
        delta = min_degree(g)
        if delta != kappa:
            logger.warning(f"{name}: min degree {delta} but connectivity {kappa}")
        expected_exact = delta == ps.n - 3
        ok = kappa >= ps.n - 3 and (kappa == ps.n - 3 or not expected_exact)
        return CheckRecord(
            "bistellar-connectivity",
            "the bistellar flip graph is (n - 3)-vertex connected",
            name,
            ps.n,
            f"= {ps.n - 3}" if expected_exact else f">= {ps.n - 3}",
            f"{kappa} (min degree {delta})",
            ok,
        )

    def local_menger(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 7:
            return None
        g = build_bistellar_flip_graph(ps, cap=settings.bistellar_cap)
        if len(g) < 3:
            return None
        kappa = vertex_connectivity(g.graph)
        exhaustive = ps.n <= 6
        sample = None if exhaustive else PAIR_SAMPLE
        local = local_menger_connectivity(g, sample=sample, seed=settings.seed)
        if local is None:
            return None
        return CheckRecord(
            "local-menger",
            "distance-2 pairs have at least kappa disjoint paths, exactly kappa "
            "over all of them",
            name,
            ps.n,
            f"= {kappa}" if exhaustive else f">= {kappa}",
            f"{local} over {'all' if exhaustive else PAIR_SAMPLE} pairs",
            local == kappa if exhaustive else local >= kappa,
        )

    for name, ps in _sets(settings, limit):
        yield from _run((bistellar_connectivity, local_menger), name, ps)


def edge_connectivity_suite(settings: Settings, n_max: int) -> Iterator[CheckRecord]:
    limit = min(n_max, settings.edge_flip_cap, 8)

    def edge_connectivity(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n < 5:
            return None
        g = build_edge_flip_graph(ps, cap=settings.edge_flip_cap)
        bound = max(math.ceil(ps.n / 2 - 2), ps.h - 3)
        kappa = vertex_connectivity(g.graph) if len(g) > 1 else 0
        delta = min_degree(g)
        if delta != kappa:
            logger.info(f"{name}: edge flip min degree {delta}, connectivity {kappa}")
        if ps.n <= 6 and len(g) > 1 and kappa != nx.node_connectivity(g.graph):
            return CheckRecord(
                "edge-connectivity",
                "max-flow connectivity agrees with networkx",
                name,
                ps.n,
                str(nx.node_connectivity(g.graph)),
                str(kappa),
                False,
            )
        return CheckRecord(
            "edge-connectivity",
            "the edge flip graph is max(ceil(n/2 - 2), h - 3)-vertex connected",
            name,
            ps.n,
            f">= {bound}",
            f"{kappa} (min degree {delta})",
            kappa >= bound,
        )

    for name, ps in _sets(settings, limit):
        yield from _run((edge_connectivity,), name, ps)


def links_suite(settings: Settings, n_max: int) -> Iterator[CheckRecord]:
    limit = min(n_max, 7)

    def full_links(name: str, ps: PointSet) -> CheckRecord:
        g = build_edge_flip_graph(ps, cap=settings.edge_flip_cap)
        problems = []
        for t in g.triangulations:
            link = link_of(t, FULL)
            if complement_has_c4(link):
                problems.append(f"{t.key.hex()}: complement has a 4-cycle")
            if link.low_degree_elements():
                problems.append(f"{t.key.hex()}: degree below {link.degree_bound}")
            for x, y in link.graph.edges:
                lift_link_edge(g, link, x, y)
        return CheckRecord(
            "links-full",
            "full links: C4-free complement, degree bound, every edge lifts",
            name,
            ps.n,
            "no problems",
            "; ".join(problems[:3]) or "no problems",
            not problems,
        )

    def partial_links(name: str, ps: PointSet) -> CheckRecord:
        g = build_bistellar_flip_graph(ps, cap=settings.bistellar_cap)
        problems = []
        for t in g.triangulations:
            link = link_of(t, PARTIAL)
            if complement_has_c4(link):
                problems.append(f"{t.key.hex()}: complement has a 4-cycle")
            if link.graph.number_of_nodes() and min_degree(link.graph) < ps.n - 4:
                problems.append(f"{t.key.hex()}: degree below {ps.n - 4}")
            for x, y in link.graph.edges:
                lift_link_edge(g, link, x, y)
        return CheckRecord(
            "links-partial",
            "partial links: C4-free complement, min degree n - 4, every edge lifts",
            name,
            ps.n,
            "no problems",
            "; ".join(problems[:3]) or "no problems",
            not problems,
        )

    for name, ps in _sets(settings, limit):
        yield from _run((full_links, partial_links), name, ps)


def coarsening_suite(settings: Settings, n_max: int) -> Iterator[CheckRecord]:
    limit = min(n_max, settings.poset_cap, 7)

    def perfect_coarsening_count(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 6 and not name.startswith("convex"):
            return None
        poset = build_poset(ps, cap=settings.poset_cap)
        worst = None
        for s in poset.subdivisions:
            count = len(perfect_coarsenings(s, check=False))
            gap = count - (ps.n - 3 - s.slack)
            if worst is None or gap < worst[0]:
                worst = (gap, count, s.slack)
        gap, count, slack = worst
        return CheckRecord(
            "coarsening-perfect",
            "every subdivision has at least n - 3 - slack perfect coarsenings",
            name,
            ps.n,
            "gap >= 0",
            f"gap {gap} ({count} at slack {slack})",
            gap >= 0,
        )

    def full_maximal(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 6 and not name.startswith("convex"):
            return None
        poset = build_full_poset(ps, cap=settings.poset_cap)
        tops = maximal_elements(poset)
        failures = [s for s in tops if not full_coarsening_audit(s)]
        return CheckRecord(
            "coarsening-full",
            "maximal full subdivisions have slack >= max(n/2 - 2, h - 3)",
            name,
            ps.n,
            f"{len(tops)} pass",
            f"{len(tops) - len(failures)} pass",
            not failures,
        )

    def unoriented_audit(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 6:
            return None
        poset = build_poset(ps, cap=settings.poset_cap)
        audited = 0
        for s in poset.subdivisions:
            if s.bystanders:
                continue
            orientation = locking_orientation(s)
            unoriented_edges_audit(s, orientation, require_well_oriented=True)
            audited += 1
        return CheckRecord(
            "coarsening-unoriented",
            "unoriented edge counts meet the indegree and slack bounds",
            name,
            ps.n,
            "all audits hold",
            f"{audited} audited",
            True,
        )

    def coarseners(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 6:
            return None
        poset = build_poset(ps, cap=settings.poset_cap)
        problems = []
        for s in poset.subdivisions:
            found = prime_coarseners(s)
            for a, b in combinations(found, 2):
                if a.points & b.points:
                    problems.append(f"overlapping coarseners at slack {s.slack}")
            graph = nx.Graph((e.u, e.v) for e in s.edges)
            for c in found:
                if not nx.is_connected(graph.subgraph(c.points)):
                    problems.append(f"disconnected coarsener {sorted(c.points)}")
                if c.increment > 1:
                    problems.append(f"increment {c.increment} above 1")
            for move in coarsening_moves(s):
                if move.result.slack != s.slack + move.increment:
                    problems.append(f"{move.move.label()}: slack off")
                if move.move.kind == COARSENER:
                    rule = len(incident_edges(s, move.move.target))
                    rule -= 2 * len(move.move.target)
                else:
                    rule = 1
                if move.increment != rule:
                    problems.append(f"{move.move.label()}: increment {move.increment}")
                if not poset.hasse.has_edge(s.key, move.result.key):
                    problems.append(f"{move.move.label()}: not a Hasse edge")
        return CheckRecord(
            "coarsening-coarseners",
            "prime coarseners are disjoint and connected; increments follow "
            "|E_U| - 2|U| and every move is a Hasse edge",
            name,
            ps.n,
            "no problems",
            "; ".join(problems[:3]) or "no problems",
            not problems,
        )

    def slack_two(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 6:
            return None
        g = build_bistellar_flip_graph(ps, cap=settings.bistellar_cap)
        seen: set[bytes] = set()
        lengths: set[int] = set()
        problems = []
        for t in g.triangulations:
            for x, y in combinations(t.flippable_elements, 2):
                s = partial_flip_pair(t, x, y)
                if s is None or s.key in seen:
                    continue
                seen.add(s.key)
                cycle = refinement_cycle(s, t)
                lengths.add(len(cycle))
                if s.slack != 2 or len(cycle) not in (4, 5):
                    problems.append(f"{len(cycle)}-cycle at slack {s.slack}")
        return CheckRecord(
            "coarsening-slack-two",
            "the slack-2 coarsening of two compatible flips is refined by a 4- or "
            "5-cycle of triangulations",
            name,
            ps.n,
            "cycles of length 4 or 5",
            "; ".join(problems[:3]) or f"{len(seen)} cycles, lengths {sorted(lengths)}",
            not problems,
        )

    checks = (
        perfect_coarsening_count,
        full_maximal,
        unoriented_audit,
        coarseners,
        slack_two,
    )
    for name, ps in _sets(settings, limit):
        yield from _run(checks, name, ps)


def simultaneous_suite(settings: Settings, n_max: int) -> Iterator[CheckRecord]:
    limit = min(n_max, settings.simflip_cap, settings.edge_flip_cap, 9)

    def simultaneous(name: str, ps: PointSet) -> CheckRecord:
        g = build_edge_flip_graph(ps, cap=settings.edge_flip_cap)
        beta_bound = max(0, math.ceil((ps.n - 4) / 5))
        sum_bound = Fraction(4 * (ps.n - 4), 5)
        worst_beta, worst_sum = None, None
        for t in g.triangulations:
            beta = len(max_simultaneously_flippable(t, cap=settings.simflip_cap))
            total = len(t.flippable_edges) + beta
            worst_beta = beta if worst_beta is None else min(worst_beta, beta)
            worst_sum = total if worst_sum is None else min(worst_sum, total)
        return CheckRecord(
            "simultaneous",
            "beta >= ceil((n - 4)/5) and alpha + beta >= 4(n - 4)/5",
            name,
            ps.n,
            f"beta >= {beta_bound}, alpha+beta >= {sum_bound}",
            f"beta {worst_beta}, alpha+beta {worst_sum}",
            worst_beta >= beta_bound and worst_sum >= sum_bound,
        )

    for name, ps in _sets(settings, limit):
        yield from _run((simultaneous,), name, ps)


def regularity_suite(settings: Settings, n_max: int) -> Iterator[CheckRecord]:
    limit = min(n_max, settings.poset_cap, settings.chain_cap, 7)

    def delaunay(name: str, ps: PointSet) -> CheckRecord:
        t = delaunay_triangulation(ps)
        verdict = is_regular_triangulation(t)
        return CheckRecord(
            "regularity-delaunay",
            "the Delaunay triangulation is regular",
            name,
            ps.n,
            "regular",
            "regular" if verdict else "non-regular",
            bool(verdict),
        )

    def chains(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 6:
            return None
        poset = build_poset(ps, cap=settings.poset_cap)
        with_chain, regular, certified = 0, 0, 0
        for s in poset.subdivisions:
            if perfect_chain_to_trivial(s, cap=settings.chain_cap):
                with_chain += 1
                regular += bool(is_regular_subdivision(s))
            elif not is_regular_subdivision(s, certify=True):
                certified += 1
        return CheckRecord(
            "regularity-chains",
            "every subdivision with a perfect chain to the trivial one is regular",
            name,
            ps.n,
            f"{with_chain} regular",
            f"{regular} regular, {certified} certified non-regular",
            regular == with_chain,
        )

    def stacked(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if not name.startswith("stacked"):
            return None
        t = stacked_triangulation(ps)
        verdict = is_regular_triangulation(t)
        return CheckRecord(
            "regularity-stacked",
            "stacked triangulations are regular",
            name,
            ps.n,
            "regular",
            "regular" if verdict else "non-regular",
            bool(verdict),
        )

    def predicates(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if not name.startswith(("convex", "twisted")):
            return None
        values = all_regular_predicates(ps, build_poset(ps, cap=settings.poset_cap))
        expected = name.startswith("convex")
        return CheckRecord(
            "regularity-predicates",
            "the all-regular predicates agree",
            name,
            ps.n,
            f"all {expected}",
            ", ".join(f"{k}={v}" for k, v in values.items()),
            all(v == expected for v in values.values()),
        )

    def preservation(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 6:
            return None
        poset = build_poset(ps, cap=settings.poset_cap)
        premises, broken = 0, 0
        for a, b, data in poset.hasse.edges(data=True):
            if not data["perfect"]:
                continue
            verdict = regularity_preservation_check(
                poset.subdivision(a), poset.subdivision(b)
            )
            premises += verdict is not None
            broken += verdict is False
        return CheckRecord(
            "regularity-preservation",
            "a perfect refinement of a regular subdivision with full compliant "
            "space keeps both properties",
            name,
            ps.n,
            "0 broken",
            f"{broken} broken of {premises} applicable",
            broken == 0,
        )

    def labels(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 6:
            return None
        poset = build_poset(ps, cap=settings.poset_cap)
        checked, broken = 0, 0
        for s in poset.subdivisions:
            _, basis = compliant_dim(s, check=False)
            for w in basis:
                checked += 1
                broken += not perfect_coarsener_label_constancy(s, w)
        return CheckRecord(
            "regularity-labels",
            "compliant heights label all edges at a perfect coarsener alike",
            name,
            ps.n,
            "0 broken",
            f"{broken} broken of {checked} compliant heights",
            broken == 0,
        )

    checks = (delaunay, chains, stacked, predicates, preservation, labels)
    for name, ps in _sets(settings, limit):
        yield from _run(checks, name, ps)


def _proper_subsets(ps: PointSet, seed: int) -> list[tuple[int, ...]]:
    everything = [
        c for size in range(ps.n - 1, 3, -1) for c in combinations(range(ps.n), size)
    ]
    if len(everything) <= SUBSET_SAMPLE:
        return everything
    rng = random.Random(seed)
    return sorted(rng.sample(everything, SUBSET_SAMPLE), key=len, reverse=True)


def twisted_suite(settings: Settings, n_max: int) -> Iterator[CheckRecord]:
    cap = settings.edge_flip_cap

    for k in range(3, min(n_max, cap) // 2 + 1):
        name = f"twisted-{k}"

        def conditions(name: str, ps: PointSet) -> CheckRecord:
            values = twisted_conditions(ps, ps.n // 2)
            s = twisted_subdivision(ps)
            return CheckRecord(
                "twisted-conditions",
                "conditions I to V hold and the twisted subdivision has slack n - 3",
                name,
                ps.n,
                f"all true, slack {ps.n - 3}",
                ", ".join(f"{c}={v}" for c, v in values.items()) + f", slack {s.slack}",
                all(values.values()) and s.slack == ps.n - 3,
            )

        def non_regular(name: str, ps: PointSet) -> CheckRecord:
            t = find_non_regular_triangulation(ps, cap=cap)
            return CheckRecord(
                "twisted-non-regular",
                "some full triangulation is non-regular",
                name,
                ps.n,
                ">= 1 non-regular",
                t.key.hex() if t is not None else "all regular",
                t is not None,
            )

        def subsets_regular(name: str, ps: PointSet) -> CheckRecord:
            # partial triangulations of a subset are full ones of a smaller subset
            chosen = _proper_subsets(ps, settings.seed)
            offenders = []
            for indices in chosen:
                sub, _ = ps.subset(indices)
                if find_non_regular_triangulation(sub, cap=cap) is not None:
                    offenders.append(indices)
            return CheckRecord(
                "twisted-subsets",
                "every triangulation of every proper subset is regular",
                name,
                ps.n,
                f"{len(chosen)} subsets regular",
                f"{len(chosen) - len(offenders)} subsets regular",
                not offenders,
            )

        def hereditary(name: str, ps: PointSet) -> Optional[CheckRecord]:
            if ps.n + 1 > min(n_max + 1, cap):
                return None
            bigger = random_superset(ps, extra=1, seed=settings.seed)
            t = find_non_regular_triangulation(bigger, cap=cap)
            return CheckRecord(
                "twisted-hereditary",
                "a superset of a set with a non-regular triangulation has one too",
                name,
                bigger.n,
                ">= 1 non-regular",
                t.key.hex() if t is not None else "all regular",
                t is not None,
            )

        ps = twisted_double_gon(k)
        checks = (conditions, non_regular, subsets_regular, hereditary)
        yield from _run(checks, name, ps)


def mother_suite(settings: Settings, n_max: int) -> Iterator[CheckRecord]:
    if n_max < 6:
        return

    def verdicts(name: str, ps: PointSet) -> CheckRecord:
        s, t1, t2 = mother_triangulations(ps)
        observed = (
            bool(is_regular_subdivision(s)),
            bool(is_regular_triangulation(t1)),
            bool(is_regular_triangulation(t2)),
        )
        if name == "mother-concurrent":
            ok = observed == (True, False, False)
            expected = "S regular, T' and T'' non-regular"
        else:
            ok = not observed[0] and observed[1] != observed[2]
            expected = "S non-regular, exactly one of T', T'' regular"
        return CheckRecord(
            "mother-verdicts",
            "exactly one of S, T', T'' is regular",
            name,
            ps.n,
            expected,
            "S={}, T'={}, T''={}".format(*observed),
            ok and sum(observed) == 1,
        )

    concurrent, other = mother_example(True), mother_example(False)
    yield _timed(verdicts, "mother-concurrent", concurrent)
    yield _timed(verdicts, "mother-non-concurrent", other)
    same_type = order_type(concurrent) == order_type(other)
    d0, d1 = concurrency_determinant(concurrent), concurrency_determinant(other)
    yield CheckRecord(
        "mother-order-type",
        "both variants share an order type and differ in concurrency",
        "mother",
        6,
        "same order type, determinants 0 and non-zero",
        f"same={same_type}, determinants {d0} and {d1}",
        same_type and d0 == 0 and d1 != 0,
    )


def poset_suite(settings: Settings, n_max: int) -> Iterator[CheckRecord]:
    limit = min(n_max, settings.poset_cap, 6)

    def poset(name: str, ps: PointSet) -> CheckRecord:
        p = build_poset(ps, cap=settings.poset_cap)
        tops = maximal_elements(p)
        trivial = Subdivision.trivial(ps)
        bottoms = [s for s in p.subdivisions if s.slack == 0]
        height = p.height(trivial.key)
        ok = [s.key for s in tops] == [trivial.key]
        ok = ok and all(s.is_triangulation for s in bottoms)
        ok = ok and height >= ps.n - 3
        ok = ok and (height == ps.n - 3) == p.is_perfect_everywhere
        return CheckRecord(
            "poset",
            "the trivial subdivision is the unique top, of height at least n - 3, "
            "with equality iff every Hasse edge is perfect",
            name,
            ps.n,
            f"one top, height >= {ps.n - 3}",
            f"{len(tops)} tops, height {height}, {len(p)} subdivisions",
            ok,
        )

    def poset_oracle(name: str, ps: PointSet) -> Optional[CheckRecord]:
        if ps.n > 5:
            return None
        p = build_poset(ps, cap=settings.poset_cap)
        brute = subdivision_keys(ps)
        return CheckRecord(
            "poset-oracle",
            "the poset holds exactly the brute-force subdivisions",
            name,
            ps.n,
            f"{len(brute)} subdivisions",
            f"{len(p)} subdivisions",
            set(p.hasse.nodes) == brute,
        )

    def poset_covers(name: str, ps: PointSet) -> CheckRecord:
        p = build_poset(ps, cap=settings.poset_cap)
        covers = subdivision_covers(p.subdivisions)
        return CheckRecord(
            "poset-covers",
            "Hasse edges are exactly the covering pairs of the refinement order",
            name,
            ps.n,
            f"{len(covers)} covering pairs",
            f"{p.hasse.number_of_edges()} Hasse edges",
            set(p.hasse.edges) == covers,
        )

    for name, ps in _sets(settings, limit):
        yield from _run((poset, poset_oracle, poset_covers), name, ps)


SUITES = {
    "flippable-edges": flippable_edges_suite,
    "bistellar-degree": bistellar_degree_suite,
    "bistellar-connectivity": bistellar_connectivity_suite,
    "edge-connectivity": edge_connectivity_suite,
    "links": links_suite,
    "coarsening": coarsening_suite,
    "simultaneous": simultaneous_suite,
    "regularity": regularity_suite,
    "twisted": twisted_suite,
    "mother": mother_suite,
    "poset": poset_suite,
}

# the short names of the four flip-count and connectivity suites
SUITE_ALIASES = {
    "thm2": "flippable-edges",
    "thm4": "bistellar-degree",
    "thm5": "bistellar-connectivity",
    "thm3ii": "edge-connectivity",
}

SUITE_CHOICES = sorted(SUITES) + sorted(SUITE_ALIASES) + ["all"]


def resolve_suites(names: list[str]) -> list[str]:
    """Canonical suite names, aliases resolved, each once, in the given order."""
    if "all" in names:
        return list(SUITES)
    unknown = [n for n in names if n not in SUITES and n not in SUITE_ALIASES]
    if unknown:
        logger.error(f"unknown suites {unknown}")
        raise ValueError(f"unknown suites {unknown}, choose from {SUITE_CHOICES}")
    resolved = [SUITE_ALIASES.get(n, n) for n in names]
    return list(dict.fromkeys(resolved))


def run_suites(
    names: list[str], settings: Settings, n_max: int = DEFAULT_N_MAX
) -> VerificationReport:
    report = VerificationReport()
    for suite in resolve_suites(names):
        logger.info(f"running suite {suite} up to n={n_max}")
        for record in SUITES[suite](settings, n_max):
            record.reference = record.reference or REFERENCES.get(record.check, suite)
            report.records.append(record)
    status = "passed" if report.passed else f"{len(report.failures)} failures"
    logger.info(f"{len(report.records)} checks, {status}")
    return report


__all__ = [
    "CheckRecord",
    "REFERENCES",
    "SUITES",
    "SUITE_ALIASES",
    "SUITE_CHOICES",
    "VerificationReport",
    "resolve_suites",
    "run_suites",
    "standard_sets",
]
