"""
Breadth-first closure of a triangulation under a flip rule.
"""

from collections import deque
from typing import Callable, Iterable, Iterator

from loguru import logger

from .triangulation import FlipElement, Triangulation

FlipRule = Callable[[Triangulation], Iterable[FlipElement]]


def edge_flip_rule(t: Triangulation) -> Iterable[FlipElement]:
    return sorted(t.flippable_edges)


def bistellar_flip_rule(t: Triangulation) -> Iterable[FlipElement]:
    return t.flippable_elements


def flip_closure(seed: Triangulation, rule: FlipRule):
    """Triangulations reachable from seed, and one (key, key, element) per adjacency.

    The element of an adjacency is the flip applied on the side with the smaller key.
    """
    nodes = {seed.key: seed}
    adjacency = {}
    queue = deque([seed])
    while queue:
        t = queue.popleft()
        for x in rule(t):
            nxt = t.apply_flip(x)
            k = nxt.key
            if k not in nodes:
                nodes[k] = nxt
                queue.append(nxt)
            pair = (t.key, k) if t.key < k else (k, t.key)
            if pair not in adjacency:
                adjacency[pair] = x if t.key < k else t.inverse_element(x)
        if len(nodes) % 1000 == 0:
            logger.debug(
                f"flip closure: {len(nodes)} triangulations, queue {len(queue)}"
            )
    logger.debug(f"flip closure done: {len(nodes)} nodes, {len(adjacency)} adjacencies")
    return nodes, adjacency


def iter_closure(seed: Triangulation, rule: FlipRule) -> Iterator[Triangulation]:
    """Triangulations reachable from seed, yielded lazily in breadth-first order."""
    seen = {seed.key}
    queue = deque([seed])
    while queue:
        t = queue.popleft()
        yield t
        for x in rule(t):
            nxt = t.apply_flip(x)
            if nxt.key not in seen:
                seen.add(nxt.key)
                queue.append(nxt)
