"""
Deterministic exports of flip graphs, links and posets to DOT, GraphML and JSON.

Every structure is first converted to a plain networkx graph whose node ids and
attribute values are strings, integers or booleans (triangulations become hex keys,
flip elements become labels like "e0-3" or "p4"). Nodes and edges are emitted in sorted
order so the same structure always exports to the same text.
"""

from __future__ import annotations

import json
from typing import Union

import networkx as nx
from loguru import logger

from ..errors import InvalidFormatError
from ..flipgraphs import FlipGraph, Link
from ..subdivisions import Poset
from ..triangulations import element_label

FORMATS = ("dot", "graphml", "json")

Exportable = Union[FlipGraph, Link, Poset, nx.Graph]


def _plain(value):
    if isinstance(value, bytes):
        return value.hex()
    if isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (tuple, list, frozenset, set)):
        return ",".join(str(_plain(v)) for v in value)
    return str(value)


def _sorted_copy(graph: nx.Graph) -> nx.Graph:
    out = graph.__class__()
    out.graph.update(sorted(graph.graph.items()))
    for node in sorted(graph.nodes):
        out.add_node(node, **dict(sorted(graph.nodes[node].items())))
    edges = []
    for a, b, data in graph.edges(data=True):
        if not graph.is_directed() and b < a:
            a, b = b, a
        edges.append((a, b, data))
    for a, b, data in sorted(edges, key=lambda e: (e[0], e[1])):
        out.add_edge(a, b, **dict(sorted(data.items())))
    return out


def flip_graph_export(g: FlipGraph) -> nx.Graph:
    out = nx.Graph(kind=g.kind, points=g.base.n)
    for key in g.keys:
        t = g.triangulation(key)
        out.add_node(
            key.hex(),
            kind=t.kind,
            vertices=len(t.vertices),
            edges=len(t.edges),
            degree=g.degree(key),
        )
    for a, b, data in g.graph.edges(data=True):
        out.add_edge(
            a.hex(), b.hex(), label=data["label"], flipped_from=data["source"].hex()
        )
    return _sorted_copy(out)


def link_export(link: Link) -> nx.Graph:
    out = nx.Graph(kind=link.kind, center=link.center.key.hex())
    for x in link.graph.nodes:
        out.add_node(element_label(x), degree=link.graph.degree(x))
    for x, y, data in link.graph.edges(data=True):
        out.add_edge(
            element_label(x),
            element_label(y),
            weight=data["weight"],
            relation=data["relation"],
            cycle=_plain(data["cycle"]),
        )
    return _sorted_copy(out)


def poset_export(poset: Poset) -> nx.DiGraph:
    out = nx.DiGraph(points=poset.base.n, height_max=poset.height_max)
    for key, data in poset.hasse.nodes(data=True):
        s = data["subdivision"]
        out.add_node(
            key.hex(),
            slack=data["slack"],
            height=data["height"],
            vertices=len(s.vertices),
            edges=len(s.edges),
        )
    for a, b, data in poset.hasse.edges(data=True):
        out.add_edge(a.hex(), b.hex(), move=data["move"], perfect=data["perfect"])
    return _sorted_copy(out)


def to_plain_graph(obj: Exportable) -> nx.Graph:
    if isinstance(obj, FlipGraph):
        return flip_graph_export(obj)
    if isinstance(obj, Link):
        return link_export(obj)
    if isinstance(obj, Poset):
        return poset_export(obj)
    out = obj.__class__()
    out.graph.update({k: _plain(v) for k, v in obj.graph.items()})
    for node, data in obj.nodes(data=True):
        out.add_node(_plain(node), **{k: _plain(v) for k, v in data.items()})
    for a, b, data in obj.edges(data=True):
        out.add_edge(_plain(a), _plain(b), **{k: _plain(v) for k, v in data.items()})
    return _sorted_copy(out)


# ---------------------------------------------------------------------------
# Writers
# ---------------------------------------------------------------------------


def _dot_attrs(data: dict) -> str:
    if not data:
        return ""
    body = ", ".join(f'{k}="{v}"' for k, v in data.items())
    return f" [{body}]"


def to_dot(graph: nx.Graph) -> str:
    directed = graph.is_directed()
    arrow = "->" if directed else "--"
    lines = [f"{'digraph' if directed else 'graph'} G {{"]
    for k, v in graph.graph.items():
        lines.append(f'  {k}="{v}";')
    for node, data in graph.nodes(data=True):
        lines.append(f'  "{node}"{_dot_attrs(data)};')
    for a, b, data in graph.edges(data=True):
        lines.append(f'  "{a}" {arrow} "{b}"{_dot_attrs(data)};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: nx.Graph) -> str:
    payload = {
        "directed": graph.is_directed(),
        "graph": dict(graph.graph),
        "nodes": [{"id": node, **data} for node, data in graph.nodes(data=True)],
        "edges": [
            {"source": a, "target": b, **data} for a, b, data in graph.edges(data=True)
        ],
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def to_graphml(graph: nx.Graph) -> str:
    return "\n".join(nx.generate_graphml(graph)) + "\n"


def export_graph(obj: Exportable, fmt: str = "dot") -> str:
    if fmt not in FORMATS:
        logger.error(f"unknown export format '{fmt}', expected one of {FORMATS}")
        raise InvalidFormatError(f"unknown export format '{fmt}'")
    graph = to_plain_graph(obj)
    logger.debug(
        f"exporting {graph.number_of_nodes()} nodes, "
        f"{graph.number_of_edges()} edges as {fmt}"
    )
    if fmt == "dot":
        return to_dot(graph)
    if fmt == "graphml":
        return to_graphml(graph)
    return to_json(graph)


__all__ = [
    "FORMATS",
    "export_graph",
    "flip_graph_export",
    "link_export",
    "poset_export",
    "to_dot",
    "to_graphml",
    "to_json",
    "to_plain_graph",
]
