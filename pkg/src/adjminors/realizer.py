"""Constructs a witness graph whose toric ideal matches a realizable minor set.

Each minor becomes a 4-cycle of the witness graph, with the two diagonal
variable pairs sitting on opposite edge pairs.  A tree component grows by
peeling companion-graph leaves: every peeled minor contributes two fresh
vertices and a three-edge path closing a square over the edge of its shared
variable, which keeps the graph connected and bipartite.  A unicyclic
component is realized with one free minor removed (a path, hence a tree),
then closed with two extra edges between the color classes; the closure
creates odd cycles, so the graph stops being bipartite.

All choices (peel order, free-minor pick, endpoint labels) are canonical so
repeated runs produce identical output; every result is certified
independently by the Groebner engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .gamma import bands_overlap, build_gamma, classify, components, free_minors
from .grid import (
    AdjacentMinor,
    GridVariable,
    InputError,
    MinorSet,
    parse_variable_name,
    used_variables,
)
from .graphs import Edge, SimpleGraph, graph_dot, normalize_edge


class NotRealizable(Exception):
    """The minor set fails one of the realizability conditions."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class ComponentProvenance:
    minors: tuple[AdjacentMinor, ...]
    kind: str  # "tree" | "unicyclic"


@dataclass(frozen=True)
class Realization:
    graph: SimpleGraph
    variable_edges: tuple[tuple[GridVariable, Edge], ...]
    coloring: tuple[tuple[int, int], ...] | None  # None when not bipartite
    provenance: tuple[ComponentProvenance, ...]

    @property
    def edge_of(self) -> dict[GridVariable, Edge]:
        return dict(self.variable_edges)

    @property
    def bipartite(self) -> bool:
        return self.coloring is not None


class _Builder:
    """Mutable graph-under-construction for one connected component."""

    __slots__ = ("vertex_count", "edges", "var_edge")

    def __init__(self):
        self.vertex_count = 0
        self.edges: list[Edge] = []
        self.var_edge: dict[GridVariable, Edge] = {}

    def add_edge(self, u: int, v: int) -> Edge:
        e = normalize_edge(u, v)
        assert e not in self.edges, f"duplicate edge {e}"
        self.edges.append(e)
        return e

    def base_square(self, minor: AdjacentMinor) -> None:
        assert self.vertex_count == 0
        self.vertex_count = 4
        d1, d2 = minor.main_diagonal()
        a1, a2 = minor.anti_diagonal()
        self.var_edge[d1] = self.add_edge(1, 2)
        self.var_edge[a1] = self.add_edge(2, 3)
        self.var_edge[d2] = self.add_edge(3, 4)
        self.var_edge[a2] = self.add_edge(1, 4)

    def attach_square(self, minor: AdjacentMinor, shared: GridVariable) -> None:
        """Close a new square over the existing edge of `shared`.

        The shared variable's same-diagonal partner goes on the opposite new
        edge; the other diagonal takes the two connecting edges.
        """
        i, j = self.var_edge[shared]
        p1, p2 = self.vertex_count + 1, self.vertex_count + 2
        self.vertex_count += 2
        main = minor.main_diagonal()
        anti = minor.anti_diagonal()
        if shared in main:
            partner = main[0] if shared == main[1] else main[1]
            opposite = sorted(anti)
        else:
            assert shared in anti, f"{shared} is not a variable of {minor}"
            partner = anti[0] if shared == anti[1] else anti[1]
            opposite = sorted(main)
        self.var_edge[opposite[0]] = self.add_edge(i, p1)
        self.var_edge[partner] = self.add_edge(p1, p2)
        self.var_edge[opposite[1]] = self.add_edge(j, p2)

    def graph(self) -> SimpleGraph:
        return SimpleGraph.of(self.vertex_count, self.edges)


def _shared_variable(u: AdjacentMinor, v: AdjacentMinor) -> GridVariable:
    common = set(u.variables()) & set(v.variables())
    assert len(common) == 1, f"{u} and {v} share {len(common)} variables, expected 1"
    return common.pop()


def _peel(minors: Sequence[AdjacentMinor], down_to_cycle: bool) -> tuple[list[tuple[AdjacentMinor, AdjacentMinor]], list[AdjacentMinor]]:
    """Peel canonical leaves (smallest first); returns (peel log, remaining core)."""
    work = set(minors)
    adj = {m: {n for n in minors if n != m and bands_overlap(m, n)} for m in minors}
    log: list[tuple[AdjacentMinor, AdjacentMinor]] = []
    while True:
        if not down_to_cycle and len(work) == 1:
            break
        leaves = sorted(m for m in work if len(adj[m]) == 1)
        if not leaves:
            break
        v = leaves[0]
        neighbor = next(iter(adj[v]))
        log.append((v, neighbor))
        work.remove(v)
        adj[neighbor].discard(v)
        del adj[v]
    return log, sorted(work)


def _realize_tree(minors: Sequence[AdjacentMinor], builder: _Builder) -> None:
    log, core = _peel(minors, down_to_cycle=False)
    assert len(core) == 1, "tree component did not peel down to a single minor"
    builder.base_square(core[0])
    for v, neighbor in reversed(log):
        builder.attach_square(v, _shared_variable(v, neighbor))


def _close_cycle(builder: _Builder, minor: AdjacentMinor, free_diag: str) -> None:
    """Add the two closure edges for the free minor of a pure cycle.

    The free diagonal's variables become the new edges {1,2} and {3,4}; the
    shared diagonal's existing edges supply the endpoints, labeled so that
    vertices 1 and 2 sit in the same color class of the bipartite tree graph.
    """
    if free_diag == "main":
        free_pair = sorted(minor.main_diagonal())
        u1 = GridVariable(minor.a + 1, minor.b)
        u2 = GridVariable(minor.a, minor.b + 1)
    else:
        free_pair = sorted(minor.anti_diagonal())
        u1 = GridVariable(minor.a, minor.b)
        u2 = GridVariable(minor.a + 1, minor.b + 1)
    e1 = builder.var_edge[u1]
    e2 = builder.var_edge[u2]
    coloring = builder.graph().two_coloring()
    assert coloring is not None, "tree realization is not bipartite"
    v1, v3 = e1
    v2, v4 = e2 if coloring[e2[0]] == coloring[v1] else (e2[1], e2[0])
    assert len({v1, v2, v3, v4}) == 4, "closure endpoints collide"
    builder.var_edge[free_pair[0]] = builder.add_edge(v1, v2)
    builder.var_edge[free_pair[1]] = builder.add_edge(v3, v4)


def _realize_component(minors: Sequence[AdjacentMinor], dims) -> tuple[_Builder, str]:
    builder = _Builder()
    log, core = _peel(minors, down_to_cycle=True)
    if len(core) == 1:
        builder.base_square(core[0])
        kind = "tree"
    else:
        # the core is the unique cycle; drop a free minor, realize the path,
        # then close the cycle with two extra edges
        frees = free_minors(MinorSet(dims, tuple(core)))
        if not frees:
            raise AssertionError("cycle component without a free minor")
        chosen, which = min(frees, key=lambda t: t[0])
        free_diag = "main" if which in ("main", "both") else "anti"
        path = [m for m in core if m != chosen]
        _realize_tree(path, builder)
        _close_cycle(builder, chosen, free_diag)
        kind = "unicyclic"
    for v, neighbor in reversed(log):
        builder.attach_square(v, _shared_variable(v, neighbor))
    p, q = len(minors), sum(
        1
        for i in range(len(minors))
        for j in range(i + 1, len(minors))
        if bands_overlap(minors[i], minors[j])
    )
    assert builder.vertex_count == 4 * p - 2 * q, "vertex count deviates from 4p - 2q"
    assert len(builder.edges) == 4 * p - q, "edge count deviates from 4p - q"
    return builder, kind


def _component_realization(minors: Sequence[AdjacentMinor], dims) -> Realization:
    builder, kind = _realize_component(minors, dims)
    graph = builder.graph()
    coloring = graph.two_coloring() if kind == "tree" else None
    if kind == "tree":
        assert coloring is not None, "tree realization must be bipartite"
    else:
        assert graph.two_coloring() is None, "unicyclic realization must not be bipartite"
    return Realization(
        graph=graph,
        variable_edges=tuple(sorted(builder.var_edge.items())),
        coloring=tuple(sorted(coloring.items())) if coloring is not None else None,
        provenance=(ComponentProvenance(tuple(sorted(minors)), kind),),
    )


def realize_tree_component(s: MinorSet) -> Realization:
    """Realize a minor set whose companion graph is a single tree."""
    g = build_gamma(s)
    comps = components(g)
    if len(comps) != 1 or g.edge_count != g.vertex_count - 1:
        raise NotRealizable("component is not a single companion-graph tree")
    return _component_realization(comps[0], s.dims)


def realize_unicyclic_component(s: MinorSet) -> Realization:
    """Realize a minor set whose companion graph is connected with one cycle."""
    g = build_gamma(s)
    comps = components(g)
    if len(comps) != 1 or g.edge_count != g.vertex_count:
        raise NotRealizable("component is not a single unicyclic companion graph")
    return _component_realization(comps[0], s.dims)


def disjoint_union(parts: Sequence[Realization]) -> Realization:
    """Vertex-relabelled disjoint union; variable domains must be disjoint."""
    offset = 0
    edges: list[Edge] = []
    var_edges: list[tuple[GridVariable, Edge]] = []
    coloring: list[tuple[int, int]] | None = []
    provenance: list[ComponentProvenance] = []
    for r in parts:
        for u, v in r.graph.edges:
            edges.append((u + offset, v + offset))
        for var, (u, v) in r.variable_edges:
            var_edges.append((var, (u + offset, v + offset)))
        if coloring is not None and r.coloring is not None:
            coloring.extend((v + offset, c) for v, c in r.coloring)
        else:
            coloring = None
        provenance.extend(r.provenance)
        offset += r.graph.vertex_count
    if len({var for var, _ in var_edges}) != len(var_edges):
        raise ValueError("component realizations share grid variables")
    return Realization(
        graph=SimpleGraph.of(offset, edges),
        variable_edges=tuple(sorted(var_edges)),
        coloring=tuple(coloring) if coloring is not None else None,
        provenance=tuple(provenance),
    )


def realize(s: MinorSet) -> Realization:
    """Witness graph and variable->edge map for a realizable minor set."""
    cls = classify(s)
    if not cls.realizable:
        raise NotRealizable(cls.violated_condition() or "not realizable")
    if not s.minors:
        return Realization(SimpleGraph.of(0, ()), (), (), ())
    comps = components(build_gamma(s))
    return disjoint_union([_component_realization(comp, s.dims) for comp in comps])


def realization_json(r: Realization) -> str:
    doc = {
        "vertices": r.graph.vertex_count,
        "edges": [[u, v] for u, v in r.graph.edges],
        "map": {var.name: [u, v] for var, (u, v) in r.variable_edges},
        "bipartite": r.bipartite,
    }
    return json.dumps(doc)


def realization_from_json(text: str) -> Realization:
    """Rebuild a realization from its JSON export (provenance is not kept)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    try:
        graph = SimpleGraph.of(doc["vertices"], [tuple(e) for e in doc["edges"]])
        var_edges = tuple(
            sorted(
                (parse_variable_name(name), normalize_edge(*pair))
                for name, pair in doc["map"].items()
            )
        )
        bipartite = bool(doc["bipartite"])
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"malformed realization document: {e}") from None
    coloring = graph.two_coloring()
    if bipartite != (coloring is not None):
        raise InputError("bipartite flag does not match the graph")
    return Realization(
        graph=graph,
        variable_edges=var_edges,
        coloring=tuple(sorted(coloring.items())) if coloring is not None else None,
        provenance=(),
    )


def realization_dot(r: Realization) -> str:
    labels = {edge: var.name for var, edge in r.variable_edges}
    return graph_dot(r.graph, labels, name="realization")
