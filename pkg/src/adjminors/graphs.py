"""Tiny undirected simple graphs with the algorithms the witness constructions need."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .binomials import BudgetExceeded

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Simple graph on vertices 1..vertex_count (isolated vertices allowed)."""

    vertex_count: int
    edges: tuple[Edge, ...]

    @staticmethod
    def of(vertex_count: int, pairs: Iterable[tuple[int, int]]) -> "SimpleGraph":
        edges = sorted(normalize_edge(u, v) for u, v in pairs)
        for k in range(1, len(edges)):
            if edges[k] == edges[k - 1]:
                raise ValueError(f"duplicate edge {edges[k]}")
        for u, v in edges:
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise ValueError(f"edge ({u},{v}) outside vertex range 1..{vertex_count}")
        return SimpleGraph(vertex_count, tuple(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in set(self.edges) if u != v else False

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices()}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort()
        return adj

    def components(self) -> list[tuple[int, ...]]:
        adj = self.adjacency()
        seen: set[int] = set()
        comps = []
        for v in self.vertices():
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def two_coloring(self) -> dict[int, int] | None:
        """BFS 2-coloring (root of each component gets 0); None if an odd cycle exists."""
        adj = self.adjacency()
        color: dict[int, int] = {}
        for root in self.vertices():
            if root in color:
                continue
            color[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w not in color:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None


def simple_cycles(
    g: SimpleGraph,
    max_length: int | None = None,
    max_cycles: int = 100_000,
) -> list[tuple[int, ...]]:
    """All simple cycles as vertex tuples, each reported once.

    Canonical form: the tuple starts at the cycle's smallest vertex and the
    second entry is smaller than the last, which fixes the direction.
    """
    adj = g.adjacency()
    out: list[tuple[int, ...]] = []
    path: list[int] = []
    on_path: set[int] = set()

    def extend(root: int) -> None:
        last = path[-1]
        for w in adj[last]:
            if w == root:
                if len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                    if len(out) > max_cycles:
                        raise BudgetExceeded(max_cycles, "enumerated cycles")
            elif w > root and w not in on_path:
                if max_length is not None and len(path) >= max_length:
                    continue
                path.append(w)
                on_path.add(w)
                extend(root)
                path.pop()
                on_path.remove(w)

    for root in g.vertices():
        path[:] = [root]
        on_path = {root}
        extend(root)
    return out


def cycle_edges(cycle: tuple[int, ...]) -> list[Edge]:
    k = len(cycle)
    return [normalize_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def has_chord(g: SimpleGraph, cycle: tuple[int, ...]) -> bool:
    k = len(cycle)
    edge_set = set(g.edges)
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if normalize_edge(cycle[i], cycle[j]) in edge_set:
                return True
    return False


def incidence_matrix(g: SimpleGraph) -> list[list[int]]:
    """Vertex-edge incidence: rows are vertices, columns the sorted edges."""
    rows = [[0] * g.edge_count for _ in range(g.vertex_count)]
    for c, (u, v) in enumerate(g.edges):
        rows[u - 1][c] = 1
        rows[v - 1][c] = 1
    return rows


def graph_dot(g: SimpleGraph, edge_labels: dict[Edge, str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices():
        lines.append(f"  {v};")
    for e in g.edges:
        u, v = e
        label = edge_labels.get(e) if edge_labels else None
        if label is not None:
            lines.append(f'  {u} -- {v} [label="{label}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
