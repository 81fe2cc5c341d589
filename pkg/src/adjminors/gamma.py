"""The companion graph on a set of minors and the prime/realizable classification."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .grid import AdjacentMinor, MinorSet, is_chessboard


@dataclass(frozen=True)
class CompanionGraph:
    """Graph on the minors; two minors are joined when both their row bands
    and their column bands intersect."""

    vertices: tuple[AdjacentMinor, ...]
    edges: tuple[tuple[AdjacentMinor, AdjacentMinor], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[AdjacentMinor, list[AdjacentMinor]]:
        adj: dict[AdjacentMinor, list[AdjacentMinor]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort()
        return adj


@dataclass(frozen=True)
class ComponentSummary:
    vertices: int
    edges: int

    @property
    def cycle_rank(self) -> int:
        return self.edges - self.vertices + 1


@dataclass(frozen=True)
class Classification:
    chessboard: bool
    has_4cycle: bool
    max_component_cycle_rank: int
    prime: bool
    realizable: bool

    def violated_condition(self) -> str | None:
        if not self.chessboard:
            return "the minor set is not of chessboard type"
        if self.has_4cycle:
            return "the companion graph contains a 4-cycle"
        if self.max_component_cycle_rank > 1:
            return "a companion-graph component has more than one independent cycle"
        return None


def bands_overlap(u: AdjacentMinor, v: AdjacentMinor) -> bool:
    return abs(u.a - v.a) <= 1 and abs(u.b - v.b) <= 1


def build_gamma(s: MinorSet) -> CompanionGraph:
    vertices = s.minors
    edges = []
    for i in range(len(vertices)):
        for j in range(i + 1, len(vertices)):
            if bands_overlap(vertices[i], vertices[j]):
                edges.append((vertices[i], vertices[j]))
    return CompanionGraph(vertices, tuple(edges))


def components(g: CompanionGraph) -> list[tuple[AdjacentMinor, ...]]:
    """Connected components, each sorted, ordered by smallest member."""
    adj = g.adjacency()
    seen: set[AdjacentMinor] = set()
    comps = []
    for v in g.vertices:
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


def component_summaries(g: CompanionGraph) -> list[ComponentSummary]:
    out = []
    for comp in components(g):
        members = set(comp)
        q = sum(1 for u, v in g.edges if u in members)
        out.append(ComponentSummary(len(comp), q))
    return out


def has_4cycle(g: CompanionGraph) -> bool:
    """Two distinct vertices with two common neighbors close a 4-cycle."""
    adj = g.adjacency()
    verts = g.vertices
    for i in range(len(verts)):
        ni = set(adj[verts[i]])
        for j in range(i + 1, len(verts)):
            common = ni.intersection(adj[verts[j]])
            common.discard(verts[i])
            common.discard(verts[j])
            if len(common) >= 2:
                return True
    return False


def free_minors(s: MinorSet) -> list[tuple[AdjacentMinor, str]]:
    """Minors one of whose diagonal pairs appears in no other minor.

    Returns (minor, which) pairs in row-major order, where `which` is
    "main", "anti" or "both".
    """
    counts = Counter(v for m in s.minors for v in m.variables())
    out = []
    for m in s.minors:
        main_free = all(counts[v] == 1 for v in m.main_diagonal())
        anti_free = all(counts[v] == 1 for v in m.anti_diagonal())
        if main_free and anti_free:
            out.append((m, "both"))
        elif main_free:
            out.append((m, "main"))
        elif anti_free:
            out.append((m, "anti"))
    return out


def classify(s: MinorSet) -> Classification:
    g = build_gamma(s)
    summaries = component_summaries(g)
    max_rank = max((c.cycle_rank for c in summaries), default=0)
    chessboard = is_chessboard(s)
    cycle4 = has_4cycle(g)
    prime = chessboard and not cycle4
    return Classification(
        chessboard=chessboard,
        has_4cycle=cycle4,
        max_component_cycle_rank=max_rank,
        prime=prime,
        realizable=prime and max_rank <= 1,
    )


def gamma_dot(g: CompanionGraph) -> str:
    lines = ["graph gamma {"]
    for v in g.vertices:
        lines.append(f'  "{v.label()}";')
    for u, v in g.edges:
        lines.append(f'  "{u.label()}" -- "{v.label()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
