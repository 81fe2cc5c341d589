"""Toric ideals of finite simple graphs and the realization certificate.

The toric ideal is computed by elimination: complete {y_e - t_u t_v} under a
block order with the vertex variables dominating, then keep the elements free
of vertex variables.  The even-closed-walk generators serve as an independent
cross-check oracle, never as the computation path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .binomials import (
    DEFAULT_BUDGET,
    Binomial,
    BudgetExceeded,
    GroebnerBasis,
    TermOrder,
    VariableSpace,
    buchberger,
    ideal_equals,
    mono_degree,
)
from .graphs import Edge, SimpleGraph, has_chord, incidence_matrix, normalize_edge, simple_cycles
from .grid import InputError, MinorSet, used_variables
from .realizer import Realization


def edge_variable_name(e: Edge) -> str:
    return f"y_{e[0]}_{e[1]}"


def edge_space(g: SimpleGraph) -> VariableSpace:
    """Variable space with one y-variable per edge, in sorted edge order."""
    return VariableSpace(edge_variable_name(e) for e in g.edges)


@dataclass(frozen=True)
class EdgeRingPresentation:
    """Defining data of the edge ring: y_e - t_u t_v over a t-then-y space."""

    graph: SimpleGraph
    space: VariableSpace
    vertex_block: int
    generators: tuple[Binomial, ...]
    order: TermOrder


def presentation(g: SimpleGraph) -> EdgeRingPresentation:
    names = [f"t_{v}" for v in g.vertices()]
    names += [edge_variable_name(e) for e in g.edges]
    space = VariableSpace(names)
    order = TermOrder.elimination(len(space), g.vertex_count)
    gens = []
    for u, v in g.edges:
        gens.append(
            space.binomial(
                (f"t_{u}", f"t_{v}"),
                (edge_variable_name((u, v)),),
            ).oriented(order)
        )
    return EdgeRingPresentation(g, space, g.vertex_count, tuple(gens), order)


def toric_basis(g: SimpleGraph, budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis of the toric ideal over the edge space."""
    pres = presentation(g)
    gb = buchberger(pres.generators, pres.order, budget=budget, reduced=True)
    d = pres.vertex_block
    order = TermOrder.degrevlex(g.edge_count)
    kept = []
    for b in gb:
        if any(b.lead[:d]) or any(b.trail[:d]):
            continue
        kept.append(Binomial(b.lead[d:], b.trail[d:]).oriented(order))
    kept.sort(key=lambda b: (order.key(b.lead), order.key(b.trail)))
    return GroebnerBasis(kept, order, reduced=True)


def toric_ideal(g: SimpleGraph, budget: int = DEFAULT_BUDGET) -> list[Binomial]:
    """Generators of the toric ideal of g (a reduced Groebner basis)."""
    return list(toric_basis(g, budget))


def cycle_binomial(g: SimpleGraph, edge_sequence: Sequence[tuple[int, int]]) -> Binomial:
    """The alternating-product binomial of an even cycle given as an edge walk."""
    edges = [normalize_edge(u, v) for u, v in edge_sequence]
    edge_set = set(g.edges)
    for e in edges:
        if e not in edge_set:
            raise ValueError(f"edge {e} is not in the graph")
    k = len(edges)
    if k < 4 or k % 2 != 0:
        raise ValueError(f"cycle length must be even and at least 4, got {k}")
    # walk the edge sequence and check it closes into a simple cycle
    first_shared = set(edges[0]) & set(edges[1])
    if len(first_shared) != 1:
        raise ValueError("consecutive edges must share exactly one vertex")
    start = (set(edges[0]) - first_shared).pop()
    at = start
    visited = []
    for e in edges:
        if at not in e:
            raise ValueError("edges do not form a closed walk")
        visited.append(at)
        at = e[0] if at == e[1] else e[1]
    if at != start or len(set(visited)) != k:
        raise ValueError("edges do not form a simple closed cycle")
    space = edge_space(g)
    odd = space.monomial_of(*(edge_variable_name(e) for e in edges[0::2]))
    even = space.monomial_of(*(edge_variable_name(e) for e in edges[1::2]))
    return Binomial(odd, even).oriented(TermOrder.degrevlex(len(space)))


def even_closed_walk_binomials(
    g: SimpleGraph,
    max_length: int = 12,
    max_steps: int = 1_000_000,
) -> list[Binomial]:
    """Binomials of the even closed walks of g up to the length bound.

    Walks may repeat edges (two odd cycles joined by a path need that), so
    this enumerates rooted walks rather than simple cycles.  Used only as a
    cross-check oracle for the elimination route.
    """
    adj = g.adjacency()
    space = edge_space(g)
    order = TermOrder.degrevlex(len(space))
    found: set[Binomial] = set()
    steps = 0

    def walk(root: int, at: int, trail: list[Edge]) -> None:
        nonlocal steps
        for w in adj[at]:
            if w < root:
                continue
            steps += 1
            if steps > max_steps:
                raise BudgetExceeded(max_steps, "walk extensions")
            trail.append(normalize_edge(at, w))
            if w == root and len(trail) % 2 == 0:
                odd = space.monomial_of(*(edge_variable_name(e) for e in trail[0::2]))
                even = space.monomial_of(*(edge_variable_name(e) for e in trail[1::2]))
                if odd != even:
                    found.add(Binomial(odd, even).oriented(order))
            if len(trail) < max_length:
                walk(root, w, trail)
            trail.pop()

    for root in g.vertices():
        walk(root, root, [])
    return sorted(found, key=lambda b: (order.key(b.lead), order.key(b.trail)))


def quadratic_generation_check(
    g: SimpleGraph,
    gens: Iterable[Binomial] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Do the degree-2 elements of the reduced basis already generate the ideal?"""
    gens = list(gens) if gens is not None else toric_ideal(g, budget)
    quadratics = [b for b in gens if mono_degree(b.lead) == 2]
    order = TermOrder.degrevlex(g.edge_count)
    return ideal_equals(quadratics, gens, order=order, budget=budget)


@dataclass(frozen=True)
class ChordReport:
    bipartite: bool
    cycle_count: int
    max_length_checked: int
    chordless_six_plus: tuple[tuple[int, ...], ...]
    odd_cycle_pairs_sharing_le1: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


def chord_diagnostics(
    g: SimpleGraph,
    max_cycle_length: int = 12,
    max_cycles: int = 100_000,
) -> ChordReport:
    """Enumerate cycles up to the bound; report chordless long cycles,
    bipartiteness, and (for non-bipartite graphs) odd-cycle pairs meeting in
    at most one vertex."""
    cycles = simple_cycles(g, max_length=max_cycle_length, max_cycles=max_cycles)
    chordless = tuple(c for c in cycles if len(c) >= 6 and not has_chord(g, c))
    bipartite = g.is_bipartite()
    pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    if not bipartite:
        odd = [c for c in cycles if len(c) % 2 == 1]
        for i in range(len(odd)):
            for j in range(i + 1, len(odd)):
                if len(set(odd[i]) & set(odd[j])) <= 1:
                    pairs.append((odd[i], odd[j]))
    return ChordReport(
        bipartite=bipartite,
        cycle_count=len(cycles),
        max_length_checked=max_cycle_length,
        chordless_six_plus=chordless,
        odd_cycle_pairs_sharing_le1=tuple(pairs),
    )


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank by fraction-free (Bareiss) Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if m[r][c]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][c]
        for r in range(rank + 1, n_rows):
            factor = m[r][c]
            row = m[r]
            top = m[rank]
            for cc in range(c, n_cols):
                row[cc] = (pivot * row[cc] - factor * top[cc]) // prev
        prev = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def codimension(g: SimpleGraph) -> int:
    """Height of the toric ideal: edges minus the incidence-matrix rank."""
    return g.edge_count - integer_rank(incidence_matrix(g))


def translated_minor_generators(s: MinorSet, r: Realization) -> list[Binomial]:
    """Minor binomials pushed through the variable->edge map into the edge space."""
    mapping = r.edge_of
    needed = used_variables(s)
    missing = [v.name for v in needed if v not in mapping]
    if missing:
        raise InputError(f"map does not cover used variables: {', '.join(missing)}")
    images = [mapping[v] for v in needed]
    if len(set(images)) != len(images):
        raise InputError("variable->edge map is not injective")
    edge_set = set(r.graph.edges)
    for e in images:
        if e not in edge_set:
            raise InputError(f"map sends a variable to a non-edge {e}")
    space = edge_space(r.graph)
    order = TermOrder.degrevlex(len(space))
    out = []
    for minor in s.minors:
        main = space.monomial_of(
            *(edge_variable_name(mapping[v]) for v in minor.main_diagonal())
        )
        anti = space.monomial_of(
            *(edge_variable_name(mapping[v]) for v in minor.anti_diagonal())
        )
        out.append(Binomial(main, anti).oriented(order))
    return out


@dataclass(frozen=True)
class Certificate:
    equal: bool
    minor_basis_size: int
    toric_basis_size: int


def certify_realization(s: MinorSet, r: Realization, budget: int = DEFAULT_BUDGET) -> Certificate:
    """Certify I_M = I_G inside the edge space of all edges of the graph."""
    translated = translated_minor_generators(s, r)
    toric_gb = toric_basis(r.graph, budget)
    order = toric_gb.order
    if translated:
        minor_gb = buchberger(translated, order, budget=budget, reduced=True)
    else:
        minor_gb = GroebnerBasis((), order, reduced=True)
    equal = all(toric_gb.normal_form(f, budget) is None for f in translated) and all(
        minor_gb.normal_form(b, budget) is None for b in toric_gb
    )
    return Certificate(equal, len(minor_gb), len(toric_gb))


def verify_realization(s: MinorSet, r: Realization, budget: int = DEFAULT_BUDGET) -> bool:
    return certify_realization(s, r, budget).equal
