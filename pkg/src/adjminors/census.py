"""Exhaustive enumeration of minor configurations on small boards."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .binomials import DEFAULT_BUDGET
from .gamma import build_gamma, classify, component_summaries, free_minors
from .grid import MinorSet
from .graphs import SimpleGraph, simple_cycles
from .realizer import realize
from .toric import verify_realization


def _conflicts(cell: tuple[int, int], chosen: list[tuple[int, int]]) -> bool:
    a, b = cell
    for a2, b2 in chosen:
        if a == a2 and abs(b - b2) == 1:
            return True
        if b == b2 and abs(a - a2) == 1:
            return True
    return False


def iter_cell_subsets(
    max_a: int,
    max_b: int,
    max_minors: int,
    chessboard_only: bool = False,
) -> Iterator[tuple[tuple[int, int], ...]]:
    """All cell subsets of [1,max_a]x[1,max_b] up to the size bound, in
    depth-first lexicographic order (the empty set comes first)."""
    cells = [(a, b) for a in range(1, max_a + 1) for b in range(1, max_b + 1)]
    chosen: list[tuple[int, int]] = []

    def rec(start: int) -> Iterator[tuple[tuple[int, int], ...]]:
        yield tuple(chosen)
        if len(chosen) == max_minors:
            return
        for k in range(start, len(cells)):
            if chessboard_only and _conflicts(cells[k], chosen):
                continue
            chosen.append(cells[k])
            yield from rec(k + 1)
            chosen.pop()

    yield from rec(0)


def minor_set_on(max_a: int, max_b: int, cells) -> MinorSet:
    return MinorSet.of(max_a + 1, max_b + 1, cells)


def iter_minor_sets(
    max_a: int,
    max_b: int,
    max_minors: int,
    chessboard_only: bool = False,
) -> Iterator[MinorSet]:
    for cells in iter_cell_subsets(max_a, max_b, max_minors, chessboard_only):
        yield minor_set_on(max_a, max_b, cells)


def gamma_cycle_sets(max_a: int, max_b: int) -> list[MinorSet]:
    """All minor sets on the board whose companion graph is a single cycle.

    Companion-graph edges between chessboard cells are exactly the diagonal
    adjacencies, so these are the chordless cycles of the diagonal-adjacency
    graph on the cell board.
    """
    cells = [(a, b) for a in range(1, max_a + 1) for b in range(1, max_b + 1)]
    index = {c: k + 1 for k, c in enumerate(cells)}
    pairs = []
    for k, (a, b) in enumerate(cells):
        for da, db in ((1, 1), (1, -1)):
            other = (a + da, b + db)
            if other in index:
                pairs.append((k + 1, index[other]))
    board = SimpleGraph.of(len(cells), pairs)
    adjacency = {frozenset(e) for e in board.edges}
    out = []
    for cycle in simple_cycles(board):
        members = set(cycle)
        induced = sum(1 for e in adjacency if e <= members)
        if induced != len(cycle):
            continue  # a chord: the companion graph is not a plain cycle
        out.append(minor_set_on(max_a, max_b, sorted(cells[v - 1] for v in cycle)))
    out.sort(key=lambda s: s.cells())
    return out


def iter_tree_sets(max_a: int, max_b: int, max_size: int) -> Iterator[MinorSet]:
    """Chessboard minor sets whose companion graph is a single tree."""
    for cells in iter_cell_subsets(max_a, max_b, max_size, chessboard_only=True):
        if not cells:
            continue
        s = minor_set_on(max_a, max_b, cells)
        summaries = component_summaries(build_gamma(s))
        if len(summaries) == 1 and summaries[0].cycle_rank == 0:
            yield s


CSV_HEADER = [
    "rows",
    "cols",
    "minors",
    "count",
    "chessboard",
    "components",
    "max_cycle_rank",
    "has_4cycle",
    "prime",
    "realizable",
    "free_minors",
    "verified",
]


@dataclass(frozen=True)
class CensusRecord:
    rows: int
    cols: int
    cells: tuple[tuple[int, int], ...]
    chessboard: bool
    components: int
    max_cycle_rank: int
    has_4cycle: bool
    prime: bool
    realizable: bool
    free_minor_count: int
    verified: str  # "", "pass" or "fail"

    def csv_row(self) -> list[str]:
        return [
            str(self.rows),
            str(self.cols),
            ";".join(f"{a}.{b}" for a, b in self.cells),
            str(len(self.cells)),
            str(self.chessboard).lower(),
            str(self.components),
            str(self.max_cycle_rank),
            str(self.has_4cycle).lower(),
            str(self.prime).lower(),
            str(self.realizable).lower(),
            str(self.free_minor_count),
            self.verified,
        ]


def census_records(
    max_a: int,
    max_b: int,
    max_minors: int,
    verify_up_to: int = 0,
    cycles_only: bool = False,
    chessboard_only: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[CensusRecord]:
    if cycles_only:
        sets: Iterator[MinorSet] = (
            s for s in gamma_cycle_sets(max_a, max_b) if len(s) <= max_minors
        )
    else:
        sets = iter_minor_sets(max_a, max_b, max_minors, chessboard_only)
    for s in sets:
        cls = classify(s)
        summaries = component_summaries(build_gamma(s))
        verified = ""
        if cls.realizable and 0 < len(s) <= verify_up_to:
            ok = verify_realization(s, realize(s), budget=budget)
            verified = "pass" if ok else "fail"
        yield CensusRecord(
            rows=s.dims.rows,
            cols=s.dims.cols,
            cells=s.cells(),
            chessboard=cls.chessboard,
            components=len(summaries),
            max_cycle_rank=cls.max_component_cycle_rank,
            has_4cycle=cls.has_4cycle,
            prime=cls.prime,
            realizable=cls.realizable,
            free_minor_count=len(free_minors(s)),
            verified=verified,
        )
