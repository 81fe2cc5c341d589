"""Adjacent 2-minors of a grid matrix: cells, variables, chessboard shape, JSON input."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .binomials import Binomial, TermOrder, VariableSpace


class InputError(ValueError):
    """Malformed minor-set input: bad JSON, out-of-range cells, or duplicates."""


@dataclass(frozen=True, order=True)
class GridVariable:
    """The indeterminate x_{ij} at row i, column j (1-based)."""

    i: int
    j: int

    @property
    def name(self) -> str:
        return f"x_{self.i}_{self.j}"

    def transposed(self) -> "GridVariable":
        return GridVariable(self.j, self.i)


@dataclass(frozen=True, order=True)
class AdjacentMinor:
    """The 2x2 minor on rows {a, a+1} and columns {b, b+1} of the grid matrix."""

    a: int
    b: int

    def variables(self) -> tuple[GridVariable, ...]:
        a, b = self.a, self.b
        return (
            GridVariable(a, b),
            GridVariable(a, b + 1),
            GridVariable(a + 1, b),
            GridVariable(a + 1, b + 1),
        )

    def main_diagonal(self) -> tuple[GridVariable, GridVariable]:
        return (GridVariable(self.a, self.b), GridVariable(self.a + 1, self.b + 1))

    def anti_diagonal(self) -> tuple[GridVariable, GridVariable]:
        return (GridVariable(self.a, self.b + 1), GridVariable(self.a + 1, self.b))

    def label(self) -> str:
        return f"[{self.a},{self.a + 1}|{self.b},{self.b + 1}]"

    def transposed(self) -> "AdjacentMinor":
        return AdjacentMinor(self.b, self.a)


@dataclass(frozen=True)
class GridDims:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 2 or self.cols < 2:
            raise InputError(
                f"grid must be at least 2x2 to carry adjacent minors, got {self.rows}x{self.cols}"
            )

    def transposed(self) -> "GridDims":
        return GridDims(self.cols, self.rows)


@dataclass(frozen=True)
class MinorSet:
    """A set of adjacent minors together with its ambient grid dimensions."""

    dims: GridDims
    minors: tuple[AdjacentMinor, ...]

    def __post_init__(self):
        seen = set()
        for m in self.minors:
            if not (1 <= m.a <= self.dims.rows - 1 and 1 <= m.b <= self.dims.cols - 1):
                raise InputError(
                    f"minor cell ({m.a},{m.b}) is outside the "
                    f"{self.dims.rows - 1}x{self.dims.cols - 1} cell range of a "
                    f"{self.dims.rows}x{self.dims.cols} grid"
                )
            if m in seen:
                raise InputError(f"duplicate minor cell ({m.a},{m.b})")
            seen.add(m)
        object.__setattr__(self, "minors", tuple(sorted(self.minors)))

    @staticmethod
    def of(rows: int, cols: int, cells: Iterable[tuple[int, int]]) -> "MinorSet":
        return MinorSet(GridDims(rows, cols), tuple(AdjacentMinor(a, b) for a, b in cells))

    def __len__(self) -> int:
        return len(self.minors)

    def __iter__(self):
        return iter(self.minors)

    def cells(self) -> tuple[tuple[int, int], ...]:
        return tuple((m.a, m.b) for m in self.minors)

    def transposed(self) -> "MinorSet":
        return MinorSet(self.dims.transposed(), tuple(m.transposed() for m in self.minors))


def variables_of(minor: AdjacentMinor) -> tuple[GridVariable, ...]:
    """The four indeterminates of the minor, row-major."""
    return minor.variables()


def is_chessboard(s: MinorSet) -> bool:
    """Same-row-band minors must sit >= 2 columns apart, and symmetrically for columns."""
    ms = s.minors
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            u, v = ms[i], ms[j]
            if u.a == v.a and abs(u.b - v.b) == 1:
                return False
            if u.b == v.b and abs(u.a - v.a) == 1:
                return False
    return True


def used_variables(s: MinorSet) -> tuple[GridVariable, ...]:
    """Union of all minor variables in row-major order; the ambient variable set."""
    return tuple(sorted({v for m in s.minors for v in m.variables()}))


def variable_space(s: MinorSet) -> VariableSpace:
    return VariableSpace(v.name for v in used_variables(s))


def binomial_of(minor: AdjacentMinor, space: VariableSpace, order: TermOrder | None = None) -> Binomial:
    """The minor as a pure-difference binomial over `space`, oriented by `order`."""
    if order is None:
        order = TermOrder.degrevlex(len(space))
    main = space.monomial_of(*(v.name for v in minor.main_diagonal()))
    anti = space.monomial_of(*(v.name for v in minor.anti_diagonal()))
    return Binomial(main, anti).oriented(order)


def minor_generators(s: MinorSet) -> tuple[VariableSpace, list[Binomial]]:
    """The ambient variable space of `s` and its generator binomials."""
    space = variable_space(s)
    order = TermOrder.degrevlex(len(space))
    return space, [binomial_of(m, space, order) for m in s.minors]


def parse_variable_name(name: str) -> GridVariable:
    parts = name.split("_")
    if len(parts) != 3 or parts[0] != "x":
        raise InputError(f"not a grid variable name: {name!r}")
    try:
        return GridVariable(int(parts[1]), int(parts[2]))
    except ValueError:
        raise InputError(f"not a grid variable name: {name!r}") from None


def minor_set_from_json(text: str) -> MinorSet:
    """Parse {"rows": m, "cols": n, "minors": [[a, b], ...]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise InputError("top-level JSON value must be an object")
    for field in ("rows", "cols", "minors"):
        if field not in doc:
            raise InputError(f'missing field "{field}"')
    rows, cols = doc["rows"], doc["cols"]
    if not isinstance(rows, int) or not isinstance(cols, int):
        raise InputError('"rows" and "cols" must be integers')
    raw = doc["minors"]
    if not isinstance(raw, list):
        raise InputError('"minors" must be a list of [a, b] pairs')
    cells = []
    for k, entry in enumerate(raw):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, int) for x in entry)
        ):
            raise InputError(f'"minors" entry {k}: expected a pair [a, b] of integers')
        cells.append((entry[0], entry[1]))
    return MinorSet.of(rows, cols, cells)


def minor_set_to_json(s: MinorSet) -> str:
    doc = {
        "rows": s.dims.rows,
        "cols": s.dims.cols,
        "minors": [[m.a, m.b] for m in s.minors],
    }
    return json.dumps(doc)
