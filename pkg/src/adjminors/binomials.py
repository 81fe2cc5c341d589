"""Exact Groebner-basis engine for pure-difference binomials.

Monomials are exponent tuples over a fixed variable list.  Every generator,
S-polynomial remainder and basis element stays a difference of two monomials
with coefficients +1/-1, so the whole computation runs on integer tuples and
needs no coefficient arithmetic.  Orders are degree-compatible (degrevlex or
a two-block elimination order), which keeps rewrite chains finite and normal
forms unique once a basis is complete.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator

Mono = tuple[int, ...]

DEFAULT_BUDGET = 1_000_000


class BudgetExceeded(RuntimeError):
    """A resource budget ran out; a resource verdict, never a mathematical one."""

    def __init__(self, limit: int, what: str = "reduction steps"):
        super().__init__(f"budget of {limit} {what} exceeded")
        self.limit = limit
        self.what = what


class _Budget:
    __slots__ = ("limit", "steps", "what")

    def __init__(self, limit: int, what: str = "reduction steps"):
        self.limit = limit
        self.steps = 0
        self.what = what

    def spend(self) -> None:
        self.steps += 1
        if self.steps > self.limit:
            raise BudgetExceeded(self.limit, self.what)


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_degree(m: Mono) -> int:
    return sum(m)


def _support_mask(m: Mono) -> int:
    mask = 0
    for k, e in enumerate(m):
        if e:
            mask |= 1 << k
    return mask


def monomials_of_degree(dim: int, degree: int) -> Iterator[Mono]:
    """All exponent tuples of the given total degree, in a fixed order."""
    if dim == 0:
        if degree == 0:
            yield ()
        return
    for combo in combinations_with_replacement(range(dim), degree):
        exps = [0] * dim
        for k in combo:
            exps[k] += 1
        yield tuple(exps)


class TermOrder:
    """A degree-compatible monomial order on exponent tuples.

    ``first_block == 0`` gives plain degrevlex.  A positive value gives the
    two-block elimination order in which the first ``first_block`` variables
    dominate the rest, with degrevlex inside each block.
    """

    __slots__ = ("dim", "first_block")

    def __init__(self, dim: int, first_block: int = 0):
        if not 0 <= first_block <= dim:
            raise ValueError(f"first_block must lie in [0, {dim}], got {first_block}")
        self.dim = dim
        self.first_block = first_block

    @classmethod
    def degrevlex(cls, dim: int) -> "TermOrder":
        return cls(dim, 0)

    @classmethod
    def elimination(cls, dim: int, first_block: int) -> "TermOrder":
        return cls(dim, first_block)

    def key(self, m: Mono):
        k = self.first_block
        if k:
            head, tail = m[:k], m[k:]
            return (
                sum(head),
                tuple(-e for e in reversed(head)),
                sum(tail),
                tuple(-e for e in reversed(tail)),
            )
        return (sum(m), tuple(-e for e in reversed(m)))

    def gt(self, a: Mono, b: Mono) -> bool:
        return self.key(a) > self.key(b)

    def __repr__(self) -> str:
        if self.first_block:
            return f"TermOrder(elimination, dim={self.dim}, first_block={self.first_block})"
        return f"TermOrder(degrevlex, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class Binomial:
    """A pure difference of two distinct monomials; the sign carries no meaning."""

    lead: Mono
    trail: Mono

    def __post_init__(self):
        if len(self.lead) != len(self.trail):
            raise ValueError("monomials live in different variable spaces")
        if self.lead == self.trail:
            raise ValueError("zero binomial: both monomials are equal")

    def __eq__(self, other):
        if not isinstance(other, Binomial):
            return NotImplemented
        return (self.lead, self.trail) in (
            (other.lead, other.trail),
            (other.trail, other.lead),
        )

    def __hash__(self):
        return hash(frozenset((self.lead, self.trail)))

    @property
    def dim(self) -> int:
        return len(self.lead)

    def degree(self) -> int:
        return max(mono_degree(self.lead), mono_degree(self.trail))

    def is_homogeneous(self) -> bool:
        return mono_degree(self.lead) == mono_degree(self.trail)

    def oriented(self, order: TermOrder) -> "Binomial":
        if order.key(self.lead) >= order.key(self.trail):
            return self
        return Binomial(self.trail, self.lead)

    def __repr__(self) -> str:
        return f"Binomial({self.lead} - {self.trail})"


_FACTOR = re.compile(r"^([A-Za-z][A-Za-z0-9_]*?)(?:\^(\d+))?$")


class VariableSpace:
    """An ordered list of named variables; owns text formatting and parsing."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self._index = {name: k for k, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VariableSpace) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableSpace({', '.join(self.names)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def unit(self) -> Mono:
        return (0,) * len(self.names)

    def monomial_of(self, *names: str) -> Mono:
        """Product of the named variables; repeats raise the exponent."""
        exps = [0] * len(self.names)
        for name in names:
            exps[self.index(name)] += 1
        return tuple(exps)

    def binomial(self, lead_names: Iterable[str], trail_names: Iterable[str]) -> Binomial:
        return Binomial(self.monomial_of(*lead_names), self.monomial_of(*trail_names))

    def format_monomial(self, m: Mono) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def format_binomial(self, b: Binomial) -> str:
        return f"{self.format_monomial(b.lead)} - {self.format_monomial(b.trail)}"

    def parse_monomial(self, text: str) -> Mono:
        exps = [0] * len(self.names)
        for raw in text.split("*"):
            factor = raw.strip()
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"malformed monomial factor {factor!r}")
            name, power = m.group(1), m.group(2)
            e = int(power) if power is not None else 1
            if e < 1:
                raise ValueError(f"exponent must be positive in {factor!r}")
            exps[self.index(name)] += e
        return tuple(exps)

    def parse_binomial(self, text: str) -> Binomial:
        """Parse ``u - v`` where u, v are ``*``-separated variable products."""
        parts = text.split("-")
        if len(parts) != 2:
            raise ValueError(f"expected exactly one '-' between two monomials: {text!r}")
        lead = self.parse_monomial(parts[0])
        trail = self.parse_monomial(parts[1])
        if lead == trail:
            raise ValueError(f"not a binomial, both monomials are equal: {text!r}")
        return Binomial(lead, trail)


def _normalize(m: Mono, leads: list[Mono], trails: list[Mono], masks: list[int], budget: _Budget) -> Mono:
    """Full normal form of one monomial under the rewrite rules lead -> trail."""
    nrules = len(leads)
    while True:
        mm = _support_mask(m)
        for k in range(nrules):
            if masks[k] & ~mm:
                continue
            lk = leads[k]
            divisible = True
            for a, b in zip(lk, m):
                if a > b:
                    divisible = False
                    break
            if not divisible:
                continue
            budget.spend()
            tk = trails[k]
            m = tuple(e - a + b for e, a, b in zip(m, lk, tk))
            break
        else:
            return m


class GroebnerBasis:
    """A completed basis; every element is oriented lead > trail under `order`.

    The constructor trusts its input: use :func:`buchberger` to build one.
    """

    __slots__ = ("generators", "order", "reduced", "_leads", "_trails", "_masks")

    def __init__(self, generators: Iterable[Binomial], order: TermOrder, reduced: bool):
        self.generators = tuple(g.oriented(order) for g in generators)
        self.order = order
        self.reduced = reduced
        self._leads = [g.lead for g in self.generators]
        self._trails = [g.trail for g in self.generators]
        self._masks = [_support_mask(g.lead) for g in self.generators]

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def reduce_monomial(self, m: Mono, budget: int = DEFAULT_BUDGET) -> Mono:
        return _normalize(m, self._leads, self._trails, self._masks, _Budget(budget))

    def normal_form(self, f: Binomial, budget: int = DEFAULT_BUDGET) -> Binomial | None:
        """Unique remainder of f; None means f reduces to zero (membership)."""
        bud = _Budget(budget)
        u = _normalize(f.lead, self._leads, self._trails, self._masks, bud)
        v = _normalize(f.trail, self._leads, self._trails, self._masks, bud)
        if u == v:
            return None
        return Binomial(u, v).oriented(self.order)

    def contains(self, f: Binomial, budget: int = DEFAULT_BUDGET) -> bool:
        return self.normal_form(f, budget) is None


def buchberger(
    gens: Iterable[Binomial],
    order: TermOrder,
    budget: int = DEFAULT_BUDGET,
    reduced: bool = True,
) -> GroebnerBasis:
    """Buchberger completion specialised to pure-difference binomials.

    The S-polynomial of two binomials and every reduction step again yield a
    pure difference (or zero), so elements are kept as oriented monomial
    pairs.  Pairs are processed by increasing lcm degree (normal strategy)
    and filtered with the Gebauer-Moeller criteria; the coprime-lead
    criterion falls out of a support-mask test.
    """
    key = order.key
    bud = _Budget(budget)
    leads: list[Mono] = []
    trails: list[Mono] = []
    masks: list[int] = []
    heap: list[tuple[int, int, int]] = []
    # alive pair -> (lcm, lcm support mask, lcm degree)
    alive: dict[tuple[int, int], tuple[Mono, int, int]] = {}
    seen: set[tuple[Mono, Mono]] = set()

    def add_element(u: Mono, v: Mono) -> None:
        t = len(leads)
        um = _support_mask(u)
        lcms: list[Mono] = []
        lmasks: list[int] = []
        ldegs: list[int] = []
        coprime: list[bool] = []
        for i in range(t):
            li = tuple(x if x > y else y for x, y in zip(leads[i], u))
            lcms.append(li)
            lmasks.append(masks[i] | um)
            ldegs.append(sum(li))
            coprime.append(not (masks[i] & um))
        status = [False] * t
        for i in range(t):
            if coprime[i]:
                # kept through the filtering phase so its lcm can dominate
                # others, then dropped: its S-pair reduces to zero anyway
                status[i] = True
                continue
            li = lcms[i]
            mi = lmasks[i]
            di = ldegs[i]
            dominated = False
            for j in range(t):
                if j == i or (j < i and not status[j]):
                    continue
                if ldegs[j] > di or (lmasks[j] & ~mi):
                    continue
                if mono_divides(lcms[j], li):
                    dominated = True
                    break
            status[i] = not dominated
        # chain criterion: the new lead may obsolete old pairs
        deg_u = sum(u)
        doomed = []
        for pair, (lij, mij, dij) in alive.items():
            if dij < deg_u or (um & ~mij):
                continue
            if not mono_divides(u, lij):
                continue
            i, j = pair
            if lcms[i] != lij and lcms[j] != lij:
                doomed.append(pair)
        for pair in doomed:
            del alive[pair]
        leads.append(u)
        trails.append(v)
        masks.append(um)
        for i in range(t):
            if status[i] and not coprime[i]:
                alive[(i, t)] = (lcms[i], lmasks[i], ldegs[i])
                heapq.heappush(heap, (ldegs[i], i, t))

    for g in gens:
        u, v = g.lead, g.trail
        if key(u) < key(v):
            u, v = v, u
        if (u, v) in seen:
            continue
        seen.add((u, v))
        add_element(u, v)

    while heap:
        _, i, j = heapq.heappop(heap)
        entry = alive.pop((i, j), None)
        if entry is None:
            continue
        lij = entry[0]
        u = _normalize(
            tuple(l - a + b for l, a, b in zip(lij, leads[i], trails[i])),
            leads, trails, masks, bud,
        )
        v = _normalize(
            tuple(l - a + b for l, a, b in zip(lij, leads[j], trails[j])),
            leads, trails, masks, bud,
        )
        if u == v:
            continue
        if key(u) < key(v):
            u, v = v, u
        if (u, v) in seen:
            continue
        seen.add((u, v))
        add_element(u, v)

    # minimal basis: drop elements whose lead another kept lead divides
    by_key = sorted(range(len(leads)), key=lambda k: (key(leads[k]), key(trails[k])))
    kept: list[int] = []
    for k in by_key:
        lk = leads[k]
        if any(mono_divides(leads[j], lk) for j in kept):
            continue
        kept.append(k)
    min_leads = [leads[k] for k in kept]
    min_trails = [trails[k] for k in kept]
    min_masks = [_support_mask(m) for m in min_leads]
    if reduced:
        min_trails = [
            _normalize(t, min_leads, min_trails, min_masks, bud) for t in min_trails
        ]
    elements = [Binomial(u, v) for u, v in zip(min_leads, min_trails)]
    return GroebnerBasis(elements, order, reduced)


def normal_form(f: Binomial, gb: GroebnerBasis, budget: int = DEFAULT_BUDGET) -> Binomial | None:
    return gb.normal_form(f, budget)


def contains(
    gens: Iterable[Binomial],
    candidate: Binomial,
    order: TermOrder | None = None,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Ideal membership of a binomial in the ideal the generators span."""
    gens = list(gens)
    if not gens:
        return False
    if order is None:
        order = TermOrder.degrevlex(gens[0].dim)
    gb = buchberger(gens, order, budget)
    return gb.contains(candidate, budget)


def ideal_equals(
    gens_a: Iterable[Binomial],
    gens_b: Iterable[Binomial],
    order: TermOrder | None = None,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """True iff the two generator lists span the same ideal."""
    a = list(gens_a)
    b = list(gens_b)
    if not a and not b:
        return True
    dim = (a or b)[0].dim
    if any(g.dim != dim for g in a + b):
        raise ValueError("generators live in different variable spaces")
    if order is None:
        order = TermOrder.degrevlex(dim)
    if b:
        gb_b = buchberger(b, order, budget)
        if any(gb_b.normal_form(f, budget) is not None for f in a):
            return False
    elif a:
        return False
    if a:
        gb_a = buchberger(a, order, budget)
        return all(gb_a.normal_form(g, budget) is None for g in b)
    return not b


def is_groebner(
    elements: Iterable[Binomial],
    order: TermOrder,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Check the defining property directly: every S-pair reduces to zero."""
    gb = GroebnerBasis(list(elements), order, reduced=False)
    els = gb.generators
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            lij = mono_lcm(els[i].lead, els[j].lead)
            u = tuple(l - a + b for l, a, b in zip(lij, els[i].lead, els[i].trail))
            v = tuple(l - a + b for l, a, b in zip(lij, els[j].lead, els[j].trail))
            if gb.reduce_monomial(u, budget) != gb.reduce_monomial(v, budget):
                return False
    return True


def span_membership(gens: Iterable[Binomial], candidate: Binomial) -> bool:
    """Membership oracle independent of the Groebner path.

    For homogeneous pure-difference generators, membership of a homogeneous
    binomial of degree d is decided in degree d alone, so the candidate lies
    in the ideal iff its coefficient vector lies in the rational span of all
    generator shifts of matching degree.  The span test is sparse Gaussian
    elimination over the rationals.
    """
    gens = list(gens)
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("span oracle requires homogeneous generators")
    if not candidate.is_homogeneous():
        return False
    if not gens:
        return False
    dim = gens[0].dim
    if candidate.dim != dim:
        raise ValueError("candidate lives in a different variable space")
    degree = candidate.degree()

    col_of: dict[Mono, int] = {}

    def col(m: Mono) -> int:
        return col_of.setdefault(m, len(col_of))

    echelon: dict[int, dict[int, Fraction]] = {}

    def eliminate(row: dict[int, Fraction]) -> dict[int, Fraction]:
        while row:
            pivot = min(row)
            held = echelon.get(pivot)
            if held is None:
                return row
            factor = row[pivot]
            for c, val in held.items():
                new = row.get(c, Fraction(0)) - factor * val
                if new:
                    row[c] = new
                else:
                    row.pop(c, None)
        return row

    def insert(row: dict[int, Fraction]) -> None:
        row = eliminate(row)
        if row:
            pivot = min(row)
            inv = row[pivot]
            echelon[pivot] = {c: val / inv for c, val in row.items()}

    for g in gens:
        shift = degree - g.degree()
        if shift < 0:
            continue
        for mu in monomials_of_degree(dim, shift):
            insert({
                col(mono_mul(mu, g.lead)): Fraction(1),
                col(mono_mul(mu, g.trail)): Fraction(-1),
            })

    target = {col(candidate.lead): Fraction(1), col(candidate.trail): Fraction(-1)}
    return not eliminate(target)
