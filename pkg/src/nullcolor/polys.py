"""Products of affine factors: the graph polynomial and its decorated/labelled forms.

A :class:`FactorList` keeps the product implicit. Two independent routes get
coefficients out of it:

* :func:`expand_capped` multiplies factors into a sparse map, pruning any
  partial monomial whose degree in some variable already exceeds its cap
  (sound because degrees never decrease as factors multiply in);
* :func:`coeff_of_monomial` answers a single query by a residual-exponent
  dynamic program over the factors, one factor at a time.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .algebra import Field
from .errors import BudgetExceeded, MissingEdge, ZeroDecoration
from .graphs import Edge, Graph, canon

DEFAULT_BUDGET = 10**7

Exponents = tuple[int, ...]


class Factor(NamedTuple):
    """``a*x_u + b*x_v + c``."""

    u: int
    a: object
    v: int
    b: object
    c: object


@dataclass(frozen=True)
class FactorList:
    field: Field
    n: int
    factors: tuple[Factor, ...]

    def __post_init__(self):
        # a*x_u + b*x_u is stored as (a+b)*x_u so the top-degree part is honest
        fld = self.field
        if any(f.u == f.v and f.b != fld.zero for f in self.factors):
            merged = tuple(
                Factor(f.u, fld.add(f.a, f.b), f.v, fld.zero, f.c) if f.u == f.v else f
                for f in self.factors
            )
            object.__setattr__(self, "factors", merged)

    @property
    def homogeneous(self) -> bool:
        z = self.field.zero
        return all(f.c == z for f in self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def top_degree_part(self) -> tuple["FactorList", object]:
        """Top homogeneous component, as (product of linear parts, scalar)."""
        fld = self.field
        z = fld.zero
        lin, scalar = [], fld.one
        for f in self.factors:
            if f.a == z and f.b == z:
                scalar = fld.mul(scalar, f.c)
            else:
                lin.append(Factor(f.u, f.a, f.v, f.b, z))
        return FactorList(fld, self.n, tuple(lin)), scalar

    def degree(self) -> int:
        """Total degree of the product (-1 for the zero polynomial)."""
        top, scalar = self.top_degree_part()
        return -1 if scalar == self.field.zero else len(top)

    def evaluate(self, point: Sequence) -> object:
        fld = self.field
        add, mul = fld.add, fld.mul
        acc = fld.one
        for u, a, v, b, c in self.factors:
            val = add(add(mul(a, point[u]), mul(b, point[v])), c)
            if val == fld.zero:
                return fld.zero
            acc = mul(acc, val)
        return acc

    def scaled(self, scalar) -> "FactorList":
        """Fold a scalar into the first factor (or return a constant factor)."""
        fld = self.field
        if not self.factors:
            return FactorList(fld, self.n, (Factor(0, fld.zero, 0, fld.zero, scalar),))
        u, a, v, b, c = self.factors[0]
        first = Factor(u, fld.mul(a, scalar), v, fld.mul(b, scalar), fld.mul(c, scalar))
        return FactorList(fld, self.n, (first,) + self.factors[1:])


class SparsePoly:
    """Exponent vector -> nonzero coefficient, iterated in lexicographic order."""

    def __init__(self, field: Field, n: int, terms: Mapping[Exponents, object] | None = None):
        self.field = field
        self.n = n
        z = field.zero
        self.terms: dict[Exponents, object] = {
            tuple(k): v for k, v in sorted((terms or {}).items()) if v != z
        }

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Exponents]:
        return iter(self.terms)

    def __contains__(self, m) -> bool:
        return tuple(m) in self.terms

    def items(self):
        return self.terms.items()

    def __getitem__(self, m) -> object:
        return self.terms.get(tuple(m), self.field.zero)

    def get(self, m, default=None):
        return self.terms.get(tuple(m), default)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparsePoly)
            and self.field == other.field
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return f"SparsePoly({len(self.terms)} terms over {self.field!r})"

    def filter(self, keep) -> "SparsePoly":
        return SparsePoly(self.field, self.n, {m: c for m, c in self.terms.items() if keep(m)})

    def capped(self, cap) -> "SparsePoly":
        caps = _caps(self.n, cap)
        return self.filter(lambda m: all(e <= k for e, k in zip(m, caps)))

    def homogeneous_part(self, d: int) -> "SparsePoly":
        return self.filter(lambda m: sum(m) == d)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def to_json(self) -> list[dict]:
        fmt = self.field.format
        return [{"exponents": list(m), "coeff": fmt(c)} for m, c in self.terms.items()]


def _caps(n: int, cap) -> list[float]:
    if cap is None:
        return [float("inf")] * n
    if isinstance(cap, int):
        return [cap] * n
    caps = [float("inf") if c is None else c for c in cap]
    if len(caps) != n:
        raise ValueError(f"per-variable caps need length {n}")
    return caps


# -- building factor lists ---------------------------------------------------

def default_decoration(g: Graph, field: Field) -> dict[Edge, tuple]:
    """``(1, -1)`` on every edge: the plain graph polynomial."""
    return {e: (field.one, field.neg(field.one)) for e in g.edges}


def random_decoration(g: Graph, field: Field, rng: random.Random) -> dict[Edge, tuple]:
    return {e: (field.random_nonzero(rng), field.random_nonzero(rng)) for e in g.edges}


def random_labeling(g: Graph, field: Field, rng: random.Random) -> dict[Edge, object]:
    return {e: field.random_element(rng) for e in g.edges}


def decorated_factors(
    g: Graph,
    field: Field,
    dec: Mapping[Edge, tuple] | None = None,
    lab: Mapping[Edge, object] | None = None,
    edges: Iterable[Edge] | None = None,
) -> FactorList:
    """One factor ``a_e x_u + b_e x_v (+ label)`` per edge, in canonical order.

    ``edges`` restricts to a subset of the graph's edges (e.g. ``G - e``).
    """
    if dec is None:
        dec = default_decoration(g, field)
    z = field.zero
    chosen = g.edges if edges is None else sorted({canon(*e) for e in edges})
    out = []
    for e in chosen:
        if e not in dec:
            raise MissingEdge(f"no decoration for edge {e}")
        a, b = dec[e]
        if a == z or b == z:
            raise ZeroDecoration(f"edge {e} has a zero decoration entry")
        if lab is None:
            c = z
        else:
            if e not in lab:
                raise MissingEdge(f"no label for edge {e}")
            c = lab[e]
        out.append(Factor(e[0], a, e[1], b, c))
    return FactorList(field, g.n, tuple(out))


def edge_factors(
    field: Field, n: int, edges: Iterable[Edge], dec: Mapping[Edge, tuple]
) -> FactorList:
    """Homogeneous factors for an explicit edge set on ``n`` variables."""
    z = field.zero
    out = []
    for e in sorted({canon(*e) for e in edges}):
        if e not in dec:
            raise MissingEdge(f"no decoration for edge {e}")
        a, b = dec[e]
        if a == z or b == z:
            raise ZeroDecoration(f"edge {e} has a zero decoration entry")
        out.append(Factor(e[0], a, e[1], b, z))
    return FactorList(field, n, tuple(out))


# -- expansion -----------------------------------------------------------------

def expand_capped(f: FactorList, cap=None, budget: int = DEFAULT_BUDGET) -> SparsePoly:
    """Exact expansion restricted to monomials with every degree <= cap.

    ``cap`` is None (no cap), an int, or a per-variable sequence. Raises
    BudgetExceeded when the working set outgrows ``budget`` monomials.
    """
    fld = f.field
    n = f.n
    caps = _caps(n, cap)
    z = fld.zero
    incid = [0] * n
    for u, a, v, b, _ in f.factors:
        if a != z:
            incid[u] += 1
        if b != z:
            incid[v] += 1
    width = max(max(incid, default=0).bit_length(), 1)
    mask = (1 << width) - 1
    icaps = [min(incid[i], caps[i]) for i in range(n)]
    add, mul = fld.add, fld.mul

    terms: dict[int, object] = {0: fld.one}
    for u, a, v, b, c in f.factors:
        nxt: dict[int, object] = {}
        get = nxt.get
        su, sv = width * u, width * v
        cu, cv = icaps[u], icaps[v]
        use_a, use_b, use_c = a != z, b != z, c != z
        for key, coeff in terms.items():
            if use_a and ((key >> su) & mask) < cu:
                k2 = key + (1 << su)
                nxt[k2] = add(get(k2, z), mul(coeff, a))
            if use_b and ((key >> sv) & mask) < cv:
                k2 = key + (1 << sv)
                nxt[k2] = add(get(k2, z), mul(coeff, b))
            if use_c:
                nxt[key] = add(get(key, z), mul(coeff, c))
        terms = {k: val for k, val in nxt.items() if val != z}
        if len(terms) > budget:
            raise BudgetExceeded(f"expansion exceeded {budget} monomials")
    out = {
        tuple((key >> (width * i)) & mask for i in range(n)): coeff for key, coeff in terms.items()
    }
    return SparsePoly(fld, n, out)


def coeff_of_monomial(f: FactorList, m: Sequence[int]) -> object:
    """Coefficient of ``prod x_i^{m_i}`` in the product, by dynamic programming.

    Walks the factors in order carrying a map residual-exponent -> partial
    coefficient sum; a state dies as soon as some variable needs more degree
    than the remaining factors can supply.
    """
    fld = f.field
    z = fld.zero
    target = tuple(m)
    if len(target) != f.n or any(e < 0 for e in target):
        raise ValueError("exponent vector has wrong length or negative entries")
    supply = [0] * f.n
    for u, a, v, b, _ in f.factors:
        if a != z:
            supply[u] += 1
        if b != z:
            supply[v] += 1
    if any(t > s for t, s in zip(target, supply)):
        return z
    if sum(target) > len(f.factors):
        return z
    add, mul = fld.add, fld.mul
    states = {target: fld.one}
    left = len(f.factors)
    for u, a, v, b, c in f.factors:
        left -= 1
        if a != z:
            supply[u] -= 1
        if b != z:
            supply[v] -= 1
        nxt: dict[Exponents, object] = {}
        for r, s in states.items():
            if a != z and r[u] > 0:
                r2 = r[:u] + (r[u] - 1,) + r[u + 1 :]
                if r2[u] <= supply[u] and r2[v] <= supply[v]:
                    nxt[r2] = add(nxt.get(r2, z), mul(s, a))
            if b != z and r[v] > 0:
                r2 = r[:v] + (r[v] - 1,) + r[v + 1 :]
                if r2[u] <= supply[u] and r2[v] <= supply[v]:
                    nxt[r2] = add(nxt.get(r2, z), mul(s, b))
            if c != z and r[u] <= supply[u] and r[v] <= supply[v] and sum(r) <= left:
                nxt[r] = add(nxt.get(r, z), mul(s, c))
        states = {r: s for r, s in nxt.items() if s != z}
        if not states:
            return z
    return states.get((0,) * f.n, z)


def an_witness(f: FactorList, budget: int = DEFAULT_BUDGET) -> tuple[int, Exponents, object]:
    """Least cap k admitting a non-vanishing top-degree monomial, with one such monomial.

    The monomial returned is the lexicographically first survivor at cap k.
    """
    top, scalar = f.top_degree_part()
    if scalar == f.field.zero:
        raise ValueError("polynomial is identically zero")
    limit = len(top)
    for k in range(limit + 1):
        poly = expand_capped(top, k, budget)
        if len(poly):
            mono, coeff = next(iter(poly.items()))
            return k, mono, f.field.mul(coeff, scalar)
    raise AssertionError("a nonzero product of linear forms has a monomial")


def an_number(f: FactorList, budget: int = DEFAULT_BUDGET) -> int:
    """Least k with a non-vanishing top-degree monomial of max exponent <= k."""
    return an_witness(f, budget)[0]


# -- orientations ------------------------------------------------------------

@dataclass(frozen=True)
class Orientation:
    """Direction of every edge of a graph, stored as the head of each edge."""

    edges: tuple[Edge, ...]
    heads: tuple[int, ...]

    @classmethod
    def default(cls, g: Graph) -> "Orientation":
        """Every edge points from its smaller to its larger endpoint."""
        return cls(g.edges, tuple(v for _, v in g.edges))

    @classmethod
    def from_arcs(cls, g: Graph, arcs: Iterable[Sequence[int]]) -> "Orientation":
        head = {}
        for t, h in arcs:
            head[canon(t, h)] = h
        if set(head) != set(g.edges):
            raise MissingEdge("orientation must direct every edge exactly once")
        return cls(g.edges, tuple(head[e] for e in g.edges))

    def arcs(self) -> list[tuple[int, int]]:
        """(tail, head) pairs."""
        return [(u if h == v else v, h) for (u, v), h in zip(self.edges, self.heads)]

    def indegrees(self, n: int) -> Exponents:
        d = [0] * n
        for h in self.heads:
            d[h] += 1
        return tuple(d)

    def is_acyclic(self, n: int) -> bool:
        indeg = list(self.indegrees(n))
        out: list[list[int]] = [[] for _ in range(n)]
        for t, h in self.arcs():
            out[t].append(h)
        stack = [v for v in range(n) if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        return seen == n


def all_orientations(g: Graph) -> Iterator[Orientation]:
    """Every orientation, in lexicographic order of head choices (smaller endpoint first)."""
    for bits in itertools.product((0, 1), repeat=g.m):
        yield Orientation(g.edges, tuple(e[b] for e, b in zip(g.edges, bits)))


def orientation_coefficient(f: FactorList, heads: Sequence[int]) -> object:
    """Product of the coefficients picked when each factor contributes its head variable."""
    fld = f.field
    acc = fld.one
    for (u, a, v, b, _), h in zip(f.factors, heads):
        acc = fld.mul(acc, a if h == u else b)
    return acc
