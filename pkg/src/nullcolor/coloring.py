"""Coloring extraction and counting.

* :func:`cn_solve` turns a non-vanishing top monomial into an actual point of
  the list grid where the polynomial is nonzero (effective Combinatorial
  Nullstellensatz).
* :func:`count_colorings` and :func:`adversarial_min` are brute-force counters
  used as oracles.
* :func:`cyclic_embed` / :func:`multiplicative_instance` realize a cyclic
  group inside a field's multiplicative group so group-coloring constraints
  become factors ``x_head - g^l x_tail``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .algebra import Field, FieldSpec, divisors, field_make, find_element_of_order, is_prime, totient
from .errors import (
    BudgetExceeded,
    FieldTooLarge,
    GuaranteeViolated,
    LabelOutOfRange,
    ListTooSmall,
    MalformedInput,
    NoWitnessMonomial,
)
from .graphs import Edge, Graph
from .polys import DEFAULT_BUDGET, Factor, FactorList, Orientation, coeff_of_monomial, expand_capped

GRID_BUDGET = 10**8


def _check_lists(lists: Sequence[Sequence], n: int) -> list[list]:
    if len(lists) != n:
        raise MalformedInput(f"need {n} lists, got {len(lists)}")
    out = []
    for i, A in enumerate(lists):
        A = list(A)
        if not A:
            raise MalformedInput(f"list {i} is empty")
        if len(set(A)) != len(A):
            raise MalformedInput(f"list {i} has repeated elements")
        out.append(A)
    return out


def _grid_size(lists) -> int:
    return math.prod(len(A) for A in lists)


# -- Combinatorial Nullstellensatz ---------------------------------------------

def find_witness(f: FactorList, lists: Sequence[Sequence], budget: int = DEFAULT_BUDGET):
    """A non-vanishing top-degree monomial with deg_i <= |A_i| - 1, or raise."""
    top, scalar = f.top_degree_part()
    if scalar == f.field.zero:
        raise NoWitnessMonomial("polynomial is identically zero")
    caps = [len(A) - 1 for A in lists]
    poly = expand_capped(top, caps, budget)
    if not len(poly):
        raise ListTooSmall("every non-vanishing top monomial exceeds some list size")
    mono, coeff = next(iter(poly.items()))
    return mono, f.field.mul(coeff, scalar)


def cn_solve(
    f: FactorList,
    lists: Sequence[Sequence],
    monomial: Sequence[int] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> tuple:
    """Point of ``A_1 x ... x A_n`` where every factor is nonzero.

    Variables are fixed one at a time. Each candidate value is accepted only
    if the interpolation sum over the remaining (truncated) grid,
    sum P(point) / prod phi_j'(b_j), stays nonzero; that sum equals the
    coefficient of the witness monomial at the start, so the walk cannot get
    stuck. Exhaustive enumeration is the fallback.
    """
    fld = f.field
    lists = _check_lists(lists, f.n)
    if monomial is None:
        mono, _ = find_witness(f, lists, budget)
    else:
        mono = tuple(monomial)
        if len(mono) != f.n:
            raise MalformedInput("witness monomial has the wrong length")
        top, scalar = f.top_degree_part()
        if sum(mono) != len(top) or scalar == fld.zero:
            raise NoWitnessMonomial("witness is not of top degree")
        if any(k >= len(A) for k, A in zip(mono, lists)):
            raise ListTooSmall("some list has size <= the witness degree there")
        if coeff_of_monomial(top, mono) == fld.zero:
            raise NoWitnessMonomial("supplied monomial vanishes")
    grid = [A[: k + 1] for A, k in zip(lists, mono)]
    if _grid_size(grid) > budget:
        raise BudgetExceeded("truncated grid exceeds budget")
    weights = []
    for B in grid:
        w = {}
        for b in B:
            d = fld.one
            for a in B:
                if a != b:
                    d = fld.mul(d, fld.sub(b, a))
            w[b] = fld.inv(d)
        weights.append(w)

    def weighted_sum(prefix: list) -> object:
        rest = grid[len(prefix):]
        rest_w = weights[len(prefix):]
        acc = fld.zero
        for tail in itertools.product(*rest):
            val = f.evaluate(prefix + list(tail))
            if val != fld.zero:
                for w, b in zip(rest_w, tail):
                    val = fld.mul(val, w[b])
                acc = fld.add(acc, val)
        return acc

    point: list = []
    if weighted_sum(point) != fld.zero:
        for i in range(f.n):
            for b in grid[i]:
                if weighted_sum(point + [b]) != fld.zero:
                    point.append(b)
                    break
            else:
                break
    if len(point) == f.n and f.evaluate(point) != fld.zero:
        return tuple(point)
    for cand in itertools.product(*lists):
        if f.evaluate(cand) != fld.zero:
            return cand
    raise GuaranteeViolated("witness monomial exists but no nonzero grid point was found")


# -- brute-force counters -------------------------------------------------------

def _count_forbidden(n: int, lists, forbid_fns) -> int:
    """Count grid points; ``forbid_fns[i]`` maps a prefix to values banned at i."""

    def rec(i: int, prefix: list) -> int:
        if i == n:
            return 1
        banned = forbid_fns[i](prefix)
        total = 0
        for val in lists[i]:
            if val not in banned:
                prefix.append(val)
                total += rec(i + 1, prefix)
                prefix.pop()
        return total

    return rec(0, [])


def count_colorings(
    g: Graph,
    field: Field,
    dec: Mapping[Edge, tuple],
    lab: Mapping[Edge, object] | None,
    lists: Sequence[Sequence],
    budget: int = GRID_BUDGET,
) -> int:
    """Exact number of list points with ``a_e f(u) + b_e f(v) + l(e) != 0`` on every edge."""
    lists = _check_lists(lists, g.n)
    if _grid_size(lists) > budget:
        raise BudgetExceeded(f"grid of size {_grid_size(lists)} exceeds {budget}")
    z = field.zero
    earlier: list[list[tuple[int, object, object]]] = [[] for _ in range(g.n)]
    for e in g.edges:
        u, v = e
        a, b = dec[e]
        c = lab[e] if lab is not None else z
        # x_v != -(a x_u + c) / b
        earlier[v].append((u, field.neg(field.div(a, b)), field.neg(field.div(c, b))))

    def make(i):
        cons = earlier[i]

        def banned(prefix):
            return {field.add(field.mul(k, prefix[u]), c0) for u, k, c0 in cons}

        return banned

    return _count_forbidden(g.n, lists, [make(i) for i in range(g.n)])


def count_factor_solutions(f: FactorList, lists: Sequence[Sequence], budget: int = GRID_BUDGET) -> int:
    """Grid points where every factor is nonzero, by plain enumeration."""
    lists = _check_lists(lists, f.n)
    if _grid_size(lists) > budget:
        raise BudgetExceeded(f"grid of size {_grid_size(lists)} exceeds {budget}")
    z = f.field.zero
    return sum(1 for pt in itertools.product(*lists) if f.evaluate(pt) != z)


@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups; elements are residue tuples."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders or any(m < 2 for m in self.orders):
            raise MalformedInput("cyclic factor orders must all be >= 2")

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def elements(self):
        return itertools.product(*(range(m) for m in self.orders))

    def add(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.orders))

    def sub(self, a, b):
        return tuple((x - y) % m for x, y, m in zip(a, b, self.orders))

    def element(self, obj) -> tuple[int, ...]:
        if isinstance(obj, int) and not isinstance(obj, bool) and len(self.orders) == 1:
            return (obj % self.orders[0],)
        if isinstance(obj, (list, tuple)) and len(obj) == len(self.orders):
            return tuple(int(x) % m for x, m in zip(obj, self.orders))
        raise MalformedInput(f"bad group element {obj!r}")

    def encode(self, a):
        return a[0] if len(self.orders) == 1 else list(a)


def count_group_colorings(
    g: Graph,
    orient: Orientation,
    group: AbelianGroup,
    lab: Mapping[Edge, tuple],
    lists: Sequence[Sequence] | None = None,
) -> int:
    """Colorings with ``c(head) - c(tail) != l(e)`` for every oriented edge."""
    if lists is None:
        lists = [list(group.elements())] * g.n
    lists = _check_lists(lists, g.n)
    earlier: list[list[tuple[int, object, int]]] = [[] for _ in range(g.n)]
    for e, (tail, head) in zip(orient.edges, orient.arcs()):
        ell = lab[e]
        if head > tail:
            earlier[head].append((tail, ell, +1))  # c(head) != c(tail) + l
        else:
            earlier[tail].append((head, ell, -1))  # c(tail) != c(head) - l

    def make(i):
        cons = earlier[i]

        def banned(prefix):
            return {
                group.add(prefix[j], ell) if sgn > 0 else group.sub(prefix[j], ell)
                for j, ell, sgn in cons
            }

        return banned

    return _count_forbidden(g.n, lists, [make(i) for i in range(g.n)])


def adversarial_min(
    g: Graph,
    orient: Orientation,
    group: AbelianGroup,
    lists: Sequence[Sequence] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> tuple[dict[Edge, tuple], int]:
    """Edge labeling minimizing the number of group colorings (first in lex order)."""
    total = group.size ** g.m
    if total > budget:
        raise BudgetExceeded(f"{total} labelings exceed budget {budget}")
    elems = list(group.elements())
    best_lab, best = None, None
    for combo in itertools.product(elems, repeat=g.m):
        lab = dict(zip(g.edges, combo))
        cnt = count_group_colorings(g, orient, group, lab, lists)
        if best is None or cnt < best:
            best, best_lab = cnt, lab
    return best_lab, best


def group_field_factors(
    g: Graph, orient: Orientation, field: Field, lab: Mapping[Edge, object]
) -> FactorList:
    """Field form of c(head) - c(tail) != l(e): factor ``-x_tail + x_head - l``."""
    one = field.one
    out = []
    for e, (tail, head) in zip(orient.edges, orient.arcs()):
        out.append(Factor(tail, field.neg(one), head, one, field.neg(lab[e])))
    return FactorList(field, g.n, tuple(out))


# -- cyclic groups inside multiplicative groups ---------------------------------

def multiplicative_order(a: int, m: int) -> int:
    for d in divisors(totient(m)):
        if pow(a, d, m) == 1:
            return d
    raise ValueError(f"{a} is not a unit mod {m}")


@dataclass
class CyclicEmbedding:
    m: int
    p: int
    degree: int
    totient: int
    field: Field
    generator: object
    _log: dict = field(default_factory=dict, repr=False)

    def power(self, r: int):
        return self.field.pow(self.generator, r % self.m)

    def log(self, x) -> int:
        if not self._log:
            cur = self.field.one
            for r in range(self.m):
                self._log[cur] = r
                cur = self.field.mul(cur, self.generator)
        if x not in self._log:
            raise LabelOutOfRange(f"{x!r} is not in the embedded subgroup")
        return self._log[x]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "p": self.p,
            "degree": self.degree,
            "totient": self.totient,
            "field_size": self.field.size,
            "field": self.field.spec.to_json(),
            "generator": self.field.encode(self.generator),
        }


def cyclic_embed(m: int, use_totient: bool = False, max_size: int = 1 << 16) -> CyclicEmbedding:
    """Embed Z_m in F_{p^k}^* with p the smallest prime coprime to m.

    ``k`` is the multiplicative order of p mod m by default (the smallest
    field that works); ``use_totient=True`` takes k = phi(m) instead.
    """
    if m < 2:
        raise MalformedInput("group order must be >= 2")
    p = 2
    while not (is_prime(p) and math.gcd(p, m) == 1):
        p += 1
    phi = totient(m)
    k = phi if use_totient else multiplicative_order(p, m)
    if p**k > max_size:
        raise FieldTooLarge(f"F_{p}^{k} has {p**k} elements (> {max_size})")
    fld = field_make(FieldSpec(p, k))
    gen = find_element_of_order(fld, m)
    return CyclicEmbedding(m, p, k, phi, fld, gen)


@dataclass
class MultiplicativeInstance:
    factors: FactorList
    embedding: CyclicEmbedding

    def lists_to_field(self, lists: Sequence[Sequence[int]]) -> list[list]:
        return [[self.embedding.power(r) for r in A] for A in lists]

    def point_to_group(self, point: Sequence) -> tuple[int, ...]:
        return tuple(self.embedding.log(x) for x in point)


def multiplicative_instance(
    g: Graph, orient: Orientation, lab: Mapping[Edge, int], emb: CyclicEmbedding
) -> MultiplicativeInstance:
    """Factor ``x_head - g^l x_tail`` per oriented edge.

    On the subgroup grid a point is a solution exactly when
    ``log x_head - log x_tail != l`` on every edge, i.e. a Z_m-coloring.
    """
    fld = emb.field
    out = []
    for e, (tail, head) in zip(orient.edges, orient.arcs()):
        ell = lab[e]
        if isinstance(ell, tuple):
            (ell,) = ell
        if not (isinstance(ell, int) and 0 <= ell < emb.m):
            raise LabelOutOfRange(f"label {ell!r} on {e} is not a residue mod {emb.m}")
        out.append(Factor(head, fld.one, tail, fld.neg(emb.power(ell)), fld.zero))
    return MultiplicativeInstance(FactorList(fld, g.n, tuple(out)), emb)
