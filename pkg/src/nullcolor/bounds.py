"""Counting bounds for nonzero points of a polynomial on a grid.

All comparisons against ``t^((S-n-d)/(t-1))`` are done in integers by raising
both sides to the power ``t - 1``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceeded, DegenerateMax, Infeasible, MalformedInput, PositiveRequired, PreconditionViolated
from .polys import FactorList, SparsePoly

GRID_BUDGET = 10**8


def af_min_product(sizes: Sequence[int], d: int) -> tuple[int, tuple[int, ...]]:
    """Exact min of prod q_i over 1 <= q_i <= |A_i|, sum q_i >= S - d.

    Dynamic program over (index, still-required sum); ties go to the
    smallest q_i at each index.
    """
    sizes = [int(s) for s in sizes]
    if not sizes or any(s < 1 for s in sizes):
        raise MalformedInput("sizes must be a nonempty vector of positive integers")
    if d < 0:
        raise Infeasible("degree must be nonnegative")
    n, S = len(sizes), sum(sizes)
    need = max(0, S - d)
    INF = None
    best = [[INF] * (need + 1) for _ in range(n + 1)]
    best[n][0] = 1
    for i in range(n - 1, -1, -1):
        for r in range(need + 1):
            cur = INF
            for q in range(1, sizes[i] + 1):
                sub = best[i + 1][max(0, r - q)]
                if sub is not INF and (cur is INF or q * sub < cur):
                    cur = q * sub
            best[i][r] = cur
    if best[0][need] is INF:
        raise Infeasible(f"no q-vector reaches sum {need}")
    q, r = [], need
    for i in range(n):
        for qi in range(1, sizes[i] + 1):
            sub = best[i + 1][max(0, r - qi)]
            if sub is not INF and qi * sub == best[i][r]:
                q.append(qi)
                r = max(0, r - qi)
                break
    return best[0][need], tuple(q)


def af_min_product_brute(sizes: Sequence[int], d: int) -> int:
    need = sum(sizes) - d
    return min(
        math.prod(q)
        for q in itertools.product(*(range(1, s + 1) for s in sizes))
        if sum(q) >= need
    )


@dataclass(frozen=True)
class WeakBound:
    """The value t ** (num / den)."""

    t: int
    num: int
    den: int

    @property
    def value(self) -> float:
        return self.t ** (self.num / self.den)

    def le(self, count: int) -> bool:
        """Exact test of ``t ** (num/den) <= count``."""
        if count < 0:
            return False
        return count**self.den >= self.t**self.num

    def to_json(self) -> dict:
        return {"t": self.t, "num": self.num, "den": self.den}

    def __str__(self) -> str:
        return f"{self.t}^({self.num}/{self.den})"


def af_weak_bound(S: int, n: int, d: int, t: int) -> WeakBound:
    """Weak Alon-Furedi bound t^((S-n-d)/(t-1)); needs S >= n + d and t >= 2."""
    if t < 2:
        raise PreconditionViolated("need t >= 2")
    if S < n + d:
        raise PreconditionViolated(f"need S >= n + d ({S} < {n + d})")
    return WeakBound(t, S - n - d, t - 1)


def lemma_product_check(a: Sequence[int]) -> tuple[bool, int, int]:
    """Compare (prod a_i)^(t-1) with t^(S-n), t = max a_i; the first should be >=."""
    a = list(a)
    if not a or any(x < 1 for x in a):
        raise PositiveRequired("entries must be positive integers")
    t = max(a)
    if t < 2:
        raise DegenerateMax("max entry must be at least 2")
    lhs = math.prod(a) ** (t - 1)
    rhs = t ** (sum(a) - len(a))
    return lhs >= rhs, lhs, rhs


def convexity_holds(x: int, t: int) -> bool:
    """x >= t^((x-1)/(t-1)), checked as x^(t-1) >= t^(x-1)."""
    return x ** (t - 1) >= t ** (x - 1)


def evaluate_sparse(poly: SparsePoly, point: Sequence) -> object:
    fld = poly.field
    acc = fld.zero
    for mono, c in poly.items():
        term = c
        for x, e in zip(point, mono):
            if e:
                term = fld.mul(term, fld.pow(x, e))
        acc = fld.add(acc, term)
    return acc


def count_nonzero_points(
    f: FactorList | SparsePoly, lists: Sequence[Sequence], budget: int = GRID_BUDGET
) -> int:
    """Exhaustive count of grid points with a nonzero value."""
    if len(lists) != f.n:
        raise MalformedInput(f"need {f.n} lists")
    size = math.prod(len(A) for A in lists)
    if size > budget:
        raise BudgetExceeded(f"grid of size {size} exceeds {budget}")
    z = f.field.zero
    if isinstance(f, SparsePoly):
        return sum(1 for pt in itertools.product(*lists) if evaluate_sparse(f, pt) != z)
    return sum(1 for pt in itertools.product(*lists) if f.evaluate(pt) != z)


def bound_report(f: FactorList | SparsePoly, lists: Sequence[Sequence]) -> dict:
    """Brute count next to both bounds, with the chain checked exactly.

    ``chain_holds`` is None when the polynomial vanishes on the whole grid
    (no lower bound applies then).
    """
    sizes = [len(A) for A in lists]
    d = f.degree()
    count = count_nonzero_points(f, lists)
    n, S, t = len(sizes), sum(sizes), max(sizes)
    if d < 0:
        return {"count": count, "degree": d, "vanishes": True, "chain_holds": None}
    mp, q = af_min_product(sizes, d)
    out = {"count": count, "degree": d, "min_product": mp, "q": list(q), "vanishes": count == 0}
    weak = None
    if S >= n + d and t >= 2:
        weak = af_weak_bound(S, n, d, t)
        out["weak_bound"] = weak.to_json()
        out["weak_bound_approx"] = weak.value
    else:
        out["weak_bound"] = None
    if count == 0:
        out["chain_holds"] = None
    else:
        out["chain_holds"] = count >= mp and (weak is None or weak.le(mp))
    return out
