import itertools
import random

import pytest
from hypothesis import given, strategies as st

from nullcolor.algebra import field_make
from nullcolor.bounds import (
    af_min_product,
    af_min_product_brute,
    af_weak_bound,
    bound_report,
    convexity_holds,
    count_nonzero_points,
    lemma_product_check,
)
from nullcolor.errors import DegenerateMax, Infeasible, PositiveRequired, PreconditionViolated
from nullcolor.polys import Factor, FactorList, SparsePoly


def test_min_product_examples():
    assert af_min_product((3, 3), 2) == (3, (1, 3))
    assert af_min_product((2, 4, 3), 0) == (24, (2, 4, 3))
    assert af_min_product((2, 4, 3), 6)[0] == 1
    with pytest.raises(Infeasible):
        af_min_product((2, 2), -1)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=5), st.integers(0, 20))
def test_min_product_is_optimal(sizes, d):
    best, q = af_min_product(sizes, d)
    assert all(1 <= qi <= s for qi, s in zip(q, sizes))
    assert sum(q) >= sum(sizes) - d
    assert best == af_min_product_brute(sizes, d)


def test_weak_bound_examples():
    wb = af_weak_bound(20, 4, 6, 5)
    assert (wb.t, wb.num, wb.den) == (5, 10, 4)
    assert str(wb) == "5^(10/4)"
    for n in range(3, 12):
        wb = af_weak_bound(5 * n, n, 3 * n - 6, 5)
        assert wb.num == n + 6 and wb.den == 4
    assert af_weak_bound(7, 4, 3, 3).le(1)
    with pytest.raises(PreconditionViolated):
        af_weak_bound(10, 4, 3, 1)
    with pytest.raises(PreconditionViolated):
        af_weak_bound(5, 4, 3, 3)


def test_weak_bound_exact_comparison():
    wb = af_weak_bound(20, 4, 6, 5)  # 5^2.5 ~ 55.9
    assert wb.le(56) and not wb.le(55)


def test_lemma_examples():
    assert lemma_product_check([4]) == (True, 4**3, 4**3)
    assert lemma_product_check([2, 2]) == (True, 4, 4)
    with pytest.raises(DegenerateMax):
        lemma_product_check([1, 1])
    with pytest.raises(PositiveRequired):
        lemma_product_check([0, 3])


def test_lemma_exhaustive():
    for n in range(1, 6):
        for a in itertools.product(range(1, 7), repeat=n):
            if max(a) >= 2:
                assert lemma_product_check(a)[0], a


def test_convexity_exhaustive():
    for t in range(2, 65):
        for x in range(1, t + 1):
            assert convexity_holds(x, t)


def test_count_examples(f5):
    const = SparsePoly(f5, 2, {(0, 0): 3})
    assert count_nonzero_points(const, [[0, 1], [0, 1, 2]]) == 6
    vanishing = FactorList(f5, 1, (Factor(0, 1, 0, 0, 0),))
    rep = bound_report(vanishing, [[0]])
    assert rep["count"] == 0 and rep["vanishes"] and rep["chain_holds"] is None


@given(st.integers(0, 100_000))
def test_chain_on_random_products(seed):
    rng = random.Random(seed)
    fld = field_make("5")
    n = rng.randint(1, 4)
    factors = []
    for _ in range(rng.randint(0, 6)):
        u, v = rng.randrange(n), rng.randrange(n)
        factors.append(Factor(u, rng.randrange(5), v, rng.randrange(5), rng.randrange(5)))
    f = FactorList(fld, n, tuple(factors))
    lists = [rng.sample(range(5), rng.randint(2, 5)) for _ in range(n)]
    rep = bound_report(f, lists)
    if rep["count"]:
        assert rep["chain_holds"]
