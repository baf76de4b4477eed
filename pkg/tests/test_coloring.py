import itertools
import random

import pytest
from hypothesis import given, strategies as st

from nullcolor.algebra import element_order, field_make
from nullcolor.certify import triangulation_monomial
from nullcolor.coloring import (
    AbelianGroup,
    adversarial_min,
    cn_solve,
    count_colorings,
    count_factor_solutions,
    count_group_colorings,
    cyclic_embed,
    group_field_factors,
    multiplicative_instance,
)
from nullcolor.corpus import embedding_graph, random_triangulation
from nullcolor.errors import FieldTooLarge, LabelOutOfRange, ListTooSmall, NoWitnessMonomial
from nullcolor.graphs import Graph
from nullcolor.polys import (
    Factor,
    FactorList,
    Orientation,
    all_orientations,
    decorated_factors,
    random_decoration,
    random_labeling,
)


def k(n):
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def satisfies(g, fld, dec, lab, point):
    return all(
        fld.add(fld.add(fld.mul(dec[e][0], point[e[0]]), fld.mul(dec[e][1], point[e[1]])), lab[e]) != fld.zero
        for e in g.edges
    )


def test_single_labelled_edge(f5):
    for ell in range(5):
        f = FactorList(f5, 2, (Factor(0, f5.neg(1), 1, 1, f5.neg(ell)),))
        x0, x1 = cn_solve(f, [[3], [0, 1]])
        assert x0 == 3 and (x1 - x0) % 5 != ell


def test_k3_random_labels(f5):
    rng = random.Random(7)
    g = k(3)
    for _ in range(20):
        dec, lab = random_decoration(g, f5, rng), random_labeling(g, f5, rng)
        pt = cn_solve(decorated_factors(g, f5, dec, lab), [list(range(5))] * 3)
        assert satisfies(g, f5, dec, lab, pt)


def test_singleton_lists_on_k3(f5):
    f = decorated_factors(k(3), f5)
    with pytest.raises((ListTooSmall, NoWitnessMonomial)):
        cn_solve(f, [[0], [1], [2]])


def test_supplied_monomial_too_big(f5):
    f = decorated_factors(k(3), f5)
    with pytest.raises(ListTooSmall):
        cn_solve(f, [[0, 1], [0, 1], [0, 1]], monomial=(2, 1, 0))


def test_zero_polynomial(f5):
    f = FactorList(f5, 1, (Factor(0, 0, 0, 0, 0),))
    with pytest.raises(NoWitnessMonomial):
        cn_solve(f, [[0, 1]])


@given(st.integers(0, 100_000), st.sampled_from(["5", "7", "2,3"]))
def test_cn_solve_soundness(seed, fspec):
    rng = random.Random(seed)
    fld = field_make(fspec)
    n = rng.randint(2, 5)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.6]
    g = Graph.from_edges(n, edges)
    dec, lab = random_decoration(g, fld, rng), random_labeling(g, fld, rng)
    els = list(fld.elements())
    lists = [rng.sample(els, min(len(els), 5)) for _ in range(n)]
    f = decorated_factors(g, fld, dec, lab)
    try:
        pt = cn_solve(f, lists)
    except ListTooSmall:
        return
    assert all(x in A for x, A in zip(pt, lists))
    assert satisfies(g, fld, dec, lab, pt)
    assert count_colorings(g, fld, dec, lab, lists) > 0


def test_count_examples(f5):
    assert count_colorings(Graph(2, ()), f5, {}, None, [list(range(5))] * 2) == 25
    dec = {e: (f5.neg(1), 1) for e in k(3).edges}
    assert count_colorings(k(3), f5, dec, None, [list(range(5))] * 3) == 60


@given(st.integers(0, 100_000))
def test_count_matches_plain_enumeration(seed):
    rng = random.Random(seed)
    fld = field_make(rng.choice(["5", "7"]))
    n = rng.randint(1, 5)
    g = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])
    dec, lab = random_decoration(g, fld, rng), random_labeling(g, fld, rng)
    lists = [rng.sample(range(fld.size), rng.randint(1, 4)) for _ in range(n)]
    assert count_colorings(g, fld, dec, lab, lists) == count_factor_solutions(
        decorated_factors(g, fld, dec, lab), lists
    )


@pytest.mark.parametrize("seed", range(6))
def test_triangulation_colorings_via_certificate(seed, f5):
    rng = random.Random(seed)
    emb = random_triangulation(rng.randint(3, 6), rng)
    g = embedding_graph(emb)
    dec = random_decoration(g, f5, rng)
    cert = triangulation_monomial(emb, dec, f5)
    lab = random_labeling(g, f5, rng)
    lists = [list(range(5))] * g.n
    pt = cn_solve(decorated_factors(g, f5, dec, lab), lists, monomial=cert.monomial)
    assert satisfies(g, f5, dec, lab, pt)
    assert count_colorings(g, f5, dec, lab, lists) ** 4 >= 5 ** (g.n + 6)


def test_adversary_examples():
    z5 = AbelianGroup((5,))
    edge = Graph.from_edges(2, [(0, 1)])
    _, cnt = adversarial_min(edge, Orientation.default(edge), z5)
    assert cnt == 20
    lab, cnt = adversarial_min(Graph(3, ()), Orientation.default(Graph(3, ())), z5)
    assert lab == {} and cnt == 125
    _, cnt = adversarial_min(k(3), Orientation.default(k(3)), z5)
    assert cnt >= 50


def test_group_counter_matches_field_encoding(f5):
    z5 = AbelianGroup((5,))
    g = k(3)
    for o in all_orientations(g):
        for combo in itertools.product(range(5), repeat=3):
            lab = dict(zip(g.edges, combo))
            f = group_field_factors(g, o, f5, lab)
            grp = count_group_colorings(g, o, z5, {e: (v,) for e, v in lab.items()})
            assert grp == count_factor_solutions(f, [list(range(5))] * 3)


def test_non_cyclic_group_brute_force():
    klein = AbelianGroup((2, 2))
    g = Graph.from_edges(2, [(0, 1)])
    lab, cnt = adversarial_min(g, Orientation.default(g), klein)
    assert cnt == 4 * 3


@pytest.mark.parametrize("m,p,size", [(5, 2, 16), (6, 5, 25)])
def test_cyclic_embed_examples(m, p, size):
    emb = cyclic_embed(m, use_totient=True)
    assert (emb.p, emb.field.size) == (p, size)
    assert element_order(emb.field, emb.generator) == m


def test_cyclic_embed_m7():
    assert cyclic_embed(7, use_totient=True).field.size == 64
    small = cyclic_embed(7)
    assert small.field.size == 8 and element_order(small.field, small.generator) == 7


def test_cyclic_embed_too_large():
    with pytest.raises(FieldTooLarge):
        cyclic_embed(23, use_totient=True)


@pytest.mark.parametrize("m", range(2, 10))
def test_embedding_predicate_exhaustive(m):
    emb = cyclic_embed(m)
    g = Graph.from_edges(2, [(0, 1)])
    o = Orientation.default(g)
    for ell in range(m):
        f = multiplicative_instance(g, o, {(0, 1): ell}, emb).factors
        for r0, r1 in itertools.product(range(m), repeat=2):
            val = f.evaluate([emb.power(r0), emb.power(r1)])
            assert (val != emb.field.zero) == ((r1 - r0) % m != ell)


def test_identity_label_means_distinct():
    emb = cyclic_embed(5)
    g = Graph.from_edges(2, [(0, 1)])
    inst = multiplicative_instance(g, Orientation.default(g), {(0, 1): 0}, emb)
    sub = inst.lists_to_field([list(range(5))] * 2)
    assert count_factor_solutions(inst.factors, sub) == 20


def test_label_out_of_range():
    emb = cyclic_embed(5)
    g = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(LabelOutOfRange):
        multiplicative_instance(g, Orientation.default(g), {(0, 1): 5}, emb)


def test_k3_solutions_map_back():
    emb = cyclic_embed(5)
    g = k(3)
    o = Orientation.default(g)
    rng = random.Random(0)
    for _ in range(10):
        lab = {e: rng.randrange(5) for e in g.edges}
        inst = multiplicative_instance(g, o, lab, emb)
        pt = cn_solve(inst.factors, inst.lists_to_field([list(range(5))] * 3))
        c = inst.point_to_group(pt)
        assert all((c[h] - c[t]) % 5 != lab[e] for e, (t, h) in zip(o.edges, o.arcs()))
