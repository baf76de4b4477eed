import itertools
import random

import pytest
from hypothesis import given, strategies as st

from nullcolor.algebra import field_make
from nullcolor.certify import (
    CASES,
    V8,
    CliqueSumTree,
    Glue,
    check_nice,
    clique_sum_monomial,
    find_matching_at3,
    nice_monomial,
    split_at_triangle,
    triangle_deleted_monomial,
    triangulation_monomial,
    v8_rooted_monomial,
)
from nullcolor.corpus import (
    _insert,
    embedding_graph,
    k4_embedding,
    octahedron_embedding,
    random_clique_sum_tree,
    random_near_triangulation,
    random_triangulation,
)
from nullcolor.errors import MapTooLarge, MissingSplit, NotATriangle, NotBoundaryEdge, NotV8Edge
from nullcolor.graphs import Graph, PlaneEmbedding, canon, validate_near_triangulation, wagner_v8
from nullcolor.polys import coeff_of_monomial, decorated_factors, default_decoration, expand_capped, random_decoration

from oracles import naive_expand

# Fixed shapes on which the recursion reaches its rarer branches (default decoration, F_7).
SPECIAL_CASE = (
    {0: (3, 4, 6, 1), 1: (2, 5, 3, 0, 6), 2: (4, 3, 5, 1, 6), 3: (4, 0, 1, 5, 2),
     4: (0, 3, 2, 6), 5: (1, 2, 3), 6: (0, 4, 2, 1)},
    (2, 3, 4),
    (2, 3),
)
NO_SPECIAL_CASE = (
    {0: (4, 3, 5), 1: (3, 4, 2), 2: (3, 1, 5), 3: (0, 4, 1, 2, 5), 4: (0, 1, 3), 5: (3, 2, 0)},
    (0, 4, 1, 2, 5),
    (0, 4),
)


def nice_set(nt, x, y, dec, fld):
    """All nice monomials of D_{G-e}, by filtering a capped expansion."""
    g = embedding_graph(nt.embedding)
    edges = [e for e in g.edges if e != canon(x, y)]
    poly = expand_capped(decorated_factors(g, fld, dec, edges=edges), 4)
    out = set()
    for mono in poly:
        try:
            check_nice(mono, nt, x, y)
        except Exception:
            continue
        out.add(mono)
    return out


def test_k3_base_case(f7):
    nt = validate_near_triangulation(PlaneEmbedding({0: (1, 2), 1: (2, 0), 2: (0, 1)}, (0, 1, 2)))
    dec = {(0, 1): (1, 1), (0, 2): (3, 5), (1, 2): (2, 4)}
    cert = nice_monomial(nt, (0, 1), dec, f7)
    assert cert.monomial == (0, 0, 2)
    assert cert.coefficient == 5 * 4 % 7


def test_k4_nice_monomial(f5):
    nt = validate_near_triangulation(k4_embedding())
    g = embedding_graph(nt.embedding)
    dec = random_decoration(g, f5, random.Random(3))
    cert = nice_monomial(nt, (0, 1), dec, f5)
    assert cert.monomial == (0, 0, 2, 3)
    assert cert.monomial in nice_set(nt, 0, 1, dec, f5)
    edges = [e for e in g.edges if e != (0, 1)]
    assert naive_expand(decorated_factors(g, f5, dec, edges=edges))[(0, 0, 2, 3)] == cert.coefficient


def test_not_boundary_edge(f5):
    nt = validate_near_triangulation(k4_embedding())
    with pytest.raises(NotBoundaryEdge):
        nice_monomial(nt, (0, 3), default_decoration(embedding_graph(nt.embedding), f5), f5)


@pytest.mark.parametrize("shape,case", [(SPECIAL_CASE, "SpecialMonomial"), (NO_SPECIAL_CASE, "NoSpecial")])
def test_rare_branches_are_exercised(shape, case, f7):
    rots, outer, e = shape
    nt = validate_near_triangulation(PlaneEmbedding(rots, outer))
    dec = default_decoration(embedding_graph(nt.embedding), f7)
    cert = nice_monomial(nt, e, dec, f7)
    assert case in {s["case"] for s in cert.trace}
    assert cert.monomial in nice_set(nt, *e, dec, f7)


@given(st.integers(0, 100_000), st.sampled_from(["5", "7", "Q"]))
def test_nice_monomial_matches_filtered_expansion(seed, fspec):
    rng = random.Random(seed)
    fld = field_make(fspec)
    nt = random_near_triangulation(9, rng)
    dec = random_decoration(embedding_graph(nt.embedding), fld, rng)
    b = nt.boundary
    i = rng.randrange(len(b))
    x, y = (b[i], b[(i + 1) % len(b)]) if rng.random() < 0.5 else (b[(i + 1) % len(b)], b[i])
    cert = nice_monomial(nt, (x, y), dec, fld)
    assert cert.trace and all(s["case"] in CASES for s in cert.trace)
    assert cert.verify() != fld.zero
    if fspec != "Q":  # the filtered expansion is the slow part
        assert cert.monomial in nice_set(nt, x, y, dec, fld)


@given(st.integers(0, 100_000))
def test_triangulation_monomial_degree_four(seed):
    rng = random.Random(seed)
    fld = field_make("5")
    emb = random_triangulation(rng.randint(3, 10), rng)
    g = embedding_graph(emb)
    cert = triangulation_monomial(emb, random_decoration(g, fld, rng), fld)
    assert cert.max_degree <= 4
    assert sum(cert.monomial) == g.m


def test_k4_triangle_deletion(f7):
    emb = k4_embedding()
    g = embedding_graph(emb)
    dec = random_decoration(g, f7, random.Random(0))
    cert = triangle_deleted_monomial(emb, (0, 1, 2), dec, f7)
    assert cert.monomial == (0, 0, 0, 3)
    expected = 1
    for e in [(0, 3), (1, 3), (2, 3)]:
        expected = expected * dec[e][1] % 7
    assert cert.coefficient == expected


def test_octahedron_facial_triangle(f5):
    emb = octahedron_embedding()
    g = embedding_graph(emb)
    for face in emb.faces():
        cert = triangle_deleted_monomial(emb, face, random_decoration(g, f5, random.Random(1)), f5)
        assert all(cert.monomial[v] == 0 for v in face)
        assert cert.max_degree <= 4


def test_not_a_triangle(f5):
    emb = octahedron_embedding()
    with pytest.raises(NotATriangle):
        triangle_deleted_monomial(emb, (0, 5, 1), default_decoration(embedding_graph(emb), f5), f5)


def test_separating_triangle_needs_split(f5):
    rots = {v: list(r) for v, r in k4_embedding().rotations.items()}
    _insert(rots, (0, 1, 3), 4)  # 4 sits inside 013, so 013 separates 4 from 2
    emb = PlaneEmbedding({v: tuple(r) for v, r in rots.items()}, (0, 1, 2))
    dec = random_decoration(embedding_graph(emb), f5, random.Random(2))
    tri = (0, 1, 3)
    with pytest.raises(MissingSplit):
        triangle_deleted_monomial(emb, tri, dec, f5)
    split = split_at_triangle(emb, tri)
    assert split is not None
    cert = triangle_deleted_monomial(emb, tri, dec, f5, split)
    assert all(cert.monomial[v] == 0 for v in tri) and cert.max_degree <= 4
    assert split_at_triangle(emb, (0, 1, 2)) is None


@pytest.mark.parametrize("e", [(0, 1), (3, 4), (0, 4), (2, 6)])
def test_v8_rooted(e, qq):
    g = wagner_v8()
    cert = v8_rooted_monomial(e, default_decoration(g, qq), qq)
    assert sum(cert.monomial) == 11
    assert cert.monomial[e[0]] == cert.monomial[e[1]] == 0
    assert cert.max_degree <= 3
    assert abs(cert.coefficient) == 1


def test_v8_rejects_non_edge(qq):
    with pytest.raises(NotV8Edge):
        v8_rooted_monomial((0, 2), default_decoration(wagner_v8(), qq), qq)


def test_single_k4_leaf(f7):
    tree = CliqueSumTree([k4_embedding()], [])
    g, _ = tree.compose()
    cert = clique_sum_monomial(tree, random_decoration(g, f7, random.Random(0)), f7)
    assert cert.max_degree <= 4 and cert.verify()


def test_k4_plus_v8_on_an_edge(f7):
    tree = CliqueSumTree([k4_embedding(), V8], [Glue({0: 0, 1: 1})])
    g, maps = tree.compose()
    assert (g.n, g.m) == (10, 6 + 12 - 1)
    dec = random_decoration(g, f7, random.Random(4))
    cert = clique_sum_monomial(tree, dec, f7)
    assert cert.max_degree <= 4
    assert coeff_of_monomial(decorated_factors(g, f7, dec), cert.monomial) == cert.coefficient
    # the glued vertices receive in-degree 0 from the V8 side
    v8_part = v8_rooted_monomial((0, 1), {e: dec[canon(maps[1][e[0]], maps[1][e[1]])] for e in wagner_v8().edges}, f7)
    assert v8_part.monomial[0] == v8_part.monomial[1] == 0


def test_glue_of_four_vertices_is_rejected(f7):
    rng = random.Random(0)
    big = random_triangulation(6, rng)
    tree = CliqueSumTree([big, big], [Glue({0: 0, 1: 1, 2: 2, 3: 3})])
    with pytest.raises(MapTooLarge):
        tree.compose()


@given(st.integers(0, 100_000))
def test_random_clique_sums(seed):
    rng = random.Random(seed)
    fld = field_make(rng.choice(["5", "7", "Q"]))
    tree = random_clique_sum_tree(rng)
    g, _ = tree.compose()
    dec = random_decoration(g, fld, rng)
    cert = clique_sum_monomial(tree, dec, fld)
    assert cert.max_degree <= 4
    assert sum(cert.monomial) == g.m
    assert coeff_of_monomial(decorated_factors(g, fld, dec), cert.monomial) == cert.coefficient != fld.zero


def test_matching_examples(qq):
    k4 = embedding_graph(k4_embedding())
    s, cert = find_matching_at3(k4, default_decoration(k4, qq), qq)
    assert s == () and cert.max_degree <= 3
    s, _ = find_matching_at3(Graph(3, ()), {}, qq)
    assert s == ()
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    s, cert = find_matching_at3(c4, default_decoration(c4, qq), qq)
    assert s == ()


def test_matching_respects_size_then_lex_order(f5):
    # K5 minus an edge is planar; whatever S is found must be the first of its size that works
    g = Graph.from_edges(5, [e for e in itertools.combinations(range(5), 2) if e != (3, 4)])
    dec = default_decoration(g, f5)
    s, cert = find_matching_at3(g, dec, f5)
    rest = [e for e in g.edges if e not in s]
    assert len(expand_capped(decorated_factors(g, f5, dec, edges=rest), 3))
    for size in range(len(s)):
        for combo in itertools.combinations(g.edges, size):
            verts = [v for e in combo for v in e]
            if len(set(verts)) == len(verts):
                rest = [e for e in g.edges if e not in combo]
                assert not len(expand_capped(decorated_factors(g, f5, dec, edges=rest), 3))
