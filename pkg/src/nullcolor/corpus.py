"""Seeded generators for test and census corpora.

Triangulations come from iterated vertex insertion into a random face,
followed by random edge flips so the corpus is not limited to stacked
triangulations. Near-triangulations are cut out of those by peeling boundary
vertices.
"""

from __future__ import annotations

import random
from typing import Iterator

from .errors import InputError
from .graphs import (
    Graph,
    NearTriangulation,
    PlaneEmbedding,
    canon,
    validate_near_triangulation,
)


def _insert(rots: dict[int, list[int]], face: tuple[int, int, int], w: int) -> None:
    a, b, c = face
    rots[b].insert(rots[b].index(a) + 1, w)
    rots[c].insert(rots[c].index(b) + 1, w)
    rots[a].insert(rots[a].index(c) + 1, w)
    rots[w] = [a, c, b]


def _flip(rots: dict[int, list[int]], a: int, b: int) -> bool:
    """Replace edge ab by the opposite diagonal cd; False if that would be illegal."""
    rb, ra = rots[b], rots[a]
    c = rb[(rb.index(a) + 1) % len(rb)]
    d = ra[(ra.index(b) + 1) % len(ra)]
    if c == d or d in rots[c] or len(ra) <= 3 or len(rb) <= 3:
        return False
    rc, rd = rots[c], rots[d]
    rc.insert(rc.index(b) + 1, d)
    rd.insert(rd.index(a) + 1, c)
    ra.remove(b)
    rb.remove(a)
    return True


def random_triangulation(n: int, rng: random.Random, flips: int | None = None) -> PlaneEmbedding:
    """Plane triangulation on ``0..n-1`` (n >= 3); outer face is the first traced face."""
    if n < 3:
        raise ValueError("a triangulation needs at least 3 vertices")
    rots: dict[int, list[int]] = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    for w in range(3, n):
        faces = PlaneEmbedding({v: tuple(r) for v, r in rots.items()}).faces()
        _insert(rots, rng.choice(sorted(faces)), w)
    if flips is None:
        flips = rng.randint(0, 2 * n)
    for _ in range(flips):
        edges = sorted({canon(u, v) for u, r in rots.items() for v in r})
        a, b = rng.choice(edges)
        _flip(rots, a, b)
    emb = PlaneEmbedding({v: tuple(r) for v, r in sorted(rots.items())})
    return emb.with_outer(emb.faces()[0])


def random_near_triangulation(
    n_max: int, rng: random.Random, n_min: int = 3
) -> NearTriangulation:
    """Triangulation with a random outer face, then boundary vertices peeled at random."""
    n = rng.randint(max(n_min, 3), n_max)
    emb = random_triangulation(n, rng)
    faces = emb.faces()
    nt = validate_near_triangulation(emb.with_outer(rng.choice(faces)))
    for _ in range(rng.randint(0, max(0, (n - 3) // 2))):
        cands = list(nt.boundary)
        rng.shuffle(cands)
        for v in cands:
            trial = _peel(nt, v)
            if trial is not None:
                nt = trial
                break
        else:
            break
    return relabel_near_triangulation(nt)


def _peel(nt: NearTriangulation, v: int) -> NearTriangulation | None:
    """Delete boundary vertex v if what remains is still a near-triangulation."""
    if len(nt.vertices) <= 3:
        return None
    keep = [w for w in nt.vertices if w != v]
    emb = nt.embedding.restrict(keep)
    b = list(nt.boundary)
    i = b.index(v)
    y, t = b[i - 1], b[(i + 1) % len(b)]
    rot = list(nt.embedding.rotations[v])
    j = rot.index(y)
    seq = rot[j:] + rot[:j]
    k = seq.index(t)
    first, second = seq[1:k], seq[k + 1 :]
    path = first if not second else second[::-1]
    if first and second:
        return None
    new_b = b[:i] + path + b[i + 1 :]
    if len(set(new_b)) != len(new_b):
        return None
    try:
        return validate_near_triangulation(emb.with_outer(new_b))
    except InputError:
        return None


def relabel_near_triangulation(nt: NearTriangulation) -> NearTriangulation:
    """Renumber vertices to 0..n-1 in sorted order."""
    old = nt.vertices
    new = {v: i for i, v in enumerate(old)}
    rots = {new[v]: tuple(new[w] for w in nt.embedding.rotations[v]) for v in old}
    outer = tuple(new[v] for v in nt.boundary)
    return validate_near_triangulation(PlaneEmbedding(rots, outer))


def embedding_graph(emb: PlaneEmbedding) -> Graph:
    verts = emb.vertices
    return Graph(len(verts), emb.edges)


def triangulation_corpus(seed: int, count: int, n_min: int = 3, n_max: int = 10) -> Iterator[PlaneEmbedding]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_triangulation(rng.randint(n_min, n_max), rng)


def near_triangulation_corpus(seed: int, count: int, n_max: int = 9) -> Iterator[NearTriangulation]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_near_triangulation(n_max, rng)


def k4_embedding() -> PlaneEmbedding:
    """K4 with outer face (0, 1, 2) and vertex 3 inside."""
    rots: dict[int, list[int]] = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    _insert(rots, (0, 1, 2), 3)
    emb = PlaneEmbedding({v: tuple(r) for v, r in rots.items()})
    return emb.with_outer((0, 1, 2))


def octahedron_embedding() -> PlaneEmbedding:
    """Octahedron: antipodal pairs (0,5), (1,3), (2,4)."""
    rots = {
        0: (1, 2, 3, 4),
        5: (4, 3, 2, 1),
        1: (0, 4, 5, 2),
        2: (0, 1, 5, 3),
        3: (0, 2, 5, 4),
        4: (0, 3, 5, 1),
    }
    emb = PlaneEmbedding(rots)
    return emb.with_outer(emb.faces()[0])


def random_clique_sum_tree(rng: random.Random, parts: int | None = None, n_max: int = 7):
    """Random clique-sum composition of triangulations and V8 pieces.

    Glue sizes 1-3 are drawn per step (3 only for triangulation leaves glued on
    a triangle of the running graph); each clique edge is dropped with
    probability 1/4.
    """
    from .certify import V8, CliqueSumTree, Glue
    from .graphs import clique_sum, wagner_v8

    if parts is None:
        parts = rng.randint(2, 4)

    def leaf():
        if rng.random() < 0.3:
            return V8, wagner_v8()
        emb = random_triangulation(rng.randint(3, n_max), rng)
        return emb, embedding_graph(emb)

    first, cur = leaf()
    leaves, glues = [first], []
    for _ in range(parts - 1):
        part, pg = leaf()
        sizes = [1, 2] if part == V8 else [1, 2, 3]
        if not cur.triangles():
            sizes = [s for s in sizes if s < 3]
        k = rng.choice(sizes)
        if k == 1:
            left = [rng.randrange(cur.n)]
            right = [rng.randrange(pg.n)]
        elif k == 2:
            left = list(rng.choice(cur.edges))
            right = list(rng.choice(pg.edges))
        else:
            left = list(rng.choice(cur.triangles()))
            right = list(rng.choice(pg.triangles()))
        rng.shuffle(right)
        ident = dict(zip(left, right))
        clique_edges = [canon(a, b) for i, a in enumerate(left) for b in left[i + 1 :]]
        drop = tuple(sorted(e for e in clique_edges if rng.random() < 0.25))
        glue = Glue(ident, drop)
        cur = clique_sum(cur, pg, ident, drop)
        leaves.append(part)
        glues.append(glue)
    return CliqueSumTree(leaves, glues)
