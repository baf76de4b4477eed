"""Constructive certificates for non-vanishing monomials of bounded degree.

Every certificate is built by following the inductive construction for
near-triangulations (chord split, vertex removal with its three subcases),
then triangle deletion, Wagner-graph pieces and clique-sum assembly. The
coefficient is carried along as a product of local coefficients and then
re-checked against :func:`~nullcolor.polys.coeff_of_monomial`; any
disagreement raises :class:`CertificateMismatch`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .algebra import Field
from .errors import (
    CertificateMismatch,
    GlueMismatch,
    GuaranteeViolated,
    MalformedInput,
    MissingSplit,
    NotATriangle,
    NotBoundaryEdge,
    NotV8Edge,
    SearchExhausted,
    BudgetExceeded,
)
from .graphs import (
    Edge,
    Graph,
    NearTriangulation,
    PlaneEmbedding,
    _components,
    canon,
    check_glue,
    glue_relabel,
    validate_near_triangulation,
    validate_triangulation,
    wagner_v8,
)
from .polys import (
    FactorList,
    all_orientations,
    coeff_of_monomial,
    edge_factors,
    expand_capped,
    orientation_coefficient,
)

CASES = (
    "Base",
    "Chord",
    "BoundaryTriangle",
    "SpecialMonomial",
    "NoSpecial",
    "TriangleDeletion",
    "V8",
    "CliqueGlue",
)

Monomial = dict[int, int]


@dataclass
class MonomialCertificate:
    monomial: tuple[int, ...]
    coefficient: object
    trace: list[dict]
    factors: FactorList = field(repr=False)

    @property
    def field(self) -> Field:
        return self.factors.field

    @property
    def max_degree(self) -> int:
        return max(self.monomial, default=0)

    def verify(self) -> object:
        """Recompute the coefficient independently; raise if it differs or vanishes."""
        fresh = coeff_of_monomial(self.factors, self.monomial)
        if fresh != self.coefficient or fresh == self.field.zero:
            raise CertificateMismatch(
                f"certificate coefficient {self.coefficient!r} but recomputed {fresh!r}"
            )
        return fresh

    def to_json(self) -> dict:
        return {
            "monomial": list(self.monomial),
            "coefficient": self.field.format(self.coefficient),
            "trace": [{"case": s["case"], "vertices": list(s["vertices"])} for s in self.trace],
        }


def _mono_mul(*monos: Monomial) -> Monomial:
    out: Monomial = {}
    for m in monos:
        for v, e in m.items():
            if e:
                out[v] = out.get(v, 0) + e
    return out


def _vector(mono: Monomial, n: int) -> tuple[int, ...]:
    vec = [0] * n
    for v, e in mono.items():
        vec[v] += e
    return tuple(vec)


class _Builder:
    """Shared context for one certificate computation."""

    def __init__(self, fld: Field, n: int, dec: Mapping[Edge, tuple]):
        self.fld = fld
        self.n = n
        self.dec = dec

    def pick(self, u: int, w: int, target: int):
        """Coefficient of ``x_target`` in the factor of edge uw."""
        e = canon(u, w)
        a, b = self.dec[e]
        return a if target == e[0] else b

    def prod(self, values) -> object:
        acc = self.fld.one
        for v in values:
            acc = self.fld.mul(acc, v)
        return acc

    # -- near-triangulation recursion -------------------------------------

    def nice(self, nt: NearTriangulation, x: int, y: int, trace: list) -> tuple[Monomial, object]:
        verts = nt.vertices
        b = list(nt.boundary)
        if len(verts) == 3:
            (v,) = [w for w in verts if w not in (x, y)]
            trace.append({"case": "Base", "vertices": [x, y, v]})
            return {v: 2}, self.fld.mul(self.pick(x, v, v), self.pick(y, v, v))

        chord = _first_chord(nt)
        if chord is not None:
            return self._chord(nt, x, y, chord, trace)

        k = len(b)
        iy = b.index(y)
        ix = b.index(x)
        if (ix - iy) % k == 1:
            v = b[(iy - 1) % k]
            t = b[(iy - 2) % k]
        else:
            v = b[(iy + 1) % k]
            t = b[(iy + 2) % k]
        xs = _interior_fan(nt, v, y, t)
        for w in xs:
            if w not in nt.interior:
                raise GuaranteeViolated(f"neighbour {w} of {v} on the boundary without a chord")

        iv = b.index(v)
        path = xs if b[(iv - 1) % k] == y else xs[::-1]
        new_b = b[:iv] + path + b[iv + 1 :]
        keep = [w for w in verts if w != v]
        sub = validate_near_triangulation(nt.embedding.restrict(keep, new_b))
        m_sub, c_sub = self.nice(sub, x, y, trace)

        fan_coeff = self.prod(self.pick(v, w, w) for w in xs)
        fan = {w: 1 for w in xs}
        if t == x:
            trace.append({"case": "BoundaryTriangle", "vertices": [v, *xs]})
            coeff = self.prod([c_sub, self.pick(v, y, v), self.pick(v, x, v), fan_coeff])
            return _mono_mul(m_sub, fan, {v: 2}), coeff

        special = self._special(sub, x, y, t, xs)
        if special is not None:
            s_mono, s_coeff = special
            trace.append({"case": "SpecialMonomial", "vertices": [v, t, *xs]})
            coeff = self.prod([s_coeff, self.pick(v, y, v), self.pick(v, t, t), fan_coeff])
            return _mono_mul(s_mono, fan, {v: 1, t: 1}), coeff
        trace.append({"case": "NoSpecial", "vertices": [v, t, *xs]})
        coeff = self.prod([c_sub, self.pick(v, y, v), self.pick(v, t, v), fan_coeff])
        return _mono_mul(m_sub, fan, {v: 2}), coeff

    def _chord(self, nt, x, y, chord, trace):
        w, z = chord
        b = list(nt.boundary)
        k = len(b)
        iw, iz = b.index(w), b.index(z)
        arc_a = [b[(iw + i) % k] for i in range((iz - iw) % k + 1)]
        arc_b = [b[(iz + i) % k] for i in range((iw - iz) % k + 1)]

        def holds_edge(arc):
            return any({arc[i], arc[i + 1]} == {x, y} for i in range(len(arc) - 1))

        if not holds_edge(arc_a):
            arc_a, arc_b = arc_b, arc_a
        rots = nt.embedding.rotations
        rest = [u for u in rots if u not in (w, z)]
        adj = {u: [q for q in rots[u] if q not in (w, z)] for u in rest}
        comps = _components(rest, adj)
        side_a = next(c for c in comps if arc_a[1] in c)
        side_b = next(c for c in comps if arc_b[1] in c)
        if side_a is side_b or len(comps) != 2:
            raise GuaranteeViolated(f"chord {w}-{z} does not split the near-triangulation")
        g1 = validate_near_triangulation(nt.embedding.restrict(side_a | {w, z}, arc_a))
        g2 = validate_near_triangulation(nt.embedding.restrict(side_b | {w, z}, arc_b))
        trace.append({"case": "Chord", "vertices": [w, z]})
        m1, c1 = self.nice(g1, x, y, trace)
        m2, c2 = self.nice(g2, w, z, trace)
        return _mono_mul(m1, m2), self.fld.mul(c1, c2)

    def _special(self, sub: NearTriangulation, x, y, t, xs):
        """Lexicographically first special monomial of D_{G'-e}, if any."""
        caps = [0] * self.n
        for u in sub.vertices:
            caps[u] = 4 if u in sub.interior else 2
        caps[x] = caps[y] = 0
        caps[t] = 1
        for w in xs:
            caps[w] = 3
        edges = [e for e in sub.edges if e != canon(x, y)]
        poly = expand_capped(edge_factors(self.fld, self.n, edges, self.dec), caps)
        for mono, coeff in poly.items():
            if sum(1 for w in xs if mono[w] == 3) <= 1:
                return {u: d for u, d in enumerate(mono) if d}, coeff
        return None


def _first_chord(nt: NearTriangulation) -> Edge | None:
    b = nt.boundary
    k = len(b)
    pos = {v: i for i, v in enumerate(b)}
    for u, w in sorted(canon(p, q) for p, q in itertools.combinations(b, 2)):
        if (pos[u] - pos[w]) % k in (1, k - 1):
            continue
        if nt.has_edge(u, w):
            return (u, w)
    return None


def _interior_fan(nt: NearTriangulation, v: int, y: int, t: int) -> list[int]:
    """Neighbours of v strictly between y and t in rotation order, listed from y's side."""
    rot = list(nt.embedding.rotations[v])
    i = rot.index(y)
    seq = rot[i:] + rot[:i]
    j = seq.index(t)
    first, second = seq[1:j], seq[j + 1 :]
    if first and second:
        raise GuaranteeViolated(f"vertex {v} has interior neighbours on both sides")
    return first if first else second[::-1]


# -- public operations -------------------------------------------------------

def _order(nt: NearTriangulation | PlaneEmbedding) -> int:
    verts = nt.vertices
    return max(verts) + 1 if verts else 0


def _finish(
    mono: Monomial, coeff, trace, fld: Field, n: int, edges, dec
) -> MonomialCertificate:
    factors = edge_factors(fld, n, edges, dec)
    cert = MonomialCertificate(_vector(mono, n), coeff, trace, factors)
    cert.verify()
    return cert


def nice_monomial(
    nt: NearTriangulation,
    e: Sequence[int],
    dec: Mapping[Edge, tuple],
    field: Field,
    n: int | None = None,
) -> MonomialCertificate:
    """Nice monomial of D_{G-e} for a boundary edge ``e = (x, y)``.

    Degree 0 at x and y, at most 2 on the boundary, at most 4 inside.
    ``dec`` must decorate every edge (the factor for ``e`` is omitted).
    """
    x, y = int(e[0]), int(e[1])
    if x == y or not nt.is_boundary_edge(x, y):
        raise NotBoundaryEdge(f"{x}-{y} is not an edge of the boundary cycle")
    n = _order(nt) if n is None else n
    b = _Builder(field, n, dec)
    trace: list[dict] = []
    mono, coeff = b.nice(nt, x, y, trace)
    edges = [f for f in nt.edges if f != canon(x, y)]
    cert = _finish(mono, coeff, trace, field, n, edges, dec)
    check_nice(cert.monomial, nt, x, y)
    return cert


def check_nice(mono: Sequence[int], nt: NearTriangulation, x: int, y: int) -> None:
    """Raise unless the exponent vector meets the nice-monomial degree conditions."""
    bad = []
    if mono[x] or mono[y]:
        bad.append("nonzero degree at an endpoint of e")
    for v in nt.boundary:
        if mono[v] > 2:
            bad.append(f"boundary vertex {v} has degree {mono[v]}")
    for v in nt.interior:
        if mono[v] > 4:
            bad.append(f"interior vertex {v} has degree {mono[v]}")
    outside = set(range(len(mono))) - set(nt.vertices)
    for v in outside:
        if mono[v]:
            bad.append(f"vertex {v} outside the graph has degree {mono[v]}")
    if bad:
        raise GuaranteeViolated("; ".join(bad))


def triangulation_monomial(
    emb: PlaneEmbedding, dec: Mapping[Edge, tuple], field: Field, n: int | None = None
) -> MonomialCertificate:
    """Certificate for D_G of a near-triangulation: the nice monomial times x.

    Uses the designated outer face (or the first traced face) and its first
    boundary edge.
    """
    if emb.outer_face is None:
        emb = emb.with_outer(emb.faces()[0])
    nt = validate_near_triangulation(emb)
    n = _order(nt) if n is None else n
    x, y = nt.boundary[0], nt.boundary[1]
    b = _Builder(field, n, dec)
    trace: list[dict] = []
    mono, coeff = b.nice(nt, x, y, trace)
    mono = _mono_mul(mono, {x: 1})
    coeff = field.mul(coeff, b.pick(x, y, x))
    return _finish(mono, coeff, trace, field, n, nt.edges, dec)


def split_at_triangle(
    emb: PlaneEmbedding, tri: Sequence[int]
) -> tuple[PlaneEmbedding, PlaneEmbedding] | None:
    """The two sub-triangulations on either side of a separating triangle.

    Returns None when ``tri`` does not separate the graph.
    """
    tri_set = set(tri)
    rots = emb.rotations
    rest = [u for u in rots if u not in tri_set]
    adj = {u: [q for q in rots[u] if q not in tri_set] for u in rest}
    comps = _components(rest, adj)
    if len(comps) < 2:
        return None
    if len(comps) != 2:
        raise GuaranteeViolated(f"triangle {list(tri)} leaves {len(comps)} components")
    a, b = sorted(comps, key=min)
    return emb.restrict(a | tri_set, tuple(tri)), emb.restrict(b | tri_set, tuple(tri))


def _facial_deleted(b: _Builder, emb: PlaneEmbedding, face, tri, trace) -> Monomial:
    x, y, v = sorted(tri)
    nt = validate_near_triangulation(emb.with_outer(face))
    mono, coeff = b.nice(nt, x, y, trace)
    if mono.get(v, 0) != 2:
        raise GuaranteeViolated(f"nice monomial has degree {mono.get(v, 0)} at {v}, expected 2")
    mono = dict(mono)
    del mono[v]
    coeff = b.fld.div(coeff, b.fld.mul(b.pick(x, v, v), b.pick(y, v, v)))
    trace.append({"case": "TriangleDeletion", "vertices": [x, y, v]})
    return mono, coeff


def triangle_deleted_monomial(
    tri: PlaneEmbedding,
    T: Sequence[int],
    dec: Mapping[Edge, tuple],
    field: Field,
    split: tuple[PlaneEmbedding, PlaneEmbedding] | None = None,
    n: int | None = None,
) -> MonomialCertificate:
    """Monomial of D_{G-E(T)} vanishing on V(T) with degree <= 4 elsewhere.

    ``tri`` must be a full triangulation. A facial T is made the outer face;
    a separating T needs ``split`` (the two sub-triangulations, each having T
    as a face), otherwise MissingSplit is raised.
    """
    faces = validate_triangulation(tri)
    T = tuple(int(v) for v in T)
    if len(set(T)) != 3 or any(v not in tri.rotations for v in T):
        raise NotATriangle(f"{list(T)} is not three vertices of the graph")
    if not all(w in tri.rotations[u] for u, w in itertools.combinations(T, 2)):
        raise NotATriangle(f"{list(T)} is not a triangle")
    n = _order(tri) if n is None else n
    b = _Builder(field, n, dec)
    trace: list[dict] = []
    face = next((f for f in faces if set(f) == set(T)), None)
    if face is not None:
        mono, coeff = _facial_deleted(b, tri, face, T, trace)
    else:
        if split is None:
            raise MissingSplit(f"triangle {list(T)} is not facial; supply both sub-triangulations")
        parts = []
        for part in split:
            pfaces = validate_triangulation(part)
            pface = next((f for f in pfaces if set(f) == set(T)), None)
            if pface is None:
                raise MissingSplit(f"sub-triangulation does not have {list(T)} as a face")
            parts.append(_facial_deleted(b, part, pface, T, trace))
        v1 = set(split[0].rotations) - set(T)
        v2 = set(split[1].rotations) - set(T)
        e_all = set(tri.edges)
        e_split = set(split[0].edges) | set(split[1].edges)
        if v1 & v2 or v1 | v2 | set(T) != set(tri.rotations) or e_split != e_all:
            raise MissingSplit("supplied sub-triangulations do not partition the triangulation")
        mono = _mono_mul(parts[0][0], parts[1][0])
        coeff = field.mul(parts[0][1], parts[1][1])
    t_edges = {canon(u, w) for u, w in itertools.combinations(T, 2)}
    edges = [e for e in tri.edges if e not in t_edges]
    cert = _finish(mono, coeff, trace, field, n, edges, dec)
    if any(cert.monomial[v] for v in T) or cert.max_degree > 4:
        raise GuaranteeViolated("triangle-deleted monomial violates its degree bounds")
    return cert


def v8_rooted_monomial(
    e: Sequence[int] | None,
    dec: Mapping[Edge, tuple],
    field: Field,
    roots: Sequence[int] | None = None,
) -> MonomialCertificate:
    """Acyclic-orientation monomial of D_{V8-e} with in-degree 0 at both ends of e.

    With ``e=None`` the whole of V8 is used and ``roots`` (possibly empty)
    lists the vertices that must receive in-degree 0. Remaining in-degrees
    are at most 3.
    """
    g = wagner_v8()
    if e is not None:
        ce = canon(int(e[0]), int(e[1]))
        if ce not in g.edge_set:
            raise NotV8Edge(f"{list(e)} is not an edge of V8")
        edges = tuple(f for f in g.edges if f != ce)
        roots = ce
    else:
        edges = g.edges
        roots = tuple(roots or ())
    sub = Graph(8, edges)
    factors = edge_factors(field, 8, edges, dec)
    for orient in all_orientations(sub):
        indeg = orient.indegrees(8)
        if any(indeg[r] for r in roots) or max(indeg) > 3:
            continue
        if not orient.is_acyclic(8):
            continue
        coeff = orientation_coefficient(factors, orient.heads)
        cert = MonomialCertificate(
            indeg, coeff, [{"case": "V8", "vertices": list(roots)}], factors
        )
        cert.verify()
        return cert
    raise SearchExhausted("no rooted acyclic orientation of V8 found")


# -- clique sums ---------------------------------------------------------------

V8 = "V8"
Leaf = Union[PlaneEmbedding, str]


@dataclass(frozen=True)
class Glue:
    """Attach the next leaf: ``ident`` maps composite vertices to leaf vertices."""

    ident: Mapping[int, int]
    drop: tuple[Edge, ...] = ()


@dataclass
class CliqueSumTree:
    leaves: list[Leaf]
    glues: list[Glue]

    def __post_init__(self):
        if len(self.leaves) != len(self.glues) + 1:
            raise GlueMismatch("need exactly one glue step per leaf after the first")

    def leaf_graph(self, i: int) -> Graph:
        leaf = self.leaves[i]
        if leaf == V8:
            return wagner_v8()
        verts = leaf.vertices
        if verts != list(range(len(verts))):
            raise MalformedInput(f"leaf {i} must use vertices 0..{len(verts) - 1}")
        return Graph(len(verts), leaf.edges)

    def compose(self) -> tuple[Graph, list[list[int]]]:
        """Final graph and, per leaf, the composite label of every leaf vertex."""
        from .graphs import clique_sum

        g = self.leaf_graph(0)
        maps = [list(range(g.n))]
        for i, glue in enumerate(self.glues):
            part = self.leaf_graph(i + 1)
            maps.append(glue_relabel(g.n, part.n, glue.ident))
            g = clique_sum(g, part, glue.ident, glue.drop)
        return g, maps


def _leaf_part(
    leaf: Leaf, clique: Sequence[int], dec: Mapping[Edge, tuple], fld: Field
) -> MonomialCertificate:
    """Certificate for the new part minus its clique edges, zero on the clique."""
    k = len(clique)
    if leaf == V8:
        if k == 1:
            return v8_rooted_monomial(None, dec, fld, roots=clique)
        if k == 2:
            return v8_rooted_monomial(clique, dec, fld)
        raise GuaranteeViolated("V8 has no triangles")
    faces = validate_triangulation(leaf)
    if k == 3:
        split = None
        if not any(set(f) == set(clique) for f in faces):
            split = split_at_triangle(leaf, clique)
        return triangle_deleted_monomial(leaf, clique, dec, fld, split=split)
    n = _order(leaf)
    b = _Builder(fld, n, dec)
    trace: list[dict] = []
    if k == 2:
        p, q = clique
        face = next(f for f in faces if p in f and q in f)
        nt = validate_near_triangulation(leaf.with_outer(face))
        mono, coeff = b.nice(nt, p, q, trace)
        edges = [e for e in leaf.edges if e != canon(p, q)]
    else:
        (p,) = clique
        face = next(f for f in faces if p in f)
        q = face[(face.index(p) + 1) % 3]
        nt = validate_near_triangulation(leaf.with_outer(face))
        mono, coeff = b.nice(nt, p, q, trace)
        mono = _mono_mul(mono, {q: 1})
        coeff = fld.mul(coeff, b.pick(p, q, q))
        edges = list(leaf.edges)
    return _finish(mono, coeff, trace, fld, n, edges, dec)


def _base_part(leaf: Leaf, dec, fld: Field) -> MonomialCertificate:
    if leaf == V8:
        return v8_rooted_monomial(None, dec, fld, roots=())
    return triangulation_monomial(leaf, dec, fld)


def clique_sum_monomial(
    tree: CliqueSumTree, dec: Mapping[Edge, tuple], field: Field
) -> MonomialCertificate:
    """Certificate with every degree <= 4 for D_G of the composed graph.

    ``dec`` decorates the final graph (composite labels). Clique edges that a
    glue step drops get the default decoration for bookkeeping; the running
    monomial is then divided by a product of their endpoints chosen so that
    the quotient is still non-vanishing.
    """
    fld = field
    minus_one = fld.neg(fld.one)
    final, maps = tree.compose()
    missing = [e for e in final.edges if e not in dec]
    if missing:
        raise GlueMismatch(f"decoration does not cover edges {missing[:3]}")
    full_dec = dict(dec)

    def leaf_dec(i: int) -> dict:
        g = tree.leaf_graph(i)
        rel = maps[i]
        out = {}
        for u, w in g.edges:
            ce = canon(rel[u], rel[w])
            a, b = full_dec.setdefault(ce, (fld.one, minus_one))
            out[(u, w)] = (a, b) if rel[u] < rel[w] else (b, a)
        return out

    base = _base_part(tree.leaves[0], leaf_dec(0), fld)
    cur = tree.leaf_graph(0)
    mono: Monomial = {v: d for v, d in enumerate(base.monomial) if d}
    coeff = base.coefficient
    trace = list(base.trace)
    for i, glue in enumerate(tree.glues, start=1):
        part_graph = tree.leaf_graph(i)
        check_glue(cur, part_graph, glue.ident, glue.drop)
        rel = maps[i]
        clique_left = sorted(glue.ident)
        clique_right = [glue.ident[v] for v in clique_left]
        part = _leaf_part(tree.leaves[i], clique_right, leaf_dec(i), fld)
        pmono = {rel[v]: d for v, d in enumerate(part.monomial) if d}
        if any(v in pmono for v in clique_left):
            raise GuaranteeViolated("part monomial touches the glued clique")
        mono = _mono_mul(mono, pmono)
        coeff = fld.mul(coeff, part.coefficient)
        trace.append({"case": "CliqueGlue", "vertices": clique_left})
        trace.extend(
            {"case": s["case"], "vertices": [rel[v] for v in s["vertices"]]} for s in part.trace
        )
        n_new = cur.n + part_graph.n - len(glue.ident)
        edges = set(cur.edges) | {canon(rel[u], rel[w]) for u, w in part_graph.edges}
        cur = Graph(n_new, tuple(sorted(edges)))
        if glue.drop:
            cur, mono, coeff = _apply_drops(cur, mono, glue.drop, full_dec, fld)
    n = final.n
    if cur.edges != final.edges:
        raise GlueMismatch("composed edge set disagrees with the clique-sum tree")
    cert = MonomialCertificate(_vector(mono, n), coeff, trace, edge_factors(fld, n, final.edges, full_dec))
    cert.verify()
    if cert.max_degree > 4:
        raise GuaranteeViolated(f"composed certificate has degree {cert.max_degree} > 4")
    return cert


def _apply_drops(g: Graph, mono: Monomial, drop, dec, fld: Field):
    """Remove dropped clique edges, keeping a non-vanishing divisor of the monomial."""
    drop = sorted(canon(*e) for e in drop)
    smaller = g.remove_edges(drop)
    factors = edge_factors(fld, g.n, smaller.edges, dec)
    vec = _vector(mono, g.n)
    for heads in itertools.product(*drop):
        q = list(vec)
        for h in heads:
            q[h] -= 1
        if min(q) < 0:
            continue
        c = coeff_of_monomial(factors, q)
        if c != fld.zero:
            return smaller, {v: d for v, d in enumerate(q) if d}, c
    raise GlueMismatch(f"no non-vanishing monomial survives dropping {drop}")


# -- planar matchings ----------------------------------------------------------

def _matchings(g: Graph, size: int):
    for combo in itertools.combinations(g.edges, size):
        used = [v for e in combo for v in e]
        if len(set(used)) == len(used):
            yield combo


def find_matching_at3(
    g: Graph, dec: Mapping[Edge, tuple], field: Field, max_n: int = 10
) -> tuple[tuple[Edge, ...], MonomialCertificate]:
    """Smallest (then lexicographically first) matching S with A(D_{G-S}) <= 3."""
    if g.n > max_n:
        raise BudgetExceeded(f"matching search limited to n <= {max_n}")
    for size in range(g.n // 2 + 1):
        for s in _matchings(g, size):
            edges = [e for e in g.edges if e not in s]
            factors = edge_factors(field, g.n, edges, dec)
            poly = expand_capped(factors, 3)
            if len(poly):
                mono, coeff = next(iter(poly.items()))
                cert = MonomialCertificate(
                    mono, coeff, [{"case": "Matching", "vertices": [v for e in s for v in e]}], factors
                )
                cert.verify()
                return s, cert
    raise SearchExhausted("no matching S with A(D_{G-S}) <= 3; input is probably not planar")
