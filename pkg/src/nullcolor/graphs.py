"""Simple graphs, rotation-system embeddings, near-triangulations and clique-sums.

Vertices are integers. A :class:`Graph` always uses ``0..n-1``; embeddings and
near-triangulations keep whatever labels they were built with, so a piece cut
out of a larger graph still talks about the same variables.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .algebra import Field, FieldSpec, field_make
from .errors import (
    DropOutsideClique,
    DuplicateEdge,
    InvalidEmbedding,
    LoopEdge,
    MalformedInput,
    MapTooLarge,
    NonTriangularInnerFace,
    NotAClique,
    NotTwoConnected,
    OuterFaceNotCycle,
    UnknownVertex,
)

Edge = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise UnknownVertex(f"edge {u}-{v} outside 0..{n - 1}")
            c = canon(u, v)
            if c in seen:
                raise DuplicateEdge(f"duplicate edge {c}")
            seen.add(c)
        return cls(n, tuple(sorted(seen)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canon(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return len(set(vs)) == len(vs) and all(
            self.has_edge(a, b) for a, b in itertools.combinations(vs, 2)
        )

    def remove_edges(self, edges: Iterable[Edge]) -> "Graph":
        gone = {canon(*e) for e in edges}
        return Graph(self.n, tuple(e for e in self.edges if e not in gone))

    def triangles(self) -> list[tuple[int, int, int]]:
        out = []
        for u, v in self.edges:
            for w in sorted(self.adj[u] & self.adj[v]):
                if w > v:
                    out.append((u, v, w))
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def wagner_v8() -> Graph:
    """The 8-cycle plus its four antipodal chords."""
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    return Graph.from_edges(8, edges)


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Ordering by repeated minimum-degree removal (reversed) and col(G).

    Ties are broken by smallest vertex index. Every vertex has at most
    ``col - 1`` neighbours earlier in the returned order.
    """
    remaining = set(range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    removed: list[int] = []
    worst = -1
    while remaining:
        v = min(remaining, key=lambda u: (deg[u], u))
        worst = max(worst, deg[v])
        removed.append(v)
        remaining.discard(v)
        for w in g.adj[v]:
            if w in remaining:
                deg[w] -= 1
    return removed[::-1], worst + 1


def back_degree(g: Graph, order: Sequence[int]) -> int:
    """Max number of earlier neighbours over the ordering."""
    pos = {v: i for i, v in enumerate(order)}
    return max((sum(pos[w] < pos[v] for w in g.adj[v]) for v in order), default=-1)


# -- embeddings ---------------------------------------------------------------

@dataclass(frozen=True)
class PlaneEmbedding:
    """Rotation system plus a designated outer face.

    ``rotations[v]`` is the cyclic order of v's neighbours. Faces are traced
    with the rule: after the dart u->v comes v->w where w follows u in the
    rotation at v. Outer faces may be written in either direction.
    """

    rotations: Mapping[int, tuple[int, ...]]
    outer_face: tuple[int, ...] | None = None

    @property
    def vertices(self) -> list[int]:
        return sorted(self.rotations)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted({canon(u, v) for u, nb in self.rotations.items() for v in nb}))

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self.rotations[v])

    def succ(self, v: int, u: int) -> int:
        rot = self.rotations[v]
        return rot[(rot.index(u) + 1) % len(rot)]

    def faces(self) -> list[tuple[int, ...]]:
        seen: set[tuple[int, int]] = set()
        out = []
        for u in sorted(self.rotations):
            for v in self.rotations[u]:
                if (u, v) in seen:
                    continue
                face = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    face.append(a)
                    a, b = b, self.succ(b, a)
                out.append(tuple(face))
        return out

    def with_outer(self, outer: Sequence[int]) -> "PlaneEmbedding":
        return PlaneEmbedding(self.rotations, tuple(outer))

    def restrict(self, keep: Iterable[int], outer: Sequence[int] | None = None) -> "PlaneEmbedding":
        """Embedding of the induced subgraph on ``keep`` (deleting vertices keeps planarity)."""
        keep = set(keep)
        rots = {v: tuple(w for w in self.rotations[v] if w in keep) for v in sorted(keep)}
        return PlaneEmbedding(rots, tuple(outer) if outer is not None else None)

    def to_json(self, n: int | None = None) -> dict:
        if n is None:
            rot = {str(v): list(r) for v, r in sorted(self.rotations.items())}
        else:
            rot = [list(self.rotations.get(v, ())) for v in range(n)]
        out: dict = {"rotations": rot}
        if self.outer_face is not None:
            out["outer_face"] = list(self.outer_face)
        return out


def same_cycle(face: Sequence[int], cycle: Sequence[int]) -> bool:
    """True if ``face`` equals ``cycle`` up to rotation and reversal."""
    if len(face) != len(cycle) or not cycle:
        return False
    k = len(cycle)
    for seq in (list(cycle), list(cycle)[::-1]):
        for s in range(k):
            if all(face[i] == seq[(s + i) % k] for i in range(k)):
                return True
    return False


def _components(vertices: Iterable[int], adj: Mapping[int, Iterable[int]]) -> list[set[int]]:
    todo = set(vertices)
    comps = []
    while todo:
        start = todo.pop()
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in todo:
                    todo.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def check_embedding(emb: PlaneEmbedding, g: Graph | None = None) -> list[tuple[int, ...]]:
    """Validate a claimed rotation system and return its faces.

    Checks that rotations are consistent (and match ``g`` if given), that
    Euler's formula holds per connected component, and that the outer face,
    when designated, is one of the traced faces.
    """
    rots = emb.rotations
    for v, rot in rots.items():
        if len(set(rot)) != len(rot):
            raise InvalidEmbedding(f"vertex {v}: neighbour repeated in rotation")
        for w in rot:
            if w == v:
                raise InvalidEmbedding(f"vertex {v}: loop in rotation")
            if w not in rots or v not in rots[w]:
                raise InvalidEmbedding(f"edge {v}-{w} missing from rotation at {w}")
    if g is not None:
        if any(not 0 <= v < g.n for v in rots):
            raise InvalidEmbedding("rotation system mentions vertices outside the graph")
        for v in range(g.n):
            if set(rots.get(v, ())) != set(g.adj[v]):
                raise InvalidEmbedding(f"rotation at {v} does not match its neighbours")
    faces = emb.faces()
    for comp in _components(rots, rots):
        m_c = sum(len(rots[v]) for v in comp) // 2
        if m_c == 0:
            continue
        f_c = sum(1 for f in faces if f[0] in comp)
        if len(comp) - m_c + f_c != 2:
            raise InvalidEmbedding(
                f"Euler check failed: {len(comp)} - {m_c} + {f_c} != 2 (not a plane rotation system)"
            )
    if emb.outer_face is not None and not any(same_cycle(f, emb.outer_face) for f in faces):
        raise InvalidEmbedding(f"outer face {list(emb.outer_face)} is not a face of the embedding")
    return faces


def is_two_connected(vertices: Sequence[int], adj: Mapping[int, Iterable[int]]) -> bool:
    vs = list(vertices)
    if len(vs) < 3:
        return False
    if len(_components(vs, adj)) != 1:
        return False
    for cut in vs:
        rest = [v for v in vs if v != cut]
        sub = {v: [w for w in adj[v] if w != cut] for v in rest}
        if len(_components(rest, sub)) != 1:
            return False
    return True


@dataclass(frozen=True)
class NearTriangulation:
    embedding: PlaneEmbedding
    boundary: tuple[int, ...]
    interior: frozenset[int]
    inner_faces: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    @property
    def vertices(self) -> list[int]:
        return self.embedding.vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.embedding.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self.embedding.neighbors(v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.embedding.rotations.get(u, ())

    def boundary_edges(self) -> list[Edge]:
        b = self.boundary
        return [canon(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]

    def is_boundary_edge(self, u: int, v: int) -> bool:
        return canon(u, v) in set(self.boundary_edges())


def validate_near_triangulation(emb: PlaneEmbedding, g: Graph | None = None) -> NearTriangulation:
    """Certify that ``emb`` is a near-triangulation with its designated outer face.

    Raises OuterFaceNotCycle, NotTwoConnected or NonTriangularInnerFace.
    """
    if emb.outer_face is None:
        raise OuterFaceNotCycle("no outer face designated")
    faces = check_embedding(emb, g)
    outer = tuple(emb.outer_face)
    if len(outer) < 3 or len(set(outer)) != len(outer):
        raise OuterFaceNotCycle(f"outer face {list(outer)} is not a simple cycle")
    rots = emb.rotations
    if not is_two_connected(list(rots), rots):
        raise NotTwoConnected("graph is not 2-connected")
    inner = list(faces)
    for i, f in enumerate(inner):
        if same_cycle(f, outer):
            del inner[i]
            break
    for f in inner:
        if len(f) != 3:
            raise NonTriangularInnerFace(f"inner face {list(f)} has length {len(f)}")
    interior = frozenset(rots) - frozenset(outer)
    return NearTriangulation(emb, outer, interior, tuple(inner))


def validate_triangulation(emb: PlaneEmbedding, g: Graph | None = None) -> list[tuple[int, ...]]:
    """Check that every face (outer included) is a triangle; return the faces."""
    faces = check_embedding(emb, g)
    if not is_two_connected(list(emb.rotations), emb.rotations):
        raise NotTwoConnected("graph is not 2-connected")
    for f in faces:
        if len(f) != 3:
            raise NonTriangularInnerFace(f"face {list(f)} is not a triangle")
    return faces


# -- clique sums --------------------------------------------------------------

def glue_relabel(n1: int, n2: int, ident: Mapping[int, int]) -> list[int]:
    """Composite index of every right-hand vertex.

    ``ident`` maps left vertices to right vertices. Identified right vertices
    take their left partner's index; the others get fresh indices from ``n1``
    upward in ascending order.
    """
    back = {r: l for l, r in ident.items()}
    out, nxt = [], n1
    for r in range(n2):
        if r in back:
            out.append(back[r])
        else:
            out.append(nxt)
            nxt += 1
    return out


def check_glue(g1: Graph, g2: Graph, ident: Mapping[int, int], drop: Iterable[Edge] = ()) -> None:
    if len(ident) > 3:
        raise MapTooLarge(f"clique-sum along {len(ident)} vertices (at most 3 allowed)")
    if not ident:
        raise MalformedInput("empty identification map")
    left, right = list(ident), list(ident.values())
    if len(set(right)) != len(right):
        raise MalformedInput("identification map is not injective")
    for v in left:
        if not 0 <= v < g1.n:
            raise UnknownVertex(f"left vertex {v} out of range")
    for v in right:
        if not 0 <= v < g2.n:
            raise UnknownVertex(f"right vertex {v} out of range")
    if not g1.is_clique(left):
        raise NotAClique(f"{left} is not a clique in the left graph")
    if not g2.is_clique(right):
        raise NotAClique(f"{right} is not a clique in the right graph")
    clique_edges = {canon(a, b) for a, b in itertools.combinations(left, 2)}
    for e in drop:
        if canon(*e) not in clique_edges:
            raise DropOutsideClique(f"dropped edge {tuple(e)} is not a clique edge")


def clique_sum(g1: Graph, g2: Graph, ident: Mapping[int, int], drop: Iterable[Edge] = ()) -> Graph:
    """Glue ``g2`` onto ``g1`` along the clique ``ident`` and delete ``drop``.

    ``drop`` is given in left-hand labels.
    """
    drop = [canon(*e) for e in drop]
    check_glue(g1, g2, ident, drop)
    relabel = glue_relabel(g1.n, g2.n, ident)
    n = g1.n + g2.n - len(ident)
    edges = set(g1.edges) | {canon(relabel[u], relabel[v]) for u, v in g2.edges}
    edges -= set(drop)
    return Graph(n, tuple(sorted(edges)))


# -- JSON documents -----------------------------------------------------------

@dataclass
class GraphDocument:
    """A parsed graph file: graph plus whatever optional data came with it."""

    graph: Graph
    field: Field
    embedding: PlaneEmbedding | None = None
    decoration: dict[Edge, tuple] = field(default_factory=dict)
    labeling: dict[Edge, object] | None = None


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise MalformedInput(f"{what} must be an integer, got {x!r}")
    return x


def parse_graph(text: str | bytes | dict, field_override: Field | None = None) -> GraphDocument:
    """Parse the graph JSON grammar into a :class:`GraphDocument`.

    Edges are ``[u, v]`` pairs or ``{"u", "v", "a", "b", "label"}`` objects
    (defaults a=1, b=-1, label=0); ``a`` always multiplies ``x_u`` as
    written. The labeling is attached only when some edge carries a label.
    """
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except ValueError as exc:
            raise MalformedInput(f"invalid JSON: {exc}") from None
    else:
        doc = text
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise MalformedInput('graph document needs "n" and "edges"')
    n = _int(doc["n"], "n")
    if n < 0:
        raise MalformedInput("n must be nonnegative")
    if field_override is not None:
        fld = field_override
    else:
        fld = field_make(FieldSpec.parse(doc["field"])) if "field" in doc else field_make(FieldSpec(0))
    one, minus_one, zero = fld.one, fld.neg(fld.one), fld.zero
    if not isinstance(doc["edges"], list):
        raise MalformedInput('"edges" must be a list')
    pairs, dec, lab, labelled = [], {}, {}, False
    for item in doc["edges"]:
        if isinstance(item, list):
            if len(item) != 2:
                raise MalformedInput(f"edge {item!r} must have two endpoints")
            u, v = _int(item[0], "vertex"), _int(item[1], "vertex")
            a, b, c = one, minus_one, zero
        elif isinstance(item, dict):
            if "u" not in item or "v" not in item:
                raise MalformedInput(f"edge object {item!r} needs u and v")
            u, v = _int(item["u"], "vertex"), _int(item["v"], "vertex")
            a = fld.decode(item["a"]) if "a" in item else one
            b = fld.decode(item["b"]) if "b" in item else minus_one
            if "label" in item:
                labelled = True
                c = fld.decode(item["label"])
            else:
                c = zero
        else:
            raise MalformedInput(f"bad edge entry {item!r}")
        pairs.append((u, v))
        key = canon(u, v)
        dec[key] = (a, b) if u < v else (b, a)
        lab[key] = c
    g = Graph.from_edges(n, pairs)
    emb = None
    if "embedding" in doc and doc["embedding"] is not None:
        emb = parse_embedding(doc["embedding"], n)
        check_embedding(emb, g)
    return GraphDocument(g, fld, emb, dec, lab if labelled else None)


def parse_embedding(obj: dict, n: int | None = None) -> PlaneEmbedding:
    if not isinstance(obj, dict) or "rotations" not in obj:
        raise MalformedInput('embedding needs "rotations"')
    rots_in = obj["rotations"]
    if isinstance(rots_in, list):
        items = list(enumerate(rots_in))
    elif isinstance(rots_in, dict):
        try:
            items = [(int(k), v) for k, v in rots_in.items()]
        except ValueError:
            raise MalformedInput("rotation keys must be vertex indices") from None
    else:
        raise MalformedInput("rotations must be a list or object")
    rots = {}
    for v, rot in items:
        if not isinstance(rot, list):
            raise MalformedInput(f"rotation at {v} must be a list")
        for w in rot:
            _int(w, "rotation entry")
            if n is not None and not 0 <= w < n:
                raise UnknownVertex(f"rotation at {v} mentions unknown vertex {w}")
        rots[v] = tuple(rot)
    outer = obj.get("outer_face")
    if outer is not None:
        if not isinstance(outer, list):
            raise MalformedInput("outer_face must be a list")
        outer = tuple(_int(v, "outer face vertex") for v in outer)
    return PlaneEmbedding(rots, outer)


def graph_document_json(doc: GraphDocument) -> dict:
    """Inverse of :func:`parse_graph` (object-form edges, canonical order)."""
    fld = doc.field
    edges = []
    for e in doc.graph.edges:
        item = {"u": e[0], "v": e[1]}
        if e in doc.decoration:
            a, b = doc.decoration[e]
            item["a"], item["b"] = fld.encode(a), fld.encode(b)
        if doc.labeling is not None:
            item["label"] = fld.encode(doc.labeling[e])
        edges.append(item)
    out = {"n": doc.graph.n, "edges": edges, "field": fld.spec.to_json()}
    if doc.embedding is not None:
        out["embedding"] = doc.embedding.to_json(doc.graph.n)
    return out
