"""Batch command-line front end.

Every report is a JSON object ``{"version", "config", "result"}`` (or CSV with
``--format csv``). Exit codes: 0 success, 1 input/usage error, 2 a violated
mathematical guarantee.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .algebra import FieldSpec, field_make
from .bounds import af_min_product, af_weak_bound, lemma_product_check
from .certify import (
    V8,
    CliqueSumTree,
    Glue,
    clique_sum_monomial,
    find_matching_at3,
    nice_monomial,
    split_at_triangle,
    triangle_deleted_monomial,
    triangulation_monomial,
)
from .coloring import AbelianGroup, adversarial_min, cn_solve, count_colorings, cyclic_embed
from .corpus import embedding_graph, random_clique_sum_tree, random_triangulation
from .errors import GuaranteeViolated, InputError, MalformedInput
from .graphs import (
    canon,
    degeneracy_order,
    parse_embedding,
    parse_graph,
    validate_near_triangulation,
)
from .polys import (
    DEFAULT_BUDGET,
    Orientation,
    an_witness,
    coeff_of_monomial,
    decorated_factors,
    expand_capped,
    random_decoration,
)


@dataclass
class RunConfig:
    command: str
    inputs: dict = field(default_factory=dict)
    field_spec: str | None = None
    cap: int | None = None
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    out: str | None = None
    format: str = "json"
    options: dict = field(default_factory=dict)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# -- input helpers --------------------------------------------------------------

def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None
    except ValueError as exc:
        raise MalformedInput(f"{path}: invalid JSON: {exc}") from None


def _field_override(args):
    return field_make(FieldSpec.parse(args.field)) if args.field else None


def _load_graph(args):
    if not args.graph:
        raise MalformedInput("--graph is required")
    return parse_graph(_read_json(args.graph), _field_override(args))


def _decoration(doc, args):
    if getattr(args, "random_decoration", False):
        return random_decoration(doc.graph, doc.field, random.Random(args.seed))
    return doc.decoration


def _load_lists(args, fld, n):
    if not args.lists:
        if not fld.is_finite:
            raise MalformedInput("--lists is required over an infinite field")
        return [list(fld.elements()) for _ in range(n)]
    obj = _read_json(args.lists)
    if not isinstance(obj, dict) or not isinstance(obj.get("lists"), list):
        raise MalformedInput('lists document needs a "lists" array')
    return [[fld.decode(x) for x in A] for A in obj["lists"]]


def _require_embedding(doc):
    if doc.embedding is None:
        raise MalformedInput("this command needs an embedding in the graph document")
    return doc.embedding


def _pair(vals, what):
    if vals is None or len(vals) != 2:
        raise MalformedInput(f"--{what} needs two vertices")
    return vals


# -- commands -------------------------------------------------------------------

def cmd_validate(args):
    doc = _load_graph(args)
    g = doc.graph
    order, col = degeneracy_order(g)
    out = {"n": g.n, "m": g.m, "field": doc.field.spec.to_json(), "col": col, "degeneracy_order": order}
    if doc.embedding is not None:
        emb = doc.embedding
        if emb.outer_face is None:
            emb = emb.with_outer(emb.faces()[0])
        nt = validate_near_triangulation(emb, g)
        out["near_triangulation"] = {
            "boundary": list(nt.boundary),
            "interior": list(nt.interior),
            "triangulation": len(nt.boundary) == 3 and 3 * g.n - 6 == g.m,
        }
    return out


def _factors(doc, args):
    return decorated_factors(doc.graph, doc.field, _decoration(doc, args), doc.labeling)


def cmd_expand(args):
    doc = _load_graph(args)
    poly = expand_capped(_factors(doc, args), args.cap, args.budget)
    return {"terms": len(poly), "poly": poly.to_json()}


def cmd_coeff(args):
    doc = _load_graph(args)
    if args.monomial is None or len(args.monomial) != doc.graph.n:
        raise MalformedInput(f"--monomial needs {doc.graph.n} exponents")
    c = coeff_of_monomial(_factors(doc, args), args.monomial)
    return {"monomial": args.monomial, "coefficient": doc.field.format(c)}


def cmd_an_number(args):
    doc = _load_graph(args)
    k, mono, c = an_witness(_factors(doc, args), args.budget)
    return {"an_number": k, "witness": list(mono), "coefficient": doc.field.format(c)}


def cmd_nice_monomial(args):
    doc = _load_graph(args)
    emb = _require_embedding(doc)
    if emb.outer_face is None:
        emb = emb.with_outer(emb.faces()[0])
    nt = validate_near_triangulation(emb, doc.graph)
    if args.edge is None:
        cert = triangulation_monomial(emb, _decoration(doc, args), doc.field, doc.graph.n)
    else:
        e = _pair(args.edge, "edge")
        cert = nice_monomial(nt, e, _decoration(doc, args), doc.field, doc.graph.n)
    return cert.to_json()


def cmd_triangle_monomial(args):
    doc = _load_graph(args)
    emb = _require_embedding(doc)
    if args.triangle is None or len(args.triangle) != 3:
        raise MalformedInput("--triangle needs three vertices")
    dec = _decoration(doc, args)
    faces = emb.faces()
    facial = any(set(f) == set(args.triangle) for f in faces)
    split = None if facial else split_at_triangle(emb, args.triangle)
    cert = triangle_deleted_monomial(emb, args.triangle, dec, doc.field, split, doc.graph.n)
    return cert.to_json()


def _parse_tree(obj) -> CliqueSumTree:
    if not isinstance(obj, dict) or "leaves" not in obj:
        raise MalformedInput('clique-sum document needs "leaves" and "glues"')
    leaves = []
    for leaf in obj["leaves"]:
        leaves.append(V8 if leaf == V8 else parse_embedding(leaf))
    glues = []
    for gl in obj.get("glues", []):
        ident = gl.get("ident")
        if isinstance(ident, dict):
            ident = {int(k): int(v) for k, v in ident.items()}
        elif isinstance(ident, list):
            ident = {int(a): int(b) for a, b in ident}
        else:
            raise MalformedInput("glue ident must be an object or a list of pairs")
        drop = tuple(sorted(canon(int(u), int(v)) for u, v in gl.get("drop", [])))
        glues.append(Glue(ident, drop))
    return CliqueSumTree(leaves, glues)


def cmd_clique_sum_monomial(args):
    fld = _field_override(args)
    if args.tree:
        obj = _read_json(args.tree)
        tree = _parse_tree(obj)
        if fld is None:
            fld = field_make(FieldSpec.parse(obj["field"]) if "field" in obj else FieldSpec(0))
    else:
        tree = random_clique_sum_tree(random.Random(args.seed))
        fld = fld or field_make(FieldSpec(0))
    g, _ = tree.compose()
    if args.random_decoration:
        dec = random_decoration(g, fld, random.Random(args.seed))
    else:
        dec = {e: (fld.one, fld.neg(fld.one)) for e in g.edges}
    cert = clique_sum_monomial(tree, dec, fld)
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges], "max_degree": cert.max_degree, **cert.to_json()}


def cmd_matching_at3(args):
    doc = _load_graph(args)
    s, cert = find_matching_at3(doc.graph, _decoration(doc, args), doc.field, args.max_n)
    return {"matching": [list(e) for e in s], **cert.to_json()}


def cmd_solve(args):
    doc = _load_graph(args)
    fld = doc.field
    lists = _load_lists(args, fld, doc.graph.n)
    f = _factors(doc, args)
    point = cn_solve(f, lists, args.monomial, args.budget)
    return {"point": [fld.encode(x) for x in point]}


def _weak(count, sizes, d):
    n, S, t = len(sizes), sum(sizes), max(sizes, default=0)
    if t < 2 or S < n + d:
        return None, None
    wb = af_weak_bound(S, n, d, t)
    return str(wb), wb.le(count)


def cmd_count(args):
    doc = _load_graph(args)
    fld = doc.field
    lists = _load_lists(args, fld, doc.graph.n)
    lab = doc.labeling
    cnt = count_colorings(doc.graph, fld, _decoration(doc, args), lab, lists, args.budget)
    weak, met = _weak(cnt, [len(A) for A in lists], doc.graph.m)
    if cnt > 0 and met is False:
        raise GuaranteeViolated(f"count {cnt} is below the weak bound {weak}")
    labeling = [fld.encode(lab[e]) if lab else fld.encode(fld.zero) for e in doc.graph.edges]
    return {"count": cnt, "bound_weak": weak, "bound_met": met, "labeling": labeling}


def cmd_adversary(args):
    doc = _load_graph(args)
    group = AbelianGroup(tuple(args.group))
    lists = None
    if args.lists:
        obj = _read_json(args.lists)
        lists = [[group.element(x) for x in A] for A in obj.get("lists", [])]
    orient = Orientation.default(doc.graph)
    lab, cnt = adversarial_min(doc.graph, orient, group, lists, args.budget)
    return {
        "min_count": cnt,
        "labeling": [group.encode(lab[e]) for e in doc.graph.edges],
        "orientation": [list(a) for a in orient.arcs()],
    }


def cmd_embed_cyclic(args):
    emb = cyclic_embed(args.m, use_totient=args.totient)
    return emb.to_json()


def cmd_bounds(args):
    out = {}
    if args.sizes is not None:
        if args.d is None:
            raise MalformedInput("--sizes needs --d")
        mp, q = af_min_product(args.sizes, args.d)
        out["min_product"] = mp
        out["q"] = list(q)
        S, n, t = sum(args.sizes), len(args.sizes), max(args.sizes)
        args_S, args_n, args_t = S, n, t
    else:
        args_S, args_n, args_t = args.S, args.n, args.t
    if args.lemma is not None:
        holds, lhs, rhs = lemma_product_check(args.lemma)
        out["lemma"] = {"holds": holds, "lhs": lhs, "rhs": rhs}
        if not holds:
            raise GuaranteeViolated(f"product lemma fails on {args.lemma}")
    if None not in (args_S, args_n, args.d, args_t):
        wb = af_weak_bound(args_S, args_n, args.d, args_t)
        out["weak_bound"] = wb.to_json()
        out["weak_bound_text"] = str(wb)
        out["weak_bound_approx"] = wb.value
        if "min_product" in out and not wb.le(out["min_product"]):
            raise GuaranteeViolated("min-product bound is below the weak bound")
    if not out:
        raise MalformedInput("give --S/--n/--d/--t, --sizes/--d, or --lemma")
    return out


def _census_row(job):
    idx, seed, n_min, n_max = job
    rng = random.Random(f"{seed}:{idx}")
    emb = random_triangulation(rng.randint(n_min, n_max), rng)
    g = embedding_graph(emb)
    fld = field_make(FieldSpec(5))
    dec = random_decoration(g, fld, rng)
    cert = triangulation_monomial(emb, dec, fld)
    _, col = degeneracy_order(g)
    cases = sorted({s["case"] for s in cert.trace})
    return {
        "index": idx,
        "n": g.n,
        "m": g.m,
        "col": col,
        "max_degree": cert.max_degree,
        "weak_bound": str(af_weak_bound(5 * g.n, g.n, g.m, 5)),
        "cases": ";".join(cases),
    }


def cmd_census(args):
    if not 3 <= args.n_min <= args.n_max <= 10:
        raise MalformedInput("census needs 3 <= n-min <= n-max <= 10")
    jobs = [(i, args.seed, args.n_min, args.n_max) for i in range(args.count)]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            rows = list(pool.map(_census_row, jobs))
    else:
        rows = [_census_row(j) for j in jobs]
    bad = [r["index"] for r in rows if r["max_degree"] > 4]
    if bad:
        raise GuaranteeViolated(f"certificates with degree > 4 at instances {bad}")
    return {"rows": rows}


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="field override: p, 'p,k' or Q")
    common.add_argument("--cap", type=int, help="per-variable exponent cap")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--graph", help="graph JSON document")
    graph.add_argument(
        "--random-decoration", action="store_true", help="seeded random nonzero decoration"
    )

    p = _Parser(prog="nullcolor", description="Polynomial-method coloring toolkit.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, *parents, help=None):
        sp = sub.add_parser(name, parents=[common, *parents], help=help)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, graph, help="check a graph (and its embedding)")
    add("expand", cmd_expand, graph, help="expand the decorated polynomial")
    sp = add("coeff", cmd_coeff, graph, help="coefficient of one monomial")
    sp.add_argument("--monomial", type=_int_list, required=True)
    add("an-number", cmd_an_number, graph, help="least max exponent of a surviving top monomial")
    sp = add("nice-monomial", cmd_nice_monomial, graph, help="near-triangulation certificate")
    sp.add_argument("--edge", type=_int_list)
    sp = add("triangle-monomial", cmd_triangle_monomial, graph, help="triangle-deleted certificate")
    sp.add_argument("--triangle", type=_int_list)
    sp = add("clique-sum-monomial", cmd_clique_sum_monomial, help="certificate for a clique-sum composition")
    sp.add_argument("--tree", help="composition JSON; a seeded random one when omitted")
    sp.add_argument("--random-decoration", action="store_true")
    sp = add("matching-at3", cmd_matching_at3, graph, help="matching whose removal gives degree <= 3")
    sp.add_argument("--max-n", type=int, default=10)
    sp = add("solve", cmd_solve, graph, help="list coloring by the Combinatorial Nullstellensatz")
    sp.add_argument("--lists")
    sp.add_argument("--monomial", type=_int_list)
    sp = add("count", cmd_count, graph, help="count list colorings")
    sp.add_argument("--lists")
    sp = add("adversary", cmd_adversary, graph, help="worst group labeling")
    sp.add_argument("--group", type=_int_list, default=[5], help="cyclic factor orders, e.g. 5 or 2,2")
    sp.add_argument("--lists")
    sp = add("embed-cyclic", cmd_embed_cyclic, help="embed Z_m in a finite field")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--totient", action="store_true", help="use degree phi(m)")
    sp = add("bounds", cmd_bounds, help="counting bounds")
    sp.add_argument("--S", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--sizes", type=_int_list)
    sp.add_argument("--lemma", type=_int_list)
    sp = add("census", cmd_census, help="sweep seeded random triangulations")
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--n-min", type=int, default=4)
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--workers", type=int, default=1)
    return p


_COMMON = ("field", "cap", "budget", "seed", "out", "format")
_INPUTS = ("graph", "lists", "tree")


def resolve_config(args) -> RunConfig:
    opts = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in _COMMON + _INPUTS + ("func", "command")
    }
    inputs = {k: getattr(args, k) for k in _INPUTS if getattr(args, k, None)}
    return RunConfig(
        command=args.command,
        inputs=inputs,
        field_spec=args.field,
        cap=args.cap,
        budget=args.budget,
        seed=args.seed,
        out=args.out,
        format=args.format,
        options=opts,
    )


def _csv(result: dict) -> str:
    buf = io.StringIO()
    rows = result.get("rows")
    if not isinstance(rows, list):
        rows = [{k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in result.items()}]
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return buf.getvalue()


def render(report: dict, fmt: str) -> str:
    if fmt == "csv":
        return _csv(report["result"])
    return json.dumps(report, indent=2) + "\n"


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = resolve_config(args)
    try:
        result = args.func(args)
    except InputError as exc:
        print(f"nullcolor: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except GuaranteeViolated as exc:
        print(f"nullcolor: guarantee violated ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 2
    report = {"version": __version__, "config": asdict(config), "result": result}
    text = render(report, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
