"""``qspectral`` command line.

Graphs are read from a path, or from standard input when the path is
``-``.  A file holding ``q=<int>`` headers is read as one or more edge
lists; anything else is read as graph6, one graph per line.

Exit status: 0 success, 1 a check failed, 2 bad usage or input,
3 a subset or permutation budget ran out.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from contextlib import contextmanager

from . import generators as gen
from .fixtures import construction_suite, fixture_suite
from .graph import (
    ClusteredGraph,
    Graph,
    GraphError,
    asymmetric_edge_set,
    brute_count_partially_symmetric,
    build,
    clustered,
    count_partially_symmetric,
    is_partially_symmetric,
    partial_transpose,
)
from .io import FormatError, format_edgelist, from_graph6, parse_edgelist, to_dot, to_graph6
from .iso import are_isomorphic, canonical_form
from .spectral import format_spectrum, q_polynomial, q_spectrum
from .survey import (
    DEFAULT_PERM_BUDGET,
    PermutationBudgetExceeded,
    REFERENCE_ROWS,
    aggregate_ratio,
    class_detail,
    compare_with_reference,
    default_workers,
    survey_classes,
    survey_table,
    table_tsv,
)
from .tu import DEFAULT_BUDGET, BudgetExceeded, tu_weight_totals

SCHEMA = 1
EXIT_CHECK = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SAMPLERS = {
    "procedure1": gen.sample_procedure1,
    "procedure2": gen.sample_procedure2,
    "procedure3": gen.sample_procedure3,
    "procedure4": gen.sample_procedure4,
    "procedure5": gen.sample_procedure5,
}
FAMILIES = ["theorem1", "corollary1", "corollary2", *SAMPLERS]


class UsageError(Exception):
    pass


# -- input ---------------------------------------------------------------------

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def parse_graphs(text: str) -> list[Graph]:
    """Every graph in ``text``: edge-list blocks if any ``q=`` header appears, else graph6 lines."""
    lines = text.splitlines()
    if any(line.split("#", 1)[0].strip().startswith("q=") for line in lines):
        blocks, cur = [], []
        for line in lines:
            if line.split("#", 1)[0].strip().startswith("q=") and cur:
                blocks.append(cur)
                cur = []
            cur.append(line)
        blocks.append(cur)
        return [parse_edgelist("\n".join(b)) for b in blocks if any(x.split("#", 1)[0].strip() for x in b)]
    return [from_graph6(line, k) for k, line in enumerate(lines, 1) if line.strip()]


def _inline(q: int | None, edges: str) -> ClusteredGraph:
    if q is None:
        raise UsageError("--edges needs --q")
    pairs = []
    for tok in edges.replace(";", ",").split(","):
        tok = tok.strip()
        if not tok:
            continue
        parts = tok.replace("-", " ").split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise UsageError(f"bad edge {tok!r}; write edges as 'u-v,u-v,...'")
        pairs.append((int(parts[0]), int(parts[1])))
    return build(q, pairs)


def load(args, want: int | None = 1) -> list[Graph]:
    if getattr(args, "edges", None):
        graphs = [_inline(args.q, args.edges)]
    else:
        paths = args.input or []
        if not paths:
            raise UsageError("no input; give a path, '-' for standard input, or --edges with --q")
        graphs = []
        for p in paths:
            graphs += parse_graphs(_read_text(p))
    if want is not None and len(graphs) < want:
        raise UsageError(f"expected {want} graph(s), found {len(graphs)}")
    return graphs if want is None else graphs[:want]


def _as_clustered(g: Graph) -> ClusteredGraph:
    if isinstance(g, ClusteredGraph):
        return g
    if g.n % 2:
        raise UsageError(f"this command needs a clustered graph of even order, got n={g.n}")
    return clustered(g)


# -- output --------------------------------------------------------------------

@contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _dump(obj) -> str:
    return json.dumps({"schema": SCHEMA, **obj}, sort_keys=False)


def render_graph(g: Graph, fmt: str, name: str = "G") -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "dot":
        return to_dot(_as_clustered(g), name)
    if fmt == "json":
        return _dump({"n": g.n, "edges": [list(e) for e in g.edges]}) + "\n"
    if fmt == "edgelist":
        return format_edgelist(_as_clustered(g))
    raise UsageError(f"format {fmt!r} does not apply to graphs")


# -- subcommands ---------------------------------------------------------------

def cmd_pt(args, out):
    for g in load(args, None):
        out.write(render_graph(partial_transpose(_as_clustered(g)), args.format))
    return 0


def cmd_spectrum(args, out):
    for g in load(args, None):
        vals = q_spectrum(g)
        if args.format == "json":
            out.write(_dump({"n": g.n, "eigenvalues": [round(v, 12) for v in vals]}) + "\n")
        else:
            out.write(format_spectrum(vals) + "\n")
    return 0


def cmd_qpoly(args, out):
    for g in load(args, None):
        p = q_polynomial(g)
        if args.format == "json":
            out.write(_dump(p.to_json()) + "\n")
        else:
            out.write(" ".join(str(c) for c in p.coeffs) + "\n")
    return 0


def cmd_tu(args, out):
    for g in load(args, None):
        totals = tu_weight_totals(g, args.budget_subsets)
        rows = [{"j": j, "p_j": str((-1) ** j * w if j else 1), "count": c} for j, (w, c) in enumerate(totals)]
        if args.format == "json":
            out.write(_dump({"n": g.n, "coefficients": rows}) + "\n")
        else:
            out.write("j\tp_j\tcount\n")
            for r in rows:
                out.write(f"{r['j']}\t{r['p_j']}\t{r['count']}\n")
    return 0


def cmd_check_pair(args, out):
    g, h = load(args, 2)
    cos = g.n == h.n and q_polynomial(g) == q_polynomial(h)
    iso = are_isomorphic(g, h)
    if args.format == "json":
        out.write(_dump({"cospectral": cos, "isomorphic": iso}) + "\n")
    else:
        out.write(f"cospectral={str(cos).lower()} isomorphic={str(iso).lower()}\n")
    return 0


def cmd_psym(args, out):
    if args.count:
        if args.q is None:
            raise UsageError("psym --count needs --q")
        res = {"q": args.q, "count": count_partially_symmetric(args.q)}
        if args.brute:
            res["brute"] = brute_count_partially_symmetric(args.q)
        if args.format == "json":
            out.write(_dump(res) + "\n")
        else:
            out.write(" ".join(f"{k}={v}" for k, v in res.items()) + "\n")
        return 0 if res.get("brute", res["count"]) == res["count"] else EXIT_CHECK
    for g in load(args, None):
        g = _as_clustered(g)
        asym = sorted(asymmetric_edge_set(g))
        if args.format == "json":
            out.write(_dump({"partially_symmetric": not asym, "asymmetric_edges": [list(e) for e in asym]}) + "\n")
        else:
            tail = " asymmetric=" + ",".join(f"{u}-{v}" for u, v in asym) if asym else ""
            out.write(f"partially_symmetric={str(is_partially_symmetric(g)).lower()}{tail}\n")
    return 0


def _generate_one(args) -> gen.GeneratorReport:
    fam = args.family
    if fam in SAMPLERS:
        rng = random.Random(args.seed)
        return gen.report(SAMPLERS[fam](rng), fam, seed=args.seed)
    if args.q is None:
        raise UsageError(f"--family {fam} needs --q")
    if fam == "theorem1":
        if args.i is None or args.j is None:
            raise UsageError("--family theorem1 needs --i and --j")
        return gen.report(gen.theorem1_graph(args.q, args.i, args.j), fam, q=args.q, i=args.i, j=args.j)
    if fam == "corollary1":
        if args.i is None:
            raise UsageError("--family corollary1 needs --i")
        g = gen.corollary1_graph(args.q, args.i, keep_edge=args.keep_edge)
        return gen.report(g, fam, q=args.q, i=args.i, keep_edge=args.keep_edge)
    diag = sorted({int(x) for x in args.diag.split(",") if x.strip()}) if args.diag else []
    return gen.report(gen.corollary2_graph(args.q, diag), fam, q=args.q, diagonal_set=diag)


def cmd_generate(args, out):
    r = _generate_one(args)
    fmt = args.format
    if fmt == "json":
        out.write(_dump(r.to_json()) + "\n")
    elif fmt == "edgelist":
        out.write("# graph\n" + format_edgelist(r.graph))
        out.write("# transposed\n" + format_edgelist(r.transposed))
        out.write("# report " + _dump(r.to_json()) + "\n")
    elif fmt == "dot":
        out.write(to_dot(r.graph, "G") + to_dot(r.transposed, "Gtau"))
        out.write("// report " + _dump(r.to_json()) + "\n")
    elif fmt == "graph6":
        out.write(to_graph6(r.graph) + "\n" + to_graph6(r.transposed) + "\n")
    else:
        raise UsageError(f"format {fmt!r} does not apply to generate")
    return 0


def cmd_survey(args, out):
    if args.n is None:
        raise UsageError("survey needs --n")
    workers = args.threads or default_workers()
    rows = survey_table(args.n, args.max_m, workers, args.budget_perms)
    if args.format == "json":
        doc = {"n": args.n, "rows": [r.to_json() for r in rows], "aggregate_ratio": str(aggregate_ratio(rows))}
        if args.details:
            doc["classes"] = [class_detail(c) for c in survey_classes(args.n, args.max_m, workers)]
        out.write(_dump(doc) + "\n")
    else:
        out.write(table_tsv(rows))
    status = 0
    if args.check and any(k == args.n for k, _ in REFERENCE_ROWS):
        for c in compare_with_reference(args.n, rows):
            if c.ok:
                continue
            note = f" (suspect: {c.suspect})" if c.suspect else ""
            published = c.expected if c.expected is not None else "no row"
            print(f"reference mismatch n={c.n} m={c.m}: computed {c.computed}, published {published}{note}", file=sys.stderr)
            if not c.suspect:
                status = EXIT_CHECK
    if any(r.truncated for r in rows):
        print("table truncated: permutation budget exhausted", file=sys.stderr)
        status = status or EXIT_BUDGET
    return status


def cmd_fixtures(args, out):
    checks = fixture_suite() + (construction_suite() if args.all else [])
    if args.format == "json":
        out.write(_dump({"fixtures": [c.to_json() for c in checks]}) + "\n")
    else:
        for c in checks:
            r = c.report
            out.write(
                f"{'ok' if c.ok else 'FAIL'}\t{c.name}\tcospectral={str(r.cospectral).lower()}"
                f"\tisomorphic={str(r.isomorphic).lower()}\texpect_pair={str(c.expect_pair).lower()}\n"
            )
    return 0 if all(c.ok for c in checks) else EXIT_CHECK


def cmd_canon(args, out):
    for g in load(args, None):
        out.write(canonical_form(g).hex + "\n")
    return 0


# -- parser --------------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qspectral", description="Q-cospectral graphs and the partial transpose.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats, default, inputs=True):
        sp = sub.add_parser(name, help=help)
        if inputs:
            sp.add_argument("input", nargs="*", help="graph file(s); '-' reads standard input")
            sp.add_argument("--edges", help="inline edge list 'u-v,u-v,...' (needs --q)")
        sp.add_argument("--q", type=_positive, help="cluster size")
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", help="write output here instead of standard output")
        sp.set_defaults(func=func)
        return sp

    graph_formats = ["edgelist", "graph6", "dot", "json"]
    add("pt", cmd_pt, "apply the partial transpose", graph_formats, "edgelist")
    add("spectrum", cmd_spectrum, "approximate Q-spectrum", ["text", "json"], "text")
    add("qpoly", cmd_qpoly, "exact Q-polynomial coefficients", ["text", "json"], "text")
    sp = add("tu-coeffs", cmd_tu, "coefficients from TU subgraphs", ["tsv", "json"], "tsv")
    sp.add_argument("--budget-subsets", type=_positive, default=DEFAULT_BUDGET)
    add("check-pair", cmd_check_pair, "are two graphs Q-cospectral? isomorphic?", ["text", "json"], "text")
    sp = add("psym", cmd_psym, "test or count partial symmetry", ["text", "json"], "text")
    sp.add_argument("--count", action="store_true", help="print the number of partially symmetric graphs for --q")
    sp.add_argument("--brute", action="store_true", help="with --count, also count by enumeration (q <= 4)")
    add("canon", cmd_canon, "canonical form as hex", ["text"], "text")
    sp = add("generate", cmd_generate, "build a graph from a family", graph_formats, "edgelist", inputs=False)
    sp.add_argument("--family", choices=FAMILIES, required=True)
    sp.add_argument("--i", type=int)
    sp.add_argument("--j", type=int)
    sp.add_argument("--diag", help="comma-separated diagonal indices for corollary2")
    sp.add_argument("--keep-edge", action="store_true", help="corollary1 variant keeping (v2i, v2,i+1)")
    sp.add_argument("--seed", type=int, default=0, help="seed for the procedure samplers")
    sp = add("survey", cmd_survey, "census table for order n", ["tsv", "json"], "tsv", inputs=False)
    sp.add_argument("--n", type=_positive)
    sp.add_argument("--max-m", type=int)
    sp.add_argument("--threads", type=_positive)
    sp.add_argument("--budget-perms", type=_positive, default=DEFAULT_PERM_BUDGET)
    sp.add_argument("--details", action="store_true", help="with --format json, include every class")
    sp.add_argument("--no-check", dest="check", action="store_false", help="skip the comparison with published rows")
    sp = add("fixtures", cmd_fixtures, "check the hand-transcribed fixture graphs", ["text", "json"], "text", inputs=False)
    sp.add_argument("--all", action="store_true", help="also check one worked instance per construction")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _output(args.out) as out:
            return args.func(args, out)
    except (BudgetExceeded, PermutationBudgetExceeded) as exc:
        print(f"qspectral: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, FormatError, GraphError, OSError) as exc:
        print(f"qspectral: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
