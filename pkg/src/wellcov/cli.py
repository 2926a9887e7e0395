"""Command-line front end.

Exit codes: 0 well covered (or success), 1 not well covered, 2 error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import asdict, dataclass, fields
from typing import Optional

from . import __version__, kernels
from .crown import kernelize, strip_isolated
from .degen import well_covered_degenerate
from .errors import OracleBudgetExceeded, WellCovError
from .generators import FAMILIES, GenSpec, generate
from .graph import (
    Graph,
    GraphError,
    degeneracy_ordering,
    format_dimacs,
    format_edge_list,
    read_graph,
)
from .mvc_enum import (
    MAX_COVER_BITS,
    enumerate_minimal_vertex_covers,
    minimum_vertex_cover,
    well_covered_via_mvc_enum,
)
from .oracle import graph_stats_oracle, is_well_covered_oracle, oracle_budget
from .p4 import is_class_member, well_covered_few_p4
from .reports import WellCoveredReport
from .vcplus import well_covered_via_branching

SCHEMA = 1
ALGOS = ("auto", "oracle", "mvc-enum", "vcplus", "degen", "p4")
MVC_AUTO_LIMIT = 25
STATS_GUARD = 64
VCPLUS_BASE = 1.4656


@dataclass
class RunReport:
    input: str
    n: int
    m: int
    algorithm: str
    well_covered: bool
    vc: Optional[int] = None
    vc_plus: Optional[int] = None
    alpha: Optional[int] = None
    witness_small: Optional[list] = None
    witness_large: Optional[list] = None
    tree_leaves: Optional[int] = None
    tree_nodes: Optional[int] = None
    elapsed_ms: Optional[float] = None

    @classmethod
    def from_report(cls, name: str, g: Graph, rep: WellCoveredReport, elapsed_ms: float,
                    tree: bool = False) -> "RunReport":
        def ids(s):
            return None if s is None else sorted(s)

        return cls(
            input=name,
            n=g.n,
            m=g.m,
            algorithm=rep.algorithm,
            well_covered=rep.well_covered,
            vc=rep.vc,
            vc_plus=rep.vc_plus,
            alpha=rep.alpha,
            witness_small=ids(rep.witness_small),
            witness_large=ids(rep.witness_large),
            tree_leaves=rep.stats.get("tree_leaves") if tree else None,
            tree_nodes=rep.stats.get("tree_nodes") if tree else None,
            elapsed_ms=round(elapsed_ms, 3),
        )

    def to_json(self) -> str:
        body = {"schema": SCHEMA}
        body.update({k: v for k, v in asdict(self).items() if v is not None})
        return json.dumps(body, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        data = json.loads(text)
        if data.pop("schema", None) != SCHEMA:
            raise ValueError("unsupported report schema")
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})


# ------------------------------------------------------------ deciding

def _lift(rep: WellCoveredReport, g: Graph, ids, iso: frozenset) -> WellCoveredReport:
    """Translate a report on the isolated-free part back to ``g``."""

    def up(s):
        return None if s is None else frozenset(ids[i] for i in s) | iso

    return WellCoveredReport(
        well_covered=rep.well_covered,
        algorithm=rep.algorithm,
        n=g.n,
        alpha=None if rep.alpha is None else rep.alpha + len(iso),
        vc=rep.vc,
        vc_plus=rep.vc_plus,
        witness_small=up(rep.witness_small),
        witness_large=up(rep.witness_large),
        stats=rep.stats,
    )


def _kernel_witnesses(h: Graph, cover: frozenset):
    """Two maximal independent sets of different sizes for a graph the size test rejected."""
    large = frozenset(h.vertices) - cover
    # greedy: take high-degree vertices first, which tends to give small sets
    chosen, blocked = set(), 0
    for v in sorted(h.vertices, key=lambda v: (-h.degree(v), v)):
        if not blocked >> v & 1:
            chosen.add(v)
            blocked |= h.masks[v] | (1 << v)
    small = frozenset(chosen)
    if len(small) < len(large):
        return small, large
    if len(cover) <= MAX_COVER_BITS:
        rep = well_covered_via_mvc_enum(h)
        return rep.witness_small, rep.witness_large
    return None, None


def decide_auto(g: Graph, budget: int) -> WellCoveredReport:
    h, ids = strip_isolated(g)
    iso = frozenset(g.vertices) - frozenset(ids)
    if h.n == 0:
        return WellCoveredReport(True, "auto:trivial", g.n, g.n, 0, 0)
    cover = minimum_vertex_cover(h)
    k = len(cover)
    out = kernelize(h)
    if out.tag == "not-well-covered":
        small, large = _kernel_witnesses(h, cover)
        rep = WellCoveredReport(False, "auto:kernel", h.n, h.n - k, k, None, small, large,
                                stats={"kernel_k": k})
        return _lift(rep, g, ids, iso)
    alpha = h.n - k
    if k <= MVC_AUTO_LIMIT:
        rep = well_covered_via_mvc_enum(h, decide_only=True)
    else:
        _, d = degeneracy_ordering(h)
        if (d + 1) ** alpha <= budget:
            rep = well_covered_degenerate(h)
        else:
            rep = well_covered_via_branching(h)
    rep.algorithm = "auto:" + rep.algorithm
    return _lift(rep, g, ids, iso)


def run_algorithm(g: Graph, algo: str, args) -> WellCoveredReport:
    budget = oracle_budget(getattr(args, "budget", None))
    if algo == "auto":
        return decide_auto(g, budget)
    if algo == "oracle":
        return is_well_covered_oracle(g, budget)
    if algo == "mvc-enum":
        return well_covered_via_mvc_enum(g, decide_only=not getattr(args, "full", False))
    if algo == "vcplus":
        return well_covered_via_branching(g)
    if algo == "degen":
        return well_covered_degenerate(g, early_exit=not getattr(args, "no_early_exit", False))
    if algo == "p4":
        cls = getattr(args, "graph_class", None)
        if cls is None:
            raise WellCovError("--algo p4 needs --class")
        q = getattr(args, "q", None)
        if getattr(args, "verify_class", False) and not is_class_member(g, cls, q):
            raise WellCovError(f"input is not in class {cls}")
        rep, _ = well_covered_few_p4(g, cls, q)
        return rep
    raise WellCovError(f"unknown algorithm {algo!r}")


# ------------------------------------------------------------ commands

def _load(path: str, fmt: str) -> Graph:
    return read_graph(path, fmt)


def cmd_check(args) -> int:
    g = _load(args.file, args.format)
    start = time.perf_counter()
    rep = run_algorithm(g, args.algo, args)
    elapsed = (time.perf_counter() - start) * 1e3
    if args.json:
        print(RunReport.from_report(args.file, g, rep, elapsed, args.emit_tree_stats).to_json())
    else:
        verdict = "WELL_COVERED" if rep.well_covered else "NOT_WELL_COVERED"
        parts = [verdict, f"algo={rep.algorithm}"]
        for key in ("alpha", "vc", "vc_plus"):
            val = getattr(rep, key)
            if val is not None:
                parts.append(f"{key}={val}")
        if args.emit_tree_stats and "tree_leaves" in rep.stats:
            parts.append(f"leaves={rep.stats['tree_leaves']} nodes={rep.stats['tree_nodes']}")
        print(" ".join(parts))
        if rep.witness_small is not None:
            print("small:", " ".join(map(str, sorted(rep.witness_small))))
            print("large:", " ".join(map(str, sorted(rep.witness_large))))
    return 0 if rep.well_covered else 1


def cmd_stats(args) -> int:
    g = _load(args.file, args.format)
    if g.n > args.max_n:
        print(f"error: n={g.n} exceeds the stats guard {args.max_n}", file=sys.stderr)
        return 2
    st = graph_stats_oracle(g, args.budget)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "input": args.file, "n": g.n, "m": g.m,
                          "alpha": st.alpha, "vc": st.vc, "vc_plus": st.vc_plus,
                          "i_min": st.i_min, "degeneracy": st.degeneracy}))
    else:
        print(f"alpha={st.alpha} vc={st.vc} vc_plus={st.vc_plus} i_min={st.i_min} d={st.degeneracy}")
    return 0


def cmd_kernel(args) -> int:
    g = _load(args.file, args.format)
    h, _ = strip_isolated(g)
    out = kernelize(h)
    if out.tag == "not-well-covered":
        print(f"NOT_WELL_COVERED (n > 5k: n={h.n}, k={out.k})")
        return 1
    sys.stdout.write(format_edge_list(out.kernel_graph))
    return 0


def cmd_enum_mvc(args) -> int:
    g = _load(args.file, args.format)
    cmin = minimum_vertex_cover(g)
    covers = enumerate_minimal_vertex_covers(g, cmin, check=False)
    if args.count_only:
        print(sum(1 for _ in covers))
        return 0
    out = sys.stdout
    for c in covers:
        out.write(" ".join(map(str, sorted(c))) + "\n")
    return 0


def cmd_gen(args) -> int:
    spec = GenSpec(family=args.family, n=args.n, p=args.p, k=args.k, q=args.q,
                   seed=args.seed, variant=args.variant, r=args.r)
    g = generate(spec)
    sys.stdout.write(format_dimacs(g) if args.format == "dimacs" else format_edge_list(g))
    return 0


def _bound(algo: str, rep: WellCoveredReport) -> Optional[float]:
    if algo == "vcplus":
        return math.ceil(VCPLUS_BASE ** rep.stats["tree_k"])
    if algo == "degen" and rep.alpha is not None:
        return (rep.stats["degeneracy"] + 1) ** rep.alpha
    if algo == "mvc-enum" and rep.vc is not None:
        return 2 ** rep.vc
    return None


def bench_rows(corpus: str, algos, args) -> list[dict]:
    rows = []
    names = sorted(e.name for e in os.scandir(corpus) if e.is_file()) if corpus else []
    for name in names:
        path = os.path.join(corpus, name)
        try:
            g = _load(path, "auto")
        except (OSError, GraphError, UnicodeDecodeError) as exc:
            rows.append({"input": name, "algorithm": "-", "error": str(exc)})
            continue
        for algo in algos:
            row = {"input": name, "algorithm": algo, "n": g.n, "m": g.m}
            try:
                start = time.perf_counter()
                if algo == "degen":
                    rep = well_covered_degenerate(g, early_exit=False)
                elif algo == "mvc-enum":
                    rep = well_covered_via_mvc_enum(g)
                else:
                    rep = run_algorithm(g, algo, args)
                row["elapsed_ms"] = round((time.perf_counter() - start) * 1e3, 3)
                row["well_covered"] = rep.well_covered
                measured = rep.stats.get("tree_leaves", rep.stats.get("partitions"))
                bound = _bound(algo, rep)
                row["leaves"] = measured
                row["bound"] = bound
                row["violation"] = bool(bound is not None and measured is not None and measured > bound)
            except (WellCovError, GraphError) as exc:
                row["error"] = str(exc)
            rows.append(row)
    return rows


def cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in ALGOS or a == "p4":
            print(f"error: bench does not run algorithm {a!r}", file=sys.stderr)
            return 2
    rows = bench_rows(args.corpus, algos, args)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "backend": kernels.BACKEND, "rows": rows}))
    else:
        print(f"{'input':24} {'algo':9} {'verdict':8} {'leaves':>10} {'bound':>12} {'ms':>10}  flag")
        for r in rows:
            if "error" in r:
                print(f"{r['input']:24} {r['algorithm']:9} ERROR    {r['error']}")
                continue
            verdict = "yes" if r["well_covered"] else "no"
            bound = "-" if r["bound"] is None else str(r["bound"])
            leaves = "-" if r["leaves"] is None else str(r["leaves"])
            flag = "VIOLATION" if r["violation"] else ""
            print(f"{r['input']:24} {r['algorithm']:9} {verdict:8} {leaves:>10} {bound:>12} "
                  f"{r['elapsed_ms']:>10.1f}  {flag}")
    return 1 if any(r.get("violation") for r in rows) else 0


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wellcov", description="Decide whether a graph is well covered.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("file", help="graph file (edge list or DIMACS)")
        sp.add_argument("--format", choices=("auto", "edge-list", "dimacs"), default="auto")

    c = sub.add_parser("check", help="decide well-coveredness")
    graph_input(c)
    c.add_argument("--algo", choices=ALGOS, default="auto")
    c.add_argument("--class", dest="graph_class", choices=("ext-laden", "qq4"))
    c.add_argument("--q", type=int, help="q for the qq4 class")
    c.add_argument("--verify-class", action="store_true", help="brute-force class check first")
    c.add_argument("--json", action="store_true")
    c.add_argument("--emit-tree-stats", action="store_true")
    c.add_argument("--no-early-exit", action="store_true", help="degen: explore the whole tree")
    c.add_argument("--full", action="store_true", help="mvc-enum: scan every partition")
    c.add_argument("--budget", type=int, help="oracle set budget (default $WCOV_ORACLE_BUDGET or 1e7)")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("stats", help="alpha, vc, vc+, i_min and degeneracy by brute force")
    graph_input(s)
    s.add_argument("--json", action="store_true")
    s.add_argument("--max-n", type=int, default=STATS_GUARD)
    s.add_argument("--budget", type=int)
    s.set_defaults(func=cmd_stats)

    k = sub.add_parser("kernel", help="apply the 5k size rule")
    graph_input(k)
    k.set_defaults(func=cmd_kernel)

    e = sub.add_parser("enum-mvc", help="list all minimal vertex covers")
    graph_input(e)
    e.add_argument("--count-only", action="store_true")
    e.set_defaults(func=cmd_enum_mvc)

    gsp = sub.add_parser("gen", help="generate an instance")
    gsp.add_argument("--family", choices=FAMILIES, required=True)
    gsp.add_argument("--n", type=int)
    gsp.add_argument("--p", type=float)
    gsp.add_argument("--k", type=int)
    gsp.add_argument("--q", type=int)
    gsp.add_argument("--r", type=int, default=0, help="R-part size for spiders")
    gsp.add_argument("--variant", help="spider substitution, corona base family or recipe")
    gsp.add_argument("--seed", type=int, default=0)
    gsp.add_argument("--format", choices=("edge-list", "dimacs"), default="edge-list")
    gsp.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="run algorithms over a corpus directory")
    b.add_argument("corpus")
    b.add_argument("--algos", default="mvc-enum,vcplus,degen")
    b.add_argument("--json", action="store_true")
    b.add_argument("--budget", type=int)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OracleBudgetExceeded as exc:
        print(f"error: {exc} (raise --budget or WCOV_ORACLE_BUDGET)", file=sys.stderr)
        return 2
    except (OSError, GraphError, WellCovError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RecursionError:
        print("error: input too deep for the recursive decomposition", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
