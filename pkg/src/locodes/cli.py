"""Command-line entry point.

Subcommands: verify, solve, share, bound (lid-lower / lid-upper / window),
construct (hamming / hamming-lift / lift-cover / pattern / search) and
paper-check.  Machine output is a JSON run report on stdout; --format text
swaps in a human summary.  Exit codes: 0 success/valid, 1 invalid or
infeasible with a certificate, 2 usage error, 3 budget exhausted/unknown.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__, bounds, constructions
from .codes import Code, CodeClass, CodeError, parse_kind, verify
from .graphs import GraphError, graph_from_uri, parse_family
from .patterns import (BUILTIN_PATTERNS, PatternError, builtin_pattern,
                       pattern_to_text, search_lattices, write_pattern)
from .papercheck import PaperCheck
from .solver import (InadmissibleGraphError, InfeasibleClassError, SolveBudget,
                     SolverError, solve_min)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3


class _CliError(Exception):
    def __init__(self, message, exit_code=EXIT_USAGE):
        super().__init__(message)
        self.exit_code = exit_code


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(args, command, inputs, outcome, t0, seed=None):
    report = {
        "schema_version": 1,
        "tool": {"name": "locodes", "version": __version__},
        "command": command,
        "inputs": _jsonable(inputs),
        "outcome": _jsonable(outcome),
        "elapsed_seconds": round(time.perf_counter() - t0, 6),
        "seed": seed,
    }
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(f"{command}: {json.dumps(_jsonable(outcome), sort_keys=True)}")
    return report


def _load_code(graph, source) -> Code:
    """Code from 'inline:<label,label,...>' or a file of labels (# comments)."""
    if source.startswith("inline:"):
        labels = [s for s in source[len("inline:"):].split(",") if s.strip()]
        return Code.from_labels(graph, labels)
    labels = []
    try:
        with open(source, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                try:
                    graph.index_of(line)
                except GraphError:
                    raise _CliError(f"{source}:{lineno}: no vertex labelled {line!r}")
                labels.append(line)
    except OSError as exc:
        raise _CliError(f"cannot read code file {source}: {exc}") from None
    if not labels:
        raise _CliError(f"{source}: no codewords found")
    return Code.from_labels(graph, labels)


def _write_code(code: Code, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(code.labels()) + "\n")


def _budget(args) -> SolveBudget | None:
    if args.budget_nodes is None and args.budget_secs is None and args.size_hint is None:
        return None
    return SolveBudget(args.budget_nodes, args.budget_secs, args.size_hint)


# -- subcommands -------------------------------------------------------------


def cmd_verify(args):
    t0 = time.perf_counter()
    g = graph_from_uri(args.graph)
    code = _load_code(g, args.code)
    klass = CodeClass(parse_kind(args.klass), args.r)
    rep = verify(code, klass)
    outcome = {"valid": rep.valid, "class": str(klass), "code_size": len(code)}
    if not rep.valid:
        f = rep.failure
        if hasattr(f, "vertex"):
            outcome["witness"] = {"kind": "uncovered", "vertex": g.labels[f.vertex]}
        else:
            outcome["witness"] = {
                "kind": "unseparated",
                "pair": [g.labels[f.u], g.labels[f.v]],
                "shared_iset": [g.labels[v] for v in f.shared_iset],
            }
    _emit(args, "verify", {"graph": args.graph, "code": args.code,
                           "class": args.klass, "r": args.r}, outcome, t0)
    return EXIT_OK if rep.valid else EXIT_INVALID


def cmd_solve(args):
    t0 = time.perf_counter()
    g = graph_from_uri(args.graph)
    klass = CodeClass(parse_kind(args.klass), args.r)
    symmetry = False if args.no_symmetry else None
    try:
        res = solve_min(g, klass, budget=_budget(args), symmetry=symmetry)
    except InadmissibleGraphError as exc:
        outcome = {"error": "inadmissible",
                   "twins": [g.labels[v] for v in exc.twins]}
        _emit(args, "solve", vars_inputs(args), outcome, t0)
        return EXIT_INVALID
    except InfeasibleClassError as exc:
        _emit(args, "solve", vars_inputs(args), {"error": str(exc)}, t0)
        return EXIT_INVALID
    outcome = {
        "status": res.status,
        "optimal": res.optimal_size,
        "witness": res.witness.labels() if res.witness else None,
        "certified": res.certified,
        "nodes": res.nodes_explored,
        "lower_bound_used": res.lower_bound_used,
        "refuted_up_to": res.refuted_up_to,
    }
    _emit(args, "solve", vars_inputs(args), outcome, t0)
    return EXIT_OK if res.status == "optimal" else EXIT_UNKNOWN


def vars_inputs(args):
    return {"graph": args.graph, "class": args.klass, "r": args.r,
            "budget_nodes": args.budget_nodes, "budget_secs": args.budget_secs,
            "no_symmetry": args.no_symmetry}


def cmd_share(args):
    t0 = time.perf_counter()
    g = graph_from_uri(args.graph)
    code = _load_code(g, args.code)
    try:
        prof = bounds.share_profile(code)
    except bounds.ShareError as exc:
        _emit(args, "share", {"graph": args.graph, "code": args.code},
              {"error": str(exc)}, t0)
        return EXIT_INVALID
    outcome = {"max_share": prof.max_share,
               "argmax": g.labels[prof.argmax],
               "size_lower_bound": bounds.max_share_lower_bound(code)}
    if args.per_codeword:
        outcome["shares"] = {g.labels[v]: s for v, s in sorted(prof.shares.items())}
    _emit(args, "share", {"graph": args.graph, "code": args.code}, outcome, t0)
    return EXIT_OK


def cmd_bound(args):
    t0 = time.perf_counter()
    if args.bound_cmd == "lid-lower":
        value = bounds.hypercube_lid_lower_bound(args.n)
        _emit(args, "bound lid-lower", {"n": args.n}, {"bound": value}, t0)
        return EXIT_OK
    if args.bound_cmd == "lid-upper":
        value = bounds.hypercube_lid_upper_bound(args.s, args.k)
        _emit(args, "bound lid-upper", {"s": args.s, "k": args.k}, {"bound": value}, t0)
        return EXIT_OK
    # window
    g = graph_from_uri(args.graph)
    code = _load_code(g, args.code)
    rep = bounds.window_count_bound(code, args.w, args.kmin)
    px, py = g.meta["px"], g.meta["py"]
    outcome = {"ok": rep.ok, "min_count": rep.min_count,
               "implied_size_bound": -(-args.kmin * px * py // (args.w * args.w)),
               "code_size": len(code)}
    if rep.witness is not None:
        outcome["witness_window"] = list(rep.witness)
    _emit(args, "bound window",
          {"graph": args.graph, "code": args.code, "w": args.w, "kmin": args.kmin},
          outcome, t0)
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_construct(args):
    t0 = time.perf_counter()
    sub = args.construct_cmd
    if sub == "hamming":
        lin = constructions.hamming(args.s)
        code = lin.as_code()
        outcome = {"length": lin.length, "dimension": lin.dimension,
                   "size": lin.size, "words": code.labels()}
        if args.out:
            _write_code(code, args.out)
            outcome["out"] = args.out
        _emit(args, "construct hamming", {"s": args.s}, outcome, t0)
        return EXIT_OK
    if sub == "hamming-lift":
        code = constructions.hamming_lift(args.s, args.k)
        outcome = {"dimension": code.graph.meta["dim"], "size": len(code),
                   "words": code.labels()}
        if args.out:
            _write_code(code, args.out)
            outcome["out"] = args.out
        _emit(args, "construct hamming-lift", {"s": args.s, "k": args.k}, outcome, t0)
        return EXIT_OK
    if sub == "lift-cover":
        g = graph_from_uri(f"hypercube:{args.n}")
        code = _load_code(g, args.input)
        lifted = constructions.lift_covering_to_lid(code)
        outcome = {"input_size": len(code), "size": len(lifted),
                   "dimension": args.n + 2, "words": lifted.labels()}
        if args.out:
            _write_code(lifted, args.out)
            outcome["out"] = args.out
        _emit(args, "construct lift-cover", {"input": args.input, "n": args.n},
              outcome, t0)
        return EXIT_OK
    if sub == "pattern":
        bp = builtin_pattern(args.id)
        if args.torus:
            px, py = (int(x) for x in args.torus.lower().split("x"))
        else:
            px, py = bp.base_torus
        code = bp.pattern.to_torus_code(px, py)
        outcome = {"pattern": pattern_to_text(bp.pattern).splitlines(),
                   "density": bp.density, "torus": f"{px}x{py}",
                   "size": len(code), "class": str(bp.klass)}
        if args.out:
            _write_code(code, args.out)
            outcome["out"] = args.out
        if args.plot:
            from .report import render_pattern
            render_pattern(bp, args.plot)
            outcome["plot"] = args.plot
        _emit(args, "construct pattern", {"id": args.id, "torus": f"{px}x{py}"},
              outcome, t0)
        return EXIT_OK
    # search
    klass = CodeClass(parse_kind(args.klass), args.r)
    found = search_lattices(parse_family(args.family), args.det, args.count, klass)
    if found is None:
        _emit(args, "construct search",
              {"family": args.family, "det": args.det, "count": args.count,
               "class": args.klass},
              {"found": False}, t0)
        return EXIT_INVALID
    outcome = {"found": True, "v1": list(found.v1), "v2": list(found.v2),
               "residues": [list(r) for r in found.residues],
               "density": found.density}
    if args.out:
        write_pattern(found, args.out)
        outcome["out"] = args.out
    _emit(args, "construct search",
          {"family": args.family, "det": args.det, "count": args.count,
           "class": args.klass},
          outcome, t0)
    return EXIT_OK


def cmd_paper_check(args):
    t0 = time.perf_counter()
    budget = None
    if args.budget_secs:
        budget = SolveBudget(max_seconds=args.budget_secs)
    pc = PaperCheck(seed=args.seed, budget=budget)

    def progress(row):
        mark = "PASS" if row.ok else "FAIL"
        print(f"{mark}  {row.row_id:34s} expected {row.expected} | got {row.got}"
              f"  [{row.seconds:.2f}s]", file=sys.stderr)

    rows = pc.run(only=args.only, progress=progress)
    n_ok = sum(r.ok for r in rows)
    outcome = {
        "rows": [{"row_id": r.row_id, "group": r.group,
                  "status": "pass" if r.ok else "fail",
                  "expected": r.expected, "got": r.got,
                  "seconds": round(r.seconds, 3), "note": r.note} for r in rows],
        "passed": n_ok,
        "failed": len(rows) - n_ok,
        "total": len(rows),
    }
    if args.report_dir:
        from .report import write_report
        outcome["report_files"] = write_report(rows, args.report_dir)
    _emit(args, "paper-check", {"only": args.only, "threads": args.threads},
          outcome, t0, seed=args.seed)
    return EXIT_OK if n_ok == len(rows) and rows else EXIT_INVALID


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="locodes",
        description="covering / identifying / locating-dominating codes: "
                    "verify, solve exactly, bound and construct")
    ap.add_argument("--version", action="version", version=f"locodes {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for sampling rows")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker hint; results are thread-count invariant")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a code against a class")
    p.add_argument("--graph", required=True)
    p.add_argument("--code", required=True, help="file of labels or inline:<l1,l2,...>")
    p.add_argument("--class", dest="klass", required=True,
                   help="covering|total|id|ld|lid|lld")
    p.add_argument("--r", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("solve", parents=[common], help="exact minimum code size")
    p.add_argument("--graph", required=True)
    p.add_argument("--class", dest="klass", required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    p.add_argument("--size-hint", type=int, default=None)
    p.add_argument("--no-symmetry", action="store_true",
                   help="disable translate-to-zero symmetry breaking")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("share", parents=[common], help="exact codeword shares")
    p.add_argument("--graph", required=True)
    p.add_argument("--code", required=True)
    p.add_argument("--per-codeword", action="store_true")
    p.set_defaults(fn=cmd_share)

    p = sub.add_parser("bound", parents=[], help="counting bounds")
    bsub = p.add_subparsers(dest="bound_cmd", required=True)
    b = bsub.add_parser("lid-lower", parents=[common])
    b.add_argument("--n", type=int, required=True)
    b.set_defaults(fn=cmd_bound)
    b = bsub.add_parser("lid-upper", parents=[common])
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.set_defaults(fn=cmd_bound)
    b = bsub.add_parser("window", parents=[common])
    b.add_argument("--graph", required=True)
    b.add_argument("--code", required=True)
    b.add_argument("--w", type=int, default=4)
    b.add_argument("--kmin", type=int, default=3)
    b.set_defaults(fn=cmd_bound)

    p = sub.add_parser("construct", parents=[], help="explicit constructions")
    csub = p.add_subparsers(dest="construct_cmd", required=True)
    c = csub.add_parser("hamming", parents=[common])
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--out")
    c.set_defaults(fn=cmd_construct)
    c = csub.add_parser("hamming-lift", parents=[common])
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--out")
    c.set_defaults(fn=cmd_construct)
    c = csub.add_parser("lift-cover", parents=[common])
    c.add_argument("--input", required=True, help="covering code file")
    c.add_argument("--n", type=int, required=True, help="dimension of the input cube")
    c.add_argument("--out")
    c.set_defaults(fn=cmd_construct)
    c = csub.add_parser("pattern", parents=[common])
    c.add_argument("--id", required=True, choices=sorted(BUILTIN_PATTERNS))
    c.add_argument("--torus", help="WxH, defaults to the pattern's base torus")
    c.add_argument("--out")
    c.add_argument("--plot", help="write a PNG rendering")
    c.set_defaults(fn=cmd_construct)
    c = csub.add_parser("search", parents=[common])
    c.add_argument("--family", required=True)
    c.add_argument("--det", type=int, required=True)
    c.add_argument("--count", type=int, required=True)
    c.add_argument("--class", dest="klass", required=True)
    c.add_argument("--r", type=int, default=1)
    c.add_argument("--out")
    c.set_defaults(fn=cmd_construct)

    p = sub.add_parser("paper-check", parents=[common],
                       help="replay every reproducible published value")
    p.add_argument("--only", help="substring filter on row id or group")
    p.add_argument("--report-dir", help="write CSV summary and figures here")
    p.add_argument("--budget-secs", type=float, default=None,
                   help="global solver time budget")
    p.set_defaults(fn=cmd_paper_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (GraphError, CodeError, PatternError, SolverError,
            constructions.ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
