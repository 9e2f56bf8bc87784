"""Command-line front end: ``packbound <command> ...``.

Exit codes: 0 on success, 1 on usage or input errors, 2 when ``verify``
finds a violated claim.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO

from . import bounds, families, solvers, verifier
from .enumeration import MAX_ENUMERATION_ORDER, enumerate_connected
from .graph import Graph, read_graphs, to_graph6
from .solvers import InvariantUndefined, NodeLimitExceeded, SolveOptions

NODE_LIMIT_ENV = "PACKBOUND_NODE_LIMIT"
EXIT_OK, EXIT_USAGE, EXIT_VIOLATED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CliConfig:
    command: str
    input: str = "-"
    k: Optional[int] = None
    n: Optional[int] = None
    format: str = "json"
    exhaustive: bool = False
    node_limit: Optional[int] = None

    def solve_options(self) -> SolveOptions:
        return SolveOptions(force_exhaustive=self.exhaustive, node_limit=self.node_limit)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="packbound", description="Exact packing/domination invariants and bounds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("--input", "-i", default="-", help="graph6 lines or an edge list; '-' is stdin")
        sp.add_argument("--format", choices=["json", "csv", "text"], default="json")
        sp.add_argument("--exhaustive", action="store_true", help="use the exhaustive oracle")
        sp.add_argument("--node-limit", type=int, default=None)

    sp = sub.add_parser("invariants", help="rho, rho_o, L_k, gamma, gamma_x2")
    common(sp)
    sp.add_argument("--k", type=int, help="report L_k for this k only (default: 1..Delta+1)")
    sp.add_argument("--witness", action="store_true", help="include optimal sets")

    sp = sub.add_parser("bounds", help="evaluate every bound against the exact invariants")
    common(sp)
    sp.add_argument("--k", type=int, help="k for the order/size bound (default: 1..Delta)")

    sp = sub.add_parser("family", help="recognize or generate extremal family members")
    common(sp)
    act = sp.add_mutually_exclusive_group(required=True)
    act.add_argument("--recognize", choices=[f.value for f in families.Family])
    act.add_argument("--generate", choices=[f.value for f in families.Family])
    sp.add_argument("--k", type=int)
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--delta", type=int, default=2)
    sp.add_argument("--clique-size", type=int, default=1)
    sp.add_argument("--outside-size", type=int, default=2)
    sp.add_argument("--pairs", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("enumerate", help="connected graphs up to isomorphism, as graph6")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--upto", action="store_true", help="all orders 1..n")

    for name, helptext in (("verify", "check every claim over a graph stream"),
                           ("hunt", "list graphs attaining a claim with equality")):
        sp = sub.add_parser(name, help=helptext)
        common(sp)
        sp.add_argument("--n", type=int, help="use enumerated connected graphs of this order")
        sp.add_argument("--all-connected", action="store_true",
                        help="with --n: every connected graph of that order")
        sp.add_argument("--upto", action="store_true", help="with --n: include orders 1..n")
        sp.add_argument("--k-range", help="comma-separated k values (default: 1..Delta)")
        sp.add_argument("--jobs", type=int, default=1)
        if name == "verify":
            sp.add_argument("--report", help="write JSON-lines verdicts here ('-' for stdout)")
            sp.add_argument("--csv", dest="csv_path", help="write the tight-instance table here")
            sp.add_argument("--timing", action="store_true", help="include wall time in the summary")
        else:
            sp.add_argument("--claim", required=True)
    return p


# --- helpers ---

def _read_input(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _graphs(path: str, stdin: TextIO) -> list[Graph]:
    try:
        return [g for _, g in read_graphs(_read_input(path, stdin))]
    except ValueError as exc:
        raise UsageError(f"malformed input: {exc}") from None


def _emit(rows: list[dict], fmt: str, out: TextIO):
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row, sort_keys=False) + "\n")
    elif fmt == "csv":
        keys: list[str] = []
        for row in rows:
            keys += [k for k in row if k not in keys]
        w = csv.DictWriter(out, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in row.items()})
    else:
        for row in rows:
            out.write(" ".join(f"{k}={v}" for k, v in row.items()) + "\n")


def _k_range(text: Optional[str]) -> Optional[list[int]]:
    if not text:
        return None
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --k-range {text!r}") from None


def _stream(args, stdin):
    if args.n is not None:
        if not 1 <= args.n <= MAX_ENUMERATION_ORDER:
            raise UsageError(f"--n must be within 1..{MAX_ENUMERATION_ORDER}")
        orders = range(1, args.n + 1) if args.upto else [args.n]
        return [g for n in orders for g in enumerate_connected(n)]
    text = _read_input(args.input, stdin)
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if len(first.split()) == 2:
        return _graphs(args.input, io.StringIO(text))
    # graph6 records stay as strings so malformed lines are counted, not fatal
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


# --- commands ---

def _invariants_row(g: Graph, args, opts: SolveOptions) -> dict:
    row: dict = {}
    wit: dict = {}

    def put(key, result):
        row[key] = result.value
        wit[key] = sorted(result.witness)

    put("rho", solvers.packing_number(g, opts))
    put("rho_o", solvers.open_packing_number(g, opts))
    ks = [args.k] if args.k is not None else range(1, g.max_degree + 2)
    for k in ks:
        put(f"L{k}", solvers.limited_packing_number(g, k, opts))
    put("gamma", solvers.domination_number(g, opts))
    try:
        put("gamma_x2", solvers.double_domination_number(g, opts))
    except InvariantUndefined:
        row["gamma_x2"] = None
    if args.witness:
        row["witness"] = wit
    return row


def cmd_invariants(args, opts, stdin, out) -> int:
    if args.k is not None and args.k < 1:
        raise UsageError("--k must be positive")
    rows = [_invariants_row(g, args, opts) for g in _graphs(args.input, stdin)]
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_bounds(args, opts, stdin, out) -> int:
    rows = []
    for g in _graphs(args.input, stdin):
        rho = solvers.packing_number(g, opts).value
        rho_o = solvers.open_packing_number(g, opts).value
        evs = [bounds.l2_pendant_bound(g)]
        if evs[0].applicable:
            evs[0] = bounds.l2_pendant_bound(g, solvers.limited_packing_number(g, 2, opts).value)
        ks = [args.k] if args.k is not None else range(1, g.max_degree + 1)
        for k in ks:
            ev = bounds.lk_order_size_bound(g, k)
            if ev.applicable:
                ev = bounds.lk_order_size_bound(g, k, solvers.limited_packing_number(g, k, opts).value)
            evs.append(ev)
        evs.append(bounds.open_packing_order_size_bound(g, rho_o))
        evs.append(bounds.open_packing_min_degree_bound(g, rho_o))
        evs.append(bounds.packing_min_degree_bound(g, rho))
        gx2 = solvers.double_domination_number(g, opts).value if g.min_degree >= 1 else None
        evs += bounds.double_domination_bounds(g, gx2, rho)
        for ev in evs:
            rows.append({"graph": to_graph6(g), **ev.to_dict()})
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_family(args, opts, stdin, out) -> int:
    if args.generate:
        fam = families.Family(args.generate)
        if fam is families.Family.OMEGA:
            params = dict(k=args.k or 1, clique_size=args.clique_size, outside_size=args.outside_size)
        elif fam is families.Family.SIGMA:
            params = dict(clique_size=args.clique_size, pairs=args.pairs)
        elif fam is families.Family.GAMMA:
            params = dict(t=args.t, k=1 if args.k is None else args.k)
        else:
            params = dict(t=args.t, delta=args.delta)
        try:
            g = families.generate_family(fam, seed=args.seed, **params)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.write(to_graph6(g) + "\n")
        return EXIT_OK
    fam = families.Family(args.recognize)
    if fam is families.Family.OMEGA and args.k is None:
        raise UsageError("--recognize omega needs --k")
    rows = []
    for g in _graphs(args.input, stdin):
        try:
            w = families.recognize(g, fam, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rows.append({"graph": to_graph6(g), "member": w is not None,
                     "witness": None if w is None else w.to_dict()})
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_enumerate(args, opts, stdin, out) -> int:
    if not 1 <= args.n <= MAX_ENUMERATION_ORDER:
        raise UsageError(f"--n must be within 1..{MAX_ENUMERATION_ORDER}")
    orders = range(1, args.n + 1) if args.upto else [args.n]
    for n in orders:
        for g in enumerate_connected(n):
            out.write(to_graph6(g) + "\n")
    return EXIT_OK


def cmd_verify(args, opts, stdin, out) -> int:
    if args.all_connected and args.n is None:
        raise UsageError("--all-connected needs --n")
    stream = _stream(args, stdin)
    report = None
    if args.report:
        report = out if args.report == "-" else open(args.report, "w")

    def sink(verdicts):
        if report is not None:
            report.write(verifier.verdicts_to_jsonl(verdicts))

    try:
        summary = verifier.verify_stream(stream, _k_range(args.k_range), opts, args.jobs, sink)
    finally:
        if report is not None and report is not out:
            report.close()
    if args.csv_path:
        with open(args.csv_path, "w") as fh:
            fh.write(verifier.tight_table_csv(summary))
    data = summary.to_dict(timing=args.timing)
    if args.format == "json":
        out.write(json.dumps(data, sort_keys=True) + "\n")
    elif args.format == "csv":
        out.write(verifier.tight_table_csv(summary))
    else:
        out.write(f"graphs={summary.graphs_processed} malformed={summary.malformed} "
                  f"violations={summary.violation_count}\n")
        for claim, counts in data["counts"].items():
            out.write(f"{claim}: " + " ".join(f"{s}={c}" for s, c in counts.items()) + "\n")
    return EXIT_VIOLATED if summary.violation_count else EXIT_OK


def cmd_hunt(args, opts, stdin, out) -> int:
    stream = _stream(args, stdin)
    try:
        found = verifier.hunt_tight(args.claim, stream, _k_range(args.k_range), opts, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(json.dumps({"claim": args.claim, "tight": found}) + "\n")
    else:
        out.write("".join(g6 + "\n" for g6 in found))
    return EXIT_OK


COMMANDS = {
    "invariants": cmd_invariants,
    "bounds": cmd_bounds,
    "family": cmd_family,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "hunt": cmd_hunt,
}


def run(argv: Optional[Sequence[str]] = None, stdin: TextIO = None, stdout: TextIO = None,
        stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        limit = getattr(args, "node_limit", None)
        if limit is None and os.environ.get(NODE_LIMIT_ENV):
            limit = int(os.environ[NODE_LIMIT_ENV])
        if limit is not None and limit <= 0:
            raise UsageError("node limit must be positive")
        opts = SolveOptions(force_exhaustive=getattr(args, "exhaustive", False), node_limit=limit)
        return COMMANDS[args.command](args, opts, stdin, stdout)
    except UsageError as exc:
        stderr.write(f"packbound: error: {exc}\n")
        return EXIT_USAGE
    except NodeLimitExceeded as exc:
        stderr.write(f"packbound: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        stderr.write(f"packbound: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
