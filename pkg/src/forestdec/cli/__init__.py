"""``forestdec`` command line: solve, oracle, verify, reduce, gadget, bench.

Exit status: 0 yes/pass, 1 no/fail, 2 budget exceeded, 64 usage error,
65 bad input data, 66 missing input file, 69 no polynomial solver for the
requested problem type.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections.abc import Callable, Sequence
from dataclasses import asdict, dataclass
from pathlib import Path

from ..digraph import Digraph
from ..errors import BadParameter, ForestDecError, IncompleteLabeling, InvalidSource, ParseError, UnsupportedSpec
from ..forests import Bound, Family, ProblemSpec, decomposition_violation, parse_bound
from ..gadgets import (
    CnfInstance,
    Gadget,
    build_binary_tree_orientation,
    k2_alpha_in_forcer,
    k_clause_gadget,
    k_variable_gadget,
    kk_minus2_in_forcer,
    kl_alpha_clause_gadget_bogd,
    kl_clause_gadget_dlf,
    kl_minus2_in_forcer,
    klt_variable_gadget,
    long_k_alpha_in_forcer,
    long_kl_out_forcer,
    parse_dimacs,
    q_variable_gadget_bogd,
    reduce_3b2sat_to_bdlfd,
    reduce_hamiltonicity_to_bdlfd,
    reduce_lplus1sat_to_bogd_kl,
    reduce_me1sat_to_bdlfd,
    reduce_meksat_to_bogd_kk,
    short_k_in_forcer,
    short_kl_out_forcer,
)
from ..gadgets.reductions import ReductionOutput
from ..oracle import Outcome, SearchBudget, oracle_decide
from ..polysolve import solve
from .bench import SUITES, run_suite, to_csv
from .formats import Format, InstanceFile, digest, emit, format_for_path, read_instance, write_atomic

EXIT_YES = 0
EXIT_NO = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NO_INPUT = 66
EXIT_UNSUPPORTED = 69

BUDGET_ENV = "FORESTDEC_BUDGET_NODES"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunReport:
    command: str
    instance_digest: str | None
    verdict: str
    certificate: str | None = None
    seconds: float = 0.0
    nodes: int | None = None
    seed: int | None = None
    reason: str | None = None

    def emit(self) -> None:
        print(json.dumps(asdict(self), sort_keys=True))


# --- argument helpers -------------------------------------------------------------------


def _bound(text: str) -> Bound:
    try:
        return parse_bound(text)
    except BadParameter as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--k", type=_bound, help="bound of the first part: positive integer or inf")
    p.add_argument("--l", type=_bound, help="bound of the second part: positive integer or inf")


def _spec_from(args: argparse.Namespace, inst: InstanceFile | None) -> ProblemSpec:
    base = inst.spec if inst is not None else None
    family = Family(args.family) if args.family else (base.family if base else None)
    k = args.k if args.k is not None else (base.first if base else None)
    l = args.l if args.l is not None else (base.second if base else None)
    if family is None or k is None or l is None:
        raise UsageError("the problem type needs --family, --k and --l (or a spec stored in the input file)")
    return ProblemSpec(family, k, l)


def _format(args: argparse.Namespace, path: str | None) -> Format:
    if getattr(args, "format", None):
        return Format(args.format)
    return format_for_path(path) if path else Format.JSON


def _read(path: str, args: argparse.Namespace) -> InstanceFile:
    if not Path(path).exists():
        raise FileNotFoundError(path)
    fmt = Format(args.input_format) if getattr(args, "input_format", None) else None
    return read_instance(path, fmt)


def _budget(args: argparse.Namespace) -> SearchBudget:
    nodes = args.budget_nodes
    if nodes is None and os.environ.get(BUDGET_ENV):
        try:
            nodes = int(os.environ[BUDGET_ENV])
        except ValueError:
            raise UsageError(f"{BUDGET_ENV} must be an integer") from None
    return SearchBudget(max_nodes=nodes, deadline_seconds=args.timeout)


def _certificate_path(args: argparse.Namespace) -> str:
    return args.out or f"{args.input}.cert.json"


# --- commands ---------------------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    inst = _read(args.input, args)
    spec = _spec_from(args, inst)
    start = time.perf_counter()
    verdict = solve(inst.digraph, spec)
    report = RunReport("solve", digest(inst.digraph), "yes" if verdict.is_yes else "no", seconds=time.perf_counter() - start)
    if verdict.decomposition is not None:
        report.certificate = _certificate_path(args)
        cert = InstanceFile.with_decomposition(inst.digraph, verdict.decomposition, spec)
        write_atomic(report.certificate, emit(cert, _format(args, report.certificate)))
    else:
        report.reason = verdict.reason
    report.emit()
    return EXIT_YES if verdict.is_yes else EXIT_NO


def cmd_oracle(args: argparse.Namespace) -> int:
    inst = _read(args.input, args)
    spec = _spec_from(args, inst)
    start = time.perf_counter()
    result = oracle_decide(inst.digraph, spec, _budget(args))
    report = RunReport("oracle", digest(inst.digraph), result.outcome.value, seconds=time.perf_counter() - start, nodes=result.nodes)
    if result.decomposition is not None:
        report.certificate = _certificate_path(args)
        cert = InstanceFile.with_decomposition(inst.digraph, result.decomposition, spec)
        write_atomic(report.certificate, emit(cert, _format(args, report.certificate)))
    report.emit()
    return {Outcome.YES: EXIT_YES, Outcome.NO: EXIT_NO, Outcome.BUDGET_EXCEEDED: EXIT_BUDGET}[result.outcome]


def cmd_verify(args: argparse.Namespace) -> int:
    inst = _read(args.input, args)
    spec = _spec_from(args, inst)
    dec = inst.decomposition()
    problem = decomposition_violation(inst.digraph, dec, spec)
    report = RunReport("verify", digest(inst.digraph), "pass" if problem is None else "fail", reason=problem)
    report.emit()
    return EXIT_YES if problem is None else EXIT_NO


REDUCTIONS: dict[str, tuple[str, Callable[..., ReductionOutput]]] = {
    "3b2sat-to-bdlfd": ("cnf", lambda src, k, l: reduce_3b2sat_to_bdlfd(src, _int_bound(k, "--k"))),
    "me1sat-to-bdlfd": ("cnf", lambda src, k, l: reduce_me1sat_to_bdlfd(src, _int_bound(k, "--k"), _int_bound(l, "--l"))),
    "hamiltonicity-to-bdlfd": ("digraph", lambda src, k, l: reduce_hamiltonicity_to_bdlfd(src, _int_bound(k, "--k"))),
    "meksat-to-bogd": ("cnf", lambda src, k, l: reduce_meksat_to_bogd_kk(src, _int_bound(k, "--k"))),
    "widesat-to-bogd": ("cnf", lambda src, k, l: reduce_lplus1sat_to_bogd_kl(src, _required(k, "--k"), _int_bound(l, "--l"))),
}


def _required(b: Bound | None, flag: str) -> Bound:
    if b is None:
        raise UsageError(f"this reduction needs {flag}")
    return b


def _int_bound(b: Bound | None, flag: str) -> int:
    b = _required(b, flag)
    if b == float("inf"):
        raise UsageError(f"{flag} must be finite for this reduction")
    return int(b)


def cmd_reduce(args: argparse.Namespace) -> int:
    kind, fn = REDUCTIONS[args.reduction]
    if not Path(args.source).exists():
        raise FileNotFoundError(args.source)
    source: CnfInstance | Digraph
    if kind == "cnf":
        source = parse_dimacs(Path(args.source).read_text())
    else:
        source = read_instance(args.source).digraph
    red = fn(source, args.k, args.l)
    inst = InstanceFile(red.instance, None, red.spec)
    write_atomic(args.out, emit(inst, _format(args, args.out)))
    back_path = args.back_map or f"{args.out}.backmap.json"
    write_atomic(back_path, json.dumps(red.back_map_json(), indent=1) + "\n")
    RunReport("reduce", digest(red.instance), "written", certificate=back_path).emit()
    return EXIT_YES


@dataclass(frozen=True)
class GadgetEntry:
    build: Callable[..., Gadget]
    params: tuple[str, ...]
    flags: tuple[str, ...] = ()


GADGETS: dict[str, GadgetEntry] = {
    "binary-tree": GadgetEntry(
        lambda depth, direction="toward-tip": build_binary_tree_orientation(depth, direction == "toward-tip"),
        ("depth",),
        ("toward-tip", "from-root"),
    ),
    "short-k-in-forcer": GadgetEntry(short_k_in_forcer, ("k",)),
    "long-k-alpha-in-forcer": GadgetEntry(long_k_alpha_in_forcer, ("k", "alpha")),
    "kk-minus2-in-forcer": GadgetEntry(kk_minus2_in_forcer, ("k",)),
    "kl-minus2-in-forcer": GadgetEntry(kl_minus2_in_forcer, ("k", "l")),
    "long-kl-out-forcer": GadgetEntry(long_kl_out_forcer, ("k", "l")),
    "short-kl-out-forcer": GadgetEntry(short_kl_out_forcer, ("k", "l")),
    "k2-alpha-in-forcer": GadgetEntry(k2_alpha_in_forcer, ("k", "alpha")),
    "k-variable-gadget": GadgetEntry(k_variable_gadget, ("k",)),
    "k-clause-gadget": GadgetEntry(k_clause_gadget, ("k",)),
    "klt-variable-gadget": GadgetEntry(klt_variable_gadget, ("k", "l", "t")),
    "kl-clause-gadget": GadgetEntry(kl_clause_gadget_dlf, ("k", "l")),
    "q-variable-gadget": GadgetEntry(q_variable_gadget_bogd, ("q",)),
    "kl-alpha-clause-gadget": GadgetEntry(kl_alpha_clause_gadget_bogd, ("k", "l", "alpha1", "alpha2")),
}


def build_gadget(name: str, params: Sequence[str]) -> Gadget:
    """Build gadget ``name`` from ``key=value`` parameters and bare flag words."""
    if name not in GADGETS:
        raise UsageError(f"unknown gadget {name!r}; choose from {', '.join(sorted(GADGETS))}")
    entry = GADGETS[name]
    values: dict[str, object] = {}
    for token in params:
        if "=" not in token:
            if token not in entry.flags:
                raise UsageError(f"{name} does not take the flag {token!r}")
            values["direction"] = token
            continue
        key, raw = token.split("=", 1)
        if key not in entry.params:
            raise UsageError(f"{name} takes {', '.join(entry.params)}; got {key!r}")
        try:
            values[key] = int(raw) if raw != "inf" else float("inf")
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer, got {raw!r}") from None
    missing = [p for p in entry.params if p not in values]
    if missing:
        raise UsageError(f"{name} needs {', '.join(missing)}")
    return entry.build(**values)


def cmd_gadget(args: argparse.Namespace) -> int:
    g = build_gadget(args.name, args.params)
    witness = args.witness or next(iter(g.witnesses))
    dec = g.witness(witness)
    inst = InstanceFile.with_decomposition(
        g.digraph,
        dec,
        g.spec,
        vertex_names={v: n for n, v in g.vertices.items()},
        arc_names={a: n for n, a in g.arcs.items()},
    )
    fmt = _format(args, args.out)
    manifest = dict(g.interface(), witness=witness)
    if args.out:
        write_atomic(args.out, emit(inst, fmt))
        manifest_path = args.manifest or f"{args.out}.interface.json"
        write_atomic(manifest_path, json.dumps(manifest, indent=1) + "\n")
        RunReport("gadget", digest(g.digraph), "written", certificate=manifest_path).emit()
    else:
        sys.stdout.write(emit(inst, fmt))
        if args.manifest:
            write_atomic(args.manifest, json.dumps(manifest, indent=1) + "\n")
    return EXIT_YES


def cmd_bench(args: argparse.Namespace) -> int:
    rows = run_suite(args.suite, args.seed, args.count, args.max_n, args.max_m, _budget(args))
    text = to_csv(rows)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_NO if any(r.agree == "no" for r in rows) else EXIT_YES


# --- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="forestdec", description="Two-part bounded arc decompositions of digraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    formats = [f.value for f in Format]

    def instance_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="instance file (.json, .dot, or edge list)")
        p.add_argument("--input-format", choices=formats)
        _add_spec_flags(p)
        return p

    p = instance_command("solve", "run the polynomial solver for the problem type")
    p.add_argument("--out", help="certificate path (default: INPUT.cert.json)")
    p.add_argument("--format", choices=formats, help="certificate format (default: from the --out suffix)")
    p.set_defaults(run=cmd_solve)

    p = instance_command("oracle", "decide with the exact backtracking oracle")
    p.add_argument("--out", help="certificate path (default: INPUT.cert.json)")
    p.add_argument("--format", choices=formats)
    p.add_argument("--budget-nodes", type=int, help=f"node limit (default: ${BUDGET_ENV} or unlimited)")
    p.add_argument("--timeout", type=float, help="wall-clock limit in seconds")
    p.set_defaults(run=cmd_oracle)

    p = instance_command("verify", "check the decomposition stored in the input file")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("reduce", help="emit the decomposition instance of a source problem")
    p.add_argument("source", help="DIMACS CNF file, or a digraph file for hamiltonicity")
    p.add_argument("--reduction", required=True, choices=sorted(REDUCTIONS))
    p.add_argument("--k", type=_bound)
    p.add_argument("--l", type=_bound)
    p.add_argument("--out", required=True, help="instance path")
    p.add_argument("--back-map", help="back map path (default: OUT.backmap.json)")
    p.add_argument("--format", choices=formats)
    p.set_defaults(run=cmd_reduce)

    p = sub.add_parser("gadget", help="emit a gadget with its interface manifest")
    p.add_argument("name", help=f"one of: {', '.join(sorted(GADGETS))}")
    p.add_argument("params", nargs="*", help="key=value parameters, e.g. k=3, plus flags such as toward-tip")
    p.add_argument("--witness", help="which witness decomposition to attach (default: the first)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--manifest", help="interface manifest path (default: OUT.interface.json)")
    p.add_argument("--format", choices=formats)
    p.set_defaults(run=cmd_gadget)

    p = sub.add_parser("bench", help="seeded benchmark suite written as CSV")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-m", type=int, default=12)
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--timeout", type=float)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(run=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"forestdec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"forestdec: no such file: {exc}", file=sys.stderr)
        return EXIT_NO_INPUT
    except UnsupportedSpec as exc:
        print(f"forestdec: {exc} (try 'forestdec oracle')", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (ParseError, IncompleteLabeling, InvalidSource, BadParameter, ForestDecError) as exc:
        print(f"forestdec: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


__all__ = ["GADGETS", "REDUCTIONS", "RunReport", "build_gadget", "build_parser", "main"]
