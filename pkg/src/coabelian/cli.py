"""Command-line front end.

Every command prints one JSON report on stdout (or a text rendering of it).
Exit codes: 0 computed, 2 input error, 4 resource ceiling, 5 internal
inconsistency; with ``--exit-status`` a computed verdict exits 0 if it holds
and 3 if it fails.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .character import (
    Character,
    CharacterSpace,
    dead_cliques,
    living_subgraph,
    parse_character,
    parse_character_space,
)
from .decider import (
    Convention,
    Verdict,
    cross_check_p1_p2,
    fg_corollaryE,
    fp_codim1,
    fp_ideal,
    thmG_sufficient,
)
from .errors import CoabelianError, InternalInconsistencyError, ResourceLimitError
from .exactfield import FieldSpec
from .graph import Graph, max_clique_size, parse_graph
from .oracle import build_C, fp_oracle, graded_H, homology_C
from .randomized import run_suites

EXIT_OK, EXIT_INPUT, EXIT_FAILS, EXIT_RESOURCE, EXIT_INTERNAL = 0, 2, 3, 4, 5

LABELS = {1: "finitely generated", 2: "finitely presented"}


def _field_arg(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nat(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coabelian", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, needs: str | None, with_n: bool = True) -> None:
        p.add_argument("--graph", required=True, type=Path)
        if needs == "char":
            p.add_argument("--char", required=True, type=Path)
        elif needs == "space":
            p.add_argument("--space", required=True, type=Path)
        if with_n:
            p.add_argument("--n", type=_nat, default=2)
        p.add_argument("--field", type=_field_arg, default=None,
                       help="Q or GF:<p>; overrides the field named in the character file")
        p.add_argument("--output", choices=("json", "text"), default="json")
        p.add_argument("--exit-status", action="store_true")

    p = sub.add_parser("fp", help="FP_n of a codimension one ideal (link criterion)")
    common(p, "char")
    p.add_argument("--convention", choices=("shifted", "uniform"), default="shifted")

    p = sub.add_parser("fg", help="finite generation via connectivity and dominance")
    common(p, "char", with_n=False)

    p = sub.add_parser("ideal", help="FP_n of a coabelian ideal given by a space of characters")
    common(p, "space")
    p.add_argument("--convention", choices=("shifted", "uniform"), default="shifted")

    p = sub.add_parser("thmg", help="order-complex sufficient condition for FP_n")
    common(p, "space")

    p = sub.add_parser("oracle", help="graded homology of the ideal by brute force")
    common(p, "char")
    p.add_argument("--max-degree", type=_nat, default=None)

    p = sub.add_parser("crosscheck", help="compare P1 order complexes with living links for every dead clique")
    common(p, "char", with_n=False)

    p = sub.add_parser("selftest", help="randomized invariant suites")
    p.add_argument("--seed", type=_nat, default=0)
    p.add_argument("--instances", type=_nat, default=100)
    p.add_argument("--max-vertices", type=_nat, default=7)
    p.add_argument("--field", type=_field_arg, action="append", default=None,
                   help="may be repeated; default: GF:5 and Q alternating")
    p.add_argument("--convention", choices=("shifted", "uniform"), default="shifted")
    p.add_argument("--n", type=_nat, default=4, help="largest n tried per instance")
    p.add_argument("--output", choices=("json", "text"), default="text")
    return parser


def _read(path: Path) -> bytes:
    return path.read_bytes()


def _load_graph(args) -> Graph:
    return parse_graph(_read(args.graph))


def _load_char(args, g: Graph) -> Character:
    chi = parse_character(_read(args.char), g, args.field)
    living_subgraph(g, chi)
    return chi


def _load_space(args, g: Graph) -> CharacterSpace:
    return parse_character_space(_read(args.space), g, args.field)


def _verdict_report(g: Graph, v: Verdict) -> dict:
    return v.to_json(g)


def _cmd_fp(args) -> tuple[dict, bool]:
    g = _load_graph(args)
    chi = _load_char(args, g)
    v = fp_codim1(g, chi, args.n, Convention(args.convention))
    report = {"inputs": {"graph": g.to_json(), "character": chi.to_json(g), "n": args.n,
                         "convention": args.convention}}
    report.update(_verdict_report(g, v))
    return report, v.holds


def _cmd_fg(args) -> tuple[dict, bool]:
    g = _load_graph(args)
    chi = _load_char(args, g)
    v = fg_corollaryE(g, chi)
    report = {"inputs": {"graph": g.to_json(), "character": chi.to_json(g)}}
    report.update(_verdict_report(g, v))
    if v.witness is not None:
        report.update(v.witness.to_json(g))
    return report, v.holds


def _cmd_ideal(args) -> tuple[dict, bool]:
    g = _load_graph(args)
    sp = _load_space(args, g)
    v = fp_ideal(g, sp, args.n, Convention(args.convention))
    report = {"inputs": {"graph": g.to_json(), "space": sp.to_json(g), "n": args.n,
                         "convention": args.convention}}
    report.update(_verdict_report(g, v))
    return report, v.holds


def _cmd_thmg(args) -> tuple[dict, bool]:
    g = _load_graph(args)
    sp = _load_space(args, g)
    v = thmG_sufficient(g, sp, args.n)
    report = {"inputs": {"graph": g.to_json(), "space": sp.to_json(g), "n": args.n}}
    report.update(_verdict_report(g, v))
    report["conclusive"] = v.holds
    return report, v.holds


def _cmd_oracle(args) -> tuple[dict, bool]:
    g = _load_graph(args)
    chi = _load_char(args, g)
    s = max_clique_size(g)
    bound = args.max_degree if args.max_degree is not None else max(args.n, s + 2)
    table = graded_H(g, chi, chi.field, args.n, bound)
    C = build_C(g, chi, chi.field, args.n)
    verdict = fp_oracle(g, chi, args.n)
    report = {
        "inputs": {"graph": g.to_json(), "character": chi.to_json(g), "n": args.n, "max_degree": bound},
        "H": {str(i): {str(d): dim for d, dim in row.items()} for i, row in table.entries.items()},
        "C_homology": {str(i): homology_C(C, i) for i in range(-1, args.n)},
        "max_clique_size": s,
        "verdict": _verdict_report(g, verdict),
    }
    return report, verdict.holds


def _cmd_crosscheck(args) -> tuple[dict, bool]:
    g = _load_graph(args)
    chi = _load_char(args, g)
    results = [{"dead_clique": g.names(z), "agrees": cross_check_p1_p2(g, chi, z)} for z in dead_cliques(g, chi)]
    ok = all(r["agrees"] for r in results)
    return {"inputs": {"graph": g.to_json(), "character": chi.to_json(g)}, "holds": ok, "checks": results}, ok


def _cmd_selftest(args) -> tuple[dict, bool]:
    fields = tuple(args.field) if args.field else (FieldSpec(5), FieldSpec())
    suites = run_suites(args.seed, args.instances, args.max_vertices, fields,
                        Convention(args.convention), args.n)
    report = {
        "inputs": {"seed": args.seed, "instances": args.instances, "max_vertices": args.max_vertices,
                   "fields": [str(f) for f in fields], "convention": args.convention, "max_n": args.n},
        "suites": {s.name: {"passed": s.passed, "failed": s.failed, "failures": s.failures} for s in suites},
    }
    ok = all(s.failed == 0 for s in suites)
    report["holds"] = ok
    return report, ok


COMMANDS = {
    "fp": _cmd_fp,
    "fg": _cmd_fg,
    "ideal": _cmd_ideal,
    "thmg": _cmd_thmg,
    "oracle": _cmd_oracle,
    "crosscheck": _cmd_crosscheck,
    "selftest": _cmd_selftest,
}


def render_text(command: str, report: dict) -> str:
    lines = []
    if command == "selftest":
        for name, s in report["suites"].items():
            status = "PASS" if s["failed"] == 0 else "FAIL"
            lines.append(f"{status} {name}: {s['passed']} passed, {s['failed']} failed")
            lines.extend(f"    {f}" for f in s["failures"])
        return "\n".join(lines)
    if command == "oracle":
        lines.append("dim H_i(N,K)_d:")
        for i, row in report["H"].items():
            lines.append(f"  i={i}: " + " ".join(f"d{d}={v}" for d, v in row.items()))
        lines.append("dim H(C_•): " + " ".join(f"{i}:{v}" for i, v in report["C_homology"].items()))
        verdict = report["verdict"]
    elif command == "crosscheck":
        for c in report["checks"]:
            lines.append(f"  Z={c['dead_clique']}: {'agrees' if c['agrees'] else 'DISAGREES'}")
        lines.append("all agree" if report["holds"] else "disagreement found")
        return "\n".join(lines)
    else:
        verdict = report
    n = verdict.get("n")
    label = f" ({LABELS[n]})" if n in LABELS else ""
    if command == "thmg" and not verdict["holds"]:
        lines.append(f"FP_{n}: no conclusion")
    else:
        lines.append(f"FP_{n}{label}: {'holds' if verdict['holds'] else 'fails'}")
    if verdict.get("witness"):
        lines.append(f"  witness: {json.dumps(verdict['witness'], ensure_ascii=False)}")
    for note in verdict.get("notes", []):
        lines.append(f"  note: {note}")
    return "\n".join(lines)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report, holds = COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"error: resource ceiling: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InternalInconsistencyError as exc:
        print(f"error: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CoabelianError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = {"command": args.command, **report}
    if args.output == "text":
        print(render_text(args.command, report))
    else:
        print(json.dumps(report, indent=2, ensure_ascii=False))
    # timing goes to stderr so the report itself stays byte-deterministic
    print(f"elapsed: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    if args.command == "selftest":
        return EXIT_OK if holds else 1
    if getattr(args, "exit_status", False):
        return EXIT_OK if holds else EXIT_FAILS
    return EXIT_OK


def main() -> None:
    sys.exit(run())
