"""
Command-line front end.

    python -m app classify --m 36 --n 6 --mode both
    python -m app graph --m 18 --n 18 --format edgelist
    python -m app sweep --max-m 2000 --jobs 4 --out sweep.jsonl
    python -m app figures --p1 2 --p2 3 --p3 5 --out-dir figures
    python -m app oracle --m 36 --n 6

Exit status: 0 when every check passed, 1 on a mathematical disagreement
or fixture failure, 2 on usage or input errors.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from app.exceptions import FixtureMismatch, IdealGraphError
from app.repositories.settings import settings
from app.schemas.classification_schema import ClassifyResponse
from app.services.arith_service import is_prime, validate_module_pair
from app.services.classification_service import classify, classify_figures
from app.services.export_service import EXPORT_FORMATS, render
from app.services.graph_service import build_graph
from app.services.oracle_service import oracle_table
from app.services.sweep_service import sweep
from app.version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text)


def format_classification(response: ClassifyResponse) -> str:
    lines = [f"G_{response.n}(Z_{response.m})"]
    s, c = response.structural, response.closed_form
    for prop in ("planar", "ring", "outerplanar"):
        value = getattr(s, prop) if s is not None else getattr(c, prop)
        line = f"{prop}={_flag(value)}"
        if c is not None:
            cases = c.matched_cases[prop]
            if cases:
                line += f" (case {', '.join(map(str, cases))})"
            if s is not None and getattr(c, prop) != value:
                line += f" closed-form={_flag(getattr(c, prop))} MISMATCH"
        lines.append(line)
    if response.witness is not None:
        branch = ",".join(map(str, response.witness.branch_vertices))
        lines.append(f"witness={response.witness.kind} {{{branch}}}")
    if s is not None and not s.certificates_verified:
        lines.append("certificates=FAILED")
    if response.agreement is not None:
        lines.append(f"agreement={'ok' if response.agreement else 'FAILED'}")
    return "\n".join(lines) + "\n"


def cmd_classify(args: argparse.Namespace) -> int:
    pair = validate_module_pair(args.m, args.n)
    response = classify(pair, args.mode)
    if args.json:
        sys.stdout.write(response.model_dump_json(indent=2) + "\n")
    else:
        sys.stdout.write(format_classification(response))
    if response.agreement is False:
        return EXIT_DISAGREEMENT
    if response.structural is not None and not response.structural.certificates_verified:
        return EXIT_DISAGREEMENT
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    graph = build_graph(validate_module_pair(args.m, args.n))
    _write(render(graph, args.format), args.out)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    report, records = sweep(args.max_m, oracle_bound=args.oracle_bound, jobs=args.jobs)
    # elapsed time is logged rather than written, so reports stay byte-stable
    lines = [r.model_dump_json() for r in records]
    lines.append(report.model_dump_json(exclude={"elapsed_seconds"}))
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.passed else EXIT_DISAGREEMENT


def cmd_figures(args: argparse.Namespace) -> int:
    primes = (args.p1, args.p2, args.p3)
    if len(set(primes)) != 3 or not all(is_prime(p) for p in primes):
        raise argparse.ArgumentTypeError(f"--p1/--p2/--p3 must be three distinct primes, got {primes}")

    try:
        figures = classify_figures(*primes)
    except FixtureMismatch as e:
        logger.error(f"Fixture failure: {e}")
        return EXIT_DISAGREEMENT

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    summaries = []
    for summary, graph in figures:
        stem = out_dir / f"fig{summary.figure_id}"
        for fmt in EXPORT_FORMATS:
            Path(f"{stem}.{fmt}").write_text(render(graph, fmt))
        summaries.append(summary)
    (out_dir / "figures.jsonl").write_text("".join(s.model_dump_json() + "\n" for s in summaries))
    logger.info(f"Wrote {len(figures)} figures to {out_dir}")
    return EXIT_OK if all(s.agreement for s in summaries) else EXIT_DISAGREEMENT


def cmd_oracle(args: argparse.Namespace) -> int:
    pair = validate_module_pair(args.m, args.n)
    rows = oracle_table(pair)
    lines = ["d1 d2 oracle criterion"]
    lines += [f"{d1} {d2} {_flag(o)} {_flag(c)}" for d1, d2, o, c in rows]
    equivalent = all(o == c for _, _, o, c in rows)
    lines.append(f"equivalent={_flag(equivalent)}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if equivalent else EXIT_DISAGREEMENT


def _at_least_two(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be at least 2, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealgraph",
        description="Planarity, outerplanarity and ring graphs of Z_n-intersection graphs of ideals of Z_m",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--log-level", default=settings.LOG_LEVEL)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one pair (m, n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["structural", "closed-form", "both"], default="both")
    p.add_argument("--json", action="store_true", help="print the full JSON response")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("graph", help="export G_n(Z_m)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=EXPORT_FORMATS, default="edgelist")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_graph)

    p = sub.add_parser("sweep", help="cross-validate every pair with m <= max-m")
    p.add_argument("--max-m", type=_at_least_two, default=settings.SWEEP_MAX_M)
    p.add_argument("--oracle-bound", type=int, default=settings.ORACLE_BOUND)
    p.add_argument("--jobs", type=int, default=settings.SWEEP_JOBS)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("figures", help="write the five example graphs")
    p.add_argument("--p1", type=int, default=2)
    p.add_argument("--p2", type=int, default=3)
    p.add_argument("--p3", type=int, default=5)
    p.add_argument("--out-dir", default="figures")
    p.set_defaults(handler=cmd_figures)

    p = sub.add_parser("oracle", help="compare the subgroup oracle with the lcm rule")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_oracle)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    logging.basicConfig(level=args.log_level.upper())

    try:
        return args.handler(args)
    except (IdealGraphError, argparse.ArgumentTypeError) as e:
        logger.error(str(e))
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
