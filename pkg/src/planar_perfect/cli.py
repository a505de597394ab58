"""Command line entry point: ``planar-perfect <command> ...``.

Exit codes: ``check`` returns 0 for a perfect graph and 1 otherwise; every
command returns 2 on unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path
from typing import Sequence

from .checker import is_perfect
from .cli_io import (
    ParseError,
    ValidationError,
    emit_components,
    emit_graph,
    emit_oracle,
    emit_verdict,
    parse_graph,
    verdict_to_dict,
)
from .decomposer import w_components
from .embedder import plane_drawing
from .generator import FIXTURES, GenSpec, UnknownFixture, named_fixture, random_near_triangulation, random_triangulation
from .graph_core import GraphError
from .oracle import DEFAULT_LIMIT, TooLarge, find_odd_hole_bruteforce

EXIT_PERFECT, EXIT_NOT_PERFECT, EXIT_INVALID = 0, 1, 2


class _Invalid(Exception):
    pass


def _setup_logging() -> None:
    level = os.environ.get("PLANAR_PERFECT_LOG")
    if not level:
        return
    value = logging.getLevelName(level.upper()) if not level.isdigit() else (logging.INFO if level == "1" else int(level))
    if not isinstance(value, int):
        value = logging.INFO
    logging.basicConfig(stream=sys.stderr, level=value, format="%(name)s %(levelname)s %(message)s")


def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise _Invalid(f"{path}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except (ParseError, ValidationError) as exc:
        raise _Invalid(f"{path}: {exc}") from None


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    g, emb = _read(args.graph)
    try:
        v = is_perfect(g, jobs=args.jobs)
    except GraphError as exc:
        raise _Invalid(str(exc)) from None
    if args.format == "json":
        doc = verdict_to_dict(v)
        if not args.witness:
            for key in ("kernel", "hole", "component_index", "component"):
                doc.pop(key, None)
        _write(json.dumps(doc), args.output)
    else:
        _write(emit_verdict(v, args.format, graph=g, embedding=emb), args.output)
    return EXIT_PERFECT if v.perfect else EXIT_NOT_PERFECT


def cmd_decompose(args) -> int:
    g, _ = _read(args.graph)
    try:
        comps = w_components(g)
    except GraphError as exc:
        raise _Invalid(str(exc)) from None
    _write(emit_components(comps), args.output)
    return 0


def cmd_embed(args) -> int:
    g, _ = _read(args.graph)
    try:
        e = plane_drawing(g)
    except GraphError as exc:
        raise _Invalid(str(exc)) from None
    _write(emit_graph(g, e), args.output)
    return 0


def cmd_oracle(args) -> int:
    g, _ = _read(args.graph)
    try:
        r = find_odd_hole_bruteforce(g, limit=args.oracle_limit)
    except TooLarge as exc:
        raise _Invalid(str(exc)) from None
    _write(emit_oracle(r), args.output)
    return 0


def cmd_gen(args) -> int:
    if args.fixture:
        try:
            g = named_fixture(args.fixture)
        except UnknownFixture:
            raise _Invalid(f"unknown fixture {args.fixture!r}; choose from {', '.join(FIXTURES)}") from None
    else:
        spec = GenSpec("random", args.n, args.seed, args.flips)
        make = random_near_triangulation if args.near else random_triangulation
        try:
            g = make(spec)
        except ValueError as exc:
            raise _Invalid(str(exc)) from None
    _write(emit_graph(g), args.output)
    return 0


def bench_rows(sizes: Sequence[int], seed: int, repeat: int = 1, jobs: int = 1) -> list[dict]:
    """Exhaustive checker timings on random triangulations, one row per size.

    The exhaustive scan walks every kernel of every component, so the time
    reflects the whole algorithm rather than how early a hole turns up.
    """
    rows: list[dict] = []
    for n in sizes:
        g = random_triangulation(GenSpec("random", n, seed))
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            v = is_perfect(g, jobs=jobs, exhaustive=True)
            best = min(best, time.perf_counter() - t0)
        row = {"n": n, "m": g.m, "components": v.components, "kernels": v.kernels_checked,
               "status": v.status, "seconds": best}
        row["ratio"] = best / rows[-1]["seconds"] if rows else float("nan")
        rows.append(row)
    return rows


BENCH_COLUMNS = ("n", "m", "components", "kernels", "status", "seconds", "ratio")


def bench_tsv(rows: Sequence[dict]) -> str:
    lines = ["\t".join(BENCH_COLUMNS)]
    for r in rows:
        cells = []
        for c in BENCH_COLUMNS:
            x = r[c]
            cells.append(f"{x:.4f}" if isinstance(x, float) else str(x))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def bench_plot(rows: Sequence[dict], path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [r["n"] for r in rows]
    ts = [r["seconds"] for r in rows]
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.loglog(ns, ts, "o-", label="measured")
    # quadratic reference through the first point
    ax.loglog(ns, [ts[0] * (n / ns[0]) ** 2 for n in ns], "--", color="grey", label="n² reference")
    ax.set_xlabel("vertices n")
    ax.set_ylabel("seconds (exhaustive check)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise _Invalid(f"--sizes: expected comma separated integers, got {args.sizes!r}") from None
    if not sizes or min(sizes) < 4:
        raise _Invalid("--sizes: every size must be at least 4")
    rows = bench_rows(sizes, args.seed, args.repeat, args.jobs)
    _write(bench_tsv(rows), args.output)
    if args.plot is not None:
        if args.plot:
            png = Path(args.plot)
        elif args.output:
            png = Path(args.output).with_suffix(".png")
        else:
            png = Path("bench.png")
        bench_plot(rows, png)
        print(f"plot written to {png}", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planar-perfect", description="Perfectness of plane near-triangulations.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("graph", help="graph document (JSON), or - for stdin")
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        return sp

    sp = graph_cmd("check", "decide perfectness (exit 0 perfect, 1 not perfect)")
    sp.add_argument("--witness", action="store_true", help="include the kernel and odd hole in JSON output")
    sp.add_argument("--format", choices=("json", "dot", "svg"), default="json")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes across components")
    sp.set_defaults(func=cmd_check)

    graph_cmd("decompose", "list W-components").set_defaults(func=cmd_decompose)
    graph_cmd("embed", "straight-line grid coordinates").set_defaults(func=cmd_embed)

    sp = graph_cmd("oracle", "brute-force odd hole search")
    sp.add_argument("--oracle-limit", type=int, default=DEFAULT_LIMIT, help="largest n accepted")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="emit a fixture or a seeded random graph")
    sp.add_argument("--fixture", choices=sorted(FIXTURES))
    sp.add_argument("--n", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--flips", type=int, default=None)
    sp.add_argument("--near", action="store_true", help="near-triangulation instead of a triangulation")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="timing table on random triangulations")
    sp.add_argument("--sizes", default="2000,4000,8000")
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--repeat", type=int, default=1, help="report the best of this many runs")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("-o", "--output", help="TSV file (default stdout)")
    sp.add_argument("--plot", nargs="?", const="", default=None,
                    help="also save a PNG plot (default: next to the TSV output)")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Invalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


cli_main = main

if __name__ == "__main__":
    sys.exit(main())
