"""Command-line front end.

    ncat validate <file>              schema + semantic checks on flow data
    ncat build <file> --level L       enumerate cells up to a level
    ncat axioms [<file>] --category w|v|x   run the category laws
    ncat functor <file> --target g|f  apply an index functor to every cell
    ncat torus [--emit]               the built-in fixture and its tables

Exit codes: 0 all checks pass, 1 some check failed, 2 usage or parse
error.  Output for a given (command, input, seed) is byte-identical
across runs; --format json wraps the same data as a versioned document.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .axioms import check_axioms, check_globularity
from .errors import FlowDataInconsistent, NCatError
from .flowdata import parse_flow_data, validate_flow_data
from .functors import functor_f, functor_g, ind_env
from .torus import torus_document, torus_expected, torus_flow_data
from .vcat import VCategory, v_render
from .wcat import WCategory, w_render
from .xcat import XCategory, x_cells, x_render

SCHEMA_VERSION = 1
ENUM_BOUND = 3  # entry bound behind `axioms --category w|v`


@dataclass
class RunConfig:
    level: int = 2
    seed: int = 0
    samples: int = 1000
    fmt: str = "text"


def _emit(payload: dict, cfg: RunConfig, text_lines) -> None:
    if cfg.fmt == "json":
        print(json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2))
    else:
        for line in text_lines:
            print(line)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _Usage(f"cannot read {path}: {e.strerror}") from None


class _Usage(Exception):
    pass


def _load(path: str):
    fd = parse_flow_data(_read(path))
    report = validate_flow_data(fd)
    return fd, report


def _validation_lines(fd, report):
    lines = [f"flow data: {fd.name}"]
    for c in report.checks:
        status = "pass" if c.passed else f"FAIL  {c.detail}"
        lines.append(f"  {c.check:<22} {c.subject:<24} {status}")
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'} ({len(report.checks)} checks)")
    return lines


def cmd_validate(args, cfg: RunConfig) -> int:
    fd, report = _load(args.file)
    _emit(
        {"command": "validate", "name": fd.name, "report": report.to_dict()},
        cfg,
        _validation_lines(fd, report),
    )
    return 0 if report.passed else 1


def cmd_build(args, cfg: RunConfig) -> int:
    fd, report = _load(args.file)
    if not report.passed:
        _emit(
            {"command": "build", "name": fd.name, "report": report.to_dict()},
            cfg,
            _validation_lines(fd, report),
        )
        return 1
    top = min(cfg.level, fd.max_level)
    levels = {l: x_cells(fd, l) for l in range(top + 1)}
    lines = [f"flow data: {fd.name} (levels 0..{top})"]
    for l, cells in levels.items():
        lines.append(f"level {l}: {len(cells)} cells")
        lines.extend(f"  {x_render(c)}" for c in cells)
    if cfg.level > fd.max_level:
        lines.append(f"note: no cells above level {fd.max_level}")
    _emit(
        {
            "command": "build",
            "name": fd.name,
            "counts": {str(l): len(cells) for l, cells in levels.items()},
            "cells": {str(l): [x_render(c) for c in cells] for l, cells in levels.items()},
        },
        cfg,
        lines,
    )
    return 0


def _category(args, cfg: RunConfig):
    if args.category == "w":
        return WCategory(max_level=cfg.level, bound=ENUM_BOUND), "w", None
    if args.category == "v":
        return VCategory(max_level=cfg.level, bound=ENUM_BOUND), "v", None
    if args.file is None:
        raise _Usage("axioms --category x needs a flow-data file")
    fd, report = _load(args.file)
    if not report.passed:
        return None, fd.name, report
    return XCategory(fd, include_composites=True), fd.name, None


def cmd_axioms(args, cfg: RunConfig) -> int:
    cat, name, bad = _category(args, cfg)
    if bad is not None:
        _emit(
            {"command": "axioms", "category": args.category, "report": bad.to_dict()},
            cfg,
            [f"flow data {name} failed validation; not checking axioms"]
            + _validation_lines_short(bad),
        )
        return 1
    levels = range(min(cfg.level, cat.max_level) + 1)
    report = check_globularity(cat, levels).merged(
        check_axioms(cat, seed=cfg.seed, samples=cfg.samples, levels=levels)
    )
    lines = [
        f"axioms: category {args.category} ({name}), levels 0..{levels[-1]}, "
        f"seed {cfg.seed}, samples {cfg.samples}"
    ]
    for e in report.entries:
        lines.append(f"  {e.axiom:<22} checked {e.checked:<5} {e.verdict}")
        lines.extend(f"    {f.detail}" for f in e.failures)
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    _emit(
        {
            "command": "axioms",
            "category": args.category,
            "config": {"level": cfg.level, "seed": cfg.seed, "samples": cfg.samples},
            "report": report.to_dict(),
        },
        cfg,
        lines,
    )
    return 0 if report.passed else 1


def _validation_lines_short(report):
    return [f"  {c.check} {c.subject}: {c.detail}" for c in report.failures()]


def cmd_functor(args, cfg: RunConfig) -> int:
    fd, report = _load(args.file)
    if not report.passed:
        _emit(
            {"command": "functor", "target": args.target, "report": report.to_dict()},
            cfg,
            [f"flow data {fd.name} failed validation; not applying the functor"]
            + _validation_lines_short(report),
        )
        return 1
    env = ind_env(fd)
    apply = functor_g if args.target == "g" else functor_f
    render = w_render if args.target == "g" else v_render
    top = min(cfg.level, fd.max_level)
    rows = []
    failures = []
    for l in range(top + 1):
        for cell in x_cells(fd, l):
            try:
                rows.append((x_render(cell), render(apply(cell, env))))
            except FlowDataInconsistent as e:
                failures.append(str(e))
    lines = [f"functor {args.target.upper()} on {fd.name}, levels 0..{top}"]
    lines.extend(f"  {cell} -> {img}" for cell, img in rows)
    lines.extend(f"  INCONSISTENT  {msg}" for msg in failures)
    _emit(
        {
            "command": "functor",
            "target": args.target,
            "name": fd.name,
            "images": [{"cell": c, "image": i} for c, i in rows],
            "failures": failures,
        },
        cfg,
        lines,
    )
    return 0 if not failures else 1


def cmd_torus(args, cfg: RunConfig) -> int:
    if args.emit:
        print(json.dumps(torus_document(), indent=2))
        return 0
    fd = torus_flow_data()
    exp = torus_expected()
    env = ind_env(fd)
    counts = {l: len(x_cells(fd, l)) for l in range(fd.max_level + 1)}
    table = {}
    for l in range(fd.max_level + 1):
        for cell in x_cells(fd, l):
            table[x_render(cell)] = w_render(functor_g(cell, env))
    problems = []
    if counts != exp.counts:
        problems.append(f"cell counts {counts} != expected {exp.counts}")
    for cell, want in exp.g_table.items():
        got = table.get(cell)
        if got != want:
            problems.append(f"G({cell}) = {got}, expected {want}")
    for cell in table:
        if cell not in exp.g_table:
            problems.append(f"unexpected cell {cell}")

    lines = [
        fd.name
        + " cell counts: "
        + ", ".join(f"|X({l})| = {n}" for l, n in counts.items())
    ]
    lines.append("G images:")
    lines.extend(f"  {cell} -> {img}" for cell, img in table.items())
    lines.extend(f"MISMATCH  {p}" for p in problems)
    lines.append("expected tables: " + ("match" if not problems else "MISMATCH"))
    _emit(
        {
            "command": "torus",
            "name": fd.name,
            "counts": {str(l): n for l, n in counts.items()},
            "g_table": table,
            "match": not problems,
            "problems": problems,
        },
        cfg,
        lines,
    )
    return 0 if not problems else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncat",
        description="cell algebra and law checking for combinatorial Morse flow data",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_level=True):
        if with_level:
            p.add_argument("--level", type=int, default=2, help="top level to use (default 2)")
        p.add_argument(
            "--format", choices=("text", "json"), default="text", dest="fmt",
            help="output format (default text)",
        )

    p = sub.add_parser("validate", help="check a flow-data file")
    p.add_argument("file")
    common(p, with_level=False)
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("build", help="enumerate the cells of a flow-data file")
    p.add_argument("file")
    common(p)
    p.set_defaults(run=cmd_build)

    p = sub.add_parser("axioms", help="check the category laws")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--category", choices=("w", "v", "x"), required=True)
    p.add_argument("--seed", type=int, default=0, help="subsampling seed (default 0)")
    p.add_argument(
        "--samples", type=int, default=1000,
        help="cap on cells/pairs per law instance (default 1000)",
    )
    common(p)
    p.set_defaults(run=cmd_axioms)

    p = sub.add_parser("functor", help="apply an index functor to every cell")
    p.add_argument("file")
    p.add_argument("--target", choices=("g", "f"), required=True)
    common(p)
    p.set_defaults(run=cmd_functor)

    p = sub.add_parser("torus", help="the built-in fixture and its tables")
    p.add_argument("--emit", action="store_true", help="print the fixture as JSON and exit")
    common(p, with_level=False)
    p.set_defaults(run=cmd_torus)

    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    cfg = RunConfig(
        level=getattr(args, "level", 2),
        seed=getattr(args, "seed", 0),
        samples=getattr(args, "samples", 1000),
        fmt=getattr(args, "fmt", "text"),
    )
    try:
        return args.run(args, cfg)
    except _Usage as e:
        print(f"ncat: {e}", file=sys.stderr)
        return 2
    except NCatError as e:
        print(f"ncat: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
