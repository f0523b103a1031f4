"""Command-line interface: ``pretzel analyze``, ``pretzel verify``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from .core import (
    NotAKnotError,
    PretzelError,
    TorusKnot,
    Unknot,
    component_count,
    normalize,
    parse_pretzel,
    reduce_small,
)
from .fibered import NotMinimallyPresented, Type1Input, auxiliary_link, is_fibered
from .graphs import build_graphs
from .invariants import determinant_formula, seifert_genus
from .lspace import (
    CSV_COLUMNS,
    HFK_3_M5_3_M2,
    CounterexampleFound,
    VerificationReport,
    classify_lspace,
    is_hfk_exception,
    verify_theorem1,
)
from .oracle import alexander_oracle
from .statesum import alexander

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    command: str
    code: Optional[str] = None
    max_r: int = 5
    max_twist: int = 9
    fmt: str = "text"
    workers: int = 1
    dump_graphs: bool = False
    report_dir: str = "."

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("worker count must be at least 1")
        if self.max_r < 1 or self.max_twist < 1:
            raise ValueError("bounds must be positive")


# --- analyze -------------------------------------------------------------------


def analyze_report(text: str) -> dict:
    code = parse_pretzel(text)
    comps = component_count(code)
    if comps != 1:
        raise NotAKnotError(code, comps)
    norm = normalize(code)
    out = {"code": str(code), "normalized": str(norm)}
    reduced = reduce_small(norm) if not isinstance(norm, Unknot) else norm
    if isinstance(reduced, (Unknot, TorusKnot)):
        out["reduced"] = str(reduced)
    if isinstance(norm, Unknot):
        out.update(alexander="1", det={"formula": 1, "alexander": 1}, seifert_genus=0)
    else:
        delta = alexander(norm)
        out["alexander"] = str(delta)
        out["det"] = {"formula": determinant_formula(norm), "alexander": abs(int(delta.evaluate(-1)))}
        out["seifert_genus"] = seifert_genus(norm)
        try:
            out["fiberedness"] = is_fibered(norm).to_json()
        except NotMinimallyPresented as exc:
            out["fiberedness"] = {"type": "Type2C", "fibered": False, "fiber_genus": None, "trace": [str(exc)]}
        if norm.r > 2:
            try:
                out["auxiliary_link"] = str(auxiliary_link(norm))
            except Type1Input:
                pass
    rep = classify_lspace(code)
    out["lspace"] = {
        "verdict": rep.verdict,
        "family": rep.family,
        "reason": rep.elimination_reason,
        "coeff_ok": rep.coeff_ok,
        "det_ok": rep.det_ok,
    }
    if is_hfk_exception(code):
        out["hfk"] = HFK_3_M5_3_M2.to_json()
    return out


def _render_analysis(rep: dict) -> str:
    lines = [f"code:          {rep['code']}"]
    if rep["normalized"] != rep["code"]:
        lines.append(f"normalized:    {rep['normalized']}")
    if "reduced" in rep:
        lines.append(f"reduces to:    {rep['reduced']}")
    fib = rep.get("fiberedness")
    if fib:
        lines.append(f"type:          {fib['type']}")
        lines.append(f"fibered:       {fib['fibered']}")
        for step in fib["trace"]:
            lines.append(f"  | {step}")
    if "auxiliary_link" in rep:
        lines.append(f"L':            {rep['auxiliary_link']}")
    lines.append(f"Alexander:     {rep['alexander']}")
    lines.append(f"det:           {rep['det']['formula']} (formula), {rep['det']['alexander']} (|Delta(-1)|)")
    lines.append(f"Seifert genus: {rep['seifert_genus']}")
    if fib and fib.get("fiber_genus") is not None:
        lines.append(f"fiber genus:   {fib['fiber_genus']}")
    ls = rep["lspace"]
    verdict = ls["verdict"]
    if ls["family"]:
        verdict += f" [{ls['family']}]"
    if ls["reason"]:
        verdict += f" ({ls['reason']})"
    lines.append(f"L-space:       {verdict}")
    if "hfk" in rep:
        lines.append("knot Floer homology over F_2 (Maslov rows, Alexander columns):")
        lines.append(HFK_3_M5_3_M2.render())
    return "\n".join(lines)


def cmd_analyze(cfg: RunConfig) -> int:
    try:
        rep = analyze_report(cfg.code)
    except (PretzelError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.fmt == "json":
        print(json.dumps(rep, indent=2))
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerow(classify_lspace(parse_pretzel(cfg.code)).csv_row())
        print(buf.getvalue(), end="")
    else:
        print(_render_analysis(rep))
    if cfg.dump_graphs and rep["normalized"] != "unknot":
        print(build_graphs(parse_pretzel(rep["normalized"])).to_dot())
    return EXIT_OK


# --- verify ----------------------------------------------------------------------


def render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return report.render_json() + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for row in report.rows:
            w.writerow(row.csv_row())
        return buf.getvalue()
    lines = [f"{'code':<24} {'type':<18} {'verdict':<14} reason"]
    for row in report.rows:
        reason = row.elimination_reason or row.family or ""
        lines.append(f"{row.normalized:<24} {row.type:<18} {row.verdict:<14} {reason}")
    return "\n".join(lines) + "\n"


def _summary(report: VerificationReport) -> str:
    lines = [f"checked {len(report.rows)} knots with r <= {report.max_r}, |n_i| <= {report.max_twist}"]
    for kind, n in report.counts().items():
        lines.append(f"  {kind}: {n}")
    bad = report.counterexamples
    lines.append(f"counterexamples: {len(bad)}")
    for row in bad:
        lines.append(f"  {row.normalized}")
    return "\n".join(lines)


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.max_r < 3:
        print("error: --max-tangles must be at least 3", file=sys.stderr)
        return EXIT_USAGE
    status = EXIT_OK
    try:
        report = verify_theorem1(cfg.max_r, cfg.max_twist, workers=cfg.workers)
    except CounterexampleFound as exc:
        report = exc.report
        status = EXIT_COUNTEREXAMPLE
    ext = {"text": "txt", "json": "json", "csv": "csv"}[cfg.fmt]
    out_dir = Path(cfg.report_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"verify_r{cfg.max_r}_n{cfg.max_twist}.{ext}"
    path.write_text(render_report(report, cfg.fmt))
    print(_summary(report))
    print(f"report: {path}")
    return status


# --- oracle (debugging aid) --------------------------------------------------------


def cmd_oracle(cfg: RunConfig) -> int:
    try:
        code = parse_pretzel(cfg.code)
        fox = alexander_oracle(code)
        state = alexander(code)
    except (PretzelError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"fox calculus: {fox}")
    print(f"state sum:    {state}")
    print(f"agree:        {fox.equal_up_to_unit(state)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pretzel", description="Alexander polynomials, fiberedness and L-space tests for pretzel knots.")
    sub = parser.add_subparsers(dest="command", metavar="{analyze,verify}", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("analyze", help="full report for one pretzel code")
    p.add_argument("code", help='pretzel code such as "(-2,3,7)"')
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--dump-graphs", action="store_true", help="print the checkerboard graphs as DOT")
    p.set_defaults(func=cmd_analyze, max_tangles=5, max_twist=9, workers=1, report_dir=".")

    env_workers = os.environ.get("PRETZEL_WORKERS")
    v = sub.add_parser("verify", help="check the L-space classification over a range of codes")
    v.add_argument("--max-tangles", type=int, default=5)
    v.add_argument("--max-twist", type=int, default=9)
    v.add_argument("--format", choices=["text", "json", "csv"], default="csv")
    v.add_argument("--workers", type=int, default=int(env_workers) if env_workers else 1)
    v.add_argument("--report-dir", default=os.environ.get("PRETZEL_REPORT_DIR", "."))
    v.set_defaults(func=cmd_verify, code=None, dump_graphs=False)

    o = sub.add_parser("oracle")
    o.add_argument("code")
    o.set_defaults(func=cmd_oracle, format="text", dump_graphs=False, max_tangles=5, max_twist=9, workers=1, report_dir=".")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            code=args.code,
            max_r=args.max_tangles,
            max_twist=args.max_twist,
            fmt=args.format,
            workers=args.workers,
            dump_graphs=args.dump_graphs,
            report_dir=args.report_dir,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return args.func(cfg)


if __name__ == "__main__":
    sys.exit(main())
