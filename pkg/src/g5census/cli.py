"""Command line driver: census, analyze, report, verify.

Exit codes: 0 success, 2 a verification check failed, 3 an internal
invariant was violated.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import checks, cicensus, hypcensus, trigcensus
from .records import CurveRecord, InvariantViolation, read_records, write_records
from .zeta import NEWTON_ROWS, STRATA, aggregates, tabulate

log = logging.getLogger("g5census")

EXIT_OK, EXIT_VERIFY, EXIT_INVARIANT = 0, 2, 3
TRIG_BLOCK = 256
CI_BLOCK = 1000


@dataclass
class CensusRun:
    stratum: str                      # hyp | trig | ci
    out: Path
    genus: int = 5
    checkpoint: Path | None = None
    checkpoint_every: int = 1
    workers: int = 1
    resume: bool = False
    faithful_cusp: bool = False
    stop_after: int | None = None     # units; used to exercise resume
    classes: tuple = cicensus.IRREDUCIBLE_CLASSES
    done: dict = field(default_factory=dict)


def default_workers() -> int:
    return int(os.environ.get("G5_THREADS", "1"))


# ---------------------------------------------------------------------------
# Checkpoints

def _digest(body: dict) -> str:
    return hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()


def save_checkpoint(run: CensusRun) -> None:
    body = {"stratum": run.stratum, "genus": run.genus, "done": run.done}
    tmp = run.checkpoint.with_suffix(run.checkpoint.suffix + ".tmp")
    tmp.write_text(json.dumps({"body": body, "digest": _digest(body)}))
    os.replace(tmp, run.checkpoint)


def load_checkpoint(run: CensusRun) -> dict:
    data = json.loads(run.checkpoint.read_text())
    body = data["body"]
    if _digest(body) != data.get("digest"):
        raise ValueError(f"checkpoint {run.checkpoint} is corrupt (digest mismatch)")
    if body["stratum"] != run.stratum or body["genus"] != run.genus:
        raise ValueError("checkpoint belongs to a different run")
    return body["done"]


class _StopEarly(Exception):
    pass


def _run_units(run: CensusRun, units: list, fn) -> list:
    """Evaluate fn over (unit_id, arg) pairs in order, reusing and recording
    checkpointed results.  Results must be JSON-serialisable."""
    todo = [(uid, arg) for uid, arg in units if uid not in run.done]
    pending = 0
    processed = 0

    def record(uid, res):
        nonlocal pending, processed
        run.done[uid] = res
        pending += 1
        processed += 1
        if run.checkpoint and pending >= run.checkpoint_every:
            save_checkpoint(run)
            pending = 0
        if run.stop_after is not None and processed >= run.stop_after:
            if run.checkpoint:
                save_checkpoint(run)
            raise _StopEarly

    if run.workers > 1 and todo:
        with ProcessPoolExecutor(run.workers) as ex:
            for (uid, _), res in zip(todo, ex.map(fn, [a for _, a in todo])):
                record(uid, res)
    else:
        for uid, arg in todo:
            record(uid, fn(arg))
    if run.checkpoint and pending:
        save_checkpoint(run)
    return [run.done[uid] for uid, _ in units]


# ---------------------------------------------------------------------------
# Census units

def _hyp_unit(arg):
    g, q = arg
    return [CurveRecord("HYP", (g, q, p), aut).to_line()
            for p, aut in hypcensus.reduce_ps_for_q(q, hypcensus.smooth_ps(q, g), g)]


def _trig_unit(arg):
    words, sizes, faithful = arg
    out = []
    for F, size in zip(words, sizes):
        c = trigcensus.analyse_quintic(F, size, faithful_cusp=faithful)
        if c is not None:
            out.append(CurveRecord("TRI", (c.F, c.sing), c.aut).to_line())
    return out


def _ci_unit(rows):
    return "".join("1" if cicensus.is_smooth_ci(cicensus.QuadricTriple(*r)) else "0" for r in rows)


def census_lines(run: CensusRun) -> list[str]:
    if run.stratum == "hyp":
        units = [(f"q{q:x}", (run.genus, q)) for q in hypcensus.q_representatives(run.genus)]
        return [line for chunk in _run_units(run, units, _hyp_unit) for line in chunk]
    if run.stratum == "trig":
        words, sizes = trigcensus.candidate_quintics()
        words, sizes = words.tolist(), sizes.tolist()
        units = [(f"b{k}", (words[k:k + TRIG_BLOCK], sizes[k:k + TRIG_BLOCK], run.faithful_cusp))
                 for k in range(0, len(words), TRIG_BLOCK)]
        return [line for chunk in _run_units(run, units, _trig_unit) for line in chunk]
    if run.stratum == "ci":
        lines = []
        for i in run.classes:
            cand = cicensus.candidate_triples(i)
            cand = cand[cicensus.rational_singular_points(cand) == 0]
            rows = [tuple(map(int, r)) for r in cand]
            units = [(f"P{i}:{k}", rows[k:k + CI_BLOCK]) for k in range(0, len(rows), CI_BLOCK)]
            flags = "".join(_run_units(run, units, _ci_unit))
            smooth = cand[np.array([c == "1" for c in flags], dtype=bool)]
            for t, aut in cicensus.dedup_sigma(i, smooth):
                lines.append(CurveRecord("CI", (t.P, t.Q, t.R, i), aut).to_line())
        return lines
    raise ValueError(f"unknown stratum {run.stratum!r}")


def cmd_census(run: CensusRun) -> int:
    if run.checkpoint and run.resume and run.checkpoint.exists():
        run.done = load_checkpoint(run)
        log.info("resuming with %d finished units", len(run.done))
    t0 = time.time()
    try:
        lines = census_lines(run)
    except _StopEarly:
        log.info("stopped after %d units", run.stop_after)
        return EXIT_OK
    tmp = run.out.with_suffix(run.out.suffix + ".tmp")
    tmp.write_text("".join(line + "\n" for line in lines))
    os.replace(tmp, run.out)
    log.info("%s census: %d curves in %.1fs", run.stratum, len(lines), time.time() - t0)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Analysis and reports

def _analyse_line(line: str) -> str:
    return CurveRecord.from_line(line).analyse().to_line()


def cmd_analyze(paths: list[Path], out_dir: Path | None = None, workers: int = 1) -> int:
    for path in paths:
        lines = [l for l in path.read_text().splitlines() if l.strip()]
        if workers > 1:
            with ProcessPoolExecutor(workers) as ex:
                out = list(ex.map(_analyse_line, lines, chunksize=64))
        else:
            out = [_analyse_line(l) for l in lines]
        target = (out_dir / path.name) if out_dir else path
        target.write_text("".join(l + "\n" for l in out))
        log.info("analysed %d records from %s", len(out), path)
    return EXIT_OK


def _slopes_label(sl) -> str:
    return "[" + ", ".join(str(s) for s in sl) + "]"


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else str(x)


def report_tables(records) -> dict[str, list[list[str]]]:
    tab = tabulate(records)
    counts = [["slopes", "hyp", "trig", "ci", "total"]]
    stack = [["slopes", "hyp", "trig", "ci", "total"]]
    rows = list(NEWTON_ROWS) + [sl for sl in tab.counts if sl not in NEWTON_ROWS]
    for sl in rows:
        counts.append([_slopes_label(sl)] + [str(v) for v in tab.count_row(sl)])
        stack.append([_slopes_label(sl)] + [_fmt(v) for v in tab.mass_row(sl)])
    autos = {}
    for s in STRATA:
        hist = tab.aut.get(s, {})
        if not hist:
            continue
        autos[s] = [["aut"] + [str(k) for k in sorted(hist)],
                    ["curves"] + [str(hist[k]) for k in sorted(hist)]]
    agg = aggregates(records)
    summary = [["quantity", "value"]]
    summary += [[f"curves_{s.lower()}", str(agg.curves.get(s, 0))] for s in STRATA]
    summary += [[f"mass_{s.lower()}", _fmt(agg.mass.get(s, 0))] for s in STRATA]
    summary += [["curves_total", str(agg.total_curves)], ["mass_total", _fmt(agg.total_mass)],
                ["isogeny_classes", str(agg.isogeny_classes)],
                ["isogeny_classes_all_strata", str(agg.shared_classes)]]
    summary += [[f"pointless_{s.lower()}", str(agg.pointless.get(s, 0))] for s in STRATA]
    for s, (m, k) in agg.max_points.items():
        summary += [[f"max_N1_{s.lower()}", str(m)], [f"max_N1_{s.lower()}_curves", str(k)]]
    out = {"newton_counts": counts, "newton_stack_counts": stack, "summary": summary}
    out.update({f"automorphisms_{s.lower()}": v for s, v in autos.items()})
    return out


def _markdown(name: str, rows: list[list[str]]) -> str:
    head = "| " + " | ".join(rows[0]) + " |"
    sep = "|" + "|".join("---" for _ in rows[0]) + "|"
    body = ["| " + " | ".join(r) + " |" for r in rows[1:]]
    return f"### {name}\n\n" + "\n".join([head, sep] + body) + "\n"


def cmd_report(paths: list[Path], out_dir: Path) -> int:
    import csv
    records = [r for p in paths for r in read_records(p)]
    if not all(r.analysed for r in records):
        raise SystemExit("report needs analysed records; run `analyze` first")
    tables = report_tables(records)
    out_dir.mkdir(parents=True, exist_ok=True)
    md = []
    for name, rows in tables.items():
        with open(out_dir / f"{name}.csv", "w", newline="") as fh:
            csv.writer(fh).writerows(rows)
        md.append(_markdown(name, rows))
    agg = aggregates(records)
    masses = " + ".join(_fmt(agg.mass.get(s, 0)) for s in STRATA)
    md.append(f"Mass: {masses} = {_fmt(agg.total_mass)}\n")
    (out_dir / "report.md").write_text("\n".join(md))
    log.info("wrote %d tables to %s", len(tables), out_dir)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Verification

def cmd_verify(annotated: list[Path] = (), quick: bool = False, stream=None) -> int:
    stream = stream or sys.stdout
    results = checks.run_all(annotated, quick=quick)
    failed = 0
    for name, ok, detail in results:
        stream.write(f"{'PASS' if ok else 'FAIL'} {name}{': ' + detail if detail else ''}\n")
        failed += not ok
    return EXIT_VERIFY if failed else EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="g5census", description="Genus-5 curves over F_2.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("census", help="enumerate one stratum")
    c.add_argument("--stratum", choices=["hyp", "trig", "ci"], required=True)
    c.add_argument("--genus", type=int, default=5, help="hyperelliptic only (2..5)")
    c.add_argument("--out", type=Path, required=True)
    c.add_argument("--checkpoint", type=Path)
    c.add_argument("--checkpoint-every", type=int, default=1, help="units between checkpoint writes")
    c.add_argument("--resume", action="store_true")
    c.add_argument("--threads", type=int, default=None)
    c.add_argument("--paper-faithful-cusp", action="store_true",
                   help="decide cusps by the transform search (checked against the tangent test)")
    c.add_argument("--classes", type=int, nargs="+", choices=cicensus.IRREDUCIBLE_CLASSES,
                   default=list(cicensus.IRREDUCIBLE_CLASSES), help="ci only: top quadric classes")
    c.add_argument("--stop-after", type=int, default=None, help=argparse.SUPPRESS)

    a = sub.add_parser("analyze", help="add point counts, L-polynomials and slopes")
    a.add_argument("files", nargs="+", type=Path)
    a.add_argument("--out-dir", type=Path)
    a.add_argument("--threads", type=int, default=None)

    r = sub.add_parser("report", help="tables from analysed census files")
    r.add_argument("files", nargs="+", type=Path)
    r.add_argument("--out", type=Path, required=True, help="output directory")

    v = sub.add_parser("verify", help="oracle and invariant checks")
    v.add_argument("files", nargs="*", type=Path, help="analysed census files to audit")
    v.add_argument("--quick", action="store_true")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(message)s")
    threads = getattr(args, "threads", None) or default_workers()
    try:
        if args.cmd == "census":
            if args.stratum != "hyp" and args.genus != 5:
                raise SystemExit("--genus applies to the hyperelliptic stratum only")
            run = CensusRun(args.stratum, args.out, args.genus, args.checkpoint,
                            args.checkpoint_every, threads, args.resume,
                            args.paper_faithful_cusp, args.stop_after, tuple(sorted(args.classes)))
            return cmd_census(run)
        if args.cmd == "analyze":
            return cmd_analyze(args.files, args.out_dir, threads)
        if args.cmd == "report":
            return cmd_report(args.files, args.out)
        if args.cmd == "verify":
            return cmd_verify(args.files, args.quick)
    except (InvariantViolation, AssertionError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
