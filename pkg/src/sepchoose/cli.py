"""Batch entry point for the verification suites.

Exit codes: 0 all requested items pass, 1 verification failure, 2 usage or
parse error, 3 search budget exceeded.  Reports are emitted in fixture
order and are byte-stable across runs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog as cat
from .charges import (AuditError, LedgerError, Precolored, audit_face_bounds,
                      audit_initial_sum, audit_lp, audit_vertex_bounds,
                      run_case_suite, CHARGE_SPECS)
from .configs import is_reducible
from .coloring import DEFAULT_BUDGET
from .fixtures import FixtureError, GraphBlock, parse_fixtures
from .graphs import BudgetError, GraphError
from .merges import CANDIDATE, enumerate_merge_lists, identifiable_triples, merge_pair
from .orient import Orientation, eulerian_counts, find_at_orientation, is_alon_tarsi
from .reports import EXIT_BUDGET, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, RunReport, fmt_value


def _load_catalog(fixtures_dir: str | None):
    if fixtures_dir is None:
        return cat.shipped_catalog()
    path = Path(fixtures_dir) / "catalog.cfg"
    return cat.load_catalog(path.read_text())


def _load_orientations(fixtures_dir: str | None):
    if fixtures_dir is None:
        return cat.shipped_orientations()
    path = Path(fixtures_dir) / "orientations.fix"
    if not path.exists():
        return {}
    out = {}
    for block in parse_fixtures(path.read_text()):
        if isinstance(block, GraphBlock) and block.orients:
            out[block.name] = block.orients
    return out


def _emit(report: RunReport, fmt: str) -> None:
    sys.stdout.write(report.to_text() if fmt == "text" else report.to_records())


def cmd_verify_catalog(args) -> int:
    catalog = _load_catalog(args.fixtures)
    orientations = _load_orientations(args.fixtures)
    names = args.names or list(catalog)
    report = RunReport("catalog")
    for name in names:
        conf = catalog.get(name)
        if conf is None:
            report.add(name, False, detail="no such configuration")
            continue
        verdict = is_reducible(conf, budget=args.budget)
        detail = f"assignments={verdict.assignments_examined}"
        if not verdict.choosable:
            detail += f" witness={verdict.witness}"
        report.add(name, verdict.choosable, verdict.choosable, detail)
        arcs = orientations.get(name)
        if arcs is not None:
            orient = Orientation(conf.graph, arcs)
            ok = is_alon_tarsi(orient, conf.f_vector())
            parity = eulerian_counts(orient)
            bridged = ok and verdict.choosable
            report.add(f"{name}:alon-tarsi", bridged, ok,
                       f"EE={parity.ee} EO={parity.eo}")
    _emit(report, args.format)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_verify_merges(args) -> int:
    if args.forbidden_len < 4:
        print("forbidden cycle length must be at least 4", file=sys.stderr)
        return EXIT_USAGE
    catalog = _load_catalog(args.fixtures)
    names = args.names or list(cat.MERGE_GROUP)
    report = RunReport("merges")
    for name in names:
        conf = catalog.get(name)
        if conf is None:
            report.add(name, False, detail="no such configuration")
            continue
        xs = sorted(conf.x)
        counts = {"TooClose": 0, "CreatesChord": 0, "Candidate": 0}
        for i, a in enumerate(xs):
            for b in xs[i + 1:]:
                counts[merge_pair(conf, a, b, args.forbidden_len).tag] += 1
        tally = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        report.add(f"{name}:pairs", True, None, tally)
        merge_lists = enumerate_merge_lists(conf, args.forbidden_len)
        all_ok = True
        for ml in merge_lists:
            pairs = "+".join(f"{a}={b}" for a, b in ml.pairs)
            chordfree = not ml.merged.graph.contains_chorded_cycle(args.forbidden_len)
            verdict = is_reducible(ml.merged, budget=args.budget)
            ok = chordfree and verdict.choosable
            all_ok &= ok
            report.add(f"{name}:{pairs}", ok, verdict.choosable,
                       f"n={ml.merged.graph.vertex_count}")
        triples = identifiable_triples(conf, args.forbidden_len)
        report.add(f"{name}:no-triple", not triples, not triples,
                   f"violations={triples}" if triples else "")
    _emit(report, args.format)
    return EXIT_PASS if report.passed else EXIT_FAIL


def _plane_fixtures(fixtures_dir: str | None):
    if fixtures_dir is None:
        text = cat._data_text("planegraphs.fix")
    else:
        text = (Path(fixtures_dir) / "planegraphs.fix").read_text()
    return {b.name: b.plane() for b in parse_fixtures(text)
            if isinstance(b, GraphBlock) and b.faces}


# the legal precolored parts exercised against the cc7 charges
CC7_PRECOLORED = (
    ("tetrahedron", Precolored("K3", (0, 1, 2))),
    ("octahedron", Precolored("K3", (0, 1, 2))),
    ("cube", Precolored("P3", (0, 1, 2))),
    ("pentaprism", Precolored("P3", (0, 1, 2))),
    ("prism3", Precolored("P2", (0, 1))),
    ("pyramid4", Precolored("P1", (1,))),
)


def cmd_audit_discharging(args) -> int:
    variant = args.variant
    if variant not in CHARGE_SPECS:
        print(f"unknown variant {variant!r}; pick one of "
              f"{sorted(CHARGE_SPECS)}", file=sys.stderr)
        return EXIT_USAGE
    report = RunReport(f"discharging:{variant}")
    for ev in run_case_suite(variant):
        report.add(f"case:{ev.name}", ev.ok, ev.final, "; ".join(ev.problems))
    try:
        vb = audit_vertex_bounds(variant)
        report.add("vertex-bounds", True, min(vb.values()),
                   f"d up to 60, min at d={min(vb, key=vb.get)}")
    except AuditError as exc:
        report.add("vertex-bounds", False, None, str(exc))
    try:
        fb = audit_face_bounds(variant)
        report.add("face-bounds", True, min(fb.values()),
                   f"l up to 60, min at l={min(fb, key=fb.get)}")
    except AuditError as exc:
        report.add("face-bounds", False, None, str(exc))
    planes = _plane_fixtures(args.fixtures)
    if variant == "cc7":
        for name, pre in CC7_PRECOLORED:
            pg = planes[name]
            try:
                total = audit_initial_sum(pg, variant, pre)
                report.add(f"initial:{name}+{pre.kind}", True, total)
            except AuditError as exc:
                report.add(f"initial:{name}+{pre.kind}", False, None, str(exc))
        lp = audit_lp()
        report.add("lp:integer-min", lp.integer_min > 4, lp.integer_min,
                   f"at (d,k,l)={lp.integer_argmin}")
        report.add("lp:relaxed-min", lp.relaxed_min > 4, lp.relaxed_min,
                   f"at {tuple(fmt_value(x) for x in lp.relaxed_argmin)}")
        for check in lp.printed_certificate:
            report.add(f"lp:printed-cert-{check.reading}", not check.feasible,
                       check.feasible,
                       "; ".join(check.violations) or "feasible")
        report.add("lp:corrected-cert", lp.corrected_certificate.feasible,
                   lp.corrected_certificate.objective,
                   "feasible, tight against the relaxation")
        report.add("lp:alt-reading", True, lp.alt_reading_optimum,
                   "optimum under the printed dual's reading; bound > 4 fails")
    else:
        for name, pg in sorted(planes.items()):
            try:
                total = audit_initial_sum(pg, variant)
                report.add(f"initial:{name}", True, total)
            except AuditError as exc:
                report.add(f"initial:{name}", False, None, str(exc))
    _emit(report, args.format)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_find_at(args) -> int:
    path = Path(args.graph)
    if not path.exists():
        print(f"no such fixture: {path}", file=sys.stderr)
        return EXIT_USAGE
    blocks = [b for b in parse_fixtures(path.read_text())
              if isinstance(b, GraphBlock)]
    if args.name:
        blocks = [b for b in blocks if b.name == args.name]
    if not blocks:
        print("no matching graph block", file=sys.stderr)
        return EXIT_USAGE
    block = blocks[0]
    try:
        f = [int(t) for t in args.f.split(",")]
    except ValueError:
        print(f"bad list-size spec {args.f!r}", file=sys.stderr)
        return EXIT_USAGE
    if len(f) == 1:
        f = f * block.graph.vertex_count
    if len(f) != block.graph.vertex_count:
        print("list-size spec length mismatch", file=sys.stderr)
        return EXIT_USAGE
    report = RunReport("find-at")
    orient = find_at_orientation(block.graph, f)
    if orient is None:
        report.add(block.name, True, False, "no orientation; exhausted sweep")
    else:
        parity = eulerian_counts(orient)
        report.add(block.name, True, True,
                   f"arcs={orient.arcs} EE={parity.ee} EO={parity.eo}")
    _emit(report, args.format)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepchoose",
        description="verification suites for choosability-with-separation audits")
    parser.add_argument("--fixtures", help="directory overriding the shipped fixtures")
    parser.add_argument("--format", choices=("text", "record"), default="text")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="node budget per verdict")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-catalog", help="reducibility of every catalog entry")
    p.add_argument("names", nargs="*")
    p.set_defaults(func=cmd_verify_catalog)

    p = sub.add_parser("verify-merges", help="merge classification and oracle checks")
    p.add_argument("names", nargs="*")
    p.add_argument("--forbidden-len", type=int, default=5)
    p.set_defaults(func=cmd_verify_merges)

    p = sub.add_parser("audit-discharging", help="charge ledgers, bounds, LP")
    p.add_argument("--variant", required=True)
    p.set_defaults(func=cmd_audit_discharging)

    p = sub.add_parser("find-at", help="search an Alon-Tarsi orientation")
    p.add_argument("--graph", required=True, help="graph fixture file")
    p.add_argument("--name", help="graph block name within the fixture")
    p.add_argument("--f", required=True,
                   help="list sizes, comma-separated or a single value")
    p.set_defaults(func=cmd_find_at)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FixtureError as exc:
        print(f"fixture error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, LedgerError, AuditError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
