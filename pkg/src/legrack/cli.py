"""Command-line surface: census, classification, invariants, presentations,
coloring counts, and the indistinguishability verifier.

Reports are deterministic for a fixed config; the only varying output is a
single timestamped header line, suppressed by ``--no-header``.
"""
from __future__ import annotations

import argparse
import os
import sys
from datetime import datetime, timezone

from . import __version__
from .census import census_counts, enumerate_racks
from .coloring import count_colorings, verify_indistinguishability
from .fourleg import classify_structures, make_fourleg
from .front import (
    FrontError,
    classical_invariants,
    fundamental_presentation,
    load_front,
)
from .perms import cycle_string, parse_cycles
from .racks import RackError, load_rack


def _default_jobs() -> int:
    return int(os.environ.get("LEGRACK_JOBS", "1"))


def _emit(lines, args) -> None:
    text = "".join(line + "\n" for line in lines)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _header(args, echo: str) -> list[str]:
    if args.no_header:
        return []
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return [f"# legrack {__version__} | {stamp} | {echo}"]


def _cmd_census(args) -> int:
    lines = _header(args, f"census --max-order {args.max_order}")
    lines.append("order,family,rack_classes,structure_classes")
    for order in range(args.max_order + 1):
        racks = enumerate_racks(order, jobs=args.jobs)
        for row in census_counts(order, racks=racks):
            lines.append(f"{row.order},{row.family},{row.rack_count},"
                         f"{row.structure_count}")
    _emit(lines, args)
    return 0


def _cmd_classify(args) -> int:
    rack = load_rack(args.rack)
    classes = classify_structures(rack)
    lines = _header(args, f"classify --rack {args.rack}")
    lines.append("rack_id,class_index,ul,ur,orbit_size")
    rack_id = os.path.basename(args.rack)
    for i, cls in enumerate(classes):
        lines.append(f"{rack_id},{i},{cycle_string(cls.ul)},"
                     f"{cycle_string(cls.ur)},{cls.orbit_size}")
    _emit(lines, args)
    return 0


def _cmd_invariants(args) -> int:
    inv = classical_invariants(load_front(args.front))
    _emit([f"tb={inv.tb} rot={inv.rot}"], args)
    return 0


def _cmd_presentation(args) -> int:
    pres = fundamental_presentation(load_front(args.front))
    lines = [f"generators={pres.generators}"]
    if pres.closure_word:
        lines.append("closure: " + " ".join(pres.closure_word))
    for rel in pres.relations:
        word = " ".join(rel.word) if rel.word else "-"
        sign = "+" if rel.sign == 1 else "-"
        lines.append(f"x{rel.out_arc} = [{word}](x{rel.in_arc}) >^{sign}1 "
                     f"x{rel.over_arc}  (crossing {rel.crossing})")
    _emit(lines, args)
    return 0


def _cmd_colorings(args) -> int:
    code = load_front(args.front)
    rack = load_rack(args.rack)
    ul = parse_cycles(args.ul, rack.n)
    ur = parse_cycles(args.ur, rack.n)
    fl = make_fourleg(rack, ul, ur)
    pres = fundamental_presentation(code)
    if args.brute_force:
        from .coloring import brute_force_colorings

        count = brute_force_colorings(pres, fl)
    else:
        count = count_colorings(pres, fl)
    _emit([str(count)], args)
    return 0


def _cmd_verify(args) -> int:
    codes = {}
    for name in sorted(os.listdir(args.fronts)):
        if name.endswith(".front"):
            codes[name[:-len(".front")]] = load_front(
                os.path.join(args.fronts, name))
    if not codes:
        raise FrontError(f"no .front files in {args.fronts}")
    report = verify_indistinguishability(codes, args.max_order)
    lines = _header(args, f"verify --fronts {args.fronts} "
                          f"--max-order {args.max_order}")
    lines.append("code_name,tb,rot,rack_id,ul,ur,count")
    for row in report.rows:
        lines.append(f"{row.code_name},{row.tb},{row.rot},{row.rack_id},"
                     f"{row.ul},{row.ur},{row.count}")
    for key in sorted(report.groups):
        members = report.groups[key]
        bad = [v for v in report.violations if f"(tb,rot)={key}" in v]
        status = "FAIL" if bad else "PASS"
        lines.append(f"# group tb={key[0]} rot={key[1]} "
                     f"[{' '.join(members)}]: {status}")
    for v in report.violations:
        lines.append(f"# violation: {v}")
    _emit(lines, args)
    return 0 if report.passed else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="legrack",
        description="Finite racks, 4-Legendrian structures, and Legendrian "
                    "front coloring invariants.")
    parser.add_argument("--version", action="version",
                        version=f"legrack {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--output", help="write the report to a file")
        p.add_argument("--no-header", action="store_true",
                       help="suppress the timestamped header line")
        p.add_argument("--jobs", type=int, default=_default_jobs(),
                       help="parallelism degree (default $LEGRACK_JOBS or 1)")

    p = sub.add_parser("census", help="per-order, per-family census CSV")
    p.add_argument("--max-order", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("classify", help="4-Legendrian structure classes of a rack")
    p.add_argument("--rack", required=True)
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("invariants", help="tb/rot of a front code")
    p.add_argument("--front", required=True)
    common(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("presentation", help="fundamental presentation of a front")
    p.add_argument("--front", required=True)
    common(p)
    p.set_defaults(func=_cmd_presentation)

    p = sub.add_parser("colorings", help="coloring count of a front by a rack")
    p.add_argument("--front", required=True)
    p.add_argument("--rack", required=True)
    p.add_argument("--ul", default="()")
    p.add_argument("--ur", default="()")
    p.add_argument("--brute-force", action="store_true",
                   help="use the exhaustive assignment scan")
    common(p)
    p.set_defaults(func=_cmd_colorings)

    p = sub.add_parser("verify", help="indistinguishability report over a front set")
    p.add_argument("--fronts", required=True)
    p.add_argument("--max-order", type=int, default=3)
    common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RackError, FrontError, ValueError, OSError) as exc:
        print(f"legrack: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
