"""Command-line front end.

Subcommands: enumerate, hyperspaces, table, analyze, iso, check-l41,
check-p45, verify. Exit codes: 0 on success or PASS, 1 on FAIL, 2 on
usage errors (including size-guard and precondition violations). Output
is byte-identical for identical argv and seed, regardless of threads.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import parse_spec
from .analysis import AnalysisReport, analyze, isomorphic
from .certificates import check_noncentrality, check_pointwise_commutation, load_certificate
from .errors import (
    CertificateShapeError,
    CommutingHypothesisError,
    EmptyFamilyError,
    NotMonotoneError,
    SizeGuardError,
    SpecParseError,
    ValidationError,
)
from .extension import (
    DEFAULT_SEED,
    Superextension,
    build_superextension,
    table_to_json,
    translation_graph_dot,
)
from .families import (
    MaximalLinkedSystem,
    enumerate_inclusion_hyperspaces,
    enumerate_mls,
    family_to_json,
    format_family,
    minimize_antichain,
)
from .subsets import parse_subset, sorted_elements
from .suites import SUITE_NAMES, verify_suite

REPORT_ITEMS = ("center", "idempotents", "cancelable", "zeros", "ideals")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superext",
        description="Enumerate, compose, and analyze maximal linked systems over finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", help="write to this path instead of stdout")

    p = sub.add_parser("enumerate", help="list all maximal linked systems on n points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    add_output(p)

    p = sub.add_parser("hyperspaces", help="list all upward-closed families on n points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    add_output(p)

    p = sub.add_parser("table", help="build the full composition table over a group")
    p.add_argument("--group", required=True, help="group spec, e.g. C4 or C2xC2")
    p.add_argument("--format", choices=("json", "dot", "text"), default="text")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_output(p)

    p = sub.add_parser("analyze", help="semigroup analysis of a group or its superextension")
    p.add_argument("--group", required=True, help="spec or lambda:<spec>")
    p.add_argument("--report", default=",".join(REPORT_ITEMS),
                   help="comma list from: " + ",".join(REPORT_ITEMS))
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_output(p)

    p = sub.add_parser("iso", help="search for an isomorphism between two tables")
    p.add_argument("--a", required=True, help="spec or lambda:<spec>")
    p.add_argument("--b", required=True, help="spec or lambda:<spec>")
    p.add_argument("--format", choices=("json", "text"), default="text")
    add_output(p)

    p = sub.add_parser("check-l41", help="verify a non-centrality certificate file")
    p.add_argument("--cert", required=True, help="certificate JSON path")
    p.add_argument("--format", choices=("json", "text"), default="text")
    add_output(p)

    p = sub.add_parser("check-p45", help="check commuting of systems on Y with points of Z")
    p.add_argument("--group", required=True)
    p.add_argument("--y", required=True, help="subset, e.g. 0,1,2 or {0,1,2}")
    p.add_argument("--z", required=True, help="subset, e.g. 0,1,2 or {0,1,2}")
    p.add_argument("--format", choices=("json", "text"), default="text")
    add_output(p)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, help="one of: " + ", ".join(SUITE_NAMES + ("all",)))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("json", "text"), default="text")
    add_output(p)

    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_table(spec: str, *, threads: int = 1, seed: int = DEFAULT_SEED):
    """A spec names a group; lambda:<spec> names its superextension."""
    if spec.startswith("lambda:"):
        group = parse_spec(spec[len("lambda:"):])
        return build_superextension(group, threads=threads, seed=seed)
    return parse_spec(spec)


def _families_output(families, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([family_to_json(f) for f in families], indent=2) + "\n"
    if fmt == "csv":
        return "".join(format_family(f) + "\n" for f in families)
    lines = [f"{i}: {format_family(f)}" for i, f in enumerate(families)]
    lines.append(f"total: {len(families)}")
    return "\n".join(lines) + "\n"


def _cmd_enumerate(args) -> int:
    _emit(_families_output(enumerate_mls(args.n), args.format), args.output)
    return 0


def _cmd_hyperspaces(args) -> int:
    _emit(_families_output(enumerate_inclusion_hyperspaces(args.n), args.format), args.output)
    return 0


def _table_summary(ext: Superextension, seed: int) -> str:
    report = analyze(ext)
    lines = [
        f"group: {ext.group!r}",
        f"systems: {ext.size}",
        f"principal indices: {list(ext.principal_index)}",
        f"commutative: {report.is_commutative}",
        f"idempotents: {list(report.idempotents)}",
        f"seed: {seed}",
    ]
    return "\n".join(lines) + "\n"


def _cmd_table(args) -> int:
    group = parse_spec(args.group)
    ext = build_superextension(group, threads=args.threads, seed=args.seed)
    if args.format == "json":
        _emit(json.dumps(table_to_json(ext), indent=2) + "\n", args.output)
    elif args.format == "dot":
        _emit(translation_graph_dot(ext), args.output)
    else:
        _emit(_table_summary(ext, args.seed), args.output)
    return 0


def _report_text(report: AnalysisReport, items: list[str]) -> str:
    rows = []
    obj = report.to_json()
    key_map = {
        "center": ("center",),
        "idempotents": ("idempotents",),
        "cancelable": ("left_cancelable", "right_cancelable"),
        "zeros": ("left_zeros", "right_zeros"),
        "ideals": ("minimal_left_ideals",),
    }
    rows.append(("order", str(report.order)))
    rows.append(("commutative", str(report.is_commutative)))
    for item in items:
        for key in key_map[item]:
            rows.append((key.replace("_", " "), str(obj[key])))
    width = max(len(name) for name, _ in rows)
    return "".join(f"{name.ljust(width)}  {value}\n" for name, value in rows)


def _cmd_analyze(args) -> int:
    items = [part for part in args.report.split(",") if part]
    for item in items:
        if item not in REPORT_ITEMS:
            raise ValueError(f"unknown report item {item!r}; expected from {','.join(REPORT_ITEMS)}")
    target = _resolve_table(args.group, threads=args.threads, seed=args.seed)
    report = analyze(target)
    if args.format == "json":
        obj = report.to_json()
        keep = {"order", "is_commutative"}
        key_map = {
            "center": {"center"},
            "idempotents": {"idempotents"},
            "cancelable": {"left_cancelable", "right_cancelable"},
            "zeros": {"left_zeros", "right_zeros"},
            "ideals": {"minimal_left_ideals"},
        }
        for item in items:
            keep |= key_map[item]
        _emit(json.dumps({k: v for k, v in obj.items() if k in keep}, indent=2) + "\n", args.output)
    else:
        _emit(_report_text(report, items), args.output)
    return 0


def _cmd_iso(args) -> int:
    left = _resolve_table(args.a)
    right = _resolve_table(args.b)
    bijection = isomorphic(left, right)
    if args.format == "json":
        obj = {
            "isomorphic": bijection is not None,
            "bijection": list(bijection) if bijection is not None else None,
        }
        _emit(json.dumps(obj, indent=2) + "\n", args.output)
    else:
        if bijection is None:
            _emit("FAIL: not isomorphic\n", args.output)
        else:
            _emit("PASS: isomorphic\nbijection: " + " ".join(map(str, bijection)) + "\n", args.output)
    return 0 if bijection is not None else 1


def _cmd_check_l41(args) -> int:
    cert, group = load_certificate(args.cert)
    verdict = check_noncentrality(cert, group)
    if args.format == "json":
        _emit(json.dumps(verdict.to_json(), indent=2) + "\n", args.output)
    else:
        lines = [f"certificate: {'VALID' if verdict.valid else 'INVALID'}"]
        if verdict.failed_condition:
            lines.append(f"failed condition: {verdict.failed_condition}")
        lines.append(f"detail: {verdict.detail}")
        if verdict.left_product is not None and verdict.right_product is not None:
            lines.append(f"system*rival: {format_family(verdict.left_product)}")
            lines.append(f"rival*system: {format_family(verdict.right_product)}")
        if verdict.swapped_difference_ok is not None:
            lines.append(
                f"swapped difference-set variant would also pass: {verdict.swapped_difference_ok}"
            )
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if verdict.valid else 1


def _cmd_check_p45(args) -> int:
    group = parse_spec(args.group)
    support = parse_subset(args.y)
    commuters = parse_subset(args.z)
    y_points = sorted_elements(support)
    if not y_points:
        raise ValueError("--y must be a nonempty subset")
    if not sorted_elements(commuters):
        raise ValueError("--z must be a nonempty subset")
    if len(y_points) > 6:
        raise SizeGuardError("check-p45 sweeps all systems on Y; |Y| is limited to 6")
    checked = 0
    failure = None
    for small in enumerate_mls(len(y_points)):
        lifted_mins = tuple(
            sum(1 << y_points[i] for i in range(len(y_points)) if m >> i & 1)
            for m in small.min_sets
        )
        system = MaximalLinkedSystem(group.n, minimize_antichain(lifted_mins))
        for point in sorted_elements(commuters):
            verdict = check_pointwise_commutation(support, commuters, system, point, group)
            checked += 1
            if not verdict.equal and failure is None:
                failure = (system, point)
    if args.format == "json":
        obj = {
            "checked_pairs": checked,
            "all_commute": failure is None,
        }
        if failure:
            obj["failure"] = {"system": family_to_json(failure[0]), "point": failure[1]}
        _emit(json.dumps(obj, indent=2) + "\n", args.output)
    else:
        if failure is None:
            _emit(f"PASS: all {checked} system/point pairs commute\n", args.output)
        else:
            _emit(
                f"FAIL: {format_family(failure[0])} does not commute with point {failure[1]}\n",
                args.output,
            )
    return 0 if failure is None else 1


def _cmd_verify(args) -> int:
    try:
        report = verify_suite(args.suite, seed=args.seed)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}") from exc
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2) + "\n", args.output)
    else:
        _emit(report.render_text(), args.output)
    return 0 if report.passed else 1


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "hyperspaces": _cmd_hyperspaces,
    "table": _cmd_table,
    "analyze": _cmd_analyze,
    "iso": _cmd_iso,
    "check-l41": _cmd_check_l41,
    "check-p45": _cmd_check_p45,
    "verify": _cmd_verify,
}

_USAGE_ERRORS = (
    SpecParseError,
    ValidationError,
    SizeGuardError,
    NotMonotoneError,
    EmptyFamilyError,
    CertificateShapeError,
    CommutingHypothesisError,
    ValueError,
    OSError,
    json.JSONDecodeError,
)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        print(exc, file=sys.stderr)
        return 2
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
