"""Command-line interface: analyze, verify, suite, export-dot, catalog.

Exit codes: 0 when every verdict matches, 1 on a computational mismatch or
domain error, 2 on usage or parse errors.  All output is deterministic so
runs can be diffed in CI.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .catalog import FamilySpec
from .errors import (
    AbelianGroupError,
    AxiomViolation,
    CommspecError,
    IndexOutOfRange,
    NotPrimeError,
    ParameterOutOfRange,
    ParseError,
    UnsupportedFamilyError,
)
from .graphs import build_commuting_graph, export_dot
from .groups import FiniteGroup, load_cayley_file
from .predictions import (
    VerificationReport,
    report_json_dict,
    verify_centralizer_corollaries,
    verify_group,
)

_USAGE_ERRORS = (
    ParseError,
    ParameterOutOfRange,
    NotPrimeError,
    UnsupportedFamilyError,
    OSError,
)
_DOMAIN_ERRORS = (AbelianGroupError, AxiomViolation, IndexOutOfRange)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CommspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commspec",
        description="Exact commuting-graph spectra of finite groups.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    analyze = sub.add_parser("analyze", help="full report for one group")
    analyze.add_argument("group", help="group spec, e.g. dicyclic:2 or file:g.cayley")
    analyze.add_argument("--format", choices=("text", "json"), default="text")
    analyze.add_argument("--output", default=None, help="write to file instead of stdout")
    analyze.set_defaults(handler=_run_analyze)

    verify = sub.add_parser("verify", help="pass/fail lines for one group")
    verify.add_argument("group", help="group spec")
    verify.add_argument("--output", default=None)
    verify.set_defaults(handler=_run_verify)

    suite = sub.add_parser("suite", help="run the whole verification grid")
    suite.add_argument("--only", default=None, help="substring filter on name or family")
    suite.add_argument(
        "--extra",
        action="append",
        default=[],
        help="additional group spec to verify (repeatable)",
    )
    suite.add_argument("--format", choices=("text", "json"), default="text")
    suite.add_argument("--output", default=None)
    suite.set_defaults(handler=_run_suite)

    dot = sub.add_parser("export-dot", help="write the commuting graph as DOT")
    dot.add_argument("group", help="group spec")
    dot.add_argument("path", nargs="?", default=None, help="output file (default stdout)")
    dot.set_defaults(handler=_run_export_dot)

    cat = sub.add_parser("catalog", help="list the verification grid")
    cat.add_argument("--output", default=None)
    cat.set_defaults(handler=_run_catalog)

    return parser


def _load_group(spec_text: str) -> tuple[str, FamilySpec | None, FiniteGroup]:
    if spec_text.startswith("file:"):
        path = spec_text[len("file:") :]
        if not path:
            raise ParseError("file: needs a path")
        return path, None, load_cayley_file(path)
    family = catalog.parse_family(spec_text)
    return family.label(), family, catalog.build(family)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def render_json(payload: dict) -> str:
    """Canonical JSON rendering; re-serializing a parse is byte-identical."""
    return json.dumps(payload, indent=2) + "\n"


def _spectrum_text(spectrum) -> str:
    if not spectrum.pairs:
        return "(empty)"
    parts = []
    for value, mult in spectrum.pairs:
        shown = str(value) if value >= 0 else f"({value})"
        parts.append(f"{shown}^{mult}")
    return " ".join(parts)


def _report_text(report: VerificationReport) -> str:
    lines = [
        f"group: {report.name}",
        f"order: {report.order}",
        f"center size: {report.center_size}",
        f"centralizer count: {report.centralizer_count}",
        f"vertices: {report.vertex_count}",
        "component sizes: " + " ".join(str(s) for s in report.component_sizes),
        f"all components complete: {'yes' if report.all_cliques else 'no'}",
        f"spectrum: {_spectrum_text(report.spectrum)}",
        f"integral: {'yes' if report.integral else 'no'}",
    ]
    if not report.integral:
        lines.append(
            "non-integral remainder: "
            + " ".join(str(c) for c in report.analysis.remainder.coeffs)
        )
    if report.checks:
        lines.append("predictions:")
        for check in report.checks:
            pred = check.prediction
            params = ",".join(str(p) for p in pred.params)
            lines.append(
                f"  {pred.source}({params}): "
                f"{_spectrum_text(pred.spectrum)} -> {check.verdict}"
            )
    else:
        lines.append("predictions: none applicable")
    lines.append(f"result: {'ok' if report.all_match() else 'MISMATCH'}")
    return "\n".join(lines) + "\n"


def _run_analyze(args) -> int:
    name, family, group = _load_group(args.group)
    report = verify_group(group, name, family)
    if args.format == "json":
        payload = {"schema": 1}
        payload.update(report_json_dict(report))
        _emit(render_json(payload), args.output)
    else:
        _emit(_report_text(report), args.output)
    return 0 if report.all_match() else 1


def _run_verify(args) -> int:
    name, family, group = _load_group(args.group)
    report = verify_group(group, name, family)
    corollaries = verify_centralizer_corollaries(group)
    lines = [f"group: {name}"]
    ok = report.all_match()
    for check in report.checks:
        pred = check.prediction
        params = ",".join(str(p) for p in pred.params)
        status = "PASS" if check.verdict == "match" else "FAIL"
        lines.append(f"prediction {pred.source}({params}): {status}")
    if not report.checks:
        lines.append("prediction: none applicable")
    for cor in corollaries:
        if not cor.hypothesis_held:
            lines.append(f"corollary {cor.label}: not applicable")
            continue
        status = "PASS" if cor.conclusion_verified else "FAIL"
        if not cor.conclusion_verified:
            ok = False
        lines.append(f"corollary {cor.label}: {status}")
    lines.append(f"integral: {'yes' if report.integral else 'no'}")
    lines.append(f"result: {'ok' if ok else 'FAIL'}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


def _suite_entries(args) -> list[tuple[str, str]]:
    entries = [(name, spec.label()) for name, spec in catalog.list_catalog()]
    if args.only:
        needle = args.only.lower()
        entries = [
            (name, label)
            for name, label in entries
            if needle in name.lower() or needle in label.lower()
        ]
    for extra in args.extra:
        entries.append((extra, extra))
    return entries


def _run_suite(args) -> int:
    results = []
    for name, spec_text in _suite_entries(args):
        try:
            _, family, group = _load_group(spec_text)
            report = verify_group(group, name, family)
            corollaries = verify_centralizer_corollaries(group)
            ok = (
                report.all_match()
                and report.integral
                and all(
                    c.conclusion_verified
                    for c in corollaries
                    if c.hypothesis_held
                )
            )
            results.append((name, ok, report, None))
        except CommspecError as exc:
            results.append((name, False, None, str(exc)))

    passed = sum(1 for _, ok, _, _ in results if ok)
    if args.format == "json":
        payload = {
            "schema": 1,
            "results": [],
            "passed": passed,
            "failed": len(results) - passed,
        }
        for name, ok, report, error in results:
            if report is None:
                payload["results"].append({"group": name, "pass": ok, "error": error})
            else:
                entry = report_json_dict(report, include_graph=False)
                entry["pass"] = ok
                payload["results"].append(entry)
        _emit(render_json(payload), args.output)
    else:
        lines = []
        for name, ok, report, error in results:
            if report is None:
                lines.append(f"FAIL {name}: {error}")
            else:
                lines.append(
                    f"{'PASS' if ok else 'FAIL'} {name}: "
                    f"order={report.order} spectrum={_spectrum_text(report.spectrum)}"
                )
        lines.append(f"{passed}/{len(results)} groups passed")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if passed == len(results) and results else 1


def _run_export_dot(args) -> int:
    name, _, group = _load_group(args.group)
    graph = build_commuting_graph(group)
    _emit(export_dot(graph, group.names), args.path)
    return 0


def _run_catalog(args) -> int:
    lines = []
    for name, spec in catalog.list_catalog():
        lines.append(f"{name:<10} {spec.label():<24} order {spec.order()}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
