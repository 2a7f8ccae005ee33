"""Command-line interface.

Subcommands::

    odgraph degrees  SPEC        per-order degree table
    odgraph size     SPEC        edge count
    odgraph girth    SPEC        girth (0 = acyclic)
    odgraph classify SPEC        star/bipartite/path flags plus order profile
    odgraph export   SPEC        graph as dot, json, or csv
    odgraph verify   FAMILY LO..HI   formula-vs-oracle sweep

Group specs use a small grammar: ``Z<n>``, ``D<n>`` (n >= 3), ``U<n>``
(n >= 2), joined with ``x`` for direct products, e.g. ``Z2xZ3xZ5``.
Letters are case-insensitive and whitespace is ignored.

Exit codes: 0 on success (all sweep instances passing), 1 on runtime
failure or any verification mismatch, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Any, Optional, Sequence

from . import formulas
from .errors import (
    DomainError,
    EnumerationBoundError,
    SpecConstraintError,
    SpecSyntaxError,
)
from .graph import (
    DEFAULT_CHROMATIC_BOUND,
    build_graph,
    class_degrees,
    degree_via_profile,
    oracle_report,
    size_via_profile,
)
from .groups import (
    DEFAULT_ENUMERATION_BOUND,
    Cyclic,
    Dihedral,
    GroupSpec,
    Product,
    Units,
    element_labels,
    format_spec,
    group_order,
    order_profile,
)
from .verify import sweep

__all__ = ["main", "parse_spec"]

_DIGITS = "0123456789"


def parse_spec(text: str) -> GroupSpec:
    """Parse group-spec text such as ``Z6`` or ``Z2xZ3``.

    Raises SpecSyntaxError (with the byte offset) on malformed text and
    SpecConstraintError when a family bound is violated (e.g. ``D2``).
    """

    def byte_offset(j: int) -> int:
        return len(text[:j].encode("utf-8"))

    def skip_ws(j: int) -> int:
        while j < len(text) and text[j].isspace():
            j += 1
        return j

    atoms: list[GroupSpec] = []
    i = 0
    expect_atom = True
    while True:
        i = skip_ws(i)
        if expect_atom:
            if i >= len(text):
                raise SpecSyntaxError(
                    "expected a group atom (Z<n>, D<n>, or U<n>)", byte_offset(i)
                )
            family = text[i].upper()
            if family not in "ZDU":
                raise SpecSyntaxError(
                    f"expected family letter Z, D, or U, found {text[i]!r}",
                    byte_offset(i),
                )
            i = skip_ws(i + 1)
            start = i
            while i < len(text) and text[i] in _DIGITS:
                i += 1
            if start == i:
                raise SpecSyntaxError("expected a decimal number", byte_offset(i))
            value = int(text[start:i])
            try:
                if family == "Z":
                    atoms.append(Cyclic(value))
                elif family == "D":
                    atoms.append(Dihedral(value))
                else:
                    atoms.append(Units(value))
            except DomainError as exc:
                raise SpecConstraintError(str(exc)) from exc
            expect_atom = False
        else:
            if i >= len(text):
                break
            if text[i] in "xX":
                i += 1
                expect_atom = True
            else:
                raise SpecSyntaxError(
                    f"expected 'x' or end of spec, found {text[i]!r}", byte_offset(i)
                )
    if len(atoms) == 1:
        return atoms[0]
    return Product(tuple(atoms))


def _emit(payload: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(payload)


def _json_payload(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def _aligned_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for col, cell in enumerate(row):
            widths[col] = max(widths[col], len(cell))
    lines = []
    for row in [headers, *rows]:
        lines.append("  ".join(cell.rjust(widths[col]) for col, cell in enumerate(row)))
    return "\n".join(lines) + "\n"


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


def _degree_rows(spec: GroupSpec, args) -> list[dict[str, Any]]:
    profile = order_profile(spec, args.enum_bound)
    order = group_order(spec)
    oracle_degrees: Optional[dict[int, int]] = None
    if args.oracle and order > args.enum_bound:
        raise EnumerationBoundError(
            f"group order {order} exceeds the enumeration bound {args.enum_bound}"
        )
    if order <= args.enum_bound:
        oracle_degrees, _ = class_degrees(build_graph(spec, args.enum_bound))
    rows = []
    for m in profile:
        if isinstance(spec, Cyclic):
            formula_value = formulas.deg_zn(spec.n, m)
        elif isinstance(spec, Dihedral):
            formula_value = formulas.deg_dn(spec.n, m)
        else:
            formula_value = degree_via_profile(profile, m)
        rows.append(
            {
                "order": m,
                "count": profile[m],
                "degree_formula": formula_value,
                "degree_oracle": None if oracle_degrees is None else oracle_degrees[m],
            }
        )
    return rows


def _cmd_degrees(args) -> int:
    spec = parse_spec(args.spec)
    text = format_spec(spec)
    rows = _degree_rows(spec, args)
    if args.format == "json":
        payload = _json_payload(
            {"group": text, "order": group_order(spec), "rows": rows}
        )
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["order", "count", "degree_formula", "degree_oracle"])
        for row in rows:
            writer.writerow(
                [
                    row["order"],
                    row["count"],
                    row["degree_formula"],
                    "" if row["degree_oracle"] is None else row["degree_oracle"],
                ]
            )
        payload = buffer.getvalue()
    else:
        table_rows = [
            [
                str(row["order"]),
                str(row["count"]),
                str(row["degree_formula"]),
                "-" if row["degree_oracle"] is None else str(row["degree_oracle"]),
            ]
            for row in rows
        ]
        header = f"group={text} order={group_order(spec)}\n"
        payload = header + _aligned_table(
            ["order", "count", "formula", "oracle"], table_rows
        )
    _emit(payload, args.out)
    return 0


def _scalar_command(args, name: str, value: int) -> int:
    spec_text = format_spec(parse_spec(args.spec))
    if args.format == "json":
        payload = _json_payload({"group": spec_text, name: value})
    else:
        payload = f"{value}\n"
    _emit(payload, args.out)
    return 0


def _cmd_size(args) -> int:
    spec = parse_spec(args.spec)
    if isinstance(spec, Cyclic):
        value = formulas.size_zn(spec.n)
    elif isinstance(spec, Dihedral):
        value = formulas.size_dn(spec.n)
    else:
        value = size_via_profile(order_profile(spec, args.enum_bound))
    return _scalar_command(args, "size", value)


def _cmd_girth(args) -> int:
    spec = parse_spec(args.spec)
    return _scalar_command(args, "girth", formulas.girth_of_group(spec, args.enum_bound))


def _cmd_classify(args) -> int:
    spec = parse_spec(args.spec)
    text = format_spec(spec)
    profile = order_profile(spec, args.enum_bound)
    star = formulas.is_star_group(spec, args.enum_bound)
    bipartite = formulas.is_bipartite_group(spec, args.enum_bound)
    path = formulas.is_path_group(spec)
    if args.format == "json":
        payload = _json_payload(
            {
                "group": text,
                "order": group_order(spec),
                "is_star": star,
                "is_bipartite": bipartite,
                "is_path": path,
                "profile": {str(m): profile[m] for m in profile},
            }
        )
    else:
        profile_text = ",".join(f"{m}:{profile[m]}" for m in profile)
        payload = (
            f"group={text}\n"
            f"order={group_order(spec)}\n"
            f"star={_bool_text(star)}\n"
            f"bipartite={_bool_text(bipartite)}\n"
            f"path={_bool_text(path)}\n"
            f"profile={profile_text}\n"
        )
    _emit(payload, args.out)
    return 0


def _cmd_export(args) -> int:
    spec = parse_spec(args.spec)
    text = format_spec(spec)
    graph = build_graph(spec, args.enum_bound)
    labels = element_labels(spec, args.enum_bound)
    if args.format == "dot":
        lines = [f'graph "OD({text})" {{']
        for v in range(graph.vertex_count):
            lines.append(f'  {v} [label="{labels[v]}:{graph.orders[v]}"];')
        for u, v in graph.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        payload = "\n".join(lines) + "\n"
    elif args.format == "json":
        report = oracle_report(graph, chromatic_bound=args.chromatic_bound)
        payload = _json_payload(
            {
                "group": text,
                "order": graph.vertex_count,
                "vertices": [
                    {"id": v, "label": labels[v], "order": graph.orders[v]}
                    for v in range(graph.vertex_count)
                ],
                "edges": [[u, v] for u, v in graph.edges()],
                "invariants": {
                    "size": report.size,
                    "girth": report.girth,
                    "is_star": report.is_star,
                    "is_bipartite": report.is_bipartite,
                    "is_path": report.is_path,
                    "radius": report.radius,
                    "diameter": report.diameter,
                    "chromatic_number": report.chromatic_number,
                },
            }
        )
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["source", "target", "source_label", "target_label"])
        for u, v in graph.edges():
            writer.writerow([u, v, labels[u], labels[v]])
        payload = buffer.getvalue()
    _emit(payload, args.out)
    return 0


_RANGE_PATTERN = re.compile(r"^(\d+)\.\.(\d+)$")


def _parse_range(text: str) -> tuple[int, int]:
    match = _RANGE_PATTERN.match(text)
    if match is None:
        raise DomainError(f"range must look like LO..HI, got {text!r}")
    return int(match.group(1)), int(match.group(2))


def _cmd_verify(args) -> int:
    lo, hi = _parse_range(args.range)
    report = sweep(
        args.family,
        lo,
        hi,
        enum_bound=args.enum_bound,
        chromatic_bound=args.chromatic_bound,
    )
    if args.format == "json":
        payload = _json_payload(report.to_dict())
    else:
        lines = [report.summary()]
        for result in report.results:
            if not result.passed:
                lines.append(f"FAIL {result.spec_text}: {result.first_mismatch}")
        for key, value in report.notes.items():
            lines.append(f"note {key}={value}")
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.out)
    return 0 if report.passed else 1


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--enum-bound",
        type=int,
        default=DEFAULT_ENUMERATION_BOUND,
        help="largest group order to enumerate explicitly",
    )
    parser.add_argument("--out", default=None, help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="odgraph",
        description="Order-divisor graphs of finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    degrees = sub.add_parser("degrees", help="per-order degree table")
    degrees.add_argument("spec", help="group spec, e.g. Z6 or Z2xZ3")
    degrees.add_argument("--format", choices=("text", "csv", "json"), default="text")
    degrees.add_argument(
        "--oracle",
        action="store_true",
        help="fail instead of omitting the oracle column past the bound",
    )
    _add_common(degrees)
    degrees.set_defaults(handler=_cmd_degrees)

    size = sub.add_parser("size", help="edge count")
    size.add_argument("spec")
    size.add_argument("--format", choices=("text", "json"), default="text")
    _add_common(size)
    size.set_defaults(handler=_cmd_size)

    girth = sub.add_parser("girth", help="girth (0 = acyclic)")
    girth.add_argument("spec")
    girth.add_argument("--format", choices=("text", "json"), default="text")
    _add_common(girth)
    girth.set_defaults(handler=_cmd_girth)

    classify = sub.add_parser("classify", help="star/bipartite/path flags")
    classify.add_argument("spec")
    classify.add_argument("--format", choices=("text", "json"), default="text")
    _add_common(classify)
    classify.set_defaults(handler=_cmd_classify)

    export = sub.add_parser("export", help="write the explicit graph")
    export.add_argument("spec")
    export.add_argument("--format", choices=("dot", "json", "csv"), default="dot")
    export.add_argument(
        "--chromatic-bound",
        type=int,
        default=DEFAULT_CHROMATIC_BOUND,
        help="largest vertex count for exact coloring in json invariants",
    )
    _add_common(export)
    export.set_defaults(handler=_cmd_export)

    verify = sub.add_parser("verify", help="formula-vs-oracle sweep")
    verify.add_argument("family", choices=("cyclic", "dihedral", "units", "product"))
    verify.add_argument("range", help="inclusive parameter range, e.g. 1..200")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument(
        "--chromatic-bound", type=int, default=DEFAULT_CHROMATIC_BOUND
    )
    _add_common(verify)
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (SpecSyntaxError, SpecConstraintError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EnumerationBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
