"""``tetmedial`` command line: batch reports, validation, and self-test.

Exit codes: 0 success, 1 usage or parse failure, 2 unrealizable record
under ``--strict``, 3 self-test failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from dataclasses import dataclass
from typing import IO, Any, Iterable, Sequence

from tetmedial import geometry, oracle
from tetmedial.errors import GeometryError, NonPositiveLength, ParseError
from tetmedial.geometry import OppositePair, SixEdgeLengths, Status

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_STRICT = 2
EXIT_SELFTEST = 3

LENGTH_FIELDS = ("a", "b", "c", "d", "e", "f")
DEFAULT_TOLERANCE = 1e-9


def _echo(lengths: SixEdgeLengths) -> list[float | None]:
    # JSON has no inf/nan; such inputs are echoed as null.
    return [x if math.isfinite(x) else None for x in lengths]


@dataclass(frozen=True)
class InputRecord:
    id: str
    lengths: SixEdgeLengths


@dataclass
class ReportRecord:
    id: str
    lengths: SixEdgeLengths
    status: Status
    volume: float | None = None
    face_areas: dict[str, float] | None = None
    medial_areas: dict[str, float] | None = None
    cosines: dict[str, float] | None = None
    error: str | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "id": self.id,
            "lengths": _echo(self.lengths),
            "status": self.status.value,
        }
        if self.status is not Status.NOT_REALIZABLE:
            out["degenerate"] = self.status is Status.DEGENERATE
            out["volume"] = self.volume
            out["face_areas"] = self.face_areas
            out["medial_areas"] = self.medial_areas
            out["cosines"] = self.cosines
        out["error"] = self.error
        return out


@dataclass
class ValidationRecord:
    id: str
    lengths: SixEdgeLengths
    status: Status
    report: geometry.RealizabilityReport | None = None
    error: str | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "id": self.id,
            "lengths": _echo(self.lengths),
            "status": self.status.value,
        }
        if self.report is not None:
            out["face_ok"] = dict(zip(geometry.FACES, self.report.face_ok))
            out["cm_value"] = self.report.cm_value
            out["volume"] = self.report.volume
        out["error"] = self.error
        return out


def _to_float(text: Any, position: int) -> float:
    if isinstance(text, bool):
        raise ParseError(f"expected a number, got {text!r}", position)
    if isinstance(text, (int, float)):
        return float(text)
    try:
        return float(text.strip())
    except (AttributeError, ValueError):
        raise ParseError(f"expected a decimal number, got {text!r}", position) from None


def _parse_csv(text: str) -> list[InputRecord]:
    rows = [row for row in csv.reader(io.StringIO(text, newline="")) if row]
    if not rows:
        raise ParseError("missing header a,b,c,d,e,f", 0)
    header = [name.strip() for name in rows[0]]
    if header == list(LENGTH_FIELDS):
        has_id = False
    elif header == ["id", *LENGTH_FIELDS]:
        has_id = True
    else:
        raise ParseError(f"header must be a,b,c,d,e,f with an optional leading id, got {','.join(header)}", 0)

    records = []
    width = len(header)
    for index, row in enumerate(rows[1:], start=1):
        if len(row) != width:
            raise ParseError(f"expected {width} fields, got {len(row)}", index)
        ident = row[0].strip() if has_id else ""
        values = row[1:] if has_id else row
        lengths = SixEdgeLengths(*(_to_float(v, index) for v in values))
        records.append(InputRecord(ident or str(index), lengths))
    return records


def _parse_json(text: str) -> list[InputRecord]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, list):
        raise ParseError("top level must be an array of records")
    records = []
    for index, item in enumerate(data, start=1):
        if not isinstance(item, dict):
            raise ParseError("record must be an object", index)
        edges = item.get("edges")
        if not isinstance(edges, list) or len(edges) != 6:
            raise ParseError('"edges" must be a list of six numbers', index)
        ident = item.get("id")
        if ident is not None and not isinstance(ident, str):
            raise ParseError('"id" must be a string', index)
        lengths = SixEdgeLengths(*(_to_float(v, index) for v in edges))
        records.append(InputRecord(ident if ident else str(index), lengths))
    return records


def parse_records(stream: IO[bytes] | IO[str], fmt: str = "csv") -> list[InputRecord]:
    """Read edge-length records from a CSV or JSON stream.

    Non-positive or non-finite lengths parse successfully; they are
    reported per record by :func:`compute_report`.
    """
    raw = stream.read()
    text = raw.decode("utf-8-sig") if isinstance(raw, bytes) else raw
    if fmt == "csv":
        return _parse_csv(text)
    if fmt == "json":
        return _parse_json(text)
    raise ValueError(f"unknown format {fmt!r}")


def _invalid(record: InputRecord, message: str) -> ReportRecord:
    return ReportRecord(record.id, record.lengths, Status.NOT_REALIZABLE, error=message)


def _unrealizable_reason(check: geometry.RealizabilityReport) -> str:
    bad = check.failing_faces
    if len(bad) == 1:
        return f"face {bad[0]} violates the triangle inequality"
    if bad:
        return f"faces {', '.join(bad)} violate the triangle inequality"
    return f"Cayley-Menger determinant {check.cm_value!r} is negative"


def compute_report(
    record: InputRecord,
    tol: float = DEFAULT_TOLERANCE,
    pairs: Sequence[OppositePair] = tuple(OppositePair),
) -> ReportRecord:
    """Full mensuration report for one record; never raises on bad geometry."""
    lengths = record.lengths
    try:
        check = geometry.validate_edge_lengths(lengths, tol)
    except NonPositiveLength as exc:
        return _invalid(record, str(exc))
    if check.status is Status.NOT_REALIZABLE:
        return _invalid(record, _unrealizable_reason(check))

    try:
        return ReportRecord(
            id=record.id,
            lengths=lengths,
            status=check.status,
            volume=check.volume,
            face_areas=geometry.face_areas(lengths, tol),
            medial_areas={p.value: geometry.medial_area(lengths, p, tol) for p in pairs},
            cosines={p.value: geometry.opposite_edge_cosine(lengths, p, tol) for p in pairs},
        )
    except GeometryError as exc:
        return _invalid(record, str(exc))


def validate_record(record: InputRecord, tol: float = DEFAULT_TOLERANCE) -> ValidationRecord:
    try:
        check = geometry.validate_edge_lengths(record.lengths, tol)
    except NonPositiveLength as exc:
        return ValidationRecord(record.id, record.lengths, Status.NOT_REALIZABLE, error=str(exc))
    error = _unrealizable_reason(check) if check.status is Status.NOT_REALIZABLE else None
    return ValidationRecord(record.id, record.lengths, check.status, check, error)


def dumps(obj: Any) -> str:
    """Canonical JSON: fixed key order, shortest round-trip floats."""
    return json.dumps(obj, separators=(",", ":"), allow_nan=False)


def write_lines(out: IO[str], objects: Iterable[dict[str, Any]]) -> None:
    for obj in objects:
        out.write(dumps(obj))
        out.write("\n")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tetmedial", description="Medial parallelogram areas of tetrahedra from edge lengths.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_text in (
        ("compute", "emit a mensuration report per record"),
        ("validate", "emit a realizability report per record"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--input", default="-", help="input file, or - for stdin")
        cmd.add_argument("--format", choices=("csv", "json"), default="csv")
        cmd.add_argument("--output", default="-", help="output file, or - for stdout")
        cmd.add_argument("--pair", choices=("de", "ac", "bf", "all"), default="all")
        cmd.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
        cmd.add_argument("--strict", action="store_true", help="exit 2 if any record is not realizable")

    st = sub.add_parser("selftest", help="compare the closed form against the coordinate oracle")
    st.add_argument("--seed", type=int, default=42)
    st.add_argument("--count", type=_positive_int, default=10_000)
    st.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    st.add_argument("--output", default="-")
    return parser


def _read_input(path: str, fmt: str) -> list[InputRecord]:
    if path == "-":
        return parse_records(sys.stdin.buffer, fmt)
    with open(path, "rb") as stream:
        return parse_records(stream, fmt)


def _open_out(path: str) -> IO[str]:
    return sys.stdout if path == "-" else open(path, "w", encoding="utf-8", newline="\n")


def selftest(seed: int, n: int, tol: float, out: IO[str]) -> int:
    summary = oracle.run_sweep(seed, n, 1.0, tol)
    out.write(dumps(summary.to_dict()))
    out.write("\n")
    return EXIT_OK if not summary.failures else EXIT_SELFTEST


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "selftest":
        out = _open_out(args.output)
        try:
            return selftest(args.seed, args.count, args.tolerance, out)
        finally:
            if out is not sys.stdout:
                out.close()

    try:
        records = _read_input(args.input, args.format)
    except (OSError, ParseError) as exc:
        print(f"tetmedial: {exc}", file=sys.stderr)
        return EXIT_USAGE

    pairs = tuple(OppositePair) if args.pair == "all" else (OppositePair(args.pair),)
    if args.command == "compute":
        results = [compute_report(rec, args.tolerance, pairs) for rec in records]
    else:
        results = [validate_record(rec, args.tolerance) for rec in records]

    out = _open_out(args.output)
    try:
        write_lines(out, (r.to_dict() for r in results))
    finally:
        if out is not sys.stdout:
            out.close()

    unrealizable = sum(r.status is Status.NOT_REALIZABLE for r in results)
    if unrealizable:
        log.info("%d of %d records not realizable", unrealizable, len(results))
    if args.strict and unrealizable:
        return EXIT_STRICT
    return EXIT_OK


def run() -> None:
    sys.exit(main())
