"""Sequence ingestion and JSON report rendering.

Four source formats are understood:

    inline  comma-separated rationals:      1,3/2,-2
    csv     one rational per line, or a single comma-separated row
    json    array of integers / "p/q" strings
    bfile   OEIS-style lines "index value" with contiguous ascending
            indices ("#" comments and blank lines ignored); re-based to 1

Every user-facing rational is rendered as "p/q" (plain "p" for integers),
never as a decimal.  Reports share the versioned schema tag "seqcalc/1" and
a stable field order, so identical inputs serialize to identical bytes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .analysis import ConvexityReport, MonotonicityReport
from .errors import FormatError, NonContiguousIndex
from .lagrange import Polynomial
from .operators import OperatorPoly
from .sequences import FiniteSeq
from .verify import CheckReport

SCHEMA = "seqcalc/1"

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

FORMATS = ("inline", "csv", "json", "bfile")


@dataclass(frozen=True)
class SequenceDocument:
    source_format: str
    values: FiniteSeq
    origin_index: int = 1


def format_rational(value: Fraction) -> str:
    return str(value)


def parse_rational(text: str, line: int | None = None) -> Fraction:
    token = text.strip()
    if not _RATIONAL_RE.match(token):
        raise FormatError(f"not a rational literal: {token!r}", line)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise FormatError(f"zero denominator in {token!r}", line) from None


def parse_inline(text: str) -> FiniteSeq:
    body = text.strip()
    if not body:
        return FiniteSeq()
    return FiniteSeq(parse_rational(piece) for piece in body.split(","))


def parse_csv(text: str) -> FiniteSeq:
    rows = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not rows:
        return FiniteSeq()
    if len(rows) == 1 and "," in rows[0][1]:
        number, line = rows[0]
        return FiniteSeq(parse_rational(piece, number) for piece in line.split(","))
    values = []
    for number, line in rows:
        if "," in line:
            raise FormatError("unexpected comma in multi-row csv", number)
        values.append(parse_rational(line, number))
    return FiniteSeq(values)


def parse_json(text: str) -> FiniteSeq:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid json: {exc.msg}", exc.lineno) from None
    if not isinstance(data, list):
        raise FormatError("json sequence must be an array")
    values = []
    for item in data:
        if isinstance(item, bool) or not isinstance(item, (int, str)):
            raise FormatError(f"json entries must be integers or 'p/q' strings, got {item!r}")
        values.append(parse_rational(str(item)))
    return FiniteSeq(values)


def parse_bfile(text: str) -> FiniteSeq:
    values = []
    expected = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"expected 'index value', got {line!r}", number)
        try:
            index = int(fields[0])
        except ValueError:
            raise FormatError(f"bad index {fields[0]!r}", number) from None
        if expected is not None and index != expected:
            raise NonContiguousIndex(expected, index, number)
        expected = index + 1
        values.append(parse_rational(fields[1], number))
    return FiniteSeq(values)


_PARSERS = {
    "inline": parse_inline,
    "csv": parse_csv,
    "json": parse_json,
    "bfile": parse_bfile,
}


def parse_sequence_text(text: str, source_format: str) -> SequenceDocument:
    try:
        parser = _PARSERS[source_format]
    except KeyError:
        raise FormatError(
            f"unknown sequence format {source_format!r}; known: {', '.join(FORMATS)}"
        ) from None
    return SequenceDocument(source_format, parser(text))


def load_sequence(spec_text: str) -> SequenceDocument:
    """Resolve a --seq argument: inline:1,2,3 | csv:path | json:path | bfile:path."""
    tag, _, rest = spec_text.partition(":")
    if tag not in FORMATS:
        raise FormatError(f"sequence spec must start with one of {FORMATS}, got {tag!r}")
    if tag == "inline":
        return parse_sequence_text(rest, "inline")
    try:
        text = Path(rest).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {rest!r}: {exc.strerror}") from None
    return parse_sequence_text(text, tag)


def render_sequence(seq: FiniteSeq, target_format: str) -> str:
    """Inverse of parse_sequence_text for every supported format."""
    if target_format == "inline":
        return ",".join(format_rational(v) for v in seq)
    if target_format == "csv":
        return "\n".join(format_rational(v) for v in seq) + ("\n" if len(seq) else "")
    if target_format == "json":
        payload = [v.numerator if v.denominator == 1 else format_rational(v) for v in seq]
        return json.dumps(payload)
    if target_format == "bfile":
        lines = [f"{i} {format_rational(v)}" for i, v in enumerate(seq, start=1)]
        return "\n".join(lines) + ("\n" if lines else "")
    raise FormatError(f"unknown sequence format {target_format!r}")


# ---------------------------------------------------------------------------
# JSON reports


def sequence_payload(seq: FiniteSeq) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "sequence",
        "values": [format_rational(v) for v in seq],
    }


def rational_payload(value: Fraction) -> dict:
    return {"schema": SCHEMA, "kind": "rational", "value": format_rational(value)}


def operator_payload(poly: OperatorPoly) -> dict:
    ordered = sorted(poly.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1]))
    return {
        "schema": SCHEMA,
        "kind": "operator",
        "text": poly.render(),
        "terms": [
            {"top_power": a, "bottom_power": b, "coeff": format_rational(c)}
            for (a, b), c in ordered
        ],
    }


def polynomial_payload(poly: Polynomial) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "polynomial",
        "text": poly.render(),
        "degree": poly.degree,
        "coefficients": [format_rational(c) for c in poly.coefficients],
    }


def monotonicity_payload(report: MonotonicityReport) -> dict:
    return {
        "strictly_increasing": report.strictly_increasing,
        "strictly_decreasing": report.strictly_decreasing,
        "increasing": report.increasing,
        "decreasing": report.decreasing,
        "constant": report.constant,
    }


def convexity_payload(report: ConvexityReport) -> dict:
    return {
        "convex": report.convex,
        "concave": report.concave,
        "strictly_convex": report.strictly_convex,
        "strictly_concave": report.strictly_concave,
        "continuously_convex": report.continuously_convex,
        "continuously_concave": report.continuously_concave,
        "second_derivative": [format_rational(v) for v in report.second_derivative],
    }


def classification_payload(
    monotonicity: MonotonicityReport, convexity: ConvexityReport | None
) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "classification",
        "monotonicity": monotonicity_payload(monotonicity),
        "convexity": convexity_payload(convexity) if convexity is not None else None,
    }


def check_payload(report: CheckReport) -> dict:
    return {
        "name": report.name,
        "trials_run": report.trials_run,
        "failures": list(report.failures),
        "passed": report.passed,
    }


def verification_payload(reports: list[CheckReport]) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "verification",
        "reports": [check_payload(r) for r in reports],
        "all_passed": all(r.passed for r in reports),
    }


def render_json(payload: dict) -> str:
    return json.dumps(payload, separators=(",", ":"))


def render_report(result) -> str:
    """Serialize any module output to its schema-tagged JSON text."""
    if isinstance(result, FiniteSeq):
        return render_json(sequence_payload(result))
    if isinstance(result, Fraction):
        return render_json(rational_payload(result))
    if isinstance(result, OperatorPoly):
        return render_json(operator_payload(result))
    if isinstance(result, Polynomial):
        return render_json(polynomial_payload(result))
    if isinstance(result, CheckReport):
        return render_json(verification_payload([result]))
    if isinstance(result, list) and all(isinstance(r, CheckReport) for r in result):
        return render_json(verification_payload(result))
    if isinstance(result, MonotonicityReport):
        return render_json({"schema": SCHEMA, "kind": "monotonicity", **monotonicity_payload(result)})
    if isinstance(result, ConvexityReport):
        return render_json({"schema": SCHEMA, "kind": "convexity", **convexity_payload(result)})
    raise TypeError(f"no JSON rendering for {type(result).__name__}")
