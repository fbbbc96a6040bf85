"""Text formats for Betti diagrams: JSON, CSV and a human-readable table."""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction

from .diagram import BettiDiagram

SCHEMA_VERSION = "1"
FORMATS = ("json", "csv", "table")

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class FormatError(ValueError):
    pass


def format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL.match(text.strip()):
        raise FormatError(f"not an exact rational: {text!r}")
    return Fraction(text.strip())


def _build(cells) -> BettiDiagram:
    seen = {}
    for p, q, value in cells:
        if p < 0:
            raise FormatError(f"negative column index {p}")
        if (p, q) in seen:
            raise FormatError(f"duplicate cell ({p}, {q})")
        if not value:
            raise FormatError(f"zero value stored at ({p}, {q})")
        seen[(p, q)] = value
    return BettiDiagram(seen)


def _parse_int(text, what: str) -> int:
    if isinstance(text, bool):
        raise FormatError(f"{what} must be an integer, got {text!r}")
    if isinstance(text, int):
        return text
    try:
        return int(str(text).strip())
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {text!r}") from None


def parse_diagram(text: str | bytes, format: str) -> BettiDiagram:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if format == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"malformed JSON: {exc}") from None
        if not isinstance(doc, dict) or not isinstance(doc.get("entries"), list):
            raise FormatError("expected an object with an 'entries' list")
        version = doc.get("schema_version")
        if version != SCHEMA_VERSION:
            raise FormatError(f"unsupported schema_version {version!r}")
        cells = []
        for item in doc["entries"]:
            if not isinstance(item, dict) or not {"p", "q", "value"} <= item.keys():
                raise FormatError(f"malformed entry {item!r}")
            cells.append((_parse_int(item["p"], "p"), _parse_int(item["q"], "q"),
                          parse_rational(item["value"])))
        return _build(cells)
    if format == "csv":
        cells = []
        for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
            if not row or all(not c.strip() for c in row):
                continue
            if [c.strip() for c in row] == ["p", "q", "value"]:
                continue
            if len(row) != 3:
                raise FormatError(f"line {lineno}: expected p,q,value")
            cells.append((_parse_int(row[0], "p"), _parse_int(row[1], "q"), parse_rational(row[2])))
        return _build(cells)
    raise FormatError(f"cannot parse format {format!r}")


def render_diagram(d: BettiDiagram, format: str) -> str:
    if format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "entries": [{"p": p, "q": q, "value": format_rational(v)} for (p, q), v in d.items()],
        }
        return json.dumps(doc, indent=2) + "\n"
    if format == "csv":
        lines = ["p,q,value"] + [f"{p},{q},{format_rational(v)}" for (p, q), v in d.items()]
        return "\n".join(lines) + "\n"
    if format == "table":
        return render_table(d)
    raise FormatError(f"unknown format {format!r}")


def render_table(d: BettiDiagram) -> str:
    """Rows ``q`` downward, columns ``p`` across, ``.`` for zero."""
    if d.is_empty():
        return ""
    columns = range(0, max(d.columns()) + 1)
    rows = range(min(d.rows()), max(d.rows()) + 1)
    cells = [[format_rational(d[(p, q)]) if (p, q) in d else "." for p in columns] for q in rows]
    width = max(len(c) for row in cells for c in row)
    width = max(width, len(str(columns[-1])))
    labels = [f"{q}:" for q in rows]
    lw = max(len(s) for s in labels)
    out = [" " * lw + "".join(f" {p:>{width}}" for p in columns)]
    for label, row in zip(labels, cells):
        out.append(f"{label:>{lw}}" + "".join(f" {c:>{width}}" for c in row))
    return "\n".join(out) + "\n"
