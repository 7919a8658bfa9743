from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Sequence, TextIO

from genstirling.oracle import WeightedOutcome
from genstirling.polycore import MultiPoly
from genstirling.report import IdentityReport


def format_cell(value: Any) -> str:
    """Polynomials in canonical form, integral rationals without a denominator."""
    if isinstance(value, MultiPoly):
        return value.to_str()
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def _json_cell(value: Any) -> Any:
    if isinstance(value, MultiPoly):
        return value.to_json()
    # exact numbers travel as strings so "1/3" survives a round trip
    return format_cell(value)


def render_triangle_text(rows: Sequence[Sequence[Any]]) -> str:
    """One row per line, e.g. ``[0, a + b, 1]``."""
    return "".join("[" + ", ".join(format_cell(v) for v in row) + "]\n" for row in rows)


def render_triangle_csv(rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "k", "value"])
    for n, row in enumerate(rows):
        for k, value in enumerate(row):
            writer.writerow([n, k, format_cell(value)])
    return buffer.getvalue()


def render_triangle_json(rows: Sequence[Sequence[Any]]) -> str:
    payload = [[_json_cell(v) for v in row] for row in rows]
    return json.dumps(payload, sort_keys=True) + "\n"


def render_outcomes_jsonl(outcomes: Iterable[WeightedOutcome]) -> str:
    return "".join(json.dumps(o.to_json(), sort_keys=True) + "\n" for o in outcomes)


def render_reports_json(reports: Iterable[IdentityReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True) + "\n"


RENDERERS = {
    "text": render_triangle_text,
    "csv": render_triangle_csv,
    "json": render_triangle_json,
}


def render_triangle(rows: Sequence[Sequence[Any]], fmt: str) -> str:
    try:
        return RENDERERS[fmt](rows)
    except KeyError:
        raise ValueError(f"Unknown triangle format {fmt!r}") from None


def _write(text: str, out: str | Path | TextIO) -> None:
    if isinstance(out, (str, Path)):
        path = Path(out)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        # newline="" keeps "\n" on every platform
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        out.write(text)


def write_triangle_csv(rows: Sequence[Sequence[Any]], out: str | Path | TextIO) -> None:
    _write(render_triangle_csv(rows), out)


def write_triangle_json(rows: Sequence[Sequence[Any]], out: str | Path | TextIO) -> None:
    _write(render_triangle_json(rows), out)


def write_outcomes_jsonl(outcomes: Iterable[WeightedOutcome], out: str | Path | TextIO) -> None:
    _write(render_outcomes_jsonl(outcomes), out)


def write_reports_json(reports: Iterable[IdentityReport], out: str | Path | TextIO) -> None:
    _write(render_reports_json(reports), out)


def write_text(text: str, out: str | Path | TextIO) -> None:
    _write(text, out)
