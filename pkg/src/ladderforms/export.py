"""Serialisation of exact results.

Rationals are always written as strings (``"3/10"``, ``"-1/2"``, ``"5"``),
never as floats, so the output can be read back without loss.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import FamilySpec
from .linalg import RationalMatrix

__all__ = [
    "format_rational",
    "parse_rational",
    "matrix_payload",
    "matrix_from_payload",
    "dump_json",
    "matrix_to_csv",
    "table_to_csv",
]


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def matrix_payload(spec: FamilySpec | None, kind: str, m: RationalMatrix) -> dict:
    return {
        "spec": spec.to_dict() if spec is not None else None,
        "kind": kind,
        "rows": [str(r) for r in m.row_labels],
        "cols": [str(c) for c in m.col_labels],
        "entries": [[format_rational(x) for x in row] for row in m.entries],
    }


def matrix_from_payload(payload: dict) -> RationalMatrix:
    return RationalMatrix(
        [[parse_rational(x) for x in row] for row in payload["entries"]],
        payload["rows"],
        payload["cols"],
    )


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def matrix_to_csv(m: RationalMatrix, labels: bool = True) -> str:
    """Header row of column labels and a leading row-label column, unless ``labels`` is off."""
    body = [[format_rational(x) for x in row] for row in m.entries]
    if not labels:
        return _csv_text(body)
    rows = [[""] + [str(c) for c in m.col_labels]]
    rows += [[str(lab)] + row for lab, row in zip(m.row_labels, body)]
    return _csv_text(rows)


def table_to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    return _csv_text([list(header)] + [[str(c) for c in r] for r in rows])
