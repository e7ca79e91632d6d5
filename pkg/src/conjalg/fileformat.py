"""Algebra and matrix files.

Algebra file (JSON)::

    {
      "name": "complex",
      "dimension": 2,
      "basis": ["1", "i"],
      "constants": [
        {"i": 0, "j": 0, "k": 0, "value": "1"},
        ...
      ]
    }

A record ``{i, j, k, value}`` means ``e_i * e_j`` has coefficient ``value`` on
``e_k``; omitted triples are zero.  Values are rational literals.

Matrix file: one row per line, entries as rational literals separated by
single spaces.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import AlgebraSpec, SpecError
from .exact import RationalMatrix, format_rational, parse_rational


class FileFormatError(ValueError):
    pass


def algebra_from_dict(data) -> AlgebraSpec:
    if not isinstance(data, dict):
        raise FileFormatError("algebra file must hold a JSON object")
    missing = {"name", "dimension", "basis", "constants"} - set(data)
    if missing:
        raise FileFormatError(f"missing field(s): {', '.join(sorted(missing))}")
    name, n, basis, records = data["name"], data["dimension"], data["basis"], data["constants"]
    if not isinstance(name, str):
        raise FileFormatError("name must be a string")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FileFormatError("dimension must be a positive integer")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise FileFormatError("basis must be a list of strings")
    if len(basis) != n:
        raise FileFormatError(f"dimension {n} but {len(basis)} basis names")
    if not isinstance(records, list):
        raise FileFormatError("constants must be a list")
    table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for rec in records:
        if not isinstance(rec, dict) or set(rec) != {"i", "j", "k", "value"}:
            raise FileFormatError(f"constant record must have exactly i, j, k, value: {rec!r}")
        idx = (rec["i"], rec["j"], rec["k"])
        if not all(isinstance(t, int) and not isinstance(t, bool) and 0 <= t < n for t in idx):
            raise FileFormatError(f"index out of range in {rec!r}")
        if idx in seen:
            raise FileFormatError(f"duplicate constant (i={idx[0]},j={idx[1]},k={idx[2]})")
        seen.add(idx)
        value = rec["value"]
        if isinstance(value, int) and not isinstance(value, bool):
            value = str(value)
        try:
            table[idx[0]][idx[1]][idx[2]] = parse_rational(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise FileFormatError(f"bad value in {rec!r}: {exc}") from None
    frozen = tuple(tuple(tuple(cell) for cell in row) for row in table)
    try:
        return AlgebraSpec(name, tuple(basis), frozen)
    except SpecError as exc:
        raise FileFormatError(str(exc)) from None


def algebra_to_dict(spec: AlgebraSpec) -> dict:
    return {
        "name": spec.name,
        "dimension": spec.dim,
        "basis": list(spec.basis_names),
        "constants": [
            {"i": i, "j": j, "k": k, "value": format_rational(c)}
            for i, j, k, c in sorted(spec.nonzero_constants())
        ],
    }


def dumps_algebra(spec: AlgebraSpec) -> str:
    """Deterministic JSON text, one constant record per line."""
    d = algebra_to_dict(spec)
    lines = [
        "{",
        f'  "name": {json.dumps(d["name"])},',
        f'  "dimension": {d["dimension"]},',
        f'  "basis": {json.dumps(d["basis"])},',
        '  "constants": [',
    ]
    recs = [json.dumps(r) for r in d["constants"]]
    lines += [f"    {r}," for r in recs[:-1]] + ([f"    {recs[-1]}"] if recs else [])
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def loads_algebra(text: str) -> AlgebraSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc}") from None
    return algebra_from_dict(data)


def load_algebra(path) -> AlgebraSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc.strerror}") from None
    return loads_algebra(text)


def save_algebra(spec: AlgebraSpec, path) -> None:
    Path(path).write_text(dumps_algebra(spec), encoding="utf-8")


def loads_matrix(text: str) -> RationalMatrix:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            rows.append([parse_rational(tok) for tok in line.split(" ")])
        except (ValueError, ZeroDivisionError) as exc:
            raise FileFormatError(f"line {lineno}: {exc}") from None
    if not rows:
        raise FileFormatError("empty matrix")
    if any(len(r) != len(rows[0]) for r in rows):
        raise FileFormatError("rows have different lengths")
    return RationalMatrix.from_rows(rows)


def dumps_matrix(m: RationalMatrix) -> str:
    return "".join(" ".join(format_rational(x) for x in m.row(r)) + "\n" for r in range(m.rows))


def load_matrix(path) -> RationalMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc.strerror}") from None
    return loads_matrix(text)
