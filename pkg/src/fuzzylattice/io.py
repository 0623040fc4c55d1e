"""Reading and writing grade matrices, and tolerant frame comparison.

JSON documents look like ``{"elements": [...], "mu": [[...], ...]}`` with an
optional ``"metadata"`` object.  CSV files put the labels in the header row and
in the first column, with grades in the body; blank cells read as 0.
"""
from __future__ import annotations

import csv
import io as _io
import json
from importlib import resources
from pathlib import Path

import numpy as np

from .core import CheckReport, FrameError, FuzzyRelationFrame, Verdict, check_grade

__all__ = [
    "FormatError",
    "load",
    "loads",
    "dump",
    "dumps",
    "format_grade",
    "fixture",
    "FIXTURES",
    "compare",
]

FIXTURES = ("table1_x1", "table1_x2", "table2", "table3")


class FormatError(FrameError):
    """Malformed matrix document; ``row``/``col`` locate the offending cell when known."""

    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        self.row, self.col = row, col
        where = ""
        if row is not None:
            where = f" (row {row}" + (f", column {col})" if col is not None else ")")
        super().__init__(message + where)


def _infer_format(path: Path, fmt: str | None) -> str:
    if fmt:
        fmt = fmt.lower()
    else:
        fmt = path.suffix.lstrip(".").lower()
    if fmt not in ("json", "csv"):
        raise FormatError(f"cannot tell the format of {path}; use json or csv")
    return fmt


def load(path, format: str | None = None) -> FuzzyRelationFrame:
    path = Path(path)
    fmt = _infer_format(path, format)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from None
    return loads(text, fmt)


def loads(text: str, format: str = "json") -> FuzzyRelationFrame:
    if format == "json":
        return _from_json(text)
    if format == "csv":
        return _from_csv(text)
    raise FormatError(f"unknown format {format!r}")


def _grade(value, row: int, col: int, labels) -> float:
    if isinstance(value, bool):
        raise FormatError(f"grade {value!r} is not a number", row, col)
    try:
        return check_grade(value)
    except FrameError as e:
        cell = f" at ({labels[row]}, {labels[col]})" if row < len(labels) and col < len(labels) else ""
        raise FormatError(f"{e}{cell}", row, col) from None


def _build(labels, rows) -> FuzzyRelationFrame:
    labels = [str(x) for x in labels]
    n = len(labels)
    if n == 0:
        raise FormatError("no elements")
    seen = {}
    for k, e in enumerate(labels):
        if e in seen:
            raise FormatError(f"duplicate label {e!r} at positions {seen[e]} and {k}")
        seen[e] = k
    if len(rows) != n:
        raise FormatError(f"matrix has {len(rows)} rows for {n} elements")
    mu = np.zeros((n, n))
    for i, row in enumerate(rows):
        if len(row) != n:
            raise FormatError(f"row has {len(row)} entries, expected {n}", i)
        for j, v in enumerate(row):
            mu[i, j] = _grade(v, i, j, labels)
    return FuzzyRelationFrame(labels, mu)


def _from_json(text: str) -> FuzzyRelationFrame:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e.msg}", e.lineno) from None
    if not isinstance(doc, dict) or "elements" not in doc or "mu" not in doc:
        raise FormatError('JSON document needs "elements" and "mu"')
    rows = doc["mu"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise FormatError('"mu" must be a list of rows')
    return _build(doc["elements"], rows)


def _from_csv(text: str) -> FuzzyRelationFrame:
    rows = [r for r in csv.reader(_io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise FormatError("empty CSV")
    labels = [c.strip() for c in rows[0][1:]]
    body = []
    for i, r in enumerate(rows[1:]):
        if not r or r[0].strip() != (labels[i] if i < len(labels) else None):
            raise FormatError(f"row label {r[0].strip() if r else ''!r} does not match the header", i)
        cells = []
        for j, c in enumerate(r[1:]):
            c = c.strip()
            if c == "":
                cells.append(0.0)
                continue
            try:
                cells.append(float(c))
            except ValueError:
                raise FormatError(f"cell {c!r} is not a number", i, j) from None
        body.append(cells)
    return _build(labels, body)


def format_grade(g: float) -> str:
    """Shortest decimal text that reads back as the same float; 0 and 1 as integers."""
    g = float(g)
    if g == int(g):
        return str(int(g))
    return repr(g)


def dumps(frame: FuzzyRelationFrame, format: str = "json", metadata: dict | None = None) -> str:
    if format == "json":
        rows = ",\n".join(
            "    [" + ", ".join(format_grade(v) for v in row) + "]" for row in frame.mu
        )
        parts = [f'  "elements": {json.dumps(list(frame.elements))}', f'  "mu": [\n{rows}\n  ]']
        if metadata:
            parts.append(f'  "metadata": {json.dumps(metadata)}')
        return "{\n" + ",\n".join(parts) + "\n}\n"
    if format == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["mu", *frame.elements])
        for e, row in zip(frame.elements, frame.mu):
            w.writerow([e, *(format_grade(v) for v in row)])
        return buf.getvalue()
    raise FormatError(f"unknown format {format!r}")


def dump(frame: FuzzyRelationFrame, path, format: str | None = None, metadata: dict | None = None) -> None:
    path = Path(path)
    Path(path).write_text(dumps(frame, _infer_format(path, format), metadata), encoding="utf-8")


def fixture(name: str) -> FuzzyRelationFrame:
    """One of the bundled reference matrices (see ``FIXTURES``)."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    text = resources.files("fuzzylattice.data").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return loads(text, "json")


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("fuzzylattice.data").joinpath(name)))


def compare(a: FuzzyRelationFrame, b: FuzzyRelationFrame, tol: float = 1e-9) -> CheckReport:
    """Labels must match in order; grades may differ by at most ``tol`` (0 means exact)."""
    if len(a) != len(b):
        raise ValueError(f"frames have {len(a)} and {len(b)} elements")
    label_bad = tuple((k,) for k, (x, y) in enumerate(zip(a.elements, b.elements)) if x != y)
    diff = np.abs(a.mu - b.mu)
    cells = np.argwhere(diff > tol) if tol > 0 else np.argwhere(a.mu != b.mu)
    grade_bad = tuple((int(i), int(j), float(a.mu[i, j]), float(b.mu[i, j])) for i, j in cells[:32])
    return CheckReport.combine(
        "Compare",
        [
            Verdict("Labels", not label_bad, label_bad[:32], len(label_bad) > 32),
            Verdict("Grades", not grade_bad, grade_bad, len(cells) > 32),
        ],
        [f"tolerance {tol}", f"max abs difference {float(diff.max()):.3g}"],
    )
