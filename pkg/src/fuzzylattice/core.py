"""Fuzzy relational frames and the three axiom checks for fuzzy posets.

A frame is a finite labelled carrier ``X`` together with a dense grade matrix
``mu`` where ``mu[i, j]`` is the degree to which ``elements[i]`` precedes
``elements[j]``.  Positivity (``> 0``) is the only thing the order axioms look
at; the magnitude of a positive grade never matters to them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = [
    "DEFAULT_WITNESS_LIMIT",
    "FrameError",
    "FuzzyRelationFrame",
    "Verdict",
    "CheckReport",
    "check_grade",
    "check_reflexive",
    "check_transitive",
    "check_antisymmetric",
    "is_fuzzy_poset",
    "find_intransitive_triple",
]

DEFAULT_WITNESS_LIMIT = 32


class FrameError(ValueError):
    """Raised when a frame cannot be built from the given labels and grades."""


def check_grade(value, where: str = "") -> float:
    """Return ``value`` as a float after checking it lies in [0, 1]."""
    try:
        g = float(value)
    except (TypeError, ValueError):
        raise FrameError(f"grade {value!r}{where} is not a number") from None
    if not 0.0 <= g <= 1.0:  # also rejects nan
        raise FrameError(f"grade {value!r}{where} is outside [0, 1]")
    return g


@dataclass(frozen=True, eq=False)
class FuzzyRelationFrame:
    elements: tuple[str, ...]
    mu: np.ndarray

    def __init__(self, elements: Sequence[str], mu):
        labels = tuple(str(e) for e in elements)
        n = len(labels)
        if n < 1:
            raise FrameError("a frame needs at least one element")
        if len(set(labels)) != n:
            seen, dups = set(), []
            for e in labels:
                if e in seen:
                    dups.append(e)
                seen.add(e)
            raise FrameError(f"duplicate element labels: {sorted(set(dups))}")
        arr = np.array(mu, dtype=float, copy=True)
        if arr.shape != (n, n):
            raise FrameError(f"grade matrix has shape {arr.shape}, expected ({n}, {n})")
        bad = np.argwhere(~((arr >= 0.0) & (arr <= 1.0)))
        if bad.size:
            i, j = bad[0]
            raise FrameError(
                f"grade {arr[i, j]!r} at ({labels[i]}, {labels[j]}) is outside [0, 1]"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "elements", labels)
        object.__setattr__(self, "mu", arr)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzyRelationFrame):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.mu, other.mu)

    def __hash__(self) -> int:
        return hash((self.elements, self.mu.tobytes()))

    def __repr__(self) -> str:
        return f"FuzzyRelationFrame(elements={list(self.elements)!r})"

    @property
    def positive(self) -> np.ndarray:
        """Boolean matrix of strictly positive grades."""
        return self.mu > 0.0

    def index(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def grade(self, x: str, y: str) -> float:
        return float(self.mu[self.index(x), self.index(y)])

    def permuted(self, order: Sequence[int]) -> "FuzzyRelationFrame":
        """Relabel by listing the old indices in their new order."""
        order = np.asarray(order)
        return FuzzyRelationFrame([self.elements[k] for k in order], self.mu[np.ix_(order, order)])


@dataclass(frozen=True)
class Verdict:
    """Outcome of a single law or axiom, with the tuples that break it."""

    name: str
    holds: bool
    witnesses: tuple[tuple, ...] = ()
    truncated: bool = False

    def __post_init__(self):
        if self.holds == bool(self.witnesses):
            raise ValueError("a verdict holds exactly when it has no witnesses")

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self, labels: Sequence[str] | None = None) -> dict:
        def show(w):
            if labels is None:
                return list(w)
            return [labels[v] if isinstance(v, (int, np.integer)) else v for v in w]

        return {
            "name": self.name,
            "holds": self.holds,
            "witnesses": [show(w) for w in self.witnesses],
            "truncated": self.truncated,
        }


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    verdicts: tuple[Verdict, ...] = ()
    notes: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.passed

    def __getitem__(self, name: str) -> Verdict:
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.holds]

    def to_dict(self, labels: Sequence[str] | None = None) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "verdicts": [v.to_dict(labels) for v in self.verdicts],
            "notes": list(self.notes),
        }

    @classmethod
    def combine(cls, name: str, verdicts, notes=()) -> "CheckReport":
        verdicts = tuple(verdicts)
        return cls(name, all(v.holds for v in verdicts), verdicts, tuple(notes))


def _verdict(name: str, witnesses, limit: int) -> Verdict:
    ws = []
    truncated = False
    for w in witnesses:
        if len(ws) >= limit:
            truncated = True
            break
        ws.append(tuple(int(v) for v in w))
    return Verdict(name, not ws, tuple(ws), truncated)


def check_reflexive(frame: FuzzyRelationFrame, limit: int = DEFAULT_WITNESS_LIMIT) -> Verdict:
    bad = np.flatnonzero(np.diag(frame.mu) != 1.0)
    return _verdict("Reflexive", ((i,) for i in bad), limit)


def _transitivity_violations(pos: np.ndarray):
    """Yield (i, j, k) with i->j and j->k positive but i->k zero, in index order."""
    through = (pos.astype(np.int64) @ pos.astype(np.int64)) > 0
    rows = np.flatnonzero((through & ~pos).any(axis=1))
    for i in rows:
        hits = pos[i][:, None] & pos & ~pos[i][None, :]
        for j, k in np.argwhere(hits):
            yield (i, j, k)


def check_transitive(frame: FuzzyRelationFrame, limit: int = DEFAULT_WITNESS_LIMIT) -> Verdict:
    return _verdict("Transitive", _transitivity_violations(frame.positive), limit)


def check_antisymmetric(frame: FuzzyRelationFrame, limit: int = DEFAULT_WITNESS_LIMIT) -> Verdict:
    pos = frame.positive
    both = np.triu(pos & pos.T, k=1)
    return _verdict("AntiSymmetric", np.argwhere(both), limit)


def is_fuzzy_poset(frame: FuzzyRelationFrame, limit: int = DEFAULT_WITNESS_LIMIT) -> CheckReport:
    return CheckReport.combine(
        "FuzzyPoset",
        [
            check_reflexive(frame, limit),
            check_transitive(frame, limit),
            check_antisymmetric(frame, limit),
        ],
    )


def find_intransitive_triple(frame: FuzzyRelationFrame) -> tuple[int, int, int] | None:
    """Locate one failure of transitivity, or ``None`` if the frame is transitive.

    Pairs ``(a, c)`` with ``mu[a, c] == 0`` are scanned in index order; for the
    first pair that is reachable through some ``b``, the highest-indexed such
    ``b`` is reported.
    """
    pos = frame.positive
    through = pos.astype(np.int64) @ pos.astype(np.int64)
    hits = np.argwhere((through > 0) & ~pos)
    if not hits.size:
        return None
    a, c = (int(v) for v in hits[0])
    b = int(np.flatnonzero(pos[a] & pos[:, c])[-1])
    return a, b, c
