"""Fuzzy bounds, meets and joins, and certification of bounded fuzzy lattices."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import CheckReport, FuzzyRelationFrame, is_fuzzy_poset

__all__ = [
    "LatticeCertError",
    "InconsistentOrderError",
    "BoundedFuzzyLattice",
    "lower_bounds",
    "upper_bounds",
    "fuzzy_meet",
    "fuzzy_join",
    "certify_lattice",
    "one_element_lattice",
    "lattice_from_order",
]

CERT_KINDS = ("NotPoset", "MissingMeet", "MissingJoin", "NoBottom", "NoTop")


class LatticeCertError(Exception):
    """A frame failed to certify as a bounded fuzzy lattice.

    ``kind`` is one of ``NotPoset``, ``MissingMeet``, ``MissingJoin``,
    ``NoBottom`` or ``NoTop``; ``detail`` holds the witnessing indices.
    For ``NotPoset`` the failing :class:`CheckReport` is kept in ``report``.
    """

    def __init__(self, kind: str, detail: tuple = (), message: str = "", report: CheckReport | None = None):
        if kind not in CERT_KINDS:
            raise ValueError(f"unknown certification failure kind {kind!r}")
        if kind != "NotPoset" and not detail:
            raise ValueError(f"{kind} needs witness indices")
        self.kind = kind
        self.detail = tuple(detail)
        self.report = report
        super().__init__(message or f"{kind}: {self.detail}")


class InconsistentOrderError(RuntimeError):
    """Two distinct elements both satisfy a uniqueness condition.

    Only reachable when anti-symmetry is broken, so it signals a bug upstream.
    """


def _subset(frame: FuzzyRelationFrame, subset: Iterable[int]) -> np.ndarray:
    idx = np.array(sorted(set(int(i) for i in subset)), dtype=int)
    if idx.size == 0:
        raise ValueError("bounds of the empty subset are not supported")
    if idx.min() < 0 or idx.max() >= len(frame):
        raise IndexError(f"subset {idx.tolist()} out of range for {len(frame)} elements")
    return idx


def lower_bounds(frame: FuzzyRelationFrame, subset: Iterable[int]) -> set[int]:
    idx = _subset(frame, subset)
    return set(np.flatnonzero(frame.positive[:, idx].all(axis=1)).tolist())


def upper_bounds(frame: FuzzyRelationFrame, subset: Iterable[int]) -> set[int]:
    idx = _subset(frame, subset)
    return set(np.flatnonzero(frame.positive[idx, :].all(axis=0)).tolist())


def _extremal(frame, candidates: set[int], greatest: bool) -> int | None:
    pos = frame.positive
    cand = sorted(candidates)
    found = [
        x0 for x0 in cand
        if all((pos[x, x0] if greatest else pos[x0, x]) for x in cand)
    ]
    if len(found) > 1:
        raise InconsistentOrderError(f"several extremal bounds {found}; anti-symmetry is broken")
    return found[0] if found else None


def fuzzy_meet(frame: FuzzyRelationFrame, i: int, j: int) -> int:
    """Greatest fuzzy lower bound of ``{i, j}``; raises ``LatticeCertError`` if absent."""
    m = _extremal(frame, lower_bounds(frame, (i, j)), greatest=True)
    if m is None:
        raise LatticeCertError("MissingMeet", (int(i), int(j)))
    return m


def fuzzy_join(frame: FuzzyRelationFrame, i: int, j: int) -> int:
    """Least fuzzy upper bound of ``{i, j}``; raises ``LatticeCertError`` if absent."""
    m = _extremal(frame, upper_bounds(frame, (i, j)), greatest=False)
    if m is None:
        raise LatticeCertError("MissingJoin", (int(i), int(j)))
    return m


@dataclass(frozen=True, eq=False)
class BoundedFuzzyLattice:
    """A frame certified as a bounded fuzzy lattice, with cached operation tables.

    Build these with :func:`certify_lattice`; the constructor does not check
    anything.
    """

    frame: FuzzyRelationFrame
    meet_table: np.ndarray
    join_table: np.ndarray
    bottom: int
    top: int

    def __len__(self) -> int:
        return len(self.frame)

    def __repr__(self) -> str:
        e = self.frame.elements
        return f"BoundedFuzzyLattice({list(e)!r}, bottom={e[self.bottom]!r}, top={e[self.top]!r})"

    @property
    def elements(self) -> tuple[str, ...]:
        return self.frame.elements

    @property
    def mu(self) -> np.ndarray:
        return self.frame.mu

    @property
    def positive(self) -> np.ndarray:
        return self.frame.positive

    def meet(self, i: int, j: int) -> int:
        return int(self.meet_table[i, j])

    def join(self, i: int, j: int) -> int:
        return int(self.join_table[i, j])

    def index(self, label: str) -> int:
        return self.frame.index(label)


def _extremal_table(pos: np.ndarray, greatest: bool) -> tuple[np.ndarray, tuple[int, int] | None]:
    """All pairwise meets (``greatest``) or joins, or the first pair lacking one.

    With transitivity already certified, a lower bound ``x0`` of a pair is its
    greatest lower bound iff its down-set has as many elements as the pair's
    set of lower bounds; each candidate found that way is then re-checked
    directly against the definition.
    """
    n = pos.shape[0]
    rel = pos if greatest else pos.T  # rel[x, y]: x below y (meets) / above y (joins)
    r = rel.astype(np.float64)
    bound_count = np.rint(r.T @ r).astype(np.int64)  # |{x : x~i and x~j}|
    down_size = rel.sum(axis=0)  # |{x : x~x0}|
    table = np.full((n, n), -1, dtype=np.int64)
    for i in range(n):
        cand = rel[:, i][None, :] & rel.T & (down_size[None, :] == bound_count[i][:, None])
        # cand[j, x0]: x0 bounds both i and j and is extremal by count
        counts = cand.sum(axis=1)
        if (counts > 1).any():
            j = int(np.flatnonzero(counts > 1)[0])
            raise InconsistentOrderError(
                f"pair ({i}, {j}) has several extremal bounds {np.flatnonzero(cand[j]).tolist()}"
            )
        missing = np.flatnonzero(counts == 0)
        if missing.size:
            return table, (i, int(missing[0]))
        table[i] = cand.argmax(axis=1)
    # direct re-check: every common bound x of (i, j) relates to the chosen x0
    for i in range(n):
        x0 = table[i]
        common = rel[:, i][:, None] & rel  # common[x, j]
        if (common & ~rel[:, x0]).any():
            raise InconsistentOrderError("count-based extremal bound failed the direct check")
    return table, None


def certify_lattice(frame: FuzzyRelationFrame) -> BoundedFuzzyLattice:
    """Certify ``frame`` as a bounded fuzzy lattice or raise ``LatticeCertError``."""
    report = is_fuzzy_poset(frame)
    if not report.passed:
        raise LatticeCertError("NotPoset", message=f"not a fuzzy poset: {report.failures()}", report=report)
    pos = frame.positive
    meet, missing = _extremal_table(pos, greatest=True)
    if missing:
        raise LatticeCertError("MissingMeet", missing)
    join, missing = _extremal_table(pos, greatest=False)
    if missing:
        raise LatticeCertError("MissingJoin", missing)
    bottoms = np.flatnonzero(pos.all(axis=1))
    tops = np.flatnonzero(pos.all(axis=0))
    if not bottoms.size:
        raise LatticeCertError("NoBottom", (int(np.argmin(pos.sum(axis=1))),))
    if not tops.size:
        raise LatticeCertError("NoTop", (int(np.argmin(pos.sum(axis=0))),))
    assert bottoms.size == 1 and tops.size == 1, "anti-symmetry forces unique bounds"
    for t in (meet, join):
        t.setflags(write=False)
    return BoundedFuzzyLattice(frame, meet, join, int(bottoms[0]), int(tops[0]))


def one_element_lattice(label: str = "x") -> BoundedFuzzyLattice:
    return certify_lattice(FuzzyRelationFrame([label], [[1.0]]))


def lattice_from_order(elements, less_than, grades=None, default: float = 0.5) -> BoundedFuzzyLattice:
    """Fuzzify a crisp order given by covering or comparability pairs and certify it.

    ``less_than`` is an iterable of ``(x, y)`` label pairs with ``x < y``; the
    reflexive-transitive closure is taken.  ``grades`` optionally maps
    ``(x, y)`` to the grade of a comparable pair, else ``default`` is used.
    """
    return certify_lattice(fuzzify(elements, less_than, grades, default))


def fuzzify(elements, less_than, grades=None, default: float = 0.5) -> FuzzyRelationFrame:
    elements = list(elements)
    n = len(elements)
    at = {e: k for k, e in enumerate(elements)}
    le = np.eye(n, dtype=bool)
    for x, y in less_than:
        le[at[x], at[y]] = True
    for k in range(n):  # Warshall closure
        le |= le[:, k][:, None] & le[k][None, :]
    mu = np.where(le, default, 0.0)
    for (x, y), g in (grades or {}).items():
        mu[at[x], at[y]] = g
    np.fill_diagonal(mu, 1.0)
    return FuzzyRelationFrame(elements, mu)
