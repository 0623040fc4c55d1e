"""Direct products of bounded fuzzy lattices realized by a t-norm.

The product grade between two tuples is the n-ary t-norm of the coordinate
grades.  Carrier tuples are listed row-major with the first factor varying
slowest, so two 4-element factors ``w1..z1`` and ``w2..z2`` give
``w1w2, w1x2, ..., z1z2``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import FuzzyRelationFrame, find_intransitive_triple
from .order import BoundedFuzzyLattice, certify_lattice
from .tnorm import TNorm, ZeroDivisorStatus, builtin, extend_n

__all__ = [
    "MAX_PRODUCT_SIZE",
    "ProductSizeError",
    "CoordinatewiseMismatch",
    "ProductFrame",
    "relation_product",
    "direct_product",
    "certify_product",
    "witness_intransitivity",
]

MAX_PRODUCT_SIZE = 4096


class ProductSizeError(ValueError):
    pass


class CoordinatewiseMismatch(AssertionError):
    """Order-derived meets, joins or bounds of a product differ from the coordinatewise ones."""

    def __init__(self, what: str, detail, premise_holds: bool):
        self.what = what
        self.detail = detail
        self.premise_holds = premise_holds
        lead = "theorem violation" if premise_holds else "coordinatewise tables are not order-theoretic"
        super().__init__(f"{lead}: {what} differs at {detail}")


@dataclass(frozen=True, eq=False)
class ProductFrame:
    factors: tuple[BoundedFuzzyLattice, ...]
    tnorm: TNorm
    frame: FuzzyRelationFrame
    index_map: tuple[tuple[int, ...], ...]
    separator: str = ""
    notes: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.frame)

    def index_of(self, coords: Sequence[int]) -> int:
        """Product index of a tuple of factor indices (row-major, first factor slowest)."""
        k = 0
        for c, f in zip(coords, self.factors):
            k = k * len(f) + int(c)
        return k

    def declared_meet_table(self) -> np.ndarray:
        return self._declared("meet_table")

    def declared_join_table(self) -> np.ndarray:
        return self._declared("join_table")

    def declared_bottom(self) -> int:
        return self.index_of([f.bottom for f in self.factors])

    def declared_top(self) -> int:
        return self.index_of([f.top for f in self.factors])

    def _declared(self, attr: str) -> np.ndarray:
        coords = np.array(self.index_map, dtype=np.int64)  # (N, k)
        out = np.zeros((len(self), len(self)), dtype=np.int64)
        for f, col in zip(self.factors, coords.T):
            out = out * len(f) + getattr(f, attr)[np.ix_(col, col)]
        return out


def _labels(frames, sep: str) -> list[str]:
    return [sep.join(parts) for parts in itertools.product(*(f.elements for f in frames))]


def relation_product(frames: Sequence, t: TNorm | str, separator: str = ""):
    """Grade matrix of the t-norm product of arbitrary frames.

    Returns ``(frame, index_map, separator, notes)``.  No order properties are
    required of the inputs; :func:`direct_product` wraps this for lattices.
    """
    frames = [f.frame if hasattr(f, "frame") else f for f in frames]
    if not frames:
        raise ValueError("a direct product needs at least one factor")
    if isinstance(t, str):
        t = builtin(t)
    notes = []
    labels = _labels(frames, separator)
    if len(set(labels)) != len(labels):
        notes.append(f"separator {separator!r} made labels collide; using ','")
        separator = ","
        labels = _labels(frames, separator)
    index_map = tuple(itertools.product(*(range(len(f)) for f in frames)))
    coords = np.array(index_map, dtype=np.int64).reshape(len(index_map), len(frames))
    grades = [f.mu[np.ix_(col, col)] for f, col in zip(frames, coords.T)]
    frame = FuzzyRelationFrame(labels, extend_n(t, grades))
    return frame, index_map, separator, tuple(notes)


def direct_product(
    factors: Sequence[BoundedFuzzyLattice],
    t: TNorm | str,
    separator: str = "",
    max_size: int = MAX_PRODUCT_SIZE,
) -> ProductFrame:
    """Build the t-norm-realized direct product of certified factors.

    Labels are factor labels joined by ``separator``; if that makes two labels
    collide the builder switches to ``","`` and records a note.
    """
    factors = tuple(factors)
    if not factors:
        raise ValueError("a direct product needs at least one factor")
    for f in factors:
        if not isinstance(f, BoundedFuzzyLattice):
            raise TypeError(f"factors must be certified lattices, got {type(f).__name__}")
    if isinstance(t, str):
        t = builtin(t)
    size = math.prod(len(f) for f in factors)
    if size > max_size:
        raise ProductSizeError(f"product carrier has {size} elements, above the cap of {max_size}")

    frame, index_map, separator, notes = relation_product(factors, t, separator)
    return ProductFrame(factors, t, frame, index_map, separator, notes)


def certify_product(p: ProductFrame) -> BoundedFuzzyLattice:
    """Certify the product frame and cross-check it against the coordinatewise structure.

    Meets and joins are re-derived from the product grades by bound search and
    compared with the coordinatewise tables, as are bottom and top.
    """
    lat = certify_lattice(p.frame)
    premise = p.tnorm.status is ZeroDivisorStatus.NO_ZERO_DIVISORS
    for what, derived, declared in (
        ("meet", lat.meet_table, p.declared_meet_table()),
        ("join", lat.join_table, p.declared_join_table()),
    ):
        diff = np.argwhere(derived != declared)
        if diff.size:
            raise CoordinatewiseMismatch(what, tuple(int(v) for v in diff[0]), premise)
    if lat.bottom != p.declared_bottom():
        raise CoordinatewiseMismatch("bottom", (lat.bottom, p.declared_bottom()), premise)
    if lat.top != p.declared_top():
        raise CoordinatewiseMismatch("top", (lat.top, p.declared_top()), premise)
    return lat


def witness_intransitivity(p: ProductFrame | FuzzyRelationFrame) -> tuple[int, int, int] | None:
    frame = p.frame if isinstance(p, ProductFrame) else p
    return find_intransitive_triple(frame)
