"""Seeded generators of fuzzy posets and bounded fuzzy lattices.

Every generator picks a crisp skeleton and fuzzifies it: the diagonal is 1,
each strictly comparable pair ``x < y`` gets an independent two-decimal grade
from ``grade_range``, everything else is 0.  Grades along a chain are not made
coherent with each other; only positivity carries order information.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

import numpy as np

from .core import FuzzyRelationFrame
from .order import BoundedFuzzyLattice, certify_lattice

__all__ = [
    "LATTICE_KINDS",
    "POSET_KINDS",
    "GenConfig",
    "skeleton",
    "fuzzify_order",
    "gen_bounded_fuzzy_lattice",
    "gen_fuzzy_poset",
]

LATTICE_KINDS = ("chain", "boolean", "M3", "N5", "grid", "random")
POSET_KINDS = ("dag", "fence", "antichain")
MAX_SIZE = 12


def _default_weights():
    return {k: 1.0 for k in LATTICE_KINDS}


def _default_poset_weights():
    return {"dag": 2.0, "fence": 1.0, "antichain": 1.0}


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    size_range: tuple[int, int] = (2, 6)
    grade_range: tuple[float, float] = (0.01, 0.99)
    catalog_weights: dict = field(default_factory=_default_weights)
    poset_weights: dict = field(default_factory=_default_poset_weights)
    shuffle: bool = True

    def __post_init__(self):
        lo, hi = self.size_range
        if not 1 <= lo <= hi <= MAX_SIZE:
            raise ValueError(f"size_range {self.size_range} must lie within [1, {MAX_SIZE}]")
        glo, ghi = self.grade_range
        if not 0 < glo <= ghi <= 1:
            raise ValueError(f"grade_range {self.grade_range} must satisfy 0 < lo <= hi <= 1")
        for name, weights, kinds in (
            ("catalog_weights", self.catalog_weights, LATTICE_KINDS),
            ("poset_weights", self.poset_weights, POSET_KINDS),
        ):
            unknown = set(weights) - set(kinds)
            if unknown:
                raise ValueError(f"{name} has unknown kinds {sorted(unknown)}")
            if any(w < 0 for w in weights.values()):
                raise ValueError(f"{name} must be non-negative")

    def with_seed(self, seed: int) -> "GenConfig":
        return replace(self, seed=int(seed))

    @classmethod
    def from_dict(cls, d: dict) -> "GenConfig":
        d = dict(d)
        for key in ("size_range", "grade_range"):
            if key in d:
                d[key] = tuple(d[key])
        d.pop("kind", None)
        return cls(**d)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "size_range": list(self.size_range),
            "grade_range": list(self.grade_range),
            "catalog_weights": dict(self.catalog_weights),
            "poset_weights": dict(self.poset_weights),
            "shuffle": self.shuffle,
        }


# crisp skeletons, as reflexive "less or equal" boolean matrices

def _chain(n):
    return np.triu(np.ones((n, n), dtype=bool))


def _subset_order(masks):
    m = np.asarray(masks)
    return (m[:, None] & ~m[None, :]) == 0


def _boolean(k):
    return _subset_order(range(2 ** k))


def _m3():
    # 0 < a, b, c < 1
    le = np.eye(5, dtype=bool)
    le[0, :] = True
    le[:, 4] = True
    return le


def _n5():
    # 0 < a < b < 1, 0 < c < 1
    le = np.eye(5, dtype=bool)
    le[0, :] = True
    le[:, 4] = True
    le[1, 2] = True
    return le


def _grid(k, m):
    a, b = _chain(k), _chain(m)
    return np.kron(a, b).astype(bool)


def _closure(le):
    le = le | np.eye(le.shape[0], dtype=bool)
    for k in range(le.shape[0]):
        le |= le[:, k][:, None] & le[k][None, :]
    return le


def _random_meet_closed(rng, n):
    """Meet-closed subset of a Boolean lattice containing its top, of size ``n``."""
    for _ in range(200):
        k = int(rng.integers(max(1, int(np.ceil(np.log2(n)))), 5))
        full = (1 << k) - 1
        m = int(rng.integers(1, min(n, 1 << k) + 1))
        pick = set(int(v) for v in rng.choice(1 << k, size=m, replace=False))
        pick.add(full)
        changed = True
        while changed:
            changed = False
            for a, b in itertools.combinations(sorted(pick), 2):
                if a & b not in pick:
                    pick.add(a & b)
                    changed = True
        if len(pick) == n:
            return _subset_order(sorted(pick))
    return None


def _random_dag(rng, n):
    p = rng.uniform(0.2, 0.6)
    edges = np.triu(rng.random((n, n)) < p, k=1)
    return _closure(edges)


def _fence(n):
    le = np.eye(n, dtype=bool)
    for i in range(n - 1):
        if i % 2 == 0:
            le[i, i + 1] = True
        else:
            le[i + 1, i] = True
    return le


def _lattice_sizes(kind, lo, hi):
    if kind == "chain":
        return list(range(lo, hi + 1))
    if kind == "boolean":
        return [2 ** k for k in range(4) if lo <= 2 ** k <= hi]
    if kind in ("M3", "N5"):
        return [5] if lo <= 5 <= hi else []
    if kind == "grid":
        return sorted({k * m for k in range(2, 7) for m in range(2, 7) if lo <= k * m <= hi})
    if kind == "random":
        return list(range(max(lo, 1), hi + 1))
    raise ValueError(f"unknown lattice kind {kind!r}")


def skeleton(kind: str, size: int, rng: np.random.Generator | None = None) -> np.ndarray:
    """Crisp order matrix ``le[i, j] == (i <= j)`` of the named shape."""
    rng = rng if rng is not None else np.random.default_rng(0)
    if kind == "chain":
        return _chain(size)
    if kind == "boolean":
        k = size.bit_length() - 1
        if 2 ** k != size:
            raise ValueError(f"Boolean lattices have 2^k elements, not {size}")
        return _boolean(k)
    if kind == "M3" or kind == "N5":
        if size != 5:
            raise ValueError(f"{kind} has 5 elements, not {size}")
        return _m3() if kind == "M3" else _n5()
    if kind == "grid":
        shapes = [(k, size // k) for k in range(2, size) if size % k == 0 and size // k >= 2]
        if not shapes:
            raise ValueError(f"no k x m grid with k, m >= 2 has {size} elements")
        k, m = shapes[int(rng.integers(len(shapes)))]
        return _grid(k, m)
    if kind == "random":
        if size == 1:
            return _chain(1)
        le = _random_meet_closed(rng, size)
        if le is None:
            raise ValueError(f"could not draw a meet-closed lattice of size {size}")
        return le
    if kind == "dag":
        return _random_dag(rng, size)
    if kind == "fence":
        return _fence(size)
    if kind == "antichain":
        return np.eye(size, dtype=bool)
    raise ValueError(f"unknown skeleton kind {kind!r}")


def fuzzify_order(le: np.ndarray, rng: np.random.Generator, grade_range=(0.01, 0.99),
                  shuffle: bool = True, prefix: str = "e") -> FuzzyRelationFrame:
    n = le.shape[0]
    lo = int(np.ceil(round(grade_range[0] * 100, 9)))
    hi = int(np.floor(round(grade_range[1] * 100, 9)))
    if lo > hi:
        raise ValueError(f"grade_range {grade_range} holds no two-decimal grade")
    cents = rng.integers(lo, hi + 1, size=(n, n))
    mu = np.where(le, cents / 100.0, 0.0)
    np.fill_diagonal(mu, 1.0)
    if shuffle and n > 1:
        order = rng.permutation(n)
        mu = mu[np.ix_(order, order)]
    return FuzzyRelationFrame([f"{prefix}{i}" for i in range(n)], mu)


def _pick(rng, weights, kinds, sizes_of):
    options = [(k, sizes_of(k)) for k in kinds if weights.get(k, 0) > 0]
    options = [(k, s) for k, s in options if s]
    if not options:
        raise ValueError("no skeleton kind fits the requested size range")
    w = np.array([weights[k] for k, _ in options], dtype=float)
    k, sizes = options[int(rng.choice(len(options), p=w / w.sum()))]
    return k, int(sizes[int(rng.integers(len(sizes)))])


def gen_bounded_fuzzy_lattice(cfg: GenConfig, rng: np.random.Generator | None = None,
                              kind: str | None = None) -> BoundedFuzzyLattice:
    """Draw one fuzzified lattice.  Pass ``rng`` to continue an existing stream."""
    rng = rng if rng is not None else np.random.default_rng(cfg.seed)
    lo, hi = cfg.size_range
    weights = {kind: 1.0} if kind else cfg.catalog_weights
    if hi == 1:
        kind, size = "chain", 1
    else:
        kind, size = _pick(rng, weights, LATTICE_KINDS, lambda k: _lattice_sizes(k, lo, hi))
    frame = fuzzify_order(skeleton(kind, size, rng), rng, cfg.grade_range, cfg.shuffle)
    return certify_lattice(frame)


def gen_fuzzy_poset(cfg: GenConfig, rng: np.random.Generator | None = None,
                    kind: str | None = None) -> FuzzyRelationFrame:
    rng = rng if rng is not None else np.random.default_rng(cfg.seed)
    lo, hi = cfg.size_range
    weights = {kind: 1.0} if kind else cfg.poset_weights
    kind, size = _pick(rng, weights, POSET_KINDS, lambda k: list(range(lo, hi + 1)))
    return fuzzify_order(skeleton(kind, size, rng), rng, cfg.grade_range, cfg.shuffle)
