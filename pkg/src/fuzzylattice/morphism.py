"""Maps between bounded fuzzy lattices: monotonicity, bounded homomorphisms,
isomorphism search and a finite check for terminal objects.

Homomorphism conditions are equalities of elements looked up in the meet and
join tables.  Grade magnitudes are never compared, so two lattices with the
same crisp order but different positive grades are isomorphic here.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .core import Verdict
from .order import BoundedFuzzyLattice

__all__ = [
    "ISO_SIZE_CAP",
    "HOM_ENUM_CAP",
    "LatticeMap",
    "compose",
    "is_monotone",
    "is_bounded_homomorphism",
    "find_isomorphism",
    "enumerate_homomorphisms",
    "check_terminal",
]

ISO_SIZE_CAP = 8
HOM_ENUM_CAP = 10**6


@dataclass(frozen=True, eq=False)
class LatticeMap:
    source: BoundedFuzzyLattice
    target: BoundedFuzzyLattice
    assignment: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(v) for v in self.assignment)
        if len(a) != len(self.source):
            raise ValueError(f"assignment covers {len(a)} of {len(self.source)} source elements")
        if any(not 0 <= v < len(self.target) for v in a):
            raise ValueError("assignment points outside the target carrier")
        object.__setattr__(self, "assignment", a)

    @classmethod
    def from_labels(cls, source, target, mapping: Mapping[str, str]) -> "LatticeMap":
        missing = [e for e in source.elements if e not in mapping]
        if missing:
            raise ValueError(f"map leaves {missing} unassigned")
        extra = set(mapping) - set(source.elements)
        if extra:
            raise ValueError(f"map mentions unknown source elements {sorted(extra)}")
        return cls(source, target, tuple(target.index(mapping[e]) for e in source.elements))

    @classmethod
    def identity(cls, lat: BoundedFuzzyLattice) -> "LatticeMap":
        return cls(lat, lat, tuple(range(len(lat))))

    def __call__(self, i: int) -> int:
        return self.assignment[i]

    def as_labels(self) -> dict[str, str]:
        t = self.target.elements
        return {e: t[v] for e, v in zip(self.source.elements, self.assignment)}


def compose(f: LatticeMap, g: LatticeMap) -> LatticeMap:
    """``g`` after ``f``."""
    if f.target is not g.source:
        raise ValueError("maps do not compose: f.target is not g.source")
    return LatticeMap(f.source, g.target, tuple(g.assignment[v] for v in f.assignment))


def is_monotone(m: LatticeMap, limit: int = 32) -> Verdict:
    phi = np.asarray(m.assignment)
    bad = m.source.positive & ~m.target.positive[np.ix_(phi, phi)]
    ws = [tuple(int(v) for v in w) for w in np.argwhere(bad)]
    return Verdict("Monotone", not ws, tuple(ws[:limit]), len(ws) > limit)


def _hom_failures(src: BoundedFuzzyLattice, dst: BoundedFuzzyLattice, phi: np.ndarray) -> Iterator[tuple]:
    meet_ok = phi[src.meet_table] == dst.meet_table[np.ix_(phi, phi)]
    join_ok = phi[src.join_table] == dst.join_table[np.ix_(phi, phi)]
    for x, y in np.argwhere(~meet_ok):
        yield ("meet", int(x), int(y))
    for x, y in np.argwhere(~join_ok):
        yield ("join", int(x), int(y))
    if phi[src.bottom] != dst.bottom:
        yield ("bottom", src.bottom)
    if phi[src.top] != dst.top:
        yield ("top", src.top)


def is_bounded_homomorphism(m: LatticeMap, limit: int = 32) -> Verdict:
    ws = list(itertools.islice(_hom_failures(m.source, m.target, np.asarray(m.assignment)), limit + 1))
    return Verdict("BoundedHomomorphism", not ws, tuple(ws[:limit]), len(ws) > limit)


def _is_hom(src, dst, phi) -> bool:
    return next(_hom_failures(src, dst, phi), None) is None


def _signature(lat: BoundedFuzzyLattice) -> list[tuple[int, int]]:
    p = lat.positive
    return list(zip(p.sum(axis=0).tolist(), p.sum(axis=1).tolist()))  # (down-set, up-set) sizes


def find_isomorphism(a: BoundedFuzzyLattice, b: BoundedFuzzyLattice, cap: int = ISO_SIZE_CAP) -> LatticeMap | None:
    """First bijective bounded homomorphism ``a -> b`` in enumeration order, if any.

    Source elements are assigned in index order, each to the smallest unused
    target element with the same down-set and up-set sizes.
    """
    if len(a) != len(b):
        return None
    if len(a) > cap:
        raise ValueError(f"isomorphism search limited to {cap} elements; raise cap explicitly")
    sa, sb = _signature(a), _signature(b)
    if sorted(sa) != sorted(sb):
        return None
    n = len(a)
    options = [[v for v in range(n) if sb[v] == sa[u]] for u in range(n)]
    options[a.bottom] = [b.bottom] if b.bottom in options[a.bottom] else []
    options[a.top] = [b.top] if b.top in options[a.top] else []
    phi = [-1] * n
    used = [False] * n

    def extend(u: int):
        if u == n:
            arr = np.array(phi)
            return arr if _is_hom(a, b, arr) else None
        for v in options[u]:
            if not used[v]:
                phi[u], used[v] = v, True
                found = extend(u + 1)
                if found is not None:
                    return found
                used[v] = False
        phi[u] = -1
        return None

    found = extend(0)
    return None if found is None else LatticeMap(a, b, tuple(found.tolist()))


def enumerate_homomorphisms(probe: BoundedFuzzyLattice, candidate: BoundedFuzzyLattice,
                            cap: int = HOM_ENUM_CAP) -> list[LatticeMap]:
    """Every bounded homomorphism ``probe -> candidate``, by exhausting all assignments."""
    total = len(candidate) ** len(probe)
    if total > cap:
        raise ValueError(f"{total} assignments exceed the enumeration cap of {cap}")
    out = []
    for phi in itertools.product(range(len(candidate)), repeat=len(probe)):
        if _is_hom(probe, candidate, np.array(phi)):
            out.append(LatticeMap(probe, candidate, phi))
    return out


def check_terminal(candidate: BoundedFuzzyLattice, probes: Sequence[BoundedFuzzyLattice],
                   cap: int = HOM_ENUM_CAP) -> Verdict:
    """Count homomorphisms from each probe into ``candidate``; witnesses are ``(probe, count)`` with count != 1."""
    for p in probes:
        if len(candidate) ** len(p) > cap:
            raise ValueError(f"candidate too large to enumerate maps from a {len(p)}-element probe")
    ws = []
    for k, p in enumerate(probes):
        count = len(enumerate_homomorphisms(p, candidate, cap))
        if count != 1:
            ws.append((k, count))
    return Verdict("Terminal", not ws, tuple(ws))
