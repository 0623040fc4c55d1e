"""Exhaustive algebraic law checks on certified lattices.

All checks compare elements through the cached meet/join tables, never grade
values, so a passing verdict is a proof for that finite instance.
"""
from __future__ import annotations

import itertools
from typing import Callable, Iterator

import numpy as np

from .core import DEFAULT_WITNESS_LIMIT, CheckReport, Verdict
from .order import BoundedFuzzyLattice

__all__ = [
    "LawReport",
    "check_prop_2_5",
    "check_prop_2_6",
    "check_distributive",
    "check_modular",
    "check_modular_quasi",
]

LawReport = Verdict


def _pairs(bad: np.ndarray, tag: str) -> Iterator[tuple]:
    for x, y in np.argwhere(bad):
        yield (tag, int(x), int(y))


def _triples(n: int, bad_for: Callable[[int], np.ndarray], tag: str) -> Iterator[tuple]:
    """``bad_for(x)`` is an (n, n) mask over ``(y, z)``; yields in lexicographic order."""
    for x in range(n):
        for y, z in np.argwhere(bad_for(x)):
            yield (tag, x, int(y), int(z))


def _law(name: str, sources, limit: int) -> LawReport:
    ws = list(itertools.islice(itertools.chain(*sources), limit + 1))
    return LawReport(name, not ws, tuple(ws[:limit]), len(ws) > limit)


def _tables(lat: BoundedFuzzyLattice):
    return lat.positive, np.asarray(lat.meet_table), np.asarray(lat.join_table), len(lat)


def check_prop_2_5(lat: BoundedFuzzyLattice, limit: int = DEFAULT_WITNESS_LIMIT) -> LawReport:
    """Order facts about meets and joins.

    1. ``x, y`` lie below ``x⊕y`` and above ``x⊙y``;
    2. a common upper bound ``z`` of ``x, y`` lies above ``x⊕y``;
    3. a common lower bound ``z`` lies below ``x⊙y``;
    4. ``x <= y`` iff ``x⊕y = y``;
    5. ``x <= y`` iff ``x⊙y = x``;
    6. ``y <= z`` implies ``x⊙y <= x⊙z`` and ``x⊕y <= x⊕z``.
    """
    P, M, J, n = _tables(lat)
    x, y = np.indices((n, n))
    sources = [
        _pairs(~(P[x, J] & P[y, J] & P[M, x] & P[M, y]), "c1"),
        _triples(n, lambda a: P[a][None, :] & P & ~P[J[a]], "c2"),
        _triples(n, lambda a: P[:, a][None, :] & P.T & ~P.T[M[a]], "c3"),
        _pairs(P != (J == y), "c4"),
        _pairs(P != (M == x), "c5"),
        _triples(
            n,
            lambda a: P & ~(P[M[a][:, None], M[a][None, :]] & P[J[a][:, None], J[a][None, :]]),
            "c6",
        ),
    ]
    return _law("OrderLaws", sources, limit)


def check_prop_2_6(lat: BoundedFuzzyLattice, limit: int = DEFAULT_WITNESS_LIMIT) -> LawReport:
    """Idempotence, commutativity, absorption, associativity and the bound identities."""
    P, M, J, n = _tables(lat)
    idx = np.arange(n)
    x, y = np.indices((n, n))
    sources = [
        ((("idempotent", int(a)) for a in idx[(M[idx, idx] != idx) | (J[idx, idx] != idx)])),
        _pairs((M != M.T) | (J != J.T), "commutative"),
        _pairs(M[x, J] != x, "absorption-meet"),
        _pairs(J[x, M] != x, "absorption-join"),
        _triples(n, lambda a: M[a][M] != M[M[a]], "associative-meet"),
        _triples(n, lambda a: J[a][J] != J[J[a]], "associative-join"),
        ((("meet-top", int(a)) for a in idx[M[idx, lat.top] != idx])),
        ((("join-bottom", int(a)) for a in idx[J[idx, lat.bottom] != idx])),
    ]
    return _law("LatticeIdentities", sources, limit)


def check_distributive(lat: BoundedFuzzyLattice, limit: int = DEFAULT_WITNESS_LIMIT) -> CheckReport:
    """Both distributive identities, each as its own verdict.

    ``MeetJoinDistributive``: ``x⊙(y⊕z) = (x⊙y)⊕(x⊙z)``;
    ``JoinMeetDistributive``: ``x⊕(y⊙z) = (x⊕y)⊙(x⊕z)``.
    """
    P, M, J, n = _tables(lat)
    mj = _law(
        "MeetJoinDistributive",
        [_triples(n, lambda a: M[a][J] != J[M[a][:, None], M[a][None, :]], "d1")],
        limit,
    )
    jm = _law(
        "JoinMeetDistributive",
        [_triples(n, lambda a: J[a][M] != M[J[a][:, None], J[a][None, :]], "d2")],
        limit,
    )
    return CheckReport.combine("Distributive", [mj, jm])


def check_modular(lat: BoundedFuzzyLattice, limit: int = DEFAULT_WITNESS_LIMIT) -> LawReport:
    """``(x⊙y)⊕(z⊙y) = ((x⊙y)⊕z)⊙y`` for all ``x, y, z``."""
    P, M, J, n = _tables(lat)
    zs = np.arange(n)

    def bad(a):
        xy = M[a]  # x⊙y indexed by y
        lhs = J[xy[:, None], M[zs[None, :], np.arange(n)[:, None]]]  # [y, z]
        rhs = M[J[xy[:, None], zs[None, :]], np.arange(n)[:, None]]
        return lhs != rhs

    return _law("Modular", [_triples(n, bad, "m")], limit)


def check_modular_quasi(lat: BoundedFuzzyLattice, limit: int = DEFAULT_WITNESS_LIMIT) -> LawReport:
    """Conditional form: ``x <= z`` implies ``x⊕(y⊙z) = (x⊕y)⊙z``.

    Kept for comparison with :func:`check_modular`; witnesses are ``(x, y, z)``.
    """
    P, M, J, n = _tables(lat)

    def bad(a):
        lhs = J[a][M]  # [y, z]
        rhs = M[J[a][:, None], np.arange(n)[None, :]]
        return P[a][None, :] & (lhs != rhs)

    return _law("ModularQuasi", [_triples(n, bad, "q")], limit)
