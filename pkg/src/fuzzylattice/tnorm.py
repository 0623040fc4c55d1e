"""Triangular norms, their n-ary extension, and zero-divisor / nilpotent search.

Built-in operators are written with plain arithmetic so they accept floats,
numpy arrays and :class:`fractions.Fraction` alike.  Conformance checks run on
an exact rational grid by default, which keeps associativity free of rounding.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Sequence

import numpy as np

from .core import CheckReport, Verdict

__all__ = [
    "ZeroDivisorStatus",
    "TNorm",
    "ZeroDivisorWitness",
    "NilpotentWitness",
    "BUILTIN_NAMES",
    "builtin",
    "extend_n",
    "grid",
    "conformance",
    "find_zero_divisor",
    "nilpotent_order",
    "find_nilpotent",
    "fold_consistency",
]


class ZeroDivisorStatus(enum.Enum):
    HAS_ZERO_DIVISORS = "HasZeroDivisors"
    NO_ZERO_DIVISORS = "NoZeroDivisors"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class TNorm:
    """A binary grade operator plus what is known about its zero divisors.

    ``nary`` overrides the left fold used by :func:`extend_n`; it exists only
    for the closed-form Hamacher variant.  ``tolerance`` is the slack allowed
    when comparing outputs in :func:`conformance`.
    """

    name: str
    apply: Callable
    status: ZeroDivisorStatus = ZeroDivisorStatus.UNKNOWN
    note: str = ""
    nary: Callable[[Sequence], object] | None = None
    tolerance: float = 0.0

    def __call__(self, a, b):
        return self.apply(a, b)

    @property
    def has_zero_divisors(self) -> bool | None:
        if self.status is ZeroDivisorStatus.UNKNOWN:
            return None
        return self.status is ZeroDivisorStatus.HAS_ZERO_DIVISORS


def _minimum(a, b):
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return np.minimum(a, b)
    return min(a, b)


def _algebraic(a, b):
    return a * b


def _lukasiewicz(a, b):
    s = a + b - 1
    if isinstance(s, np.ndarray):
        return np.maximum(s, 0.0)
    return max(s, 0 * s)


def _hamacher(a, b):
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
        num = a * b
        den = a + b - num
        out = np.zeros_like(num)
        np.divide(num, den, out=out, where=den != 0)
        return out
    if a == 0 and b == 0:
        return 0 * a
    return a * b / (a + b - a * b)


def _hamacher_closed_form(grades):
    """Closed form product / (sum - product), zero when every grade is zero."""
    grades = list(grades)
    prod = reduce(lambda x, y: x * y, grades)
    total = reduce(lambda x, y: x + y, grades)
    den = total - prod
    if isinstance(den, np.ndarray):
        out = np.zeros_like(np.asarray(den, dtype=float))
        np.divide(prod, den, out=out, where=den != 0)
        return out
    if den == 0:
        return 0 * prod
    return prod / den


_NO = ZeroDivisorStatus.NO_ZERO_DIVISORS
_HAS = ZeroDivisorStatus.HAS_ZERO_DIVISORS

_BUILTINS = {
    "minimum": TNorm("minimum", _minimum, _NO, "min(a, b) > 0 for a, b > 0"),
    "algebraic": TNorm("algebraic", _algebraic, _NO, "a*b > 0 for a, b > 0"),
    "lukasiewicz": TNorm("lukasiewicz", _lukasiewicz, _HAS, "max(a+b-1, 0) = 0 whenever a+b <= 1"),
    "hamacher": TNorm(
        "hamacher", _hamacher, _NO, "ab/(a+b-ab) > 0 for a, b > 0; (0, 0) maps to 0", tolerance=1e-9
    ),
    "hamacher-paper-nary": TNorm(
        "hamacher-paper-nary",
        _hamacher,
        _NO,
        "binary Hamacher; n-ary values use prod/(sum-prod) instead of the fold",
        nary=_hamacher_closed_form,
        tolerance=1e-9,
    ),
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> TNorm:
    try:
        return _BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown t-norm {name!r}; expected one of {', '.join(BUILTIN_NAMES)}") from None


def extend_n(t: TNorm, grades: Sequence):
    """Left fold ``t(t(t(a1, a2), a3), ...)``; a single grade is returned as is."""
    grades = list(grades)
    if not grades:
        raise ValueError("extend_n needs at least one grade")
    if t.nary is not None and len(grades) > 1:
        return t.nary(grades)
    return reduce(t.apply, grades)


def grid(step, exact: bool = False) -> list:
    """Points ``0, step, 2*step, ...`` up to and including 1.

    ``step`` is read as a decimal, so ``0.1`` gives ``0.3`` and not
    ``0.30000000000000004``.  With ``exact`` the points are Fractions.
    """
    s = Fraction(str(step)) if isinstance(step, float) else Fraction(step)
    if not 0 < s <= 1:
        raise ValueError(f"grid step {step!r} must lie in (0, 1]")
    pts = []
    k = 0
    while k * s < 1:
        pts.append(k * s)
        k += 1
    pts.append(Fraction(1))
    return pts if exact else [float(p) for p in pts]


def conformance(t: TNorm, grid_step=0.05, exact: bool = True, limit: int = 32) -> CheckReport:
    """Check the t-norm axioms and boundary laws on a grid.

    Associativity, monotonicity, commutativity, the unit laws
    ``t(a, 1) = t(1, a) = a`` and the zero laws ``t(a, 0) = t(0, a) = 0``
    are each reported separately.  ``exact=False`` evaluates on floats, for
    operators that cannot take Fractions.
    """
    step = Fraction(str(grid_step)) if isinstance(grid_step, float) else Fraction(grid_step)
    if not 0 < step <= Fraction(1, 2):
        raise ValueError("grid_step must lie in (0, 0.5]")
    g = grid(step, exact=exact)
    tol = t.tolerance
    f = t.apply

    def eq(x, y):
        return x == y if tol == 0 else abs(x - y) <= tol

    def le(x, y):
        return x <= y if tol == 0 else x <= y + tol

    table = {(a, b): f(a, b) for a in g for b in g}
    one, zero = g[-1], g[0]

    def collect(name, gen):
        ws = list(itertools.islice(gen, limit + 1))
        wits = tuple(tuple(float(v) for v in w) for w in ws[:limit])
        return Verdict(name, not wits, wits, len(ws) > limit)

    verdicts = [
        collect("Associative", (
            (a, b, c) for a in g for b in g for c in g
            if not eq(f(a, table[b, c]), f(table[a, b], c))
        )),
        collect("Monotone", (
            (a, b, c) for a in g for i, b in enumerate(g) for c in g[i:]
            if not le(table[a, b], table[a, c])
        )),
        collect("Commutative", ((a, b) for a in g for b in g if table[a, b] != table[b, a])),
        collect("RightUnit", ((a,) for a in g if table[a, one] != a)),
        collect("LeftUnit", ((a,) for a in g if table[one, a] != a)),
        collect("RightZero", ((a,) for a in g if table[a, zero] != 0)),
        collect("LeftZero", ((a,) for a in g if table[zero, a] != 0)),
    ]
    return CheckReport.combine(f"Conformance[{t.name}]", verdicts, [f"grid step {step}", f"exact={exact}"])


@dataclass(frozen=True)
class ZeroDivisorWitness:
    a: float
    b: float
    note: str = ""

    def __post_init__(self):
        if not (0 < self.a < 1 and 0 < self.b < 1):
            raise ValueError("zero-divisor witnesses lie in the open interval (0, 1)")


@dataclass(frozen=True)
class NilpotentWitness:
    a: float
    n: int

    def __post_init__(self):
        if not 0 < self.a < 1 or self.n < 1:
            raise ValueError("nilpotent witnesses need 0 < a < 1 and n >= 1")


def _interior(grid_step) -> list[float]:
    s = Fraction(str(grid_step)) if isinstance(grid_step, float) else Fraction(grid_step)
    if not 0 < s < 1:
        raise ValueError("grid_step must lie in (0, 1)")
    return [p for p in grid(s) if 0 < p < 1]


def find_zero_divisor(t: TNorm, grid_step=0.1) -> ZeroDivisorWitness | None:
    """First interior grid pair ``(a, b)`` with ``t(a, b) == 0``.

    A hit proves ``t`` has zero divisors; ``None`` only means none were seen
    on this grid.
    """
    pts = _interior(grid_step)
    for a in pts:
        for b in pts:
            if t.apply(a, b) == 0:
                return ZeroDivisorWitness(a, b, f"{t.name} on grid step {grid_step}")
    return None


def nilpotent_order(t: TNorm, a, max_n: int) -> int | None:
    """Smallest ``n <= max_n`` with the n-fold power of ``a`` exactly 0."""
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    for n in range(2, max_n + 1):
        if extend_n(t, [a] * n) == 0:
            return n
    return None


def find_nilpotent(t: TNorm, grid_step=0.1, max_n: int = 64) -> NilpotentWitness | None:
    for a in _interior(grid_step):
        n = nilpotent_order(t, a, max_n)
        if n is not None:
            return NilpotentWitness(a, n)
    return None


def fold_consistency(t: TNorm, samples: Sequence[Sequence], tol: float = 1e-9) -> Verdict:
    """Compare :func:`extend_n` with the plain left fold of ``t.apply``.

    Differs only for operators whose ``nary`` closed form is not the fold.
    """
    bad = [
        tuple(float(v) for v in s) for s in samples
        if abs(extend_n(t, s) - reduce(t.apply, s)) > tol
    ]
    return Verdict(f"FoldConsistency[{t.name}]", not bad, tuple(bad[:32]), len(bad) > 32)
