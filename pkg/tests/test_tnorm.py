from fractions import Fraction
from functools import reduce

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzylattice import builtin, conformance, extend_n, find_nilpotent, find_zero_divisor
from fuzzylattice.tnorm import (
    BUILTIN_NAMES,
    NilpotentWitness,
    ZeroDivisorStatus,
    ZeroDivisorWitness,
    fold_consistency,
    grid,
    nilpotent_order,
)

FOUR = ("minimum", "algebraic", "lukasiewicz", "hamacher")
unit = st.floats(0, 1, allow_nan=False)


def test_builtin_names():
    assert set(FOUR) <= set(BUILTIN_NAMES)
    with pytest.raises(ValueError, match="unknown t-norm"):
        builtin("drastic")


@pytest.mark.parametrize(
    "name, a, b, expected",
    [
        ("minimum", 0.3, 0.7, 0.3),
        ("algebraic", 0.5, 0.4, 0.2),
        ("lukasiewicz", 0.5, 0.4, 0.0),
        ("lukasiewicz", 0.9, 0.8, 0.7),
        ("hamacher", 0.5, 0.5, 1 / 3),
        ("hamacher", 0.0, 0.0, 0.0),
        ("hamacher", 1.0, 0.3, 0.3),
    ],
)
def test_values(name, a, b, expected):
    assert builtin(name)(a, b) == pytest.approx(expected, abs=1e-12)


def test_exact_values():
    h = builtin("hamacher")
    assert h(Fraction(1, 2), Fraction(1, 2)) == Fraction(1, 3)
    assert builtin("lukasiewicz")(Fraction(3, 10), Fraction(7, 10)) == 0


def test_array_inputs_match_scalars():
    a = np.linspace(0, 1, 11)
    b = a[::-1].copy()
    for name in FOUR:
        t = builtin(name)
        np.testing.assert_allclose(t(a, b), [t(float(x), float(y)) for x, y in zip(a, b)], atol=1e-15)


@pytest.mark.parametrize("name", FOUR)
def test_conformance_exact_grid(name):
    rep = conformance(builtin(name), 0.05)
    assert rep.passed, rep.failures()
    assert [v.name for v in rep.verdicts] == [
        "Associative", "Monotone", "Commutative", "RightUnit", "LeftUnit", "RightZero", "LeftZero"
    ]


def test_float_grid_breaks_exact_associativity():
    # frozen count: rounding alone breaks associativity on the float grid
    rep = conformance(builtin("lukasiewicz"), 0.05, exact=False, limit=10_000)
    assert not rep["Associative"].holds
    assert len(rep["Associative"].witnesses) == 574
    assert conformance(builtin("minimum"), 0.05, exact=False).passed


def test_conformance_catches_a_broken_operator():
    from fuzzylattice import TNorm

    bad = TNorm("avg", lambda a, b: (a + b) / 2)
    rep = conformance(bad, 0.25)
    failed = {v.name for v in rep.failures()}
    assert {"RightUnit", "RightZero", "LeftZero"} <= failed
    assert "Commutative" not in failed


def test_grid():
    assert grid(0.25) == [0, 0.25, 0.5, 0.75, 1.0]
    assert grid(0.1)[3] == 0.3
    assert len(grid(0.05)) == 21
    assert grid(0.3, exact=True)[-2:] == [Fraction(9, 10), 1]
    with pytest.raises(ValueError):
        grid(0)


def test_zero_divisor_status():
    assert builtin("lukasiewicz").has_zero_divisors is True
    for name in ("minimum", "algebraic", "hamacher"):
        assert builtin(name).status is ZeroDivisorStatus.NO_ZERO_DIVISORS


def test_lukasiewicz_witnesses():
    luk = builtin("lukasiewicz")
    z = find_zero_divisor(luk, 0.1)
    assert (z.a, z.b) == (0.1, 0.1)
    assert luk(z.a, z.b) == 0
    n = find_nilpotent(luk, 0.1)
    assert (n.a, n.n) == (0.1, 2)
    # 0.9 needs ten factors: 0.9*n - (n - 1) <= 0 first at n = 10
    assert nilpotent_order(luk, Fraction(9, 10), 64) == 10


@pytest.mark.parametrize("name", ("minimum", "algebraic", "hamacher"))
def test_no_witnesses_without_zero_divisors(name):
    t = builtin(name)
    assert find_zero_divisor(t, 0.05) is None
    assert find_nilpotent(t, 0.05) is None


@pytest.mark.parametrize("name", FOUR)
def test_zero_divisor_iff_nilpotent_on_grid(name):
    t = builtin(name)
    for step in (0.1, 0.05, 0.2):
        assert (find_zero_divisor(t, step) is None) == (find_nilpotent(t, step) is None)


def test_witness_validation():
    with pytest.raises(ValueError):
        ZeroDivisorWitness(0.0, 0.5)
    with pytest.raises(ValueError):
        NilpotentWitness(1.0, 3)


def test_extend_n_basics():
    t = builtin("algebraic")
    assert extend_n(t, [0.5]) == 0.5
    assert extend_n(t, [0.5, 0.5, 0.5]) == 0.125
    with pytest.raises(ValueError):
        extend_n(t, [])


def test_hamacher_fold_vs_closed_form():
    fold = extend_n(builtin("hamacher"), [0.5, 0.5, 0.5])
    closed = extend_n(builtin("hamacher-paper-nary"), [0.5, 0.5, 0.5])
    assert fold == pytest.approx(0.25, abs=1e-12)
    assert closed == pytest.approx(1 / 11, abs=1e-12)
    exact = extend_n(builtin("hamacher"), [Fraction(1, 2)] * 3)
    assert exact == Fraction(1, 4)


def test_closed_form_breaks_unit():
    # three unit grades do not give 1 under prod / (sum - prod)
    assert extend_n(builtin("hamacher-paper-nary"), [1.0, 1.0, 1.0]) == 0.5
    assert extend_n(builtin("hamacher"), [1.0, 1.0, 1.0]) == 1.0


def test_fold_consistency():
    samples = [[0.5, 0.5, 0.5], [0.2, 0.9], [0.3, 0.3, 0.3, 0.3]]
    assert fold_consistency(builtin("hamacher"), samples).holds
    v = fold_consistency(builtin("hamacher-paper-nary"), samples)
    assert not v.holds
    assert (0.5, 0.5, 0.5) in v.witnesses
    assert (0.2, 0.9) not in v.witnesses  # binary case agrees


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(FOUR), unit, unit, unit)
def test_axioms_on_floats(name, a, b, c):
    t = builtin(name)
    tol = 1e-12
    assert 0 <= t(a, b) <= 1
    assert t(a, b) == pytest.approx(t(b, a), abs=tol)
    assert t(a, 1.0) == pytest.approx(a, abs=tol)
    assert t(a, 0.0) == 0
    assert t(a, t(b, c)) == pytest.approx(t(t(a, b), c), abs=1e-9)
    lo, hi = sorted((b, c))
    assert t(a, lo) <= t(a, hi) + tol
    assert t(a, b) <= min(a, b) + tol


@settings(max_examples=300, deadline=None)
@given(st.lists(unit, min_size=1, max_size=6))
def test_lukasiewicz_closed_form(xs):
    assert extend_n(builtin("lukasiewicz"), xs) == pytest.approx(max(sum(xs) - (len(xs) - 1), 0), abs=1e-9)


# grades at least 1e-3 keep six-fold products far from float underflow
safe_unit = st.one_of(st.just(0.0), st.floats(1e-3, 1))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FOUR), st.lists(safe_unit, min_size=1, max_size=6))
def test_fold_is_positive_iff_no_zero_divisor_hit(name, xs):
    # for zero-divisor-free norms, the fold is positive exactly when every input is
    t = builtin(name)
    val = extend_n(t, xs)
    if not t.has_zero_divisors:
        assert (val > 0) == all(x > 0 for x in xs)
    assert val == reduce(t.apply, xs)


def test_float_underflow_is_not_a_zero_divisor():
    # positive grades can still multiply to 0.0 in floating point; no threshold is applied
    assert builtin("algebraic")(1e-200, 1e-200) == 0.0
    assert builtin("algebraic")(Fraction(1, 10**200), Fraction(1, 10**200)) > 0
