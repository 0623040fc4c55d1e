import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzylattice import (
    FuzzyRelationFrame,
    GenConfig,
    LatticeCertError,
    certify_lattice,
    fixture,
    fuzzy_join,
    fuzzy_meet,
    gen_bounded_fuzzy_lattice,
    gen_fuzzy_poset,
    lattice_from_order,
    lower_bounds,
    one_element_lattice,
    upper_bounds,
)

import oracles

# Frozen from the brute-force oracle: X1 is a 4-chain, X2 the square 2 x 2.
X1_MEET = [["w1"] * 4, ["w1", "x1", "x1", "x1"], ["w1", "x1", "y1", "y1"], ["w1", "x1", "y1", "z1"]]
X2_MEET = [["w2"] * 4, ["w2", "x2", "w2", "x2"], ["w2", "w2", "y2", "y2"], ["w2", "x2", "y2", "z2"]]
X2_JOIN = [["w2", "x2", "y2", "z2"], ["x2", "x2", "z2", "z2"], ["y2", "z2", "y2", "z2"], ["z2"] * 4]


def labelled(lat, table):
    e = lat.elements
    return [[e[k] for k in row] for row in table]


def test_table1_bounds(x1, x2):
    assert (x1.elements[x1.bottom], x1.elements[x1.top]) == ("w1", "z1")
    assert (x2.elements[x2.bottom], x2.elements[x2.top]) == ("w2", "z2")


def test_table1_tables(x1, x2):
    assert labelled(x1, x1.meet_table) == X1_MEET
    assert labelled(x2, x2.meet_table) == X2_MEET
    assert labelled(x2, x2.join_table) == X2_JOIN


def test_incomparable_pair_in_x2(x2):
    i, j = x2.index("x2"), x2.index("y2")
    assert x2.elements[fuzzy_meet(x2.frame, i, j)] == "w2"
    assert x2.elements[fuzzy_join(x2.frame, i, j)] == "z2"


def test_bounds_sets(x2):
    f = x2.frame
    i, j = x2.index("x2"), x2.index("y2")
    assert lower_bounds(f, {i, j}) == {x2.index("w2")}
    assert upper_bounds(f, {i, j}) == {x2.index("z2")}
    assert lower_bounds(f, {i}) == {x2.index("w2"), i}


def test_empty_subset_rejected(x1):
    with pytest.raises(ValueError):
        lower_bounds(x1.frame, [])


def test_one_element_lattice():
    lat = one_element_lattice()
    assert lat.bottom == lat.top == 0
    assert lat.meet(0, 0) == lat.join(0, 0) == 0


def test_meet_of_element_with_itself(x1):
    for i in range(len(x1)):
        assert x1.meet(i, i) == x1.join(i, i) == i


def test_not_poset_kind():
    with pytest.raises(LatticeCertError) as e:
        certify_lattice(fixture("table3"))
    assert e.value.kind == "NotPoset"
    assert not e.value.report["Transitive"].holds


def test_missing_meet():
    # two minimal elements with no common lower bound, but a top
    lat = FuzzyRelationFrame(["a", "b", "t"], [[1, 0, 0.5], [0, 1, 0.5], [0, 0, 1]])
    with pytest.raises(LatticeCertError) as e:
        certify_lattice(lat)
    assert e.value.kind == "MissingMeet"
    assert e.value.detail == (0, 1)


def test_missing_join():
    lat = FuzzyRelationFrame(["b", "a", "c"], [[1, 0.5, 0.5], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(LatticeCertError) as e:
        certify_lattice(lat)
    assert e.value.kind == "MissingJoin"
    assert e.value.detail == (1, 2)


def test_bowtie_misses_both():
    # a, b below both c and d: (a, b) has no least upper bound, (c, d) no greatest lower bound
    f = FuzzyRelationFrame(
        ["0", "a", "b", "c", "d"],
        [
            [1, 0.5, 0.5, 0.5, 0.5],
            [0, 1, 0, 0.5, 0.5],
            [0, 0, 1, 0.5, 0.5],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
        ],
    )
    with pytest.raises(LatticeCertError) as e:
        certify_lattice(f)
    assert e.value.kind == "MissingMeet"
    assert e.value.detail == (3, 4)
    with pytest.raises(LatticeCertError) as e:
        fuzzy_join(f, 1, 2)
    assert e.value.kind == "MissingJoin"


def test_fuzzy_meet_raises_on_missing():
    f = FuzzyRelationFrame(["a", "b"], [[1, 0], [0, 1]])
    with pytest.raises(LatticeCertError) as e:
        fuzzy_meet(f, 0, 1)
    assert e.value.kind == "MissingMeet"


def test_grades_do_not_affect_order():
    a = lattice_from_order("0ab1", [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], default=0.01)
    b = lattice_from_order("0ab1", [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], default=0.99)
    assert np.array_equal(a.meet_table, b.meet_table)
    assert np.array_equal(a.join_table, b.join_table)


def test_product_tables_match_oracle(min_product):
    lat = certify_lattice(min_product.frame)
    M, J, b, t = oracles.lattice_tables(lat.mu.tolist())
    assert lat.meet_table.tolist() == M
    assert lat.join_table.tolist() == J
    assert (lat.bottom, lat.top) == (b, t)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_tables_match_oracle_on_random_lattices(seed):
    lat = gen_bounded_fuzzy_lattice(GenConfig(seed=seed, size_range=(1, 9)))
    M, J, b, t = oracles.lattice_tables(lat.mu.tolist())
    assert lat.meet_table.tolist() == M
    assert lat.join_table.tolist() == J
    assert (lat.bottom, lat.top) == (b, t)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_certify_agrees_with_oracle_on_posets(seed):
    f = gen_fuzzy_poset(GenConfig(seed=seed, size_range=(1, 7)))
    mu = f.mu.tolist()
    n = len(mu)
    tables_exist = all(
        oracles.meet(mu, i, j) is not None and oracles.join(mu, i, j) is not None
        for i in range(n) for j in range(n)
    )
    try:
        certify_lattice(f)
        certified = True
    except LatticeCertError as e:
        certified = False
        assert e.kind in ("MissingMeet", "MissingJoin", "NoBottom", "NoTop")
    # for nonempty finite posets, pairwise meets and joins force both bounds
    assert certified == tables_exist


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**31 - 1), st.randoms(use_true_random=False))
def test_relabelling_permutes_tables(seed, rnd):
    lat = gen_bounded_fuzzy_lattice(GenConfig(seed=seed, size_range=(1, 8)))
    order = list(range(len(lat)))
    rnd.shuffle(order)
    other = certify_lattice(lat.frame.permuted(order))
    # element k of ``other`` is element order[k] of ``lat``
    for a in range(len(lat)):
        for b in range(len(lat)):
            assert order[other.meet(a, b)] == lat.meet(order[a], order[b])
            assert order[other.join(a, b)] == lat.join(order[a], order[b])
    assert order[other.bottom] == lat.bottom and order[other.top] == lat.top
