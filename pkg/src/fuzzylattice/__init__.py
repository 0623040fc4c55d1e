"""Finite bounded fuzzy lattices and their t-norm direct products."""

__version__ = "0.1.0"

from .core import (
    CheckReport,
    FrameError,
    FuzzyRelationFrame,
    Verdict,
    check_antisymmetric,
    check_reflexive,
    check_transitive,
    find_intransitive_triple,
    is_fuzzy_poset,
)
from .order import (
    BoundedFuzzyLattice,
    LatticeCertError,
    certify_lattice,
    fuzzy_join,
    fuzzy_meet,
    lattice_from_order,
    lower_bounds,
    one_element_lattice,
    upper_bounds,
)
from .tnorm import TNorm, ZeroDivisorStatus, builtin, conformance, extend_n, find_nilpotent, find_zero_divisor
from .product import ProductFrame, certify_product, direct_product, witness_intransitivity
from .laws import check_distributive, check_modular, check_prop_2_5, check_prop_2_6
from .morphism import LatticeMap, check_terminal, find_isomorphism, is_bounded_homomorphism, is_monotone
from .gen import GenConfig, gen_bounded_fuzzy_lattice, gen_fuzzy_poset
from .io import compare, fixture, load
from .verify import VerifyConfig, verify_theorem
