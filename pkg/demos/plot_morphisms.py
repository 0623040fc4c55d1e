"""
Maps between lattices
=====================

Count bounded homomorphisms, find isomorphisms that ignore grade values, and
confirm the one-element lattice receives exactly one map from everything.
"""

from fuzzylattice import GenConfig, check_terminal, find_isomorphism, gen_bounded_fuzzy_lattice, lattice_from_order
from fuzzylattice import one_element_lattice
from fuzzylattice.morphism import enumerate_homomorphisms

chain3 = lattice_from_order("0m1", [("0", "m"), ("m", "1")], default=0.3)
square = lattice_from_order("0ab1", [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], default=0.7)

# the middle of the chain can go to a, b, or either bound
for m in enumerate_homomorphisms(chain3, square):
    print(m.as_labels())

# same shape, different grades: still isomorphic
other = lattice_from_order("PQRS", [("P", "Q"), ("P", "R"), ("Q", "S"), ("R", "S")], default=0.05)
print(find_isomorphism(square, other).as_labels())

probes = [gen_bounded_fuzzy_lattice(GenConfig(seed=s, size_range=(2, 7))) for s in range(20)]
print(check_terminal(one_element_lattice(), probes))
# a two-element chain is not terminal: the 3-chain maps into it twice
print(check_terminal(lattice_from_order("01", [("0", "1")]), [chain3]))
