"""
Direct products of the two reference lattices
=============================================

Load the two four-element lattices, take their minimum and Lukasiewicz
products, and see why only one of them is a lattice again.
"""

import numpy as np

from fuzzylattice import certify_lattice, certify_product, compare, direct_product, fixture, witness_intransitivity
from fuzzylattice import LatticeCertError

# the left matrix is a chain, the right one a square
x1 = certify_lattice(fixture("table1_x1"))
x2 = certify_lattice(fixture("table1_x2"))
print(x1, x2)
print(np.array(x2.elements)[x2.meet_table])

# minimum product: 16 elements, labels are concatenated coordinates
p = direct_product([x1, x2], "minimum")
lat = certify_product(p)
print(lat.elements[lat.bottom], lat.elements[lat.top])
print("matches shipped matrix exactly:", compare(p.frame, fixture("table2"), tol=0).passed)

# meets are computed from the grades and agree with the coordinatewise ones
i, j = lat.index("x1x2"), lat.index("y1y2")
print("x1x2 meet y1y2 =", lat.elements[lat.meet(i, j)])

# Lukasiewicz has zero divisors: 0.1 and 0.1 combine to 0, so transitivity breaks
q = direct_product([x1, x2], "lukasiewicz")
print("matches shipped matrix within 1e-9:", compare(q.frame, fixture("table3"), tol=1e-9).passed)
try:
    certify_product(q)
except LatticeCertError as e:
    print("not a lattice:", e.kind)
a, b, c = witness_intransitivity(q)
e = q.frame.elements
print(f"{e[a]} -> {e[b]} -> {e[c]}: grades {q.frame.mu[a, b]}, {q.frame.mu[b, c]}, {q.frame.mu[a, c]}")
