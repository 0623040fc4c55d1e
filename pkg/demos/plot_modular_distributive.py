"""
Diamond and pentagon
====================

The five-element lattices that separate distributive, modular and general
lattices, checked by exhaustive law suites.
"""

from fuzzylattice import check_distributive, check_modular, check_prop_2_5, check_prop_2_6, lattice_from_order

# M3: three incomparable atoms between 0 and 1
m3 = lattice_from_order("0abc1", [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])
# N5: 0 < a < b < 1 and 0 < c < 1
n5 = lattice_from_order("0abc1", [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])

for name, lat in (("M3", m3), ("N5", n5)):
    print(name, "order laws", check_prop_2_5(lat).holds, "algebra laws", check_prop_2_6(lat).holds)
    print("  distributive", check_distributive(lat).passed, "modular", check_modular(lat).holds)


def show(lat, w):
    tag, *idx = w
    return (tag, *(lat.elements[k] for k in idx))


# M3 is modular but a meet (b join c) = a while (a meet b) join (a meet c) = 0
print([show(m3, w) for w in check_distributive(m3)["MeetJoinDistributive"].witnesses[:3]])
# N5 fails the modular identity at exactly one triple
print([show(n5, w) for w in check_modular(n5).witnesses])
