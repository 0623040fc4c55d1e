"""
Triangular norms and their zero divisors
========================================

Grid checks of the t-norm axioms, zero divisors and nilpotents, and the gap
between the folded and closed-form n-ary Hamacher operator.
"""

from fractions import Fraction

from fuzzylattice import builtin, conformance, extend_n, find_nilpotent, find_zero_divisor

# axioms on an exact rational grid of step 0.05
for name in ("minimum", "algebraic", "lukasiewicz", "hamacher"):
    t = builtin(name)
    rep = conformance(t, 0.05)
    print(f"{name:12s} conforms={rep.passed} zero divisor={find_zero_divisor(t, 0.05)}")

# Lukasiewicz: 0.9 survives nine self-products and dies at the tenth
luk = builtin("lukasiewicz")
print(find_nilpotent(luk, 0.1))
print([extend_n(luk, [Fraction(9, 10)] * n) for n in range(1, 11)])

# the left fold of binary Hamacher and the product/(sum - product) formula disagree
print(extend_n(builtin("hamacher"), [0.5, 0.5, 0.5]))
print(extend_n(builtin("hamacher-paper-nary"), [0.5, 0.5, 0.5]))

# and the closed form does not even keep 1 as a unit for three arguments
print(extend_n(builtin("hamacher-paper-nary"), [1.0, 1.0, 1.0]))
