"""
Seeded property runs
====================

Generate random lattices and posets, build products, and let the
verification driver check the product and law theorems.
"""

from fuzzylattice import GenConfig, VerifyConfig, gen_bounded_fuzzy_lattice, verify_theorem

lat = gen_bounded_fuzzy_lattice(GenConfig(seed=1, size_range=(5, 8)), kind="random")
print(lat)
print(lat.mu)

# zero-divisor-free t-norms give lattices, with meets and joins computed coordinatewise
run = verify_theorem("Thm4_8", VerifyConfig(trials=50, seed=42))
print(run.passed, run.observations, f"{run.elapsed:.2f}s")

# Lukasiewicz products of posets: how often does transitivity break?
run = verify_theorem("Thm4_4", VerifyConfig(trials=50, seed=42))
print(run.observations["intransitive_products"], "of", run.observations["products"])

# laws carry over to products, with M3 factors in the modular runs
run = verify_theorem("ThmProd5_6", VerifyConfig(trials=30, seed=42))
print(run.passed, run.observations)

# the closed-form Hamacher variant fails once three factors are involved
run = verify_theorem("Thm4_8", VerifyConfig(trials=5, seed=0, tnorms=("hamacher-paper-nary",), factor_range=(3, 3)))
print(len(run.failures), run.failures[0]["error"])
