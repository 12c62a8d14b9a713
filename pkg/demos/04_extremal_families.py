"""
Named context families
======================

Three families anchor the study of how many concepts a context can hold:
contranominal scales (diagonal holes, n**s concepts), the extremal class
realising every feature box, and rook contexts whose holes hit every axis
line exactly once.
"""

from itertools import product

from polyconcept import (
    b_class,
    contranominal,
    count_concepts,
    direct_sum,
    enumerate_concepts,
    fixture,
    lattice_equivalent,
    rook_context,
)

# Contranominal scales: the cubic context missing exactly its diagonal.
for n, s in [(2, 4), (3, 2), (3, 3), (4, 2)]:
    ctx = contranominal(n, s)
    print(f"contranominal({n},{s}): {count_concepts(ctx)} concepts "
          f"(= {n}**{s})")

# They arise by direct-summing one-cell empty contexts.
acc = contranominal(3, 1)
acc = direct_sum(acc, contranominal(3, 1))
print("sum of two unit contexts equals contranominal(3,2):",
      acc.relation == contranominal(3, 2).relation)

# The extremal class: every box over the feature dimensions is realised.
b33 = b_class((3, 3))
print(f"\nextremal context on sizes (3,3): {count_concepts(b33)} concepts")
print("feature count:", len(enumerate_concepts(b33).features()))

# A different six-object table produces the same features.
print("alternative table is equivalent:",
      lattice_equivalent(fixture("fig8"), b33))

# And one member of the (2,2) class squeezes onto three objects.
fig7 = fixture("fig7")
print("three-object member of the (2,2) class:",
      count_concepts(fig7), "concepts")

# Rook contexts: one hole per axis line, far more concepts than the scale.
crook = fixture("crook")
print(f"\nrook context 3x3x3x3: {count_concepts(crook)} concepts "
      f"(contranominal gives {count_concepts(contranominal(4, 3))})")

generated = rook_context(4, 3, 0)
print("generator reproduces the bundled holes:",
      generated.relation == crook.relation)

holes = set(product(range(3), repeat=4)) - set(crook.relation)
lines = sum(
    sum(rest[:d] + (x,) + rest[d:] in holes for x in range(3)) == 1
    for d in range(4)
    for rest in product(range(3), repeat=3)
)
print(f"axis lines with exactly one hole: {lines} of {4 * 27}")
