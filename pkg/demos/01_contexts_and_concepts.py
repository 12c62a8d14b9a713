"""
Cross tables and their concepts
===============================

An n-context is a finite n-ary relation: think of a boolean tensor whose
axes are named dimensions.  An n-concept is a maximal box of crosses, the
n-dimensional analogue of a maximal full rectangle in a 2-way table.
"""

import numpy as np

from polyconcept import (
    NContext,
    brute_force_concepts,
    description,
    enumerate_concepts,
    from_dense,
    is_concept,
    serialize_concepts,
    to_dense,
)

# A small triadic context: customers x products x seasons.  A cross means
# "this customer bought this product in this season".
customers = ("ada", "bo", "cy")
products = ("tea", "jam")
seasons = ("spring", "autumn")

arr = np.zeros((3, 2, 2), dtype=bool)
arr[0, 0, :] = True      # ada buys tea all year
arr[0, 1, 1] = True      # ada buys jam in autumn
arr[1, 0, :] = True      # bo buys tea all year
arr[2, 1, 1] = True      # cy buys jam in autumn

ctx = from_dense(arr, (customers, products, seasons))
print(ctx)
print("ada's description:",
      sorted(f"({products[p]},{seasons[s]})" for (p, s) in description(ctx, 0)))

# Every concept is a tuple of subsets, one per dimension, maximal in each.
concepts = enumerate_concepts(ctx)
print(f"\n{len(concepts)} concepts:")
print(serialize_concepts(concepts, "text"))

# (ada, bo) x (tea) x (spring, autumn) is one of them:
cand = ({0, 1}, {0}, {0, 1})
print("is_concept:", is_concept(ctx, cand))

# The brute-force oracle filters every candidate box and must agree.
oracle = brute_force_concepts(ctx)
print("oracle agrees:", set(oracle.concepts) == set(concepts.concepts))

# Round trip through the dense-tensor view.
assert from_dense(to_dense(ctx), ctx.dims) == ctx

# Contexts are plain immutable values; equal content compares equal.
again = NContext.build(ctx.dims, ctx.relation)
assert again == ctx
print("\ncontexts are value objects: rebuilt copy is equal")
