"""
Context transformations
=======================

Three ways to reshape a context while tracking what happens to concepts:
flattening collapses several dimensions into tuple-valued attributes,
slicing removes a dimension by universal quantification, and the direct
sum glues two contexts so concept counts multiply.
"""

from polyconcept import (
    Bipartition,
    count_concepts,
    direct_sum,
    fixture,
    flatten,
    slice_dim,
)


def show(ctx2, title):
    objs, attrs = ctx2.dims
    print(f"\n{title}")
    width = max(len(a) for a in attrs) + 1
    print(" " * 6 + "".join(a.rjust(width) for a in attrs))
    rows = {o: set() for o in range(len(objs))}
    for (o, a) in ctx2.relation:
        rows[o].add(a)
    for o, label in enumerate(objs):
        marks = "".join(("x" if a in rows[o] else ".").rjust(width)
                        for a in range(len(attrs)))
        print(label.rjust(6) + marks)


ctx = fixture("fig1")
print("triadic context:", ctx)

# Flatten against the object dimension: attributes become (number, letter)
# pairs and each row is an object's description.
flat = flatten(ctx, Bipartition((0,), (1, 2)))
show(flat, "flattened: objects vs (number, letter) cells")

# Slice away the letter dimension, keeping rows valid for letter a.
show(slice_dim(ctx, 2, {0}), "sliced: crosses that hold for letter a")

# Slice the number dimension by the subset {1, 3}: a cross survives only
# if it is present for both numbers.
show(slice_dim(ctx, 1, {0, 2}), "sliced: crosses that hold for numbers 1 and 3")

# The direct sum multiplies concept counts.
left = fixture("fig7")
right = fixture("fig3l")
total = direct_sum(left, right)
print("\ndirect sum sizes:", total.sizes)
print("counts:", count_concepts(left), "x", count_concepts(right),
      "=", count_concepts(total))
assert count_concepts(total) == count_concepts(left) * count_concepts(right)
