"""Core data model for n-dimensional cross tables and their concepts.

An n-context is a finite n-ary relation between n named dimensions.  An
n-concept is a maximal box full of crosses: an n-tuple of subsets, one per
dimension, whose Cartesian product lies inside the relation and that cannot
be enlarged in any single dimension without breaking that property.

Dimension indices are 0-based throughout the Python API.  File formats and
the command line use 1-based indices and element labels instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

Concept = tuple[frozenset[int], ...]
Cell = tuple[int, ...]


class ResourceLimitError(RuntimeError):
    """Raised when an operation would exceed its configured search cap."""


@dataclass(frozen=True)
class NContext:
    """An n-dimensional cross table.

    dims holds one tuple of element labels per dimension; relation is a set
    of index tuples (0-based).  Instances are immutable and hashable, so
    they can safely be shared and used as cache keys.
    """

    dims: tuple[tuple[str, ...], ...]
    relation: frozenset[Cell]

    def __post_init__(self):
        if len(self.dims) < 2:
            raise ValueError(f"arity must be >= 2, got {len(self.dims)}")
        for d, labels in enumerate(self.dims):
            if not labels:
                raise ValueError(f"dimension {d} is empty")
            if len(set(labels)) != len(labels):
                raise ValueError(f"dimension {d} has duplicate labels")
        n = len(self.dims)
        for t in self.relation:
            if len(t) != n:
                raise ValueError(f"tuple {t} has arity {len(t)}, expected {n}")
            for d, x in enumerate(t):
                if not 0 <= x < len(self.dims[d]):
                    raise ValueError(f"tuple {t}: index {x} out of range in dimension {d}")

    @staticmethod
    def build(dims: Sequence[Sequence[str]], relation: Iterable[Sequence[int]]) -> "NContext":
        return NContext(
            tuple(tuple(labels) for labels in dims),
            frozenset(tuple(t) for t in relation),
        )

    @property
    def arity(self) -> int:
        return len(self.dims)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(d) for d in self.dims)

    def cell_count(self) -> int:
        total = 1
        for s in self.sizes:
            total *= s
        return total

    def index_of(self, dim: int, label: str) -> int:
        try:
            return self.dims[dim].index(label)
        except ValueError:
            raise ValueError(f"no element {label!r} in dimension {dim}") from None

    def label_tuple(self, t: Cell) -> tuple[str, ...]:
        return tuple(self.dims[d][x] for d, x in enumerate(t))

    def __repr__(self) -> str:
        return f"NContext(sizes={self.sizes}, crosses={len(self.relation)})"


@dataclass(frozen=True)
class Box:
    """A product of subsets over a selected set of dimensions.

    The cell set of a box is the Cartesian product of its components; a box
    with any empty component has an empty cell set.
    """

    dims_selected: tuple[int, ...]
    components: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.dims_selected) != len(self.components):
            raise ValueError("dims_selected and components length mismatch")

    def cells(self) -> frozenset[Cell]:
        if any(not c for c in self.components):
            return frozenset()
        return frozenset(product(*(sorted(c) for c in self.components)))


def contains(ctx: NContext, t: Sequence[int]) -> bool:
    """Whether the index tuple t carries a cross."""
    t = tuple(t)
    if len(t) != ctx.arity:
        raise ValueError(f"tuple arity {len(t)} does not match context arity {ctx.arity}")
    for d, x in enumerate(t):
        if not 0 <= x < len(ctx.dims[d]):
            raise ValueError(f"index {x} out of range in dimension {d}")
    return t in ctx.relation


def _check_candidate(ctx: NContext, c: Sequence[Iterable[int]]) -> Concept:
    if len(c) != ctx.arity:
        raise ValueError(f"candidate arity {len(c)} does not match context arity {ctx.arity}")
    comps = tuple(frozenset(comp) for comp in c)
    for d, comp in enumerate(comps):
        for x in comp:
            if not 0 <= x < len(ctx.dims[d]):
                raise ValueError(f"index {x} out of range in dimension {d}")
    return comps


def box_full(ctx: NContext, c: Sequence[Iterable[int]]) -> bool:
    """Whether the product of the given subsets lies entirely in the relation.

    Vacuously true when any component is empty.
    """
    comps = _check_candidate(ctx, c)
    bits = context_bits(ctx)
    return bits.box_is_full(comps)


def is_concept(ctx: NContext, c: Sequence[Iterable[int]]) -> bool:
    """Whether c is a maximal full box of ctx.

    Maximality is checked one dimension at a time: adding any single outside
    element to one component, keeping the others fixed, must break fullness.
    """
    comps = _check_candidate(ctx, c)
    bits = context_bits(ctx)
    return bits.box_is_full(comps) and bits.box_is_maximal(comps)


def description(ctx: NContext, obj: int) -> frozenset[Cell]:
    """All (n-1)-tuples over dimensions 1..n-1 crossed with the given object."""
    if not 0 <= obj < len(ctx.dims[0]):
        raise ValueError(f"object index {obj} out of range")
    return frozenset(t[1:] for t in ctx.relation if t[0] == obj)


def quasi_leq(i: int, a: Concept, b: Concept) -> bool:
    """The i-th quasi-order: component inclusion in dimension i."""
    return a[i] <= b[i]


def features(concepts: Iterable[Concept]) -> frozenset[tuple[frozenset[int], ...]]:
    """Projections of concepts onto their last n-1 components, deduplicated."""
    return frozenset(c[1:] for c in concepts)


def feature_cells(feat: Sequence[frozenset[int]]) -> frozenset[Cell]:
    """Cell set of a feature box; empty whenever a component is empty."""
    if any(not comp for comp in feat):
        return frozenset()
    return frozenset(product(*(sorted(comp) for comp in feat)))


@dataclass
class NOrderReport:
    """Outcome of checking the two n-ordered-set axioms over a concept set."""

    ok: bool
    violations: list[str] = field(default_factory=list)


def check_n_ordered(cs: "ConceptSet") -> NOrderReport:
    """Verify antiordinal dependency and the uniqueness condition.

    Antiordinal dependency: if a is below b in every quasi-order except the
    j-th, it must be above b in the j-th.  Uniqueness: concepts equal in all
    components are identical.  All pairs are checked; the report carries the
    violations found.
    """
    concepts = list(cs.concepts)
    n = cs.ctx.arity
    violations: list[str] = []
    for ai, a in enumerate(concepts):
        for b in concepts[ai + 1:]:
            if all(a[i] == b[i] for i in range(n)) and a != b:
                violations.append(f"uniqueness: {a} vs {b}")
            for j in range(n):
                if all(quasi_leq(i, a, b) for i in range(n) if i != j):
                    if not quasi_leq(j, b, a):
                        violations.append(f"antiordinal: {a} vs {b} at dimension {j}")
                if all(quasi_leq(i, b, a) for i in range(n) if i != j):
                    if not quasi_leq(j, a, b):
                        violations.append(f"antiordinal: {b} vs {a} at dimension {j}")
    return NOrderReport(ok=not violations, violations=violations)


def concept_sort_key(ctx: NContext, c: Concept):
    """Canonical order: lexicographic on the component bit strings."""
    return tuple(
        tuple(1 if x in comp else 0 for x in range(len(ctx.dims[d])))
        for d, comp in enumerate(c)
    )


@dataclass(frozen=True)
class ConceptSet:
    """The concepts of one context, kept in canonical order."""

    ctx: NContext
    concepts: tuple[Concept, ...]

    @staticmethod
    def from_iterable(ctx: NContext, concepts: Iterable[Concept]) -> "ConceptSet":
        unique = set(concepts)
        ordered = sorted(unique, key=lambda c: concept_sort_key(ctx, c))
        return ConceptSet(ctx, tuple(ordered))

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[Concept]:
        return iter(self.concepts)

    def __contains__(self, c) -> bool:
        return tuple(frozenset(comp) for comp in c) in set(self.concepts)

    def features(self) -> frozenset[tuple[frozenset[int], ...]]:
        return features(self.concepts)

    def labelled(self) -> list[tuple[tuple[str, ...], ...]]:
        """Concepts with element labels instead of indices, sorted per component."""
        out = []
        for c in self.concepts:
            out.append(tuple(
                tuple(self.ctx.dims[d][x] for x in sorted(comp))
                for d, comp in enumerate(c)
            ))
        return out


def to_dense(ctx: NContext) -> np.ndarray:
    """The relation as a boolean tensor of shape ctx.sizes."""
    arr = np.zeros(ctx.sizes, dtype=bool)
    for t in ctx.relation:
        arr[t] = True
    return arr


def from_dense(arr: np.ndarray, dims: Sequence[Sequence[str]] | None = None) -> NContext:
    """Build a context from a boolean tensor; labels default to "1".."j"."""
    arr = np.asarray(arr, dtype=bool)
    if arr.ndim < 2:
        raise ValueError(f"need at least 2 dimensions, got {arr.ndim}")
    if dims is None:
        dims = [tuple(str(i + 1) for i in range(s)) for s in arr.shape]
    relation = frozenset(tuple(int(x) for x in t) for t in zip(*np.nonzero(arr)))
    return NContext.build(dims, relation)


class _ContextBits:
    """Bitmask view of a context for fast fullness and maximality tests.

    Cells are numbered in row-major order; masks[d][x] selects the cells
    whose d-th coordinate is x.
    """

    def __init__(self, ctx: NContext):
        sizes = ctx.sizes
        n = len(sizes)
        strides = [1] * n
        for d in range(n - 2, -1, -1):
            strides[d] = strides[d + 1] * sizes[d + 1]
        self.sizes = sizes
        self.strides = strides
        rel = 0
        for t in ctx.relation:
            idx = sum(x * strides[d] for d, x in enumerate(t))
            rel |= 1 << idx
        self.relation_mask = rel
        self.masks: list[list[int]] = []
        total = ctx.cell_count()
        for d in range(n):
            per_elem = [0] * sizes[d]
            for cell in range(total):
                x = (cell // strides[d]) % sizes[d]
                per_elem[x] |= 1 << cell
            self.masks.append(per_elem)
        self.full_mask = (1 << total) - 1

    def component_mask(self, d: int, comp: frozenset[int]) -> int:
        m = 0
        for x in comp:
            m |= self.masks[d][x]
        return m

    def box_mask(self, comps: Sequence[frozenset[int]]) -> int:
        m = self.full_mask
        for d, comp in enumerate(comps):
            m &= self.component_mask(d, comp)
        return m

    def box_is_full(self, comps: Sequence[frozenset[int]]) -> bool:
        if any(not comp for comp in comps):
            return True
        m = self.box_mask(comps)
        return m & self.relation_mask == m

    def box_is_maximal(self, comps: Sequence[frozenset[int]]) -> bool:
        n = len(self.sizes)
        for d in range(n):
            others = self.full_mask
            for k, comp in enumerate(comps):
                if k != d:
                    others &= self.component_mask(k, comp)
            for x in range(self.sizes[d]):
                if x in comps[d]:
                    continue
                grown = others & self.masks[d][x]
                if grown & self.relation_mask == grown:
                    return False
        return True


@lru_cache(maxsize=512)
def context_bits(ctx: NContext) -> _ContextBits:
    return _ContextBits(ctx)
