"""Order structure of the parking poset and related posets.

The parking poset on [n] consists of all pairs (partition, sigma) from
objects.ParkingElement, ordered by simultaneous refinement: an element is
below another when its partition is coarser and every label set of a
coarse block is the union of the label sets of the finer blocks inside
it.  Equivalently, eta shrinks pointwise going up.

The poset is graded by number of blocks minus one, has a unique bottom
(one block labeled by everything) and n! maximal elements; adjoining an
artificial top turns it into a lattice.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from itertools import combinations
from typing import Iterable, Iterator

from .nc import (
    NoncrossingPartition,
    SetPartition,
    is_noncrossing,
)
from .objects import ParkingElement, enumerate_elements
from .poset import FinitePoset


class _Top:
    """Sentinel for the artificial maximum adjoined to the parking poset."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "TOP"


TOP = _Top()


def element_from_block_labels(
    n: int, pairs: Iterable[tuple[Iterable[int], Iterable[int]]]
) -> ParkingElement:
    """Build an element from (block, label set) pairs in any order."""
    pairs = [(sorted(b), sorted(lab)) for b, lab in pairs]
    partition = NoncrossingPartition(n, [b for b, _ in pairs])
    by_min = {b[0]: lab for b, lab in pairs}
    return ParkingElement.from_triple(
        partition, [by_min[b[0]] for b in partition.blocks]
    )


# ----- noncrossing partition covers -----


def nc_upper_covers(partition: NoncrossingPartition) -> list[NoncrossingPartition]:
    """Split one block into a contiguous run (not containing the minimum)
    and its complement; every such split stays noncrossing and they are
    exactly the covers above."""
    out = []
    for idx, block in enumerate(partition.blocks):
        m = len(block)
        others = [b for t, b in enumerate(partition.blocks) if t != idx]
        for i in range(1, m):
            for j in range(i, m):
                b2 = block[i : j + 1]
                b1 = block[:i] + block[j + 1 :]
                out.append(NoncrossingPartition(partition.n, others + [b1, b2]))
    return out


def nc_lower_covers(partition: NoncrossingPartition) -> list[NoncrossingPartition]:
    """Merge two blocks whenever the result is still noncrossing."""
    out = []
    blocks = partition.blocks
    for i, j in combinations(range(len(blocks)), 2):
        merged = [b for t, b in enumerate(blocks) if t not in (i, j)]
        merged.append(sorted(blocks[i] + blocks[j]))
        candidate = SetPartition(partition.n, merged)
        if is_noncrossing(candidate):
            out.append(NoncrossingPartition(partition.n, candidate.blocks))
    return out


def nc_coarsenings(partition: NoncrossingPartition) -> set[NoncrossingPartition]:
    """All noncrossing partitions below the given one (inclusive), i.e.
    its principal order ideal in NC_n, by closing under block merges."""
    seen = {partition}
    frontier = [partition]
    while frontier:
        p = frontier.pop()
        for q in nc_lower_covers(p):
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return seen


@lru_cache(maxsize=None)
def build_nc_poset(n: int) -> FinitePoset:
    """The noncrossing partition lattice NC_n as a FinitePoset."""
    if n > 9:
        raise ValueError("build_nc_poset is guarded to n <= 9")
    from .nc import enumerate_noncrossing

    elements = sorted(
        enumerate_noncrossing(n), key=lambda p: (len(p.blocks), p.blocks)
    )
    covers = []
    for p in elements:
        for q in nc_upper_covers(p):
            covers.append((p, q))
    return FinitePoset(elements, covers)


# ----- parking poset order -----


def pp_leq(a: ParkingElement, b: ParkingElement) -> bool:
    """a <= b iff eta_b(v) is contained in eta_a(v) for every value v."""
    if a.n != b.n:
        raise ValueError("elements live on different ground sets")
    return all(
        set(down) >= set(up) for down, up in zip(a.eta(), b.eta())
    )


def pp_leq_by_refinement(a: ParkingElement, b: ParkingElement) -> bool:
    """The definition route, kept independent of pp_leq for cross-checks:
    the partition of b refines that of a, and each label set of a is the
    union of the label sets of the sub-blocks in b."""
    if a.n != b.n:
        raise ValueError("elements live on different ground sets")
    if not b.partition.refines(a.partition):
        return False
    b_labels = b.labels
    for block, lab in zip(a.partition.blocks, a.labels):
        sub = {b.partition.block_index_of(x) for x in block}
        union: set[int] = set()
        for t in sub:
            union.update(b_labels[t])
        if union != set(lab):
            return False
    return True


def upper_covers(elem: ParkingElement) -> list[ParkingElement]:
    """Split a block into a contiguous run and its complement, and
    distribute the label set among the two new blocks in every way that
    matches the new sizes."""
    out = []
    blocks = elem.partition.blocks
    labels = elem.labels
    n = elem.n
    for idx, (block, lab) in enumerate(zip(blocks, labels)):
        m = len(block)
        others = [
            (b, l) for t, (b, l) in enumerate(zip(blocks, labels)) if t != idx
        ]
        for i in range(1, m):
            for j in range(i, m):
                b2 = block[i : j + 1]
                b1 = block[:i] + block[j + 1 :]
                for s2 in combinations(lab, len(b2)):
                    taken = set(s2)
                    s1 = [x for x in lab if x not in taken]
                    out.append(
                        element_from_block_labels(
                            n, others + [(b1, s1), (b2, list(s2))]
                        )
                    )
    return out


def lower_covers(elem: ParkingElement) -> list[ParkingElement]:
    """Merge two blocks (and their label sets) whenever the merged
    partition stays noncrossing."""
    out = []
    blocks = elem.partition.blocks
    labels = elem.labels
    for i, j in combinations(range(len(blocks)), 2):
        merged_blocks = [b for t, b in enumerate(blocks) if t not in (i, j)]
        merged_blocks.append(sorted(blocks[i] + blocks[j]))
        candidate = SetPartition(elem.n, merged_blocks)
        if not is_noncrossing(candidate):
            continue
        pairs = [
            (b, l) for t, (b, l) in enumerate(zip(blocks, labels)) if t not in (i, j)
        ]
        pairs.append((sorted(blocks[i] + blocks[j]), sorted(labels[i] + labels[j])))
        out.append(element_from_block_labels(elem.n, pairs))
    return out


def descend(elem: ParkingElement, coarser: NoncrossingPartition) -> ParkingElement:
    """The unique element below elem with the given coarser partition.

    Label sets merge along with blocks.  Requires the partition of elem
    to refine `coarser`.
    """
    if not elem.partition.refines(coarser):
        raise ValueError("descend needs a coarsening of the element's partition")
    labels = elem.labels
    pairs = []
    for block in coarser.blocks:
        sub = {elem.partition.block_index_of(x) for x in block}
        lab = sorted(y for t in sub for y in labels[t])
        pairs.append((block, lab))
    return element_from_block_labels(elem.n, pairs)


def ideal(elem: ParkingElement) -> list[ParkingElement]:
    """The principal order ideal of elem: one element per noncrossing
    coarsening of its partition, by descent uniqueness."""
    return [
        descend(elem, p)
        for p in sorted(
            nc_coarsenings(elem.partition), key=lambda p: (len(p.blocks), p.blocks)
        )
    ]


def pp_join(a: ParkingElement, b: ParkingElement):
    """Least upper bound in the parking poset with artificial top.

    Intersect eta pointwise.  An empty intersection, or a group of values
    whose size differs from its common intersection block, forces the
    join up to TOP.  Otherwise the intersections form the common
    refinement of the two partitions and the value groups are its label
    sets.
    """
    if a.n != b.n:
        raise ValueError("elements live on different ground sets")
    n = a.n
    if n == 0:
        return a
    ea, eb = a.eta(), b.eta()
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(1, n + 1):
        inter = frozenset(ea[v - 1]) & frozenset(eb[v - 1])
        if not inter:
            return TOP
        groups.setdefault(inter, []).append(v)
    pairs = []
    for block, values in groups.items():
        if len(values) != len(block):
            return TOP
        pairs.append((sorted(block), values))
    return element_from_block_labels(n, pairs)


def pp_join_many(elems: Iterable[ParkingElement]):
    """Fold of pp_join; TOP is absorbing."""

    def step(acc, x):
        if acc is TOP:
            return TOP
        return pp_join(acc, x)

    it = iter(elems)
    try:
        first = next(it)
    except StopIteration:
        raise ValueError("pp_join_many needs at least one element")
    return reduce(step, it, first)


def pp_meet(a: ParkingElement, b: ParkingElement) -> ParkingElement:
    """Greatest lower bound, as the join of all common lower bounds."""
    lower = [x for x in ideal(a) if pp_leq(x, b)]
    result = pp_join_many(lower)
    if result is TOP or not (pp_leq(result, a) and pp_leq(result, b)):
        raise RuntimeError(f"meet computation failed for {a!r}, {b!r}")
    return result


MAX_POSET_N = 5


@lru_cache(maxsize=None)
def build_pp_poset(n: int) -> FinitePoset:
    """The parking poset on [n] as a FinitePoset, elements sorted by
    (rank, word), covers generated by block splitting."""
    if n > MAX_POSET_N:
        raise ValueError(f"build_pp_poset is guarded to n <= {MAX_POSET_N}")
    elements = sorted(enumerate_elements(n), key=lambda e: e.sort_key)
    covers = []
    for elem in elements:
        for above in upper_covers(elem):
            covers.append((elem, above))
    return FinitePoset(elements, covers)


@lru_cache(maxsize=None)
def build_pp_poset_hat(n: int) -> FinitePoset:
    """The parking poset with an artificial top adjoined."""
    base = build_pp_poset(n)
    covers = [
        (base.elements[i], base.elements[j]) for i, j in base.cover_index_pairs()
    ]
    covers.extend((base.elements[i], TOP) for i in base.maximal_indices())
    return FinitePoset(list(base.elements) + [TOP], covers)


# ----- permutahedron face poset and right combs -----


def ordered_set_compositions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All ordered set compositions of [n], each part a sorted tuple."""

    def rec(pool: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if not pool:
            yield ()
            return
        for r in range(1, len(pool) + 1):
            for first in combinations(pool, r):
                taken = set(first)
                rest = tuple(x for x in pool if x not in taken)
                for tail in rec(rest):
                    yield (first,) + tail

    yield from rec(tuple(range(1, n + 1)))


def leq_composition(
    c: tuple[tuple[int, ...], ...], d: tuple[tuple[int, ...], ...]
) -> bool:
    """c <= d when c is obtained from d by merging adjacent parts."""
    it = iter(d)
    for part in c:
        target = set(part)
        acc: set[int] = set()
        while acc != target:
            nxt = next(it, None)
            if nxt is None or not acc.union(nxt) <= target:
                return False
            acc.update(nxt)
    return next(it, None) is None


@lru_cache(maxsize=None)
def permutahedron_face_poset(n: int) -> FinitePoset:
    """Face poset of the permutahedron: ordered set compositions of [n],
    with covers given by merging two adjacent parts (downward).  Oriented
    with the one-part composition at the bottom."""
    if n > 6:
        raise ValueError("permutahedron_face_poset is guarded to n <= 6")
    elements = sorted(ordered_set_compositions(n), key=lambda c: (len(c), c))
    covers = []
    for comp in elements:
        for i in range(len(comp) - 1):
            merged = (
                comp[:i]
                + (tuple(sorted(comp[i] + comp[i + 1])),)
                + comp[i + 2 :]
            )
            covers.append((merged, comp))
    return FinitePoset(elements, covers)


def right_comb_subposet(n: int) -> FinitePoset:
    """Induced subposet of the parking poset on its right-comb elements;
    order-isomorphic to the permutahedron face poset via to_composition."""
    poset = build_pp_poset(n)
    keep = [x for x in poset.elements if x.is_right_comb()]
    return poset.induced(keep)
