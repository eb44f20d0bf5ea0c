"""Exact order-complex homology for finite posets.

The order complex of a finite poset is the simplicial complex whose faces
are the strict chains.  This module computes its reduced rational Betti
numbers with exact arithmetic: boundary ranks come from sparse Gaussian
elimination over Fraction entries, so there is no floating point anywhere.

On top of the generic machinery sit the facts specific to the parking
function poset.  Its proper part has reduced homology concentrated in the
top dimension n - 2, of dimension (n - 1)^(n - 1), and the symmetric group
character on that homology can be computed two independent ways:

* by the Hopf trace formula, counting chains fixed by a permutation, and
* by the closed product formula, sign times the prime parking character.

Both routes are exposed and the tests check them against each other.  The
Whitney modules, whose alternating sum also recovers the homology
character, are computed from Catalan weights over Kreweras complements.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable

from .nc import NoncrossingPartition, Permutation, kreweras
from .numbers import catalan
from .objects import enumerate_elements
from .parking_order import build_pp_poset
from .poset import FinitePoset

# ----- strict chains -----


def _strict_down_lists(poset: FinitePoset) -> list[list[int]]:
    """For each element index, the indices strictly below it."""
    out = []
    for i in range(len(poset)):
        mask = poset.downset_mask(i) & ~(1 << i)
        below = []
        while mask:
            low = mask & -mask
            below.append(low.bit_length() - 1)
            mask ^= low
        out.append(below)
    return out


def _increasing_order(poset: FinitePoset) -> list[int]:
    """A linear extension: sort indices by the size of their downsets."""
    return sorted(
        range(len(poset)), key=lambda i: bin(poset.downset_mask(i)).count("1")
    )


def count_chains_by_size(poset: FinitePoset) -> list[int]:
    """Numbers of strict chains with s elements, for s = 0, 1, ..., height+1.

    Entry 0 counts the empty chain, so it is always 1.  The list is what
    the flag f-vector of the order complex aggregates to: entry s is the
    number of faces of dimension s - 1.
    """
    m = len(poset)
    below = _strict_down_lists(poset)
    size_cap = poset.height() + 2 if m else 1
    ending = [[0] * size_cap for _ in range(m)]
    for i in _increasing_order(poset):
        ending[i][1] = 1
        for j in below[i]:
            row = ending[j]
            for s in range(1, size_cap - 1):
                ending[i][s + 1] += row[s]
    totals = [0] * size_cap
    totals[0] = 1
    for row in ending:
        for s in range(1, size_cap):
            totals[s] += row[s]
    while len(totals) > 1 and totals[-1] == 0:
        totals.pop()
    return totals


def chains_by_size(poset: FinitePoset) -> list[list[tuple[int, ...]]]:
    """All strict chains as increasing index tuples, grouped by size.

    Entry s lists the chains with s elements; entry 0 is [()] for the
    empty chain.  Sizes with no chains at the tail are trimmed.
    """
    m = len(poset)
    below = _strict_down_lists(poset)
    ending: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
    for i in _increasing_order(poset):
        chains = [(i,)]
        for j in below[i]:
            chains.extend(ch + (i,) for ch in ending[j])
        ending[i] = chains
    layers: list[list[tuple[int, ...]]] = [[()]]
    for chains in ending:
        for ch in chains:
            s = len(ch)
            while len(layers) <= s:
                layers.append([])
            layers[s].append(ch)
    for layer in layers[1:]:
        layer.sort()
    return layers


# ----- exact linear algebra -----


def sparse_rank(rows: Iterable[dict[int, int | Fraction]]) -> int:
    """Rank over the rationals of a sparse matrix given as {column: value}
    rows, by incremental elimination against a dictionary of pivot rows."""
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = row
                rank += 1
                break
            factor = row[col] / piv[col]
            for c, v in piv.items():
                new = row.get(c, 0) - factor * v
                if new:
                    row[c] = new
                else:
                    row.pop(c, None)
    return rank


def _boundary_rank(
    small: list[tuple[int, ...]], big: list[tuple[int, ...]]
) -> int:
    """Rank of the simplicial boundary map from chains of size s to chains
    of size s - 1, one alternating-sign row per larger chain."""
    position = {ch: i for i, ch in enumerate(small)}
    rows = []
    for ch in big:
        row: dict[int, int | Fraction] = {}
        for i in range(len(ch)):
            face = ch[:i] + ch[i + 1 :]
            row[position[face]] = 1 if i % 2 == 0 else -1
        rows.append(row)
    return sparse_rank(rows)


def reduced_betti(poset: FinitePoset) -> tuple[int, ...]:
    """Reduced rational Betti numbers of the order complex of the poset.

    Entry m + 1 of the result is the Betti number in dimension m, starting
    with dimension -1, so an empty poset gives (1,) and a poset whose
    order complex is connected and acyclic gives a tuple of zeros.  The
    augmented chain complex is used throughout: the empty chain spans the
    (-1)-dimensional chain group.
    """
    layers = chains_by_size(poset)
    ranks = [0] * (len(layers) + 1)
    for s in range(1, len(layers)):
        ranks[s] = _boundary_rank(layers[s - 1], layers[s])
    betti = []
    for s, layer in enumerate(layers):
        betti.append(len(layer) - ranks[s] - ranks[s + 1])
    return tuple(betti)


def reduced_euler_characteristic(poset: FinitePoset) -> int:
    """Alternating sum of reduced Betti numbers, computed from chain counts
    alone.  Equals the Mobius value of the poset with a bottom and top
    adjoined, by Philip Hall's theorem."""
    counts = count_chains_by_size(poset)
    return -sum((-1) ** s * c for s, c in enumerate(counts))


# ----- characters on homology -----


def lefschetz_number(
    proper: FinitePoset, transform: Callable[[Hashable], Hashable]
) -> int:
    """Alternating trace sum(m) (-1)^m tr(g | C_m) over the augmented chain
    complex of the order complex, for an order automorphism g.

    A chain fixed setwise by an order-preserving map is fixed pointwise,
    and then carries orientation sign +1, so each trace is just a count of
    chains inside the subposet of fixed elements.  By the Hopf trace
    formula the result equals the alternating sum of traces on homology;
    when homology is concentrated in one degree d, the character value
    there is (-1)^d times this number.
    """
    fixed = [x for x in proper.elements if transform(x) == x]
    if len(fixed) == len(proper):
        sub = proper
    else:
        sub = proper.induced(fixed)
    counts = count_chains_by_size(sub)
    return -sum((-1) ** s * c for s, c in enumerate(counts))


def top_homology_character(
    n: int, perm: Permutation, proper: FinitePoset | None = None
) -> int:
    """Character value of a permutation on the reduced homology of the
    proper part of the parking function poset, in its top degree n - 2.

    Computed by the Hopf trace formula; no closed formula is consulted.
    Passing the proper part explicitly avoids rebuilding the poset when
    evaluating many permutations.
    """
    if proper is None:
        proper = build_pp_poset(n).without_bottom()
    sign = -1 if (n - 2) % 2 else 1
    return sign * lefschetz_number(proper, lambda e: e.act(perm))


def signed_prime_character(n: int, k: int, perm: Permutation) -> int:
    """Closed form (-1)^(n - z) * (k*n - 1)^(z - 1) with z the number of
    cycles of the permutation.

    This is the sign character times the prime parking character, and it
    is the predicted character of the top reduced homology of the proper
    part of the k-divisible parking function poset (k = 1 gives the
    ordinary poset).
    """
    if perm.n != n:
        raise ValueError("permutation size does not match n")
    z = perm.num_cycles()
    return (-1) ** (n - z) * (k * n - 1) ** (z - 1)


# ----- Whitney modules -----


def interval_catalan_weight(partition: NoncrossingPartition) -> int:
    """Product of Catalan numbers C(|b| - 1) over the blocks b of the
    Kreweras complement.

    This is the number of maximal-dimension spheres in the open interval
    below the partition in the noncrossing partition lattice: the interval
    is a product of smaller noncrossing partition lattices, one factor per
    complement block, and each factor contributes a Catalan number."""
    weight = 1
    for block in kreweras(partition).blocks:
        weight *= catalan(len(block) - 1)
    return weight


def whitney_module_character(
    n: int, rank: int, perm: Permutation | None = None
) -> int:
    """Character (dimension when perm is None) of the rank-selected Whitney
    module of the parking function poset.

    The module at rank l has one summand per rank-l element, of dimension
    the interval Catalan weight of its partition; a permutation permutes
    the summands, so its trace only sees the elements it fixes.  The
    alternating sum over ranks, times (-1)^(n - 1), recovers the character
    of the top reduced homology.
    """
    total = 0
    for elem in enumerate_elements(n):
        if elem.rank != rank:
            continue
        if perm is not None and elem.act(perm) != elem:
            continue
        total += interval_catalan_weight(elem.partition)
    return total


def parking_betti(n: int) -> tuple[int, ...]:
    """Reduced Betti numbers of the proper part of the parking function
    poset, starting in dimension -1."""
    return reduced_betti(build_pp_poset(n).without_bottom())
