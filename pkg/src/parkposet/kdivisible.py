"""k-divisible noncrossing partitions and parking chains.

Two equivalent pictures of k-divisibility coexist.  The chain picture
takes weak k-element chains as elements: for noncrossing partitions these
form a poset ordered by reverse containment of relative Kreweras
complements, and Fuss-Catalan many elements exist; for parking functions
a chain is compared through its noncrossing chain together with its last
element, and there are (kn + 1)^(n - 1) chains.  The subposet picture
keeps ordinary (2-)partitions of [kn] and restricts to those all of whose
blocks have size divisible by k.  For noncrossing partitions the two
pictures give isomorphic posets.  For parking functions they do not: the
subposet carries an action of the larger symmetric group, and the two
permutation characters match only after the substitution that sends each
homogeneous symmetric function h_i to h_{ki}, which concretely means the
multiset of block size types of chain tops, scaled by k, equals the
multiset of block size types in the subposet.

A chain is prime when its first (coarsest) element is prime.  Primality
survives coarsening, so this is the same as some element of the chain
being prime, and it is the convention forced by the counting: there are
(kn - 1)^(n - 1) prime chains, matching the prime parking character.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Sequence

from .nc import (
    NoncrossingPartition,
    Permutation,
    enumerate_noncrossing,
    nc_leq,
    relative_kreweras,
)
from .objects import ParkingElement, enumerate_elements
from .parking_order import pp_leq
from .poset import FinitePoset


def weak_chains(
    elements: Sequence[Hashable],
    leq: Callable[[Hashable, Hashable], bool],
    k: int,
) -> list[tuple[Hashable, ...]]:
    """All weak k-element chains x_1 <= ... <= x_k of a finite order."""
    if k < 1:
        raise ValueError("chain length must be at least 1")
    chains: list[tuple[Hashable, ...]] = [()]
    for _ in range(k):
        chains = [
            chain + (x,)
            for chain in chains
            for x in elements
            if not chain or leq(chain[-1], x)
        ]
    return chains


def relative_complement_chain(
    n: int, nc_chain: Sequence[NoncrossingPartition]
) -> tuple[NoncrossingPartition, ...]:
    """Consecutive relative Kreweras complements of a weak chain, starting
    from the one-block partition.  The original chain can be recovered
    from this vector, which is why comparing the vectors gives a partial
    order on chains."""
    previous = NoncrossingPartition(n, [range(1, n + 1)])
    out = []
    for part in nc_chain:
        out.append(relative_kreweras(previous, part))
        previous = part
    return tuple(out)


def nck_elements(n: int, k: int) -> list[tuple[NoncrossingPartition, ...]]:
    """Weak k-chains of noncrossing partitions; Fuss-Catalan many."""
    return weak_chains(list(enumerate_noncrossing(n)), nc_leq, k)


def nck_leq(
    a: Sequence[NoncrossingPartition], b: Sequence[NoncrossingPartition]
) -> bool:
    """Order on k-divisible noncrossing partitions: the relative complement
    vector of the smaller chain dominates that of the larger one."""
    n = a[0].n
    nu_a = relative_complement_chain(n, a)
    nu_b = relative_complement_chain(n, b)
    return all(nc_leq(nb, na) for na, nb in zip(nu_a, nu_b))


def build_nck_poset(n: int, k: int) -> FinitePoset:
    """Poset of k-divisible noncrossing partitions in the chain picture."""
    chains = nck_elements(n, k)
    nu = {c: relative_complement_chain(n, c) for c in chains}

    def leq(a, b):
        return all(nc_leq(nb, na) for na, nb in zip(nu[a], nu[b]))

    return FinitePoset.from_leq(chains, leq)


def ppk_elements(n: int, k: int) -> list[tuple[ParkingElement, ...]]:
    """Weak k-chains of the parking function poset; (kn+1)^(n-1) many."""
    return weak_chains(list(enumerate_elements(n)), pp_leq, k)


def ppk_leq(
    a: Sequence[ParkingElement], b: Sequence[ParkingElement]
) -> bool:
    """Order on k-divisible noncrossing 2-partitions: the underlying
    noncrossing chains compare in the chain order and the last elements
    compare in the parking order."""
    if not pp_leq(a[-1], b[-1]):
        return False
    return nck_leq([x.partition for x in a], [x.partition for x in b])


def build_ppk_poset(n: int, k: int) -> FinitePoset:
    """Poset of k-divisible noncrossing 2-partitions in the chain picture."""
    chains = ppk_elements(n, k)
    nu = {
        c: relative_complement_chain(n, [x.partition for x in c])
        for c in chains
    }

    def leq(a, b):
        if not pp_leq(a[-1], b[-1]):
            return False
        return all(nc_leq(nb, na) for na, nb in zip(nu[a], nu[b]))

    return FinitePoset.from_leq(chains, leq)


def ppk_action(
    perm: Permutation, chain: Sequence[ParkingElement]
) -> tuple[ParkingElement, ...]:
    """Diagonal symmetric group action on a parking chain.

    Acting termwise preserves comparability and the underlying chain of
    noncrossing partitions, hence also the chain order.
    """
    return tuple(x.act(perm) for x in chain)


def is_prime_chain(chain: Sequence[ParkingElement]) -> bool:
    """Prime chains have a prime first element; see the module docstring."""
    return chain[0].is_prime()


# ----- the subposet picture -----


def divisible_nc_elements(n: int, k: int) -> list[NoncrossingPartition]:
    """Noncrossing partitions of [kn] all of whose blocks have size
    divisible by k."""
    return [
        p
        for p in enumerate_noncrossing(k * n)
        if all(len(b) % k == 0 for b in p.blocks)
    ]


def build_divisible_nc_poset(n: int, k: int) -> FinitePoset:
    """Subposet of the noncrossing partition lattice of [kn] on the
    k-divisible elements; isomorphic to the chain picture."""
    return FinitePoset.from_leq(divisible_nc_elements(n, k), nc_leq)


def divisible_parking_elements(n: int, k: int) -> list[ParkingElement]:
    """Parking elements on [kn] whose partition has k-divisible blocks."""
    return [
        e
        for e in enumerate_elements(k * n)
        if all(len(b) % k == 0 for b in e.partition.blocks)
    ]


def build_divisible_parking_poset(n: int, k: int) -> FinitePoset:
    """Subposet of the parking poset of [kn] on k-divisible elements.

    Unlike the noncrossing case this is not isomorphic to the chain
    picture; the two are related through their permutation characters
    (see the module docstring).
    """
    return FinitePoset.from_leq(divisible_parking_elements(n, k), pp_leq)
