"""Noncrossing alternating forests and the cluster parking poset.

A noncrossing alternating forest on [n] is a set of edges {i, j}, written
with i < j, such that no two edges {i, j} and {k, l} satisfy
i < k <= j < l.  This single pairwise condition rules out both crossings
(i < k < j < l) and paths that bend the wrong way at a shared vertex
(k = j), which is the alternating requirement: every vertex is the smaller
endpoint of all its edges or the larger endpoint of all its edges.  The
faces form a simplicial complex Delta_n whose face numbers are the
unsigned Whitney numbers of the first kind of the noncrossing partition
lattice; the total face counts 1, 2, 6, 22, 90, 394, 1806, ... are the
little Schroeder numbers.  The facets are the noncrossing alternating
spanning trees, there are Catalan(n - 1) of them, and every facet contains
the long edge (1, n), so the complex is a cone over the subcomplex of
faces avoiding that edge, which is itself a homology sphere of dimension
n - 3.

Taking connected components sends a face to a noncrossing partition.  The
map reverses order (more edges means coarser components, and coarser is
smaller here), and its fibers have sizes given by products of Catalan
numbers over the blocks.  Pulling the parking function poset back along
the Kreweras complement of this map produces the cluster parking poset:
pairs (face, element) where the complement of the face's components is
the element's partition, ordered componentwise.  The symmetric group acts
on the element coordinate alone.  This poset is the face poset of a
simplicial complex, every principal order ideal is boolean, and its
proper part has the same homology and character as the proper part of
the parking function poset.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from .nc import NoncrossingPartition, Permutation, kreweras
from .objects import ParkingElement, enumerate_elements
from .parking_order import pp_leq
from .poset import FinitePoset

Edge = tuple[int, int]


def edges_compatible(e: Edge, f: Edge) -> bool:
    """Whether two edges (each written (smaller, larger)) may share a face."""
    for (i, j), (k, l) in ((e, f), (f, e)):
        if i < k <= j < l:
            return False
    return True


def _normalize(n: int, edges: Iterable[Iterable[int]]) -> frozenset[Edge]:
    out = set()
    for edge in edges:
        a, b = edge
        if a == b:
            raise ValueError(f"loop at vertex {a}")
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"edge {edge!r} leaves the vertex set [1, {n}]")
        out.add((min(a, b), max(a, b)))
    return frozenset(out)


def _is_forest(n: int, edges: frozenset[Edge]) -> bool:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def is_forest_face(n: int, edges: Iterable[Iterable[int]]) -> bool:
    """Membership test for the noncrossing alternating forest complex.

    Vertices outside [1, n] and loops raise ValueError; otherwise the edge
    set is accepted iff it is pairwise compatible and acyclic.  (Up to the
    sizes exercised here the pairwise condition already forces acyclicity,
    but the definition asks for a forest, so the check stays.)
    """
    face = _normalize(n, edges)
    pairs = sorted(face)
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            if not edges_compatible(pairs[a], pairs[b]):
                return False
    return _is_forest(n, face)


def enumerate_forest_faces(n: int) -> list[frozenset[Edge]]:
    """All faces of the complex, the empty face included, by backtracking
    over edges in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    all_edges = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    faces: list[frozenset[Edge]] = []

    def extend(face: list[Edge], candidates: list[Edge]) -> None:
        faces.append(frozenset(face))
        for idx, e in enumerate(candidates):
            face.append(e)
            if _is_forest(n, frozenset(face)):
                extend(
                    face,
                    [f for f in candidates[idx + 1 :] if edges_compatible(e, f)],
                )
            face.pop()

    extend([], all_edges)
    return faces


def face_counts_by_size(n: int) -> list[int]:
    """Number of faces with s edges for s = 0 .. n - 1; these match the
    unsigned Whitney numbers of the first kind of the noncrossing
    partition lattice on [n]."""
    counts = [0] * n
    for face in enumerate_forest_faces(n):
        counts[len(face)] += 1
    return counts


def forest_components(n: int, edges: Iterable[Iterable[int]]) -> NoncrossingPartition:
    """Partition of [n] into connected components of the forest.

    For a face of the complex the result is always noncrossing; the
    constructor validates this, so passing a crossing edge set raises.
    """
    face = _normalize(n, edges)
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in face:
        parent[find(a)] = find(b)
    blocks = defaultdict(list)
    for v in range(1, n + 1):
        blocks[find(v)].append(v)
    return NoncrossingPartition(n, blocks.values())


def spanning_facets(n: int) -> list[frozenset[Edge]]:
    """The maximal faces: noncrossing alternating spanning trees."""
    return [f for f in enumerate_forest_faces(n) if len(f) == n - 1]


def boundary_faces(n: int) -> list[frozenset[Edge]]:
    """Faces avoiding the cone apex (1, n); a homology (n-3)-sphere."""
    apex = (1, n)
    return [f for f in enumerate_forest_faces(n) if apex not in f]


def face_poset(faces: Iterable[frozenset[Edge]]) -> FinitePoset:
    """Inclusion order on the nonempty faces.

    The order complex of this poset is the barycentric subdivision of the
    simplicial complex, so the homology machinery applied to it computes
    the homology of the complex itself.
    """
    nonempty = sorted((f for f in faces if f), key=sorted)
    covers = [
        (f, g)
        for f in nonempty
        for g in nonempty
        if len(g) == len(f) + 1 and f < g
    ]
    return FinitePoset(nonempty, covers)


# ----- cluster parking functions -----


def cluster_elements(n: int) -> list[tuple[frozenset[Edge], ParkingElement]]:
    """Pairs (face, element) whose coordinates match over the noncrossing
    partition lattice: the Kreweras complement of the face's components
    equals the element's partition."""
    by_partition: dict[NoncrossingPartition, list[frozenset[Edge]]] = defaultdict(
        list
    )
    for face in enumerate_forest_faces(n):
        by_partition[kreweras(forest_components(n, face))].append(face)
    pairs = []
    for elem in enumerate_elements(n):
        for face in by_partition.get(elem.partition, ()):
            pairs.append((face, elem))
    return pairs


def cluster_leq(
    a: tuple[frozenset[Edge], ParkingElement],
    b: tuple[frozenset[Edge], ParkingElement],
) -> bool:
    """Componentwise order: face containment and parking order."""
    return a[0] <= b[0] and pp_leq(a[1], b[1])


def build_cluster_poset(n: int) -> FinitePoset:
    """The cluster parking poset, covers computed from the full order."""
    return FinitePoset.from_leq(cluster_elements(n), cluster_leq)


def cluster_action(
    perm: Permutation, pair: tuple[frozenset[Edge], ParkingElement]
) -> tuple[frozenset[Edge], ParkingElement]:
    """Symmetric group action: relabel the parking element, keep the face.

    The action moves an element's labels but never its partition, so the
    matching condition with the face is preserved.
    """
    return (pair[0], pair[1].act(perm))
