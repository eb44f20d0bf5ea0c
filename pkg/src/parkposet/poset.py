"""A small exact kernel for finite posets given by their cover relations.

Elements can be any hashable objects.  The order is stored as bitmask
closures of the cover digraph, so containment tests, Mobius values,
multichain counts and lattice checks all run on plain integers.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator, Sequence


class FinitePoset:
    """Finite poset built from an element list and cover pairs (low, high)."""

    def __init__(
        self,
        elements: Sequence[Hashable],
        covers: Iterable[tuple[Hashable, Hashable]],
    ):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        m = len(self.elements)
        up_sets: list[set[int]] = [set() for _ in range(m)]
        down_sets: list[set[int]] = [set() for _ in range(m)]
        for a, b in covers:
            ia, ib = self.index[a], self.index[b]
            if ia == ib:
                raise ValueError("self-cover")
            up_sets[ia].add(ib)
            down_sets[ib].add(ia)
        self.up = [sorted(s) for s in up_sets]
        self.down = [sorted(s) for s in down_sets]
        self._topo = self._toposort()
        self._downmasks: list[int] | None = None
        self._upmasks: list[int] | None = None
        self._downlists: list[list[int]] | None = None
        self._ranks: list[int] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def _toposort(self) -> list[int]:
        m = len(self.elements)
        indeg = [len(self.down[i]) for i in range(m)]
        order = [i for i in range(m) if indeg[i] == 0]
        head = 0
        while head < len(order):
            i = order[head]
            head += 1
            for j in self.up[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    order.append(j)
        if len(order) != m:
            raise ValueError("cover relation contains a cycle")
        return order

    # ----- order relation -----

    def _ensure_masks(self) -> None:
        if self._downmasks is not None:
            return
        m = len(self.elements)
        down = [0] * m
        for i in self._topo:
            mask = 1 << i
            for j in self.down[i]:
                mask |= down[j]
            down[i] = mask
        upm = [0] * m
        for i in reversed(self._topo):
            mask = 1 << i
            for j in self.up[i]:
                mask |= upm[j]
            upm[i] = mask
        self._downmasks = down
        self._upmasks = upm

    def leq_index(self, i: int, j: int) -> bool:
        self._ensure_masks()
        return bool(self._downmasks[j] >> i & 1)

    def leq(self, x: Hashable, y: Hashable) -> bool:
        return self.leq_index(self.index[x], self.index[y])

    def downset_mask(self, i: int) -> int:
        self._ensure_masks()
        return self._downmasks[i]

    def upset_mask(self, i: int) -> int:
        self._ensure_masks()
        return self._upmasks[i]

    def _down_lists(self) -> list[list[int]]:
        if self._downlists is None:
            self._ensure_masks()
            self._downlists = [_bits(mask) for mask in self._downmasks]
        return self._downlists

    # ----- extrema and rank -----

    def minimal_indices(self) -> list[int]:
        return [i for i in range(len(self.elements)) if not self.down[i]]

    def maximal_indices(self) -> list[int]:
        return [i for i in range(len(self.elements)) if not self.up[i]]

    def bottom(self) -> Hashable:
        mins = self.minimal_indices()
        if len(mins) != 1:
            raise ValueError(f"poset has {len(mins)} minimal elements")
        return self.elements[mins[0]]

    def top(self) -> Hashable:
        maxs = self.maximal_indices()
        if len(maxs) != 1:
            raise ValueError(f"poset has {len(maxs)} maximal elements")
        return self.elements[maxs[0]]

    def ranks(self) -> list[int]:
        """Rank of each element, requiring every cover to raise rank by
        exactly one and all minimal elements to sit at rank zero."""
        if self._ranks is None:
            m = len(self.elements)
            rank = [0] * m
            for i in self._topo:
                if self.down[i]:
                    values = {rank[j] + 1 for j in self.down[i]}
                    if len(values) != 1:
                        raise ValueError(
                            f"poset is not graded at element {self.elements[i]!r}"
                        )
                    rank[i] = values.pop()
            self._ranks = rank
        return self._ranks

    def height(self) -> int:
        return max(self.ranks(), default=0)

    def rank_of(self, x: Hashable) -> int:
        return self.ranks()[self.index[x]]

    # ----- Mobius and Whitney numbers -----

    def mobius_from_bottom(self) -> dict[Hashable, int]:
        """mu(bottom, x) for every x, by rank-ordered recursion."""
        bottom_i = self.index[self.bottom()]
        down_lists = self._down_lists()
        mu = [0] * len(self.elements)
        mu[bottom_i] = 1
        for i in self._topo:
            if i == bottom_i:
                continue
            mu[i] = -sum(mu[j] for j in down_lists[i] if j != i)
        return {self.elements[i]: mu[i] for i in range(len(self.elements))}

    def mobius_hat(self) -> int:
        """mu(bottom, top) after adjoining an artificial top element."""
        return -sum(self.mobius_from_bottom().values())

    def whitney_second(self) -> list[int]:
        counts = [0] * (self.height() + 1)
        for r in self.ranks():
            counts[r] += 1
        return counts

    def whitney_first(self) -> list[int]:
        """Rank-wise sums of mu(bottom, x)."""
        mu = self.mobius_from_bottom()
        out = [0] * (self.height() + 1)
        for x, r in zip(self.elements, self.ranks()):
            out[r] += mu[x]
        return out

    # ----- chains -----

    def zeta_count(self, k: int) -> int:
        """Number of k-multichains x_1 <= ... <= x_k; k = 0 gives 1."""
        if k == 0:
            return 1
        down_lists = self._down_lists()
        vec = [1] * len(self.elements)
        for _ in range(k - 1):
            vec = [sum(vec[j] for j in down_lists[i]) for i in range(len(vec))]
        return sum(vec)

    def count_maximal_chains(self) -> int:
        paths = [0] * len(self.elements)
        for i in reversed(self._topo):
            paths[i] = sum(paths[j] for j in self.up[i]) if self.up[i] else 1
        return sum(paths[i] for i in self.minimal_indices())

    def maximal_chains(self) -> Iterator[tuple[Hashable, ...]]:
        """All maximal chains, as element tuples from minimal to maximal."""

        def extend(i: int, acc: list[int]) -> Iterator[tuple[Hashable, ...]]:
            acc.append(i)
            if not self.up[i]:
                yield tuple(self.elements[j] for j in acc)
            else:
                for j in self.up[i]:
                    yield from extend(j, acc)
            acc.pop()

        for i in sorted(self.minimal_indices()):
            yield from extend(i, [])

    # ----- derived posets -----

    def induced(self, keep: Iterable[Hashable]) -> "FinitePoset":
        """Induced subposet on a subset of elements, with covers recomputed
        from the full order relation."""
        self._ensure_masks()
        keep_idx = sorted(self.index[x] for x in keep)
        keep_mask = 0
        for i in keep_idx:
            keep_mask |= 1 << i
        covers = []
        for i in keep_idx:
            strictly_above = self._upmasks[i] & keep_mask & ~(1 << i)
            for j in _bits(strictly_above):
                between = self._upmasks[i] & self._downmasks[j] & keep_mask
                if between == (1 << i | 1 << j):
                    covers.append((self.elements[i], self.elements[j]))
        return FinitePoset([self.elements[i] for i in keep_idx], covers)

    def interval(self, a: Hashable, b: Hashable) -> "FinitePoset":
        """Closed interval [a, b]; its covers are the restricted covers."""
        self._ensure_masks()
        ia, ib = self.index[a], self.index[b]
        mask = self._upmasks[ia] & self._downmasks[ib]
        keep = _bits(mask)
        keep_set = set(keep)
        covers = [
            (self.elements[i], self.elements[j])
            for i in keep
            for j in self.up[i]
            if j in keep_set
        ]
        return FinitePoset([self.elements[i] for i in keep], covers)

    def without_bottom(self) -> "FinitePoset":
        """Drop the unique minimum; remaining covers are unchanged."""
        b = self.index[self.bottom()]
        keep = [i for i in range(len(self.elements)) if i != b]
        covers = [
            (self.elements[i], self.elements[j])
            for i in keep
            for j in self.up[i]
        ]
        return FinitePoset([self.elements[i] for i in keep], covers)

    def without_top(self) -> "FinitePoset":
        t = self.index[self.top()]
        keep = [i for i in range(len(self.elements)) if i != t]
        covers = [
            (self.elements[i], self.elements[j])
            for i in keep
            for j in self.up[i]
            if j != t
        ]
        return FinitePoset([self.elements[i] for i in keep], covers)

    # ----- lattice operations -----

    def join_index(self, i: int, j: int) -> int | None:
        """Index of the least upper bound, or None when it does not exist."""
        self._ensure_masks()
        common = self._upmasks[i] & self._upmasks[j]
        if common == 0:
            return None
        candidates = _bits(common)
        minimal = [
            u for u in candidates if self._downmasks[u] & common == 1 << u
        ]
        return minimal[0] if len(minimal) == 1 else None

    def meet_index(self, i: int, j: int) -> int | None:
        self._ensure_masks()
        common = self._downmasks[i] & self._downmasks[j]
        if common == 0:
            return None
        candidates = _bits(common)
        maximal = [
            u for u in candidates if self._upmasks[u] & common == 1 << u
        ]
        return maximal[0] if len(maximal) == 1 else None

    def join(self, x: Hashable, y: Hashable) -> Hashable | None:
        k = self.join_index(self.index[x], self.index[y])
        return None if k is None else self.elements[k]

    def meet(self, x: Hashable, y: Hashable) -> Hashable | None:
        k = self.meet_index(self.index[x], self.index[y])
        return None if k is None else self.elements[k]

    def is_lattice(self) -> bool:
        m = len(self.elements)
        for i in range(m):
            for j in range(i + 1, m):
                if self.leq_index(i, j) or self.leq_index(j, i):
                    continue
                if self.join_index(i, j) is None or self.meet_index(i, j) is None:
                    return False
        return True

    # ----- serialization -----

    def cover_index_pairs(self) -> list[tuple[int, int]]:
        return sorted((i, j) for i in range(len(self.elements)) for j in self.up[i])

    def to_json(
        self, label: Callable[[Hashable], object] = str, **meta: object
    ) -> dict:
        data: dict = dict(meta)
        data["elements"] = [label(x) for x in self.elements]
        data["covers"] = [list(pair) for pair in self.cover_index_pairs()]
        return data

    def to_dot(self, label: Callable[[Hashable], str] = str) -> str:
        lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=box];"]
        for i, x in enumerate(self.elements):
            lines.append(f'  v{i} [label="{label(x)}"];')
        for i, j in self.cover_index_pairs():
            lines.append(f"  v{i} -> v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_leq(
        cls,
        elements: Sequence[Hashable],
        leq: Callable[[Hashable, Hashable], bool],
    ) -> "FinitePoset":
        """Build a poset from a comparison oracle by computing the full
        relation and reducing it to covers.  Quadratic in the number of
        elements with a cubic bit-parallel reduction; meant for posets of
        up to a few thousand elements."""
        elements = list(elements)
        m = len(elements)
        down = [1 << i for i in range(m)]
        up = [1 << i for i in range(m)]
        for i in range(m):
            for j in range(m):
                if i != j and leq(elements[j], elements[i]):
                    down[i] |= 1 << j
                    up[j] |= 1 << i
        covers = []
        for i in range(m):
            for j in _bits(down[i] & ~(1 << i)):
                if down[i] & up[j] == (1 << i | 1 << j):
                    covers.append((elements[j], elements[i]))
        return cls(elements, covers)


def _refinement_colors(poset: FinitePoset) -> list[int]:
    """Stable coloring of elements by iterated cover-degree signatures."""
    m = len(poset.elements)
    colors = [0] * m
    classes = 0
    while True:
        signatures = [
            (
                colors[i],
                tuple(sorted(colors[j] for j in poset.up[i])),
                tuple(sorted(colors[j] for j in poset.down[i])),
            )
            for i in range(m)
        ]
        palette = {s: c for c, s in enumerate(sorted(set(signatures)))}
        colors = [palette[s] for s in signatures]
        if len(palette) == classes:
            return colors
        classes = len(palette)


def posets_isomorphic(first: FinitePoset, second: FinitePoset) -> bool:
    """Whether two posets are isomorphic, by backtracking over a color
    refinement of the cover relations.  Meant for small posets; the
    refinement usually cuts the search down to almost nothing."""
    if len(first.elements) != len(second.elements):
        return False
    colors_a = _refinement_colors(first)
    colors_b = _refinement_colors(second)
    if sorted(colors_a) != sorted(colors_b):
        return False
    m = len(first.elements)
    first._ensure_masks()
    second._ensure_masks()
    candidates: dict[int, list[int]] = {}
    for j in range(m):
        candidates.setdefault(colors_b[j], []).append(j)
    order = sorted(
        range(m), key=lambda i: (len(candidates[colors_a[i]]), colors_a[i], i)
    )
    image = [0] * m
    used = [False] * m

    def extend(pos: int) -> bool:
        if pos == m:
            return True
        i = order[pos]
        for j in candidates[colors_a[i]]:
            if used[j]:
                continue
            if all(
                first.leq_index(order[q], i) == second.leq_index(image[order[q]], j)
                and first.leq_index(i, order[q])
                == second.leq_index(j, image[order[q]])
                for q in range(pos)
            ):
                image[i] = j
                used[j] = True
                if extend(pos + 1):
                    return True
                used[j] = False
        return False

    return extend(0)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
