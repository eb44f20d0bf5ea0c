"""Bijections behind the chain counts of the parking poset.

This module relates three families of objects of the same cardinality
(kn + 1)^(n - 1):

* k-parking words on [n] (see `objects.is_parking_word`),
* k-parking trees on [n] (see `objects.validate_tree`),
* weak k-chains phi_1 <= ... <= phi_k in the parking poset.

The word/tree correspondence lives in `objects`.  Here we add the
tree/chain correspondence (`chain_from_ktree`, `ktree_from_chain`) and a
Prufer-style encoding of k-parking trees (`ktree_code`,
`ktree_from_code`) that explains the refined count

    l! * binom(kn, l) * stirling2(n, l + 1)

for trees with l + 1 nonempty nodes: a set partition of the labels, a
choice of l half-edges, and a permutation recording a leaf-deletion
order.  The module also provides the permutation characters of the
symmetric group acting on parking words (`parking_character`,
`prime_parking_character`).
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .nc import NoncrossingPartition, Permutation
from .objects import (
    ParkingElement,
    Tree,
    is_parking_word,
    validate_tree,
)
from .parking_order import descend, pp_leq


# ---------------------------------------------------------------------------
# parking words
# ---------------------------------------------------------------------------


def enumerate_parking_words(n: int, k: int = 1) -> Iterator[tuple[int, ...]]:
    """All k-parking words on [n] in lexicographic order.

    Letters never exceed k * (n - 1) + 1, since the sorted word must stay
    below (1, k + 1, 2k + 1, ...).
    """
    if n == 0:
        yield ()
        return
    top_letter = k * (n - 1) + 1
    for word in itertools.product(range(1, top_letter + 1), repeat=n):
        if is_parking_word(word, k):
            yield word


def word_action(perm: Permutation, word: Sequence[int]) -> tuple[int, ...]:
    """The symmetric group permutes positions: the letter at position
    perm(i) of the new word is the letter at position i of the old one."""
    if perm.n != len(word):
        raise ValueError("permutation size mismatch")
    inv = perm.inverse()
    return tuple(word[inv(i) - 1] for i in range(1, len(word) + 1))


def is_prime_parking_word(word: Sequence[int], k: int = 1) -> bool:
    """A k-parking word is prime when #{i : w_i <= kj} > j for every
    j in [1, n - 1].

    Sorted, this says a_1 = 1 and a_i <= k * (i - 1) for i >= 2, which is
    the staircase condition of rational parking functions with slope
    (kn - 1) / n.  At k = 1 it is the classical criterion: the word stays
    a parking word after removing any single car.
    """
    n = len(word)
    if not is_parking_word(word, k):
        return False
    for j in range(1, n):
        if sum(1 for w in word if w <= k * j) <= j:
            return False
    return True


# ---------------------------------------------------------------------------
# k-parking trees and weak chains
# ---------------------------------------------------------------------------


def tree_action(perm: Permutation, tree: Tree) -> Tree:
    """Relabel every node of a tree through perm, keeping the shape."""
    return Tree(
        (perm(v) for v in tree.label),
        [tree_action(perm, c) for c in tree.children],
    )


def _graft_rightmost(tree: Tree, sub: Tree) -> Tree:
    """Replace the rightmost leaf of a nonempty tree by sub."""
    if tree.is_leaf():
        return sub
    children = list(tree.children)
    children[-1] = _graft_rightmost(children[-1], sub)
    return Tree(tree.label, children)


def _stack_broods(node: Tree, k: int) -> Tree:
    """Collapse each brood of k children into a single child.

    The nonempty members of a brood are stacked in index order, each one
    grafted onto the rightmost leaf of the structure built so far, so the
    result is a valid 1-tree: one child per label.
    """
    children = []
    for b in range(len(node.label)):
        brood = node.children[b * k : (b + 1) * k]
        stacked = [_stack_broods(c, k) for c in brood if not c.is_leaf()]
        if not stacked:
            children.append(Tree.leaf())
            continue
        current = stacked[0]
        for nxt in stacked[1:]:
            current = _graft_rightmost(current, nxt)
        children.append(current)
    return Tree(node.label, children)


def _contract_groups(
    node: Tree, k: int, i: int
) -> tuple[list[tuple[int, ...]], list[list[tuple[int, ...]]]]:
    """Group the node labels of a k-tree by contracting every edge whose
    index within its brood exceeds i.

    Returns the group that still contains this node's label, plus the
    finished groups strictly below it.
    """
    own = [node.label]
    complete: list[list[tuple[int, ...]]] = []
    for pos, child in enumerate(node.children):
        if child.is_leaf():
            continue
        index = pos % k + 1
        sub_own, sub_complete = _contract_groups(child, k, i)
        complete.extend(sub_complete)
        if index > i:
            own.extend(sub_own)
        else:
            complete.append(sub_own)
    return own, complete


def chain_from_ktree(tree: Tree, k: int = 1) -> list[ParkingElement]:
    """The weak k-chain of parking poset elements encoded by a k-tree.

    The top element phi_k is obtained by stacking each brood into a
    single subtree.  The i-th element keeps only the splits of index at
    most i: labels joined by an edge of index > i share a node, and the
    element itself is the unique one below phi_k with that coarsening.
    """
    n = validate_tree(tree, k)
    if n == 0:
        raise ValueError("the empty tree encodes no chain")
    top = ParkingElement.from_tree(_stack_broods(tree, k))
    block_of_label = dict(zip(top.labels, top.partition.blocks))
    chain = []
    for i in range(1, k + 1):
        own, complete = _contract_groups(tree, k, i)
        blocks = []
        for group in complete + [own]:
            blocks.append(sorted(x for lab in group for x in block_of_label[lab]))
        chain.append(descend(top, NoncrossingPartition(n, blocks)))
    return chain


def _split_time(etas, v: int, anchor: int, k: int) -> int:
    """First index i (1-based) at which labels v and anchor are in
    different blocks of phi_i."""
    for i in range(k):
        if etas[i][v - 1] != etas[i][anchor - 1]:
            return i + 1
    raise ValueError("labels never split: not a strictly encoding chain")


def _prune_rightmost(root: Tree, stop: Tree) -> Tree:
    """Replace the subtree `stop`, found on the rightmost branch of root,
    by a leaf."""
    if root.is_leaf():
        raise ValueError("stop node not found on the rightmost branch")
    children = list(root.children)
    if children[-1] == stop:
        children[-1] = Tree.leaf()
    else:
        children[-1] = _prune_rightmost(children[-1], stop)
    return Tree(root.label, children)


def _unstack_slot(slot: Tree, anchor: int, etas, k: int) -> list[tuple[int, Tree]]:
    """Cut a stacked brood back into its pieces.

    Walking down the rightmost branch of the slot subtree, a new piece
    starts whenever the split time from the anchor label strictly
    increases; everything between two cuts belongs to the earlier piece.
    Returns (index within the brood, piece) pairs.
    """
    cuts = [(_split_time(etas, slot.label[0], anchor, k), slot)]
    node = slot
    while not node.is_leaf():
        child = node.children[-1]
        if child.is_leaf():
            break
        t = _split_time(etas, child.label[0], anchor, k)
        if t > cuts[-1][0]:
            cuts.append((t, child))
        node = child
    pieces = []
    for pos, (t, root) in enumerate(cuts):
        if pos + 1 < len(cuts):
            pieces.append((t, _prune_rightmost(root, cuts[pos + 1][1])))
        else:
            pieces.append((t, root))
    return pieces


def ktree_from_chain(chain: Sequence[ParkingElement]) -> Tree:
    """Inverse of chain_from_ktree; the chain length determines k.

    The node set of the k-tree is read off the top element, and each
    brood is recovered by cutting the corresponding stacked subtree at
    the points where the split time from the parent increases.
    """
    if not chain:
        raise ValueError("chain must contain at least one element")
    k = len(chain)
    n = chain[0].n
    for a, b in zip(chain, chain[1:]):
        if not pp_leq(a, b):
            raise ValueError("not a weak chain in the parking poset")
    top = chain[-1]
    etas = [elem.eta() for elem in chain]

    def rebuild(piece: Tree) -> Tree:
        anchor = piece.label[0]
        broods: list[Tree] = []
        for slot in piece.children:
            brood = [Tree.leaf()] * k
            if not slot.is_leaf():
                for index, sub in _unstack_slot(slot, anchor, etas, k):
                    if not brood[index - 1].is_leaf():
                        raise ValueError("two pieces claim the same brood index")
                    brood[index - 1] = rebuild(sub)
            broods.extend(brood)
        return Tree(piece.label, broods)

    tree = rebuild(top.to_tree())
    if validate_tree(tree, k) != n:
        raise RuntimeError("reconstructed tree has the wrong weight")
    return tree


# ---------------------------------------------------------------------------
# Prufer-style code
# ---------------------------------------------------------------------------


def _slot_name(block: tuple[int, ...], pos: int, k: int) -> tuple[int, int]:
    """Child slot `pos` (0-based) of a node corresponds to the pair
    (label, copy): the slot belongs to brood pos // k, hence to the
    (pos // k)-th smallest label, with copy number pos % k + 1."""
    return (block[pos // k], pos % k + 1)


def ktree_code(
    tree: Tree, k: int = 1
) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, int], ...], tuple[int, ...]]:
    """Encode a k-tree as (node labels, used half-edges, permutation).

    The used half-edges are the (label, copy) pairs of the slots holding
    a nonempty child; sorting them gives a canonical numbering 1..l.  The
    permutation records, for each step of a leaf-deletion process that
    always removes the nonempty leaf with the smallest label, the number
    of the half-edge it hung from.
    """
    n = validate_tree(tree, k)
    if n == 0:
        raise ValueError("the empty tree has no code")
    hung_from: dict[tuple[int, ...], tuple[int, int]] = {}
    parent_of: dict[tuple[int, ...], tuple[int, ...]] = {}
    alive: dict[tuple[int, ...], int] = {}
    nodes = []

    def walk(node: Tree) -> None:
        nodes.append(node.label)
        alive[node.label] = sum(1 for c in node.children if not c.is_leaf())
        for pos, child in enumerate(node.children):
            if child.is_leaf():
                continue
            hung_from[child.label] = _slot_name(node.label, pos, k)
            parent_of[child.label] = node.label
            walk(child)

    walk(tree)
    used = tuple(sorted(hung_from.values()))
    number = {slot: i for i, slot in enumerate(used, start=1)}
    word = []
    for _ in range(len(used)):
        leaf = min(
            (lab for lab in alive if alive[lab] == 0 and lab in hung_from),
            key=lambda lab: lab[0],
        )
        word.append(number[hung_from[leaf]])
        alive[parent_of[leaf]] -= 1
        del alive[leaf]
    return tuple(sorted(nodes, key=lambda lab: lab[0])), used, tuple(word)


def ktree_from_code(
    n: int,
    k: int,
    blocks: Sequence[Sequence[int]],
    slots: Sequence[tuple[int, int]],
    word: Sequence[int],
) -> Tree:
    """Assemble the k-tree with the given code.

    Repeatedly pop the partial tree whose root has the smallest label
    among those with no unused numbered half-edge, and attach it at the
    half-edge named by the next letter.
    """
    node_labels = [tuple(sorted(b)) for b in blocks]
    seen = sorted(x for lab in node_labels for x in lab)
    if seen != list(range(1, n + 1)) or any(not lab for lab in node_labels):
        raise ValueError("blocks must form a partition of [n]")
    slot_list = sorted(set(map(tuple, slots)))
    if len(slot_list) != len(slots):
        raise ValueError("half-edges must be distinct")
    for v, c in slot_list:
        if not (1 <= v <= n and 1 <= c <= k):
            raise ValueError(f"({v}, {c}) is not a half-edge")
    if sorted(word) != list(range(1, len(slot_list) + 1)):
        raise ValueError("word must be a permutation of the half-edge numbers")
    if len(slot_list) != len(node_labels) - 1:
        raise ValueError("need one half-edge per non-root node")

    owner_of = {}
    for v, c in slot_list:
        lab = next(lab for lab in node_labels if v in lab)
        owner_of[(v, c)] = (lab, lab.index(v) * k + c - 1)

    comp = {lab: lab for lab in node_labels}
    root = {lab: lab for lab in node_labels}
    numbers: dict[tuple[int, ...], set[int]] = {lab: set() for lab in node_labels}
    for num, slot in enumerate(slot_list, start=1):
        numbers[owner_of[slot][0]].add(num)
    children: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = {}

    def find(lab):
        while comp[lab] != lab:
            comp[lab] = comp[comp[lab]]
            lab = comp[lab]
        return lab

    free = {lab for lab in node_labels if not numbers[lab]}
    last = None
    for letter in word:
        if not free:
            raise ValueError("code does not assemble into a tree")
        tree_id = min(free, key=lambda lab: root[lab][0])
        free.discard(tree_id)
        owner_label, pos = owner_of[slot_list[letter - 1]]
        holder = find(owner_label)
        if holder == tree_id:
            raise ValueError("code does not assemble into a tree")
        children[(owner_label, pos)] = root[tree_id]
        comp[tree_id] = holder
        numbers[holder].discard(letter)
        if not numbers[holder]:
            free.add(holder)
        last = holder
    if last is None:
        last = node_labels[0]
    if any(find(lab) != find(last) for lab in node_labels):
        raise ValueError("code does not assemble into a tree")

    def build(lab: tuple[int, ...]) -> Tree:
        kids = []
        for pos in range(k * len(lab)):
            child = children.get((lab, pos))
            kids.append(build(child) if child is not None else Tree.leaf())
        return Tree(lab, kids)

    result = build(root[find(last)])
    validate_tree(result, k)
    return result


# ---------------------------------------------------------------------------
# permutation characters
# ---------------------------------------------------------------------------


def parking_character(n: int, k: int, perm: Permutation) -> int:
    """Number of k-parking words on [n] fixed by perm: (kn + 1)^(z - 1)
    with z the number of cycles.  This is the character of the symmetric
    group acting on k-parking words, equivalently on weak k-chains."""
    if perm.n != n:
        raise ValueError("permutation size mismatch")
    return (k * n + 1) ** (perm.num_cycles() - 1)


def prime_parking_character(n: int, k: int, perm: Permutation) -> int:
    """Number of prime k-parking words on [n] fixed by perm:
    (kn - 1)^(z - 1)."""
    if perm.n != n:
        raise ValueError("permutation size mismatch")
    return (k * n - 1) ** (perm.num_cycles() - 1)
