"""Command line front end: builds, tables, verifications, exports.

Subcommands
-----------
convert     translate a parking element between representations
poset       build a poset and export it as JSON or DOT
count       multichain count table: closed formula, poset oracle, series
shelling    shelling and cover order verification report (JSON)
homology    Betti table or homology character table
cluster     forest complex face counts and the cluster parking poset
kdivisible  k-divisible chain poset: counts, ranks, characters
verify-all  run the verification sweep; exit 0 only if every check passes

Conventions: CSV output has a header row and LF line endings, JSON is
dumped with sorted keys, DOT node labels are parking words.  Identical
invocations produce byte-identical output.  Sizes above the default
budget need --long.  Exit status is 0 on success, 1 when a requested
verification fails, and 2 on argument errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import sys
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .enumeration import (
    chain_from_ktree,
    enumerate_parking_words,
    is_prime_parking_word,
    ktree_code,
    ktree_from_chain,
    ktree_from_code,
    parking_character,
    prime_parking_character,
    tree_action,
    word_action,
)
from .forests import (
    build_cluster_poset,
    face_counts_by_size,
    spanning_facets,
)
from .homology import (
    lefschetz_number,
    parking_betti,
    reduced_betti,
    signed_prime_character,
    top_homology_character,
)
from .kdivisible import (
    build_divisible_nc_poset,
    build_nck_poset,
    build_ppk_poset,
    is_prime_chain,
    ppk_action,
)
from .nc import NoncrossingPartition, Permutation
from .numbers import catalan, chain_count, fuss_catalan, whitney_first_kind
from .objects import (
    ParkingElement,
    Tree,
    count_elements,
    enumerate_elements,
    enumerate_trees,
)
from .parking_order import (
    build_nc_poset,
    build_pp_poset,
    permutahedron_face_poset,
    right_comb_subposet,
)
from .poset import FinitePoset, posets_isomorphic
from .series import TruncatedSeries, chain_inverse_series, chain_series, series_chain_count
from .shelling import (
    check_code_monotone,
    check_equal_code_join,
    check_jump_code_compatible,
    check_minimal_jump_grows,
    check_nc_el_labeling,
    check_same_block_jump_bound,
    check_split_diamond,
    check_zero_prefix_blocks,
    check_zero_prefix_join,
    recursive_atom_ordering_failure,
    verify_fork_lemma,
    verify_nc_fork_lemma,
    verify_shelling,
)

REPRESENTATIONS = ("triple", "pair", "word", "tree")


class CommandError(Exception):
    """A bad argument or out-of-budget request, reported with status 2."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CommandError(message)


# ----- output helpers -----


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as handle:
            handle.write(text)


def _csv_text(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def _json_text(data: object) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _word_label(elem: ParkingElement) -> str:
    joint = "" if elem.n < 10 else "."
    return joint.join(str(x) for x in elem.word)


def _blocks_label(partition) -> str:
    return "|".join(".".join(str(x) for x in b) for b in partition.blocks)


def _chain_label(chain: Sequence[ParkingElement]) -> str:
    return ";".join(_word_label(x) for x in chain)


def _cycle_type_label(perm: Permutation) -> str:
    parts = sorted(perm.cycle_type(), reverse=True)
    return "+".join(str(p) for p in parts)


def _class_representatives(n: int) -> list[Permutation]:
    seen: dict[tuple, Permutation] = {}
    for images in permutations(range(1, n + 1)):
        perm = Permutation(images)
        seen.setdefault(perm.cycle_type(), perm)
    return sorted(seen.values(), key=_cycle_type_label)


# ----- convert -----


def _parse_element(kind: str, text: str) -> ParkingElement:
    if kind == "word":
        stripped = text.strip()
        if stripped and all(c.isdigit() for c in stripped):
            return ParkingElement.from_word([int(c) for c in stripped])
        data = json.loads(stripped)
        return ParkingElement.from_word([int(x) for x in data])
    data = json.loads(text)
    if kind == "tree":
        return ParkingElement.from_tree(Tree.from_json(data))
    if kind == "pair":
        sigma = Permutation([int(x) for x in data["sigma"]])
        partition = NoncrossingPartition(sigma.n, data["partition"])
        return ParkingElement(partition, sigma)
    if kind == "triple":
        blocks = data["partition"]
        n = sum(len(b) for b in blocks)
        return ParkingElement.from_triple(
            NoncrossingPartition(n, blocks), data["labels"]
        )
    raise CommandError(f"unknown representation {kind!r}")


def _render_element(kind: str, elem: ParkingElement) -> dict:
    if kind == "word":
        return {"n": elem.n, "word": list(elem.word)}
    if kind == "tree":
        return elem.to_tree().to_json()
    if kind == "pair":
        return {
            "n": elem.n,
            "partition": [list(b) for b in elem.partition.blocks],
            "sigma": [elem.sigma(i) for i in range(1, elem.n + 1)],
        }
    if kind == "triple":
        return {
            "n": elem.n,
            "partition": [list(b) for b in elem.partition.blocks],
            "rho": [list(b) for b in elem.rho.blocks],
            "labels": [list(lab) for lab in elem.labels],
        }
    raise CommandError(f"unknown representation {kind!r}")


def cmd_convert(args: argparse.Namespace) -> int:
    elem = _parse_element(args.source, args.input)
    _emit(_json_text(_render_element(args.target, elem)), args.output)
    return 0


# ----- poset -----


def cmd_poset(args: argparse.Namespace) -> int:
    n = args.n
    if args.which == "parking":
        _require(2 <= n <= (6 if args.long else 5), "need 2 <= n <= 5 (6 with --long)")
        poset = build_pp_poset(n)
        label: Callable = _word_label
    else:
        _require(1 <= n <= (9 if args.long else 7), "need 1 <= n <= 7 (9 with --long)")
        poset = build_nc_poset(n)
        label = _blocks_label
    if args.format == "dot":
        _emit(poset.to_dot(label), args.output)
    else:
        _require(args.format == "json", "poset supports --format json or dot")
        _emit(_json_text(poset.to_json(label, n=n, kind=args.which)), args.output)
    return 0


# ----- count -----


def _multichain_rank_counts(poset: FinitePoset, k: int) -> list[int]:
    """Weak k-multichain counts of the poset grouped by top rank."""
    size = len(poset)
    level = [1] * size
    for _ in range(k - 1):
        grown = []
        for i in range(size):
            mask = poset.downset_mask(i)
            total = 0
            while mask:
                low = mask & -mask
                total += level[low.bit_length() - 1]
                mask ^= low
            grown.append(total)
        level = grown
    ranks = poset.ranks()
    out = [0] * (max(ranks) + 1)
    for i, value in enumerate(level):
        out[ranks[i]] += value
    return out


def cmd_count(args: argparse.Namespace) -> int:
    n, k = args.n, args.k
    _require(2 <= n <= 7, "need 2 <= n <= 7")
    _require(1 <= k <= 6, "need 1 <= k <= 6")
    lengths = range(n) if args.l is None else [args.l]
    _require(all(0 <= l < n for l in lengths), f"need 0 <= l < {n}")
    with_oracle = n <= 5 or args.long
    oracle = (
        _multichain_rank_counts(build_pp_poset(n), k) if with_oracle else None
    )
    rows = []
    for l in lengths:
        closed = chain_count(n, k, l)
        rows.append(
            (
                n,
                k,
                l,
                closed,
                oracle[l] if oracle is not None else "",
                series_chain_count(n, k, l),
            )
        )
    _emit(_csv_text(("n", "k", "l", "closed", "oracle", "series"), rows), args.output)
    return 0


# ----- shelling -----


_SHELLING_CHECKS: tuple[tuple[str, Callable[[int], int]], ...] = (
    ("code_monotone", check_code_monotone),
    ("equal_code_join", check_equal_code_join),
    ("zero_prefix_blocks", check_zero_prefix_blocks),
    ("zero_prefix_join", check_zero_prefix_join),
    ("split_diamond", check_split_diamond),
    ("same_block_jump_bound", check_same_block_jump_bound),
    ("minimal_jump_grows", check_minimal_jump_grows),
    ("jump_code_compatible", check_jump_code_compatible),
    ("nc_el_labeling", check_nc_el_labeling),
)


def cmd_shelling(args: argparse.Namespace) -> int:
    n = args.n
    _require(2 <= n <= (5 if args.long else 4), "need 2 <= n <= 4 (5 with --long)")
    entries = []

    def record(name: str, size, ok: bool, counterexample) -> None:
        entries.append(
            {
                "name": name,
                "n": n,
                "domain": size,
                "ok": ok,
                "counterexample": counterexample,
            }
        )

    shelling = verify_shelling(n)
    record(
        "shelling",
        shelling.num_chains,
        shelling.ok,
        str(shelling.violations[0]) if shelling.violations else None,
    )
    for name, report in (
        ("cover_fork", verify_fork_lemma(n)),
        ("nc_cover_fork", verify_nc_fork_lemma(n)),
    ):
        record(
            name,
            report.checked,
            report.ok,
            str(report.violations[0]) if report.violations else None,
        )
    for name, fn in _SHELLING_CHECKS:
        try:
            record(name, fn(n), True, None)
        except (ValueError, RuntimeError) as exc:
            record(name, None, False, str(exc))
    try:
        witness = recursive_atom_ordering_failure()
        entries.append(
            {
                "name": "recursive_atom_ordering_regression",
                "n": 6,
                "domain": 1,
                "ok": True,
                "counterexample": None,
                "witness": {key: _word_label(value) for key, value in witness.items()},
            }
        )
    except RuntimeError as exc:
        entries.append(
            {
                "name": "recursive_atom_ordering_regression",
                "n": 6,
                "domain": 1,
                "ok": False,
                "counterexample": str(exc),
            }
        )
    ok = all(entry["ok"] for entry in entries)
    _emit(_json_text({"n": n, "ok": ok, "checks": entries}), args.output)
    return 0 if ok else 1


# ----- homology -----


def cmd_homology(args: argparse.Namespace) -> int:
    n = args.n
    _require(2 <= n <= (5 if args.long else 4), "need 2 <= n <= 4 (5 with --long)")
    if args.character:
        poset = build_pp_poset(n)
        proper = poset.without_bottom()
        rows = []
        ok = True
        for perm in _class_representatives(n):
            value = top_homology_character(n, perm, proper=proper)
            closed = signed_prime_character(n, 1, perm)
            match = value == closed
            ok = ok and match
            rows.append(
                (_cycle_type_label(perm), value, closed, "yes" if match else "no")
            )
        header = ("cycle_type", "lefschetz", "closed", "match")
        if args.format == "json":
            data = [dict(zip(header, row)) for row in rows]
            _emit(_json_text({"n": n, "ok": ok, "characters": data}), args.output)
        else:
            _emit(_csv_text(header, rows), args.output)
        return 0 if ok else 1
    betti = parking_betti(n)
    rows = [(degree - 1, rank) for degree, rank in enumerate(betti)]
    if args.format == "json":
        _emit(
            _json_text({"n": n, "betti": {str(d): r for d, r in rows}}), args.output
        )
    else:
        _emit(_csv_text(("degree", "rank"), rows), args.output)
    return 0


# ----- cluster -----


def cmd_cluster(args: argparse.Namespace) -> int:
    n = args.n
    if args.format == "csv":
        _require(2 <= n <= 8, "need 2 <= n <= 8 for face counts")
        counts = face_counts_by_size(n)
        rows = [(size, value) for size, value in enumerate(counts)]
        _emit(_csv_text(("size", "faces"), rows), args.output)
        return 0
    _require(2 <= n <= (5 if args.long else 4), "need 2 <= n <= 4 (5 with --long)")
    poset = build_cluster_poset(n)
    if args.format == "dot":
        _emit(
            poset.to_dot(
                lambda pair: " ".join(f"{i}-{j}" for i, j in sorted(pair[0]))
                + "|"
                + _word_label(pair[1])
            ),
            args.output,
        )
        return 0
    counts = face_counts_by_size(n)
    _emit(
        _json_text(
            {
                "n": n,
                "face_counts": counts,
                "total_faces": sum(counts),
                "facets": len(spanning_facets(n)),
                "poset_size": len(poset),
                "rank_sizes": poset.whitney_second(),
            }
        ),
        args.output,
    )
    return 0


# ----- kdivisible -----


def cmd_kdivisible(args: argparse.Namespace) -> int:
    n, k = args.n, args.k
    _require(n >= 2 and k >= 1, "need n >= 2 and k >= 1")
    size = (k * n + 1) ** (n - 1)
    budget = 20000 if args.long else 1000
    _require(size <= budget, f"poset has {size} elements, above the budget {budget}")
    poset = build_ppk_poset(n, k)
    if args.format == "dot":
        _emit(poset.to_dot(_chain_label), args.output)
        return 0
    if args.character:
        proper = poset.without_bottom()
        sign = -1 if (n - 2) % 2 else 1
        rows = []
        ok = True
        for perm in _class_representatives(n):
            value = sign * lefschetz_number(
                proper, lambda c: ppk_action(perm, c)
            )
            closed = signed_prime_character(n, k, perm)
            match = value == closed
            ok = ok and match
            rows.append(
                (_cycle_type_label(perm), value, closed, "yes" if match else "no")
            )
        _emit(
            _csv_text(("cycle_type", "lefschetz", "closed", "match"), rows),
            args.output,
        )
        return 0 if ok else 1
    ranks = poset.whitney_second()
    primes = sum(1 for c in poset.elements if is_prime_chain(c))
    summary = {
        "n": n,
        "k": k,
        "elements": len(poset),
        "elements_closed": size,
        "rank_sizes": ranks,
        "rank_sizes_closed": [chain_count(n, k, l) for l in range(n)],
        "mobius": poset.mobius_hat(),
        "mobius_closed": (-1) ** n * (k * n - 1) ** (n - 1),
        "primes": primes,
        "primes_closed": (k * n - 1) ** (n - 1),
        "nc_chains": fuss_catalan(n, k + 1),
    }
    if args.format == "json":
        _emit(_json_text(summary), args.output)
    else:
        rows = [
            (n, k, l, ranks[l], chain_count(n, k, l)) for l in range(len(ranks))
        ]
        _emit(_csv_text(("n", "k", "l", "count", "closed"), rows), args.output)
    ok = (
        summary["elements"] == summary["elements_closed"]
        and summary["rank_sizes"] == summary["rank_sizes_closed"]
        and summary["mobius"] == summary["mobius_closed"]
        and summary["primes"] == summary["primes_closed"]
    )
    return 0 if ok else 1


# ----- verify-all -----


def _verify_cardinality(nmax: int, kmax: int) -> tuple[bool, str]:
    for n in range(2, nmax + 1):
        expected = (n + 1) ** (n - 1)
        pairs = count_elements(n)
        words = sum(1 for _ in enumerate_parking_words(n))
        trees = sum(1 for _ in enumerate_trees(n))
        triples = len({e.to_triple() for e in enumerate_elements(n)})
        if not (pairs == words == trees == triples == expected):
            return False, (
                f"n={n}: pairs {pairs}, words {words}, trees {trees}, "
                f"triples {triples}, expected {expected}"
            )
    return True, f"(n+1)^(n-1) in four representations, n=2..{nmax}"


def _verify_whitney_second(nmax: int, kmax: int) -> tuple[bool, str]:
    for n in range(2, nmax + 1):
        census = build_pp_poset(n).whitney_second()
        closed = [chain_count(n, 1, l) for l in range(n)]
        if census != closed:
            return False, f"n={n}: census {census} != closed {closed}"
    return True, f"rank census matches l!*binom(n,l)*S2(n,l+1), n=2..{nmax}"


def _verify_chain_formula(nmax: int, kmax: int) -> tuple[bool, str]:
    top = min(nmax, 4)
    for n in range(2, top + 1):
        poset = build_pp_poset(n)
        for k in range(1, kmax + 1):
            oracle = _multichain_rank_counts(poset, k)
            closed = [chain_count(n, k, l) for l in range(n)]
            if oracle != closed:
                return False, f"(n,k)=({n},{k}): oracle {oracle} != {closed}"
            if sum(oracle) != (n * k + 1) ** (n - 1):
                return False, f"(n,k)=({n},{k}): total {sum(oracle)}"
    return True, f"multichain census matches closed counts, n<={top}, k<={kmax}"


def _verify_mobius(nmax: int, kmax: int) -> tuple[bool, str]:
    for n in range(2, nmax + 1):
        poset = build_pp_poset(n)
        observed = poset.whitney_first()
        closed = [whitney_first_kind(n, l) for l in range(n)]
        if observed != closed:
            return False, f"n={n}: whitney {observed} != {closed}"
        hat = poset.mobius_hat()
        if hat != (-1) ** n * (n - 1) ** (n - 1):
            return False, f"n={n}: mobius {hat}"
    return True, f"Whitney first kind and mobius match closed forms, n=2..{nmax}"


def _verify_shelling_sweep(nmax: int, kmax: int) -> tuple[bool, str]:
    top = min(nmax, 4)
    chains = 0
    for n in range(2, top + 1):
        report = verify_shelling(n)
        if not report.ok:
            return False, f"n={n}: shelling violation {report.violations[0]}"
        chains += report.num_chains
        for fork in (verify_fork_lemma(n), verify_nc_fork_lemma(n)):
            if not fork.ok:
                return False, f"n={n}: fork violation {fork.violations[0]}"
        for name, fn in _SHELLING_CHECKS:
            try:
                fn(n)
            except (ValueError, RuntimeError) as exc:
                return False, f"n={n}: {name}: {exc}"
    try:
        recursive_atom_ordering_failure()
    except RuntimeError as exc:
        return False, f"regression witness broke: {exc}"
    return True, f"shelling and support lemmas, n=2..{top} ({chains} chains)"


def _verify_homology(nmax: int, kmax: int) -> tuple[bool, str]:
    top = min(nmax, 4)
    for n in range(3, top + 1):
        betti = parking_betti(n)
        expected = tuple(
            (n - 1) ** (n - 1) if degree == n - 2 else 0
            for degree in range(-1, len(betti) - 1)
        )
        if betti != expected:
            return False, f"n={n}: betti {betti} != {expected}"
    return True, f"betti concentrated in degree n-2 with rank (n-1)^(n-1), n=3..{top}"


def _verify_characters(nmax: int, kmax: int) -> tuple[bool, str]:
    top = min(nmax, 4)
    for n in range(2, top + 1):
        poset = build_pp_poset(n)
        proper = poset.without_bottom()
        words = list(enumerate_parking_words(n))
        prime_words = [w for w in words if is_prime_parking_word(w)]
        for perm in _class_representatives(n):
            value = top_homology_character(n, perm, proper=proper)
            if value != signed_prime_character(n, 1, perm):
                return False, f"n={n}, type {_cycle_type_label(perm)}: {value}"
            fixed_prime = sum(1 for w in prime_words if word_action(perm, w) == w)
            if fixed_prime != prime_parking_character(n, 1, perm):
                return False, f"n={n}: prime fixed count {fixed_prime}"
            sign = -1 if (n - perm.num_cycles()) % 2 else 1
            if value != sign * fixed_prime:
                return False, f"n={n}: sign times prime count fails"
        for k in range(1, kmax + 1):
            kwords = list(enumerate_parking_words(n, k))
            for perm in _class_representatives(n):
                fixed = sum(1 for w in kwords if word_action(perm, w) == w)
                if fixed != parking_character(n, k, perm):
                    return False, f"(n,k)=({n},{k}): fixed {fixed}"
    if nmax >= 3:
        for k in range(1, kmax + 1):
            kwords = list(enumerate_parking_words(3, k))
            primes = [w for w in kwords if is_prime_parking_word(w, k)]
            for perm in _class_representatives(3):
                fixed = sum(1 for w in primes if word_action(perm, w) == w)
                if fixed != prime_parking_character(3, k, perm):
                    return False, f"k={k}: prime k-word count {fixed}"
    return True, f"Lefschetz and fixed-point characters, n<={top}, k<={kmax}"


def _verify_series(nmax: int, kmax: int) -> tuple[bool, str]:
    order = 6
    x = TruncatedSeries.x(order)
    t = TruncatedSeries.t(order)
    one = TruncatedSeries.constant(order, 1)
    for k in range(1, kmax + 1):
        series = chain_series(k, order)
        rhs = (x * (t * series + one) ** k).exp() - one
        if series != rhs:
            return False, f"k={k}: functional equation fails"
        inverse = chain_inverse_series(k, order)
        if series.compose(inverse) != x or inverse.compose(series) != x:
            return False, f"k={k}: compositional inverse fails"
        for n in range(2, order + 1):
            for l in range(n):
                if series_chain_count(n, k, l) != chain_count(n, k, l):
                    return False, f"(n,k,l)=({n},{k},{l}): coefficient mismatch"
    return True, f"species equation, inverse, coefficients to order {order}, k<={kmax}"


def _verify_ktrees(nmax: int, kmax: int) -> tuple[bool, str]:
    n, k = 3, 2
    trees = list(enumerate_trees(n, k))
    if len(trees) != (k * n + 1) ** (n - 1):
        return False, f"{len(trees)} k-trees"
    for tree in trees:
        blocks, slots, word = ktree_code(tree, k)
        if ktree_from_code(n, k, blocks, slots, word) != tree:
            return False, f"Prufer roundtrip fails on {tree!r}"
        chain = chain_from_ktree(tree, k)
        if ktree_from_chain(chain) != tree:
            return False, f"chain roundtrip fails on {tree!r}"
        for perm in _class_representatives(n):
            moved = ktree_from_chain([e.act(perm) for e in chain])
            if moved != tree_action(perm, tree):
                return False, f"equivariance fails on {tree!r}"
    return True, f"Prufer and chain bijections round-trip, (n,k)=({n},{k})"


def _verify_cluster(nmax: int, kmax: int) -> tuple[bool, str]:
    for n in range(2, 8):
        facets = spanning_facets(n)
        if len(facets) != catalan(n - 1):
            return False, f"n={n}: {len(facets)} facets"
    top = min(nmax, 4)
    for n in range(3, top + 1):
        poset = build_cluster_poset(n)
        sizes = poset.whitney_second()
        signed = build_pp_poset(n).whitney_first()
        if sizes != [abs(w) for w in signed]:
            return False, f"n={n}: rank sizes {sizes}"
        betti = reduced_betti(poset.without_bottom())
        if betti[-1] != (n - 1) ** (n - 1) or any(b for b in betti[:-1]):
            return False, f"n={n}: cluster betti {betti}"
    return True, f"facet counts n<8, Whitney relation and top rank n<={top}"


def _verify_kdivisible(nmax: int, kmax: int) -> tuple[bool, str]:
    top = min(nmax, 4)
    for n in range(2, top + 1):
        for k in range(1, kmax + 1):
            size = (k * n + 1) ** (n - 1)
            if size > 2500:
                continue
            poset = build_ppk_poset(n, k)
            if len(poset) != size:
                return False, f"(n,k)=({n},{k}): {len(poset)} elements"
            closed = [chain_count(n, k, l) for l in range(n)]
            if poset.whitney_second() != closed:
                return False, f"(n,k)=({n},{k}): rank sizes"
    for n, k in ((2, 2), (3, 2), (2, 3)):
        if n > nmax or k > kmax:
            continue
        sub = build_divisible_nc_poset(n, k)
        chain_poset = build_nck_poset(n, k)
        if len(sub) != fuss_catalan(n, k + 1):
            return False, f"(n,k)=({n},{k}): subposet size {len(sub)}"
        if sub.whitney_second() != chain_poset.whitney_second():
            return False, f"(n,k)=({n},{k}): subposet rank sizes"
        if not posets_isomorphic(sub, chain_poset):
            return False, f"(n,k)=({n},{k}): subposet not isomorphic"
    if nmax >= 3 and kmax >= 2:
        betti = reduced_betti(build_ppk_poset(3, 2).without_bottom())
        if betti != (0, 0, 25):
            return False, f"(3,2) betti {betti}"
    return True, f"k-divisible counts, Edelman subposets, homology, k<={kmax}"


def _verify_permutahedron(nmax: int, kmax: int) -> tuple[bool, str]:
    top = min(nmax, 4)
    for n in range(2, top + 1):
        comb = right_comb_subposet(n)
        faces = permutahedron_face_poset(n)
        if len(comb) != len(faces):
            return False, f"n={n}: {len(comb)} vs {len(faces)}"
        image = {elem.to_composition() for elem in comb.elements}
        if image != set(faces.elements):
            return False, f"n={n}: composition witness not a bijection"
        for a in comb.elements:
            for b in comb.elements:
                if comb.leq(a, b) != faces.leq(a.to_composition(), b.to_composition()):
                    return False, f"n={n}: witness breaks order at {a!r},{b!r}"
    return True, f"right comb matches composition face poset, n=2..{top}"


_VERIFY_CHECKS: tuple[tuple[str, Callable[[int, int], tuple[bool, str]]], ...] = (
    ("cardinality", _verify_cardinality),
    ("whitney-second", _verify_whitney_second),
    ("chain-formula", _verify_chain_formula),
    ("mobius-whitney-first", _verify_mobius),
    ("shelling", _verify_shelling_sweep),
    ("homology-betti", _verify_homology),
    ("characters", _verify_characters),
    ("series", _verify_series),
    ("k-trees", _verify_ktrees),
    ("cluster", _verify_cluster),
    ("k-divisible", _verify_kdivisible),
    ("permutahedron", _verify_permutahedron),
)

_VERIFY_TABLE = dict(_VERIFY_CHECKS)


def _run_verify_check(task: tuple[str, int, int]) -> tuple[str, bool, str]:
    name, nmax, kmax = task
    try:
        ok, detail = _VERIFY_TABLE[name](nmax, kmax)
    except Exception as exc:  # surface, never crash the sweep
        return name, False, f"raised {exc!r}"
    return name, ok, detail


def cmd_verify(args: argparse.Namespace) -> int:
    nmax, kmax = args.n, args.k
    _require(2 <= nmax <= (5 if args.long else 4), "need 2 <= n <= 4 (5 with --long)")
    _require(1 <= kmax <= 3, "need 1 <= k <= 3")
    tasks = [(name, nmax, kmax) for name, _ in _VERIFY_CHECKS]
    if args.jobs > 1:
        with multiprocessing.Pool(args.jobs) as pool:
            results = pool.map(_run_verify_check, tasks)
    else:
        results = [_run_verify_check(task) for task in tasks]
    lines = []
    passed = 0
    for name, ok, detail in results:
        passed += ok
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    lines.append(f"{passed}/{len(results)} checks passed")
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if passed == len(results) else 1


# ----- argument parsing -----


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parkposet",
        description="Parking poset builds, tables, and verifications.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, n_required: bool = True) -> None:
        if n_required:
            p.add_argument("--n", type=int, required=True, help="ground set size")
        p.add_argument("--output", metavar="PATH", help="write to a file")
        p.add_argument(
            "--long", action="store_true", help="unlock larger, slower sizes"
        )

    p = sub.add_parser("convert", help="translate between representations")
    p.add_argument("--from", dest="source", choices=REPRESENTATIONS, required=True)
    p.add_argument("--to", dest="target", choices=REPRESENTATIONS, required=True)
    p.add_argument(
        "--input",
        required=True,
        help="digit string for words, otherwise JSON text",
    )
    p.add_argument("--output", metavar="PATH", help="write to a file")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("poset", help="build and export a poset")
    common(p)
    p.add_argument("--which", choices=("parking", "nc"), default="parking")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("count", help="multichain count table")
    common(p)
    p.add_argument("--k", type=int, default=1, help="multichain length")
    p.add_argument("--l", type=int, default=None, help="restrict to one top rank")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("shelling", help="shelling verification report")
    common(p)
    p.set_defaults(func=cmd_shelling)

    p = sub.add_parser("homology", help="Betti or character tables")
    common(p)
    p.add_argument("--character", action="store_true", help="character table")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("cluster", help="forest complex and cluster poset")
    common(p)
    p.add_argument("--format", choices=("csv", "json", "dot"), default="json")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("kdivisible", help="k-divisible chain poset")
    common(p)
    p.add_argument("--k", type=int, required=True, help="divisibility parameter")
    p.add_argument("--character", action="store_true", help="character table")
    p.add_argument("--format", choices=("csv", "json", "dot"), default="json")
    p.set_defaults(func=cmd_kdivisible)

    p = sub.add_parser("verify-all", help="full verification sweep")
    p.add_argument("--n", type=int, default=3, help="largest ground set size")
    p.add_argument("--k", type=int, default=2, help="largest chain parameter")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker count")
    p.add_argument("--output", metavar="PATH", help="write to a file")
    p.add_argument("--long", action="store_true", help="unlock larger, slower sizes")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
