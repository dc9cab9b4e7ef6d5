"""Brute-force cross-checks of the covering criteria.

The checks here rebuild coverings from block systems of the dart
permutations and never call the congruence predicates of :mod:`cover`.
The closed-form recognizers and the gcd formulas are compared against them.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field

from . import cover, invariants
from .maps import CombinatorialMap, PlaneTree, degree_profile
from .walk import DartInvolution, canonical_form, conjugate, from_involution, verify_branch_formula

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Discrepancy:
    tree: DartInvolution
    d: int | None
    check: str
    methods: dict = field(default_factory=dict, compare=False)

    def __str__(self):
        detail = " ".join(f"{k}={v}" for k, v in self.methods.items())
        return f"tree=[{self.tree}] d={self.d} check={self.check} {detail}"


def _face_labels(cmap: CombinatorialMap):
    size = len(cmap.rho0)
    label = [-1] * size
    x, k = 0, 0
    while label[x] < 0:
        label[x] = k
        k += 1
        x = cmap.rho0[cmap.rho1[x]]
    if k != size:
        raise ValueError("map is not unicellular")
    return label


def block_quotient(cmap: CombinatorialMap, d: int):
    """Reversal induced on the 2d residue blocks of the face labeling, or None.

    None means the residue classes are not a block system of the edge
    rotation group, or the induced reversal fixes a block.
    """
    n = len(cmap.rho0) // 2
    if d <= 0 or n % d:
        raise ValueError(f"d={d} does not divide n={n}")
    m = 2 * d
    label = _face_labels(cmap)
    block = [label[x] % m for x in range(2 * n)]
    face = [cmap.rho0[cmap.rho1[x]] for x in range(2 * n)]
    induced = {}
    for name, perm in (("rho0", cmap.rho0), ("rho1", cmap.rho1), ("face", face)):
        image = [None] * m
        for x in range(2 * n):
            b, c = block[x], block[perm[x]]
            if image[b] is None:
                image[b] = c
            elif image[b] != c:
                return None
        induced[name] = image
    if induced["face"] != [(b + 1) % m for b in range(m)]:
        return None
    rho1q = induced["rho1"]
    if any(rho1q[b] == b for b in range(m)):
        return None
    return tuple(rho1q)


def semiconjugacy_cover_check(cmap: CombinatorialMap, d: int) -> bool:
    return block_quotient(cmap, d) is not None


def _equal_partitions(points, block_size):
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for others in itertools.combinations(rest, block_size - 1):
        block = (first, *others)
        remaining = [p for p in rest if p not in others]
        for tail in _equal_partitions(remaining, block_size):
            yield [block, *tail]


def block_system_uniqueness_check(n: int, d: int) -> bool:
    """Among all partitions of 0..2n-1 into 2d equal blocks, only residues mod 2d are cycle-invariant."""
    if n > 6:
        raise ValueError("exhaustive partition scan is limited to n <= 6")
    if d <= 0 or n % d:
        raise ValueError(f"d={d} does not divide n={n}")
    size, m = 2 * n, 2 * d
    residues = frozenset(frozenset(range(r, size, m)) for r in range(m))
    invariant = []
    for part in _equal_partitions(list(range(size)), size // m):
        blocks = frozenset(frozenset(b) for b in part)
        shifted = frozenset(frozenset((x + 1) % size for x in b) for b in blocks)
        if shifted == blocks:
            invariant.append(blocks)
    return invariant == [residues]


def chain_shape(cmap: CombinatorialMap) -> bool:
    n = cmap.n
    return cmap.is_tree() and degree_profile(cmap) == Counter({1: 2} if n == 1 else {1: 2, 2: n - 1})


def star_shape(cmap: CombinatorialMap) -> bool:
    n = cmap.n
    want = Counter({1: n + 1}) if n == 1 else Counter({1: n, n: 1})
    return cmap.is_tree() and degree_profile(cmap) == want


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def cross_check_tree(inv: DartInvolution) -> list[Discrepancy]:
    """Compare every covering method on one tree, for every divisor of n."""
    out = []

    def disagree(d, check, /, **methods):
        if len(set(methods.values())) > 1:
            out.append(Discrepancy(inv, d, check, methods))

    tree = PlaneTree.from_map(from_involution(inv))
    n = inv.n
    size = 2 * n

    disagree(None, "eq3-branch-formula", formula=verify_branch_formula(tree), expected=True)
    disagree(
        None,
        "eq4-parity",
        parity=all((inv.phi[i] - i) % 2 == 1 for i in range(size)),
        expected=True,
    )

    chain_ds, star_ds, oracle_chain_ds, oracle_star_ds = [], [], [], []
    for d in _divisors(n):
        # (a) branch weights
        a_chain = invariants.covers_chain_by_branches(tree, d)
        a_star = invariants.covers_star_by_branches(tree, d)
        # (b) congruences on phi
        b_chain = cover.covers_chain(inv, d)
        b_star = cover.covers_star(inv, d)
        # (c) residue quotient plus shape
        report = cover.covers_dessin(inv, d)
        tree_report = cover.covers_tree(inv, d)
        disagree(d, "covers-tree-vs-dessin", dessin=report.covers, tree=tree_report.covers)
        if report.covers:
            qmap = from_involution(report.quotient)
            c_chain, c_star = chain_shape(qmap), star_shape(qmap)
        else:
            c_chain = c_star = False
        # (d) block system oracle plus closed forms
        bq = block_quotient(tree, d)
        if bq is not None:
            q = DartInvolution(bq)
            d_chain, d_star = cover.chain_closed_form(q), cover.star_closed_form(q)
            disagree(d, "quotient-equality", residue=report.quotient, blocks=q)
        else:
            d_chain = d_star = False
        disagree(d, "covers-dessin", residue=report.covers, blocks=bq is not None)
        disagree(d, "covers-chain", branches=a_chain, congruence=b_chain, quotient=c_chain, oracle=d_chain)
        disagree(d, "covers-star", branches=a_star, congruence=b_star, quotient=c_star, oracle=d_star)

        if report.covers:
            q = report.quotient
            qmap = from_involution(q)
            disagree(d, "quotient-genus", genus=qmap.genus, expected=0)
            if a_chain:
                disagree(d, "quotient-chain", eq5=cover.is_chain(q), shape=chain_shape(qmap), expected=True)
                disagree(
                    d,
                    "odd-vertex-divisibility",
                    check=invariants.odd_vertex_divisibility_check(tree, d),
                    expected=True,
                )
            if a_star:
                disagree(d, "quotient-star", eq7=cover.is_star(q), shape=star_shape(qmap), expected=True)
        if a_chain:
            chain_ds.append(d)
        if a_star:
            star_ds.append(d)
        if d_chain:
            oracle_chain_ds.append(d)
        if d_star:
            oracle_star_ds.append(d)

    disagree(None, "d_c", gcd=invariants.d_c(tree), max_scan=max(chain_ds), oracle_scan=max(oracle_chain_ds))
    disagree(None, "d_s", gcd=invariants.d_s(tree), max_scan=max(star_ds), oracle_scan=max(oracle_star_ds))
    # downward closure of both invariants
    disagree(None, "d_c-divisors", covered=tuple(chain_ds), divisors_of_d_c=tuple(_divisors(max(chain_ds))))
    disagree(None, "d_s-divisors", covered=tuple(star_ds), divisors_of_d_s=tuple(_divisors(max(star_ds))))
    return out


def cross_check_all(max_edges: int, per_n: dict | None = None) -> list[Discrepancy]:
    """Run :func:`cross_check_tree` on every plane tree with at most ``max_edges`` edges.

    If ``per_n`` is given it receives the number of trees checked for each n.
    """
    from .enumeration import unrooted_trees

    found = []
    for n in range(1, max_edges + 1):
        count = 0
        for inv in unrooted_trees(n):
            count += 1
            try:
                found.extend(cross_check_tree(inv))
            except Exception as exc:  # a crash is reported as data, the scan continues
                found.append(Discrepancy(inv, None, "exception", {"error": repr(exc)}))
        if per_n is not None:
            per_n[n] = count
        log.debug("n=%d: %d trees", n, count)
    return found


def quotient_tower_check(inv: DartInvolution) -> bool:
    n = inv.n
    for d1 in _divisors(n):
        for d2 in _divisors(n // d1):
            big = cover.covers_dessin(inv, d1 * d2)
            small = cover.covers_dessin(inv, d1)
            if not (big.covers and small.covers):
                continue
            via = cover.covers_dessin(big.quotient, d1)
            if not via.covers:
                return False
            if canonical_form(via.quotient) != canonical_form(small.quotient):
                return False
    return True


def all_involutions(n: int):
    """Every fixed-point-free involution on 0..2n-1."""
    size = 2 * n
    phi = [-1] * size

    def rec():
        try:
            i = phi.index(-1)
        except ValueError:
            yield DartInvolution(tuple(phi))
            return
        for j in range(i + 1, size):
            if phi[j] == -1:
                phi[i], phi[j] = j, i
                yield from rec()
                phi[i] = phi[j] = -1

    yield from rec()


def leafless_star_congruences(max_edges: int) -> list[DartInvolution]:
    """Involutions satisfying the star congruence but lacking a valency-1 vertex.

    These are not stars, which is why the star recognizer requires a leaf.
    """
    out = []
    for n in range(1, max_edges + 1):
        for inv in all_involutions(n):
            if cover.star_congruence(inv) and not cover.has_leaf(inv):
                log.info("star congruence without a leaf: [%s]", inv)
                out.append(inv)
    return out


def rotation_invariant(inv: DartInvolution, fn) -> bool:
    """``fn`` gives one value on every relabeling of ``inv`` by a rotation."""
    values = {fn(conjugate(inv, k)) for k in range(len(inv.phi))}
    return len(values) == 1

