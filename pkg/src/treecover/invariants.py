"""Branch-weight criteria for covering chains and stars, and the invariants d_c, d_s."""

from __future__ import annotations

from dataclasses import dataclass

from .maps import PlaneTree, adjacent_branch_pairs, gcd_all, odd_vertex_count


@dataclass(frozen=True)
class CurveData:
    n: int
    o: int
    genus: int
    d_c: int
    divisor_order: int
    d_s: int

    def as_dict(self):
        return {
            "n": self.n,
            "o": self.o,
            "genus": self.genus,
            "d_c": self.d_c,
            "d_s": self.d_s,
            "order": self.divisor_order,
        }


def _require_divisor(tree, d):
    if d <= 0 or tree.n % d:
        raise ValueError(f"d={d} does not divide n={tree.n}")


def covers_chain_by_branches(tree: PlaneTree, d: int) -> bool:
    _require_divisor(tree, d)
    return all((p.weight_a + p.weight_b) % d == 0 for p in adjacent_branch_pairs(tree))


def covers_star_by_branches(tree: PlaneTree, d: int) -> bool:
    _require_divisor(tree, d)
    return all((p.weight_a - p.weight_b) % d == 0 for p in adjacent_branch_pairs(tree))


def d_c(tree: PlaneTree) -> int:
    """Largest d | n such that ``tree`` covers a d-edge chain.

    The gcd is taken together with n: the bare gcd of adjacent sums is 2 for
    every star, but an odd star covers no 2-edge chain.
    """
    pairs = adjacent_branch_pairs(tree)
    return gcd_all((p.weight_a + p.weight_b for p in pairs), start=tree.n)


def d_s(tree: PlaneTree) -> int:
    """Largest d | n such that ``tree`` covers a d-edge star."""
    pairs = adjacent_branch_pairs(tree)
    return gcd_all((abs(p.weight_a - p.weight_b) for p in pairs), start=tree.n)


def curve_data(tree: PlaneTree) -> CurveData:
    o = odd_vertex_count(tree)
    dc = d_c(tree)
    return CurveData(
        n=tree.n,
        o=o,
        genus=(o - 2) // 2,
        d_c=dc,
        divisor_order=tree.n // dc,
        d_s=d_s(tree),
    )


def odd_vertex_divisibility_check(tree: PlaneTree, d: int) -> bool:
    """At every odd-valency vertex, every branch weight is a multiple of d.

    Only meaningful when the tree covers a d-edge chain, in which case it
    must hold; it is a check of that implication, not a filter.
    """
    if not covers_chain_by_branches(tree, d):
        raise ValueError(f"tree does not cover a {d}-edge chain")
    w = tree.branch_weights
    return all(
        w[dart] % d == 0
        for cyc in tree.vertices
        if len(cyc) % 2
        for dart in cyc
    )
