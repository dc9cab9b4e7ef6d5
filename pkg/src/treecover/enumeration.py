"""Exhaustive generation of plane trees as non-crossing matchings."""

from __future__ import annotations

from collections.abc import Iterator

from .invariants import d_c
from .maps import PlaneTree, odd_vertex_count
from .walk import DartInvolution, canonical_form, is_canonical, to_tree


def walks(n: int) -> Iterator[str]:
    """Balanced strings with n pairs, in lexicographic order ('(' < ')')."""
    if n < 1:
        raise ValueError("n must be positive")
    buf = []

    def rec(opened, closed):
        if closed == n:
            yield "".join(buf)
            return
        if opened < n:
            buf.append("(")
            yield from rec(opened + 1, closed)
            buf.pop()
        if closed < opened:
            buf.append(")")
            yield from rec(opened, closed + 1)
            buf.pop()

    yield from rec(0, 0)


def walk_to_involution(walk: str) -> DartInvolution:
    phi = [0] * len(walk)
    stack = []
    for i, c in enumerate(walk):
        if c == "(":
            stack.append(i)
        else:
            j = stack.pop()
            phi[i], phi[j] = j, i
    return DartInvolution(tuple(phi))


def rooted_trees(n: int) -> Iterator[DartInvolution]:
    """Every plane tree with n edges and a marked starting dart, once each."""
    for w in walks(n):
        yield walk_to_involution(w)


def unrooted_trees(n: int, dedup: str = "canonical") -> Iterator[DartInvolution]:
    """Canonical forms of the n-edge plane trees, one per tree.

    ``dedup="canonical"`` yields a rooted tree iff it is its own canonical
    form and keeps no state; ``dedup="set"`` remembers the canonical forms
    already emitted. Both yield the same trees, possibly in different order.
    """
    if dedup == "canonical":
        for inv in rooted_trees(n):
            if is_canonical(inv):
                yield inv
    elif dedup == "set":
        seen = set()
        for inv in rooted_trees(n):
            canon = canonical_form(inv)
            if canon.phi not in seen:
                seen.add(canon.phi)
                yield canon
    else:
        raise ValueError(f"unknown dedup mode {dedup!r}")


def search_genus_order(g: int, m: int, max_edges: int) -> PlaneTree | None:
    """First tree with 2g+2 odd-valency vertices and divisor order n/d_c = m.

    Only edge counts n = m, 2m, ... up to ``max_edges`` are scanned.
    """
    if g < 0 or m < 1:
        raise ValueError("need g >= 0 and m >= 1")
    want_odd = 2 * g + 2
    for n in range(m, max_edges + 1, m):
        # a tree has n + 1 vertices
        if want_odd > n + 1:
            continue
        for inv in unrooted_trees(n):
            tree = to_tree(inv)
            if odd_vertex_count(tree) == want_odd and n // d_c(tree) == m:
                return tree
    return None
