"""Combinatorial maps, plane trees and branch weights.

Darts are the integers ``0 .. 2n-1``.  ``rho0`` sends a dart to the next
dart counterclockwise around its origin vertex, ``rho1`` reverses it.
Permutations are stored as tuples of images and act on the left, so the
boundary walk is ``face(i) = rho0[rho1[i]]``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import gcd


class MapError(ValueError):
    """Raised when dart permutations do not describe a valid map."""


def compose(p, q):
    """Return ``p∘q`` as a tuple, i.e. ``x -> p[q[x]]``."""
    return tuple(p[x] for x in q)


def cycles(perm):
    """Cycles of ``perm``, each starting at its smallest unseen dart, in order of that dart."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def _check_perm(perm, size, name):
    if len(perm) != size or sorted(perm) != list(range(size)):
        raise MapError(f"{name} is not a permutation of 0..{size - 1}")


@dataclass(frozen=True)
class CombinatorialMap:
    """A connected map given by its vertex rotation and edge reversal."""

    rho0: tuple[int, ...]
    rho1: tuple[int, ...]

    def __post_init__(self):
        rho0, rho1 = tuple(self.rho0), tuple(self.rho1)
        object.__setattr__(self, "rho0", rho0)
        object.__setattr__(self, "rho1", rho1)
        size = len(rho0)
        if size == 0 or size % 2:
            raise MapError("a map needs a positive even number of darts")
        _check_perm(rho0, size, "rho0")
        _check_perm(rho1, size, "rho1")
        for i, j in enumerate(rho1):
            if j == i or rho1[j] != i:
                raise MapError("rho1 must be a fixed-point-free involution")
        if not self._transitive():
            raise MapError("map is not connected")

    def _transitive(self):
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in (self.rho0[x], self.rho1[x]):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.rho0)

    @property
    def n(self) -> int:
        return len(self.rho0) // 2

    @property
    def darts(self):
        return range(len(self.rho0))

    @cached_property
    def face(self) -> tuple[int, ...]:
        return compose(self.rho0, self.rho1)

    @cached_property
    def vertices(self) -> list[tuple[int, ...]]:
        """rho0 cycles; vertex ``k`` is the ``k``-th cycle by first dart."""
        return cycles(self.rho0)

    @cached_property
    def faces(self) -> list[tuple[int, ...]]:
        return cycles(self.face)

    @cached_property
    def vertex_of_dart(self) -> tuple[int, ...]:
        out = [0] * len(self.rho0)
        for v, cyc in enumerate(self.vertices):
            for dart in cyc:
                out[dart] = v
        return tuple(out)

    def head(self, dart: int) -> int:
        return self.vertex_of_dart[self.rho1[dart]]

    def tail(self, dart: int) -> int:
        return self.vertex_of_dart[dart]

    @property
    def genus(self) -> int:
        chi = len(self.vertices) - self.n + len(self.faces)
        return (2 - chi) // 2

    @property
    def is_unicellular(self) -> bool:
        return len(self.faces) == 1

    def is_tree(self) -> bool:
        return self.is_unicellular and len(self.vertices) == self.n + 1


@dataclass(frozen=True)
class BranchPair:
    """Weights of two branches consecutive around ``vertex``."""

    vertex: int
    weight_a: int
    weight_b: int


@dataclass(frozen=True)
class PlaneTree(CombinatorialMap):
    """A genus-zero map with one face."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_tree():
            raise MapError(
                f"not a plane tree: V={len(self.vertices)}, n={self.n}, F={len(self.faces)}"
            )

    @classmethod
    def from_map(cls, cmap: CombinatorialMap) -> PlaneTree:
        if isinstance(cmap, PlaneTree):
            return cmap
        return cls(cmap.rho0, cmap.rho1)

    @cached_property
    def branch_weights(self) -> tuple[int, ...]:
        """Weight of the branch through each dart, counted by graph search."""
        adj = [[self.head(d) for d in cyc] for cyc in self.vertices]
        weights = []
        for dart in self.darts:
            start, head = self.tail(dart), self.head(dart)
            seen = {start, head}
            stack = [head]
            while stack:
                v = stack.pop()
                for u in adj[v]:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            # vertices beyond the tail, including the head, one edge each
            weights.append(len(seen) - 1)
        return tuple(weights)


def branch_weight(tree: PlaneTree, dart: int) -> int:
    """Edge count of the branch that contains ``dart`` and grows from its origin."""
    if not 0 <= dart < 2 * tree.n:
        raise IndexError(f"dart {dart} out of range for a {tree.n}-edge tree")
    return tree.branch_weights[dart]


def adjacent_branch_pairs(tree: PlaneTree) -> list[BranchPair]:
    """One pair per dart: its branch and the next branch counterclockwise.

    A leaf contributes its single branch paired with itself.
    """
    w = tree.branch_weights
    return [
        BranchPair(v, w[dart], w[tree.rho0[dart]])
        for v, cyc in enumerate(tree.vertices)
        for dart in cyc
    ]


def degree_profile(cmap: CombinatorialMap) -> Counter:
    return Counter(len(cyc) for cyc in cmap.vertices)


def odd_vertex_count(tree: CombinatorialMap) -> int:
    return sum(1 for cyc in tree.vertices if len(cyc) % 2)


def gcd_all(values, start=0):
    """gcd of ``start`` and ``values``; absolute values, gcd(x, 0) = x."""
    g = start
    for x in values:
        g = gcd(g, x)
    return g


# --------------------------------------------------------------------- parsing


def _parse_walk(text: str) -> PlaneTree:
    walk = "".join(text.split())
    if not walk or len(walk) % 2 or set(walk) - set("()"):
        raise MapError("walk must be a non-empty even-length string of '(' and ')'")
    size = len(walk)
    rho1 = [0] * size
    stack = []
    for i, c in enumerate(walk):
        if c == "(":
            stack.append(i)
        else:
            if not stack:
                raise MapError(f"unbalanced walk at position {i}")
            j = stack.pop()
            rho1[i], rho1[j] = j, i
    if stack:
        raise MapError("unbalanced walk: unclosed '('")
    rho0 = [(rho1[i] + 1) % size for i in range(size)]
    return PlaneTree(tuple(rho0), tuple(rho1))


def _parse_rotation(text: str) -> PlaneTree:
    rotation = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise MapError(f"line {lineno}: expected 'v: u1 u2 ...'")
        head, tail = line.split(":", 1)
        try:
            v = int(head)
            nbrs = [int(tok) for tok in tail.split()]
        except ValueError as exc:
            raise MapError(f"line {lineno}: {exc}") from None
        if v < 0 or any(u < 0 for u in nbrs):
            raise MapError(f"line {lineno}: vertex ids must be non-negative")
        if v in rotation:
            raise MapError(f"line {lineno}: vertex {v} listed twice")
        if not nbrs:
            raise MapError(f"line {lineno}: vertex {v} has no neighbours")
        if len(set(nbrs)) != len(nbrs) or v in nbrs:
            raise MapError(f"line {lineno}: repeated neighbour or loop at {v}")
        rotation[v] = nbrs
    if not rotation:
        raise MapError("empty rotation system")

    dart_id = {}
    for v, nbrs in rotation.items():
        for u in nbrs:
            dart_id[v, u] = len(dart_id)
    size = len(dart_id)
    rho0 = [0] * size
    rho1 = [0] * size
    for (v, u), dart in dart_id.items():
        if (u, v) not in dart_id:
            raise MapError(f"edge {v}-{u} is not listed at {u}")
        rho1[dart] = dart_id[u, v]
        nbrs = rotation[v]
        rho0[dart] = dart_id[v, nbrs[(nbrs.index(u) + 1) % len(nbrs)]]
    try:
        return PlaneTree(tuple(rho0), tuple(rho1))
    except MapError as exc:
        raise MapError(f"rotation system is not a connected tree: {exc}") from None


def _parse_involution(text: str) -> CombinatorialMap:
    try:
        phi = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise MapError(f"involution: {exc}") from None
    size = len(phi)
    if size == 0 or size % 2:
        raise MapError("involution needs an even, positive number of images")
    if sorted(phi) != list(range(size)):
        raise MapError("involution images are not a permutation of 0..2n-1")
    for i, j in enumerate(phi):
        if j == i or phi[j] != i:
            raise MapError("not a fixed-point-free involution")
    rho0 = tuple((j + 1) % size for j in phi)
    cmap = CombinatorialMap(rho0, tuple(phi))
    return PlaneTree.from_map(cmap) if cmap.is_tree() else cmap


FORMATS = ("walk", "rotation", "involution")


def guess_format(text: str) -> str:
    stripped = "".join(text.split())
    if stripped and set(stripped) <= set("()"):
        return "walk"
    if ":" in text:
        return "rotation"
    return "involution"


def parse(text: str, format: str | None = None) -> CombinatorialMap:
    """Parse ``text`` in one of :data:`FORMATS` (guessed when ``format`` is None).

    Walk and rotation inputs always give a :class:`PlaneTree`; an involution
    gives a :class:`PlaneTree` when it has genus 0 and a plain
    :class:`CombinatorialMap` otherwise.
    """
    if format is None:
        format = guess_format(text)
    if format == "walk":
        return _parse_walk(text)
    if format == "rotation":
        return _parse_rotation(text)
    if format == "involution":
        return _parse_involution(text)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def format_rotation(cmap: CombinatorialMap) -> str:
    lines = []
    for v, cyc in enumerate(cmap.vertices):
        lines.append(f"{v}: " + " ".join(str(cmap.head(d)) for d in cyc))
    return "\n".join(lines)
