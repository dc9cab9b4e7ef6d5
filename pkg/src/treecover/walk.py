"""Normalized dart involutions of unicellular maps.

Relabel the darts of a one-face map along its boundary walk so that the
walk becomes ``i -> i + 1 (mod 2n)``; the edge reversal then becomes a
fixed-point-free involution ``phi`` which determines the map up to the
choice of starting dart.
"""

from __future__ import annotations

from dataclasses import dataclass

from .maps import CombinatorialMap, MapError, PlaneTree, cycles


@dataclass(frozen=True)
class DartInvolution:
    phi: tuple[int, ...]

    def __post_init__(self):
        phi = tuple(self.phi)
        object.__setattr__(self, "phi", phi)
        size = len(phi)
        if size == 0 or size % 2:
            raise MapError("involution needs an even, positive number of darts")
        for i, j in enumerate(phi):
            if not 0 <= j < size or j == i or phi[j] != i:
                raise MapError(f"not a fixed-point-free involution: {list(phi)}")

    @property
    def n(self) -> int:
        return len(self.phi) // 2

    def __len__(self):
        return len(self.phi)

    def __getitem__(self, i):
        return self.phi[i]

    def __iter__(self):
        return iter(self.phi)

    def __str__(self):
        return " ".join(map(str, self.phi))


def phi_at(inv: DartInvolution, j: int) -> int:
    """Extend ``phi`` to all integers by ``phi(2n*l + r) = 2n*l + phi(r)``."""
    size = len(inv.phi)
    base, r = divmod(j, size)
    return base * size + inv.phi[r]


def to_involution(cmap: CombinatorialMap) -> DartInvolution:
    """Label darts along the boundary walk starting from dart 0."""
    size = len(cmap.rho0)
    order = [0]
    x = cmap.face[0]
    while x != 0:
        order.append(x)
        x = cmap.face[x]
    if len(order) != size:
        raise MapError("map has more than one face")
    label = [0] * size
    for k, dart in enumerate(order):
        label[dart] = k
    return DartInvolution(tuple(label[cmap.rho1[dart]] for dart in order))


def from_involution(inv: DartInvolution) -> CombinatorialMap:
    """Glue the sides of a 2n-gon along ``phi``; rho0 = cycle∘phi."""
    size = len(inv.phi)
    rho0 = tuple((j + 1) % size for j in inv.phi)
    cmap = CombinatorialMap(rho0, inv.phi)
    return PlaneTree.from_map(cmap) if cmap.is_tree() else cmap


def to_tree(inv: DartInvolution) -> PlaneTree:
    return PlaneTree.from_map(from_involution(inv))


def conjugate(inv: DartInvolution, k: int) -> DartInvolution:
    """Relabel so that dart ``k`` becomes dart 0."""
    size = len(inv.phi)
    phi = inv.phi
    return DartInvolution(tuple((phi[(i + k) % size] - k) % size for i in range(size)))


def _rotation_less(phi, k, size):
    """Compare the ``k``-conjugate of ``phi`` with ``phi``: -1, 0 or 1."""
    for i in range(size):
        a = (phi[(i + k) % size] - k) % size
        b = phi[i]
        if a != b:
            return -1 if a < b else 1
    return 0


def is_canonical(inv: DartInvolution) -> bool:
    phi, size = inv.phi, len(inv.phi)
    return all(_rotation_less(phi, k, size) >= 0 for k in range(1, size))


def canonical_form(inv: DartInvolution) -> DartInvolution:
    """Lexicographically smallest conjugate under rotation of the labels."""
    size = len(inv.phi)
    best = inv
    for k in range(1, size):
        cand = conjugate(inv, k)
        if cand.phi < best.phi:
            best = cand
    return best


def vertex_count(inv: DartInvolution) -> int:
    size = len(inv.phi)
    return len(cycles([(j + 1) % size for j in inv.phi]))


def genus(inv: DartInvolution) -> int:
    return (inv.n + 1 - vertex_count(inv)) // 2


def is_noncrossing(inv: DartInvolution) -> bool:
    """Stack test on the chord diagram of ``phi``."""
    stack = []
    for i, j in enumerate(inv.phi):
        if j > i:
            stack.append(i)
        elif not stack or stack.pop() != j:
            return False
    return True


def to_walk(inv: DartInvolution) -> str:
    if not is_noncrossing(inv):
        raise MapError("only genus-0 involutions have a walk encoding")
    return "".join("(" if j > i else ")" for i, j in enumerate(inv.phi))


def verify_branch_formula(tree: PlaneTree) -> bool:
    """Check phi(i) - i == 2|a_i| - 1 (mod 2n) for every dart, |a_i| by graph search."""
    size = len(tree.rho0)
    inv = to_involution(tree)
    weights = tree.branch_weights
    dart = 0
    for i in range(size):
        if (inv.phi[i] - i - (2 * weights[dart] - 1)) % size:
            return False
        dart = tree.face[dart]
    return True
