"""Coverings of unicellular dessins and the chain/star recognizers.

Every covering of a unicellular dessin with ``n`` edges by one with ``d``
edges groups the normalized darts into residue classes mod ``2d``, so all
tests here are congruences on ``phi``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .walk import DartInvolution, genus, phi_at


@dataclass(frozen=True)
class CoverReport:
    d: int
    covers: bool
    quotient: DartInvolution | None = None
    reason: str | None = None  # "divisibility", "periodicity" or "fixed-block"


def _check_d(d):
    if d <= 0:
        raise ValueError(f"d must be positive, got {d}")


def _reduce(inv, d):
    m = 2 * d
    return DartInvolution(tuple(inv.phi[i] % m for i in range(m)))


def covers_dessin(inv: DartInvolution, d: int) -> CoverReport:
    _check_d(d)
    n = inv.n
    if n % d:
        return CoverReport(d, False, reason="divisibility")
    m = 2 * d
    for i in range(2 * n):
        if (phi_at(inv, i + m) - phi_at(inv, i)) % m:
            return CoverReport(d, False, reason="periodicity")
    for i in range(2 * n):
        if (inv.phi[i] - i) % m == 0:
            return CoverReport(d, False, reason="fixed-block")
    return CoverReport(d, True, quotient=_reduce(inv, d))


def covers_tree(inv: DartInvolution, d: int) -> CoverReport:
    """Tree version: only periodicity is tested, blocks are never fixed by parity."""
    _check_d(d)
    if genus(inv) != 0:
        raise ValueError("covers_tree needs a genus-0 involution")
    if inv.n % d:
        return CoverReport(d, False, reason="divisibility")
    m = 2 * d
    for i in range(2 * inv.n):
        if (phi_at(inv, i + m) - phi_at(inv, i)) % m:
            return CoverReport(d, False, reason="periodicity")
    return CoverReport(d, True, quotient=_reduce(inv, d))


def quotient(inv: DartInvolution, d: int) -> DartInvolution:
    report = covers_dessin(inv, d)
    if not report.covers:
        raise ValueError(f"no {d}-edge quotient ({report.reason})")
    return report.quotient


def has_leaf(inv: DartInvolution) -> bool:
    """True if rho0 = cycle∘phi has a fixed point."""
    size = len(inv.phi)
    return any((j + 1) % size == i for i, j in enumerate(inv.phi))


def chain_congruence(inv: DartInvolution) -> bool:
    m = len(inv.phi)
    return all((phi_at(inv, i) - phi_at(inv, i + 1) - 1) % m == 0 for i in range(m))


def chain_closed_form(inv: DartInvolution) -> bool:
    """phi(j) = phi(0) - j, wrapped into range, with phi(0) odd."""
    phi, m = inv.phi, len(inv.phi)
    p0 = phi[0]
    if p0 % 2 == 0:
        return False
    return all(phi[j] == (p0 - j if j <= p0 else m + p0 - j) for j in range(m))


def star_congruence(inv: DartInvolution) -> bool:
    m = len(inv.phi)
    return all(
        (phi_at(inv, i) + phi_at(inv, i + 1) - 2 * i - 1) % m == 0 for i in range(m)
    )


def star_closed_form(inv: DartInvolution) -> bool:
    """phi(j) = j + (-1)^j phi(0), wrapped into range, with phi(0) in {1, 2d-1}."""
    phi, m = inv.phi, len(inv.phi)
    p0 = phi[0]
    if p0 not in (1, m - 1):
        return False
    for j in range(m):
        t = j + p0 if j % 2 == 0 else j - p0
        if t > m - 1:
            t -= m
        elif t < 0:
            t += m
        if phi[j] != t:
            return False
    return True


def is_chain(inv: DartInvolution) -> bool:
    result = chain_congruence(inv)
    assert result == chain_closed_form(inv), f"chain recognizers disagree on {inv}"
    return result


def is_star(inv: DartInvolution) -> bool:
    result = has_leaf(inv) and star_congruence(inv)
    assert result == star_closed_form(inv), f"star recognizers disagree on {inv}"
    return result


def covers_chain(inv: DartInvolution, d: int) -> bool:
    _check_d(d)
    if inv.n % d:
        return False
    m = 2 * d
    return all(
        (phi_at(inv, i) - phi_at(inv, i + 1) - 1) % m == 0 for i in range(2 * inv.n)
    )


def covers_star(inv: DartInvolution, d: int) -> bool:
    _check_d(d)
    if inv.n % d:
        return False
    m = 2 * d
    return all(
        (phi_at(inv, i) + phi_at(inv, i + 1) - 2 * i - 1) % m == 0
        for i in range(2 * inv.n)
    )
