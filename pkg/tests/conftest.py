import pytest
from hypothesis import strategies as st

from treecover.maps import parse
from treecover.oracle import all_involutions, chain_shape, star_shape
from treecover.walk import from_involution


def chain(n):
    return "(" * n + ")" * n


def star(n):
    return "()" * n


# Named trees by boundary walk; arms are listed counterclockwise from the centre.
X_1113 = "()()()((()))"
Y_113 = "()()((()))"
Y_122 = "()(())(())"
TRIPOD_222 = "(())(())(())"
TRIPOD_333 = "((()))((()))((()))"


def tree(walk):
    return parse(walk, "walk")


def targets_by_search(phi, d):
    """Every fixed-point-free involution mu on 2d points with mu(i mod 2d) = phi(i) mod 2d."""
    m = 2 * d
    found = []
    for mu in all_involutions(d):
        if all(mu[i % m] == phi[i] % m for i in range(len(phi))):
            found.append(mu)
    return found


def brute_covers(phi, target, d):
    if phi.n % d:
        return False
    shape = {"chain": chain_shape, "star": star_shape, "any": lambda m: True}[target]
    return any(shape(from_involution(mu)) for mu in targets_by_search(phi, d))


@st.composite
def dyck_words(draw, min_edges=1, max_edges=12):
    n = draw(st.integers(min_edges, max_edges))
    bits = draw(st.lists(st.booleans(), min_size=2 * n, max_size=2 * n))
    out, opened, closed = [], 0, 0
    for b in bits:
        if opened < n and (opened == closed or b):
            out.append("(")
            opened += 1
        else:
            out.append(")")
            closed += 1
    return "".join(out)


@pytest.fixture
def x_tree():
    return tree(X_1113)


@pytest.fixture
def y_tree():
    return tree(Y_113)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
