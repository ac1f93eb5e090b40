import itertools

import pytest

from arcorder.partitions import partitions_of
from arcorder.reference import THREE_STRATA_TYPE, four_move_pair, single_stratum_gamma
from arcorder.tableaux import enumerate_lr, klein_by_type, refinements


# criterion number -> result line, filled by test_acceptance.py
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])


@pytest.fixture(scope="session")
def pair():
    return four_move_pair()


@pytest.fixture(scope="session")
def gamma1():
    return single_stratum_gamma()


@pytest.fixture(scope="session")
def pis(gamma1):
    """The seven refinements, index 0 unused so pis[1] is the bottom."""
    return [None] + refinements(gamma1)


@pytest.fixture(scope="session")
def three_strata():
    lrs = enumerate_lr(*THREE_STRATA_TYPE)
    nodes = sorted((pi for lr in lrs for pi in refinements(lr)), key=lambda p: p.sort_key())
    return lrs, [None] + nodes


def same_type_pairs(max_size):
    for size in range(1, max_size + 1):
        for beta in partitions_of(size):
            for lst in klein_by_type(beta).values():
                yield from itertools.product(lst, lst)


# ------------------------------------------------ synthesized single moves

KINDS = ("A", "A'", "B", "C", "D")


def _random_background(rng, top):
    from arcorder.summands import B2, P0, P1, P2

    out = []
    for _ in range(rng.randint(0, 4)):
        m = rng.randint(1, top)
        pick = rng.random()
        if pick < 0.4 and m >= 3:
            out.append(B2(m, rng.randint(1, m - 2)))
        elif pick < 0.6 and m >= 2:
            out.append(P2(m))
        elif pick < 0.8:
            out.append(P1(m))
        else:
            out.append(P0(m))
    return out


def random_move(kind, rng, top=9):
    """A random valid move; "A'" forces n = r + 1 and "A" excludes it."""
    from arcorder.arcs import Move

    while True:
        if kind in ("A", "A'", "C"):
            m, n, r, s = sorted(rng.sample(range(1, top + 1), 4), reverse=True)
            if kind == "A'":
                if n - 1 <= s:
                    continue
                r = n - 1
            elif kind == "A" and n == r + 1:
                continue
            return Move(kind[0], (m, n, r, s))
        return Move(kind, tuple(sorted(rng.sample(range(1, top + 1), 3), reverse=True)))


def synth_pair(kind, rng, top=9):
    """(move, y, z) where y arises from z by one down-move of the given kind."""
    from arcorder.category import tableau_of_decomposition
    from arcorder.summands import Decomposition

    mv = random_move(kind, rng, top)
    bg = Decomposition(tuple(_random_background(rng, top)))
    z = tableau_of_decomposition(bg + mv.removed)
    y = tableau_of_decomposition(bg + mv.added)
    return mv, y, z


def expected_delta_h(mv, N):
    """Predicted [X,Z] - [X,Y] for a single down-move, keyed like BandMatrix."""

    def one(c):
        return 1 if c else 0

    B, P = {}, {}
    if mv.kind == "A":
        m, n, r, s = mv.params
        for l in range(3, N + 1):
            for t in range(1, l - 1):
                B[(l, t)] = one(n < l <= m and s < t <= r)
        for t in range(1, N + 1):
            P[t] = 0
    elif mv.kind == "B":
        m, r, s = mv.params
        for l in range(3, N + 1):
            for t in range(1, l - 1):
                B[(l, t)] = one(m < l and s < t <= r)
        for t in range(1, N + 1):
            P[t] = one(s < t <= r)
    elif mv.kind == "C":
        m, n, r, s = mv.params
        for l in range(3, N + 1):
            for t in range(1, l - 1):
                B[(l, t)] = one(r < l <= n and t <= s) + one(m < l and r < t <= n)
        for t in range(1, N + 1):
            P[t] = one(r < t <= n)
    else:
        m, r, s = mv.params
        for l in range(3, N + 1):
            for t in range(1, l - 1):
                B[(l, t)] = one(r < l <= m and t <= s)
        for t in range(1, N + 1):
            P[t] = 0
    return B, P
