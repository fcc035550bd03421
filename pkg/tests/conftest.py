"""Independent oracles shared by the test modules."""
from __future__ import annotations

import itertools
from functools import lru_cache

import pytest

from liecascade.roots import root_system

SMALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2", "F4"]
ALL_TYPES = ([f"A{r}" for r in range(1, 9)] + [f"B{r}" for r in range(2, 9)]
             + [f"C{r}" for r in range(2, 9)] + [f"D{r}" for r in range(3, 9)]
             + ["E6", "E7", "E8", "F4", "G2"])


@lru_cache(maxsize=None)
def orbit_roots(cartan: tuple) -> frozenset:
    """All roots as the Weyl-group orbit of the simple roots.

    Uses only simple reflections s_i(v) = v - <v, a_i^v> a_i, not root strings.
    """
    n = len(cartan)
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simples)
    todo = list(simples)
    while todo:
        v = todo.pop()
        for i in range(n):
            k = sum(v[j] * cartan[j][i] for j in range(n))
            w = tuple(x - (k if j == i else 0) for j, x in enumerate(v))
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return frozenset(seen)


def oracle_positive(rs) -> set:
    return {a for a in orbit_roots(rs.cartan) if min(a) >= 0}


def oracle_string(rs, alpha, beta, reach=4):
    roots = orbit_roots(rs.cartan)
    ks = [k for k in range(-reach, reach + 1) if tuple(b + k * a for a, b in zip(alpha, beta)) in roots]
    # the string is unbroken, so its ends are the extremes
    return min(ks), max(ks)


def brute_jacobi(table) -> list:
    """Triple loop over basis vectors, expanding both sides by hand."""
    n = table.dim

    def br(u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in table.bracket(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: c for k, c in out.items() if c}

    bad = []
    for x, y, z in itertools.product(range(n), repeat=3):
        ex, ey, ez = {x: 1}, {y: 1}, {z: 1}
        lhs = br(ex, br(ey, ez))
        rhs = br(br(ex, ey), ez)
        for k, c in br(ey, br(ex, ez)).items():
            rhs[k] = rhs.get(k, 0) + c
        rhs = {k: c for k, c in rhs.items() if c}
        if lhs != rhs:
            bad.append((x, y, z))
    return bad


@pytest.fixture(scope="session")
def systems():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = root_system(name)
        return cache[name]
    return get


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
