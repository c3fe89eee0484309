"""Shared fixtures: seeded generators of small random matroids and the criterion summary."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from rayleigh.fields import FieldMatrix
from rayleigh.matroid import Matroid, from_bases, from_matrix, from_transversal, uniform

collect_ignore = ["oracle_golden.py"]


def sparse_paving(rng: random.Random, n: int, r: int, tries: int = 6) -> Matroid:
    """All r-subsets minus random circuit-hyperplanes that pairwise share at most r - 2 elements."""
    all_sets = [frozenset(c) for c in combinations(range(n), r)]
    removed: list[frozenset] = []
    for _ in range(tries):
        X = rng.choice(all_sets)
        if all(len(X & Y) <= r - 2 for Y in removed) and len(removed) + 1 < len(all_sets):
            removed.append(X)
    fam = [[str(i + 1) for i in sorted(B)] for B in all_sets if B not in removed]
    return from_bases([str(i + 1) for i in range(n)], fam)


def random_matrix_matroid(rng: random.Random, n: int, r: int) -> Matroid:
    field = rng.choice(["gf2", "gf3", "rational"])
    hi = {"gf2": 1, "gf3": 2, "rational": 2}[field]
    lo = -2 if field == "rational" else 0
    while True:
        rows = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(r)]
        if any(any(row) for row in rows):
            return from_matrix(FieldMatrix(field, rows), [str(i + 1) for i in range(n)])


def random_transversal(rng: random.Random, n: int) -> Matroid:
    k = rng.randint(1, min(4, n))
    sets = [[str(i + 1) for i in range(n) if rng.random() < 0.5] or ["1"] for _ in range(k)]
    return from_transversal([str(i + 1) for i in range(n)], sets)


def random_matroid(rng: random.Random, max_n: int = 7, min_n: int = 3) -> Matroid:
    n = rng.randint(min_n, max_n)
    r = rng.randint(1, n - 1) if n > 1 else rng.randint(0, 1)
    kind = rng.randrange(3)
    if r == 0:
        return uniform(0, n)
    if kind == 0 and r < n:
        return sparse_paving(rng, n, r)
    if kind == 1:
        return random_matrix_matroid(rng, n, r)
    return random_transversal(rng, n)


@pytest.fixture
def rng():
    return random.Random(20261016)


# criterion summary printed at the end of the run

CRITERIA: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        ok, title = CRITERIA[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {title}")
