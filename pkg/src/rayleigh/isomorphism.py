"""Isomorphism testing and minor containment by backtracking."""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple

from .matroid import Matroid, bits, matroid_minor, membership_counts


def _independent_sets(M: Matroid) -> frozenset[int]:
    seen = set()
    for b in M.bases:
        sub = b
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & b
    return frozenset(seen)


def _pair_counts(M: Matroid) -> list[list[int]]:
    n = M.size
    P = [[0] * n for _ in range(n)]
    for b in M.bases:
        idx = bits(b)
        for i in idx:
            for j in idx:
                P[i][j] += 1
    return P


def is_isomorphic(M: Matroid, N: Matroid) -> dict[str, str] | None:
    """Return a label bijection E(M) -> E(N) carrying bases onto bases, or None.

    Candidates are pruned by per-element and per-pair basis-membership
    counts, and every partial map must preserve independence of all
    subsets of size at most the rank.
    """
    if (M.size, M.rank, len(M.bases)) != (N.size, N.rank, len(N.bases)):
        return None
    cm, cn = membership_counts(M), membership_counts(N)
    if sorted(cm) != sorted(cn):
        return None
    pm, pn = _pair_counts(M), _pair_counts(N)
    if sorted(sorted(r) for r in pm) != sorted(sorted(r) for r in pn):
        return None
    ind_m, ind_n = _independent_sets(M), _independent_sets(N)
    n, r = M.size, M.rank

    freq = {c: cm.count(c) for c in cm}
    order = sorted(range(n), key=lambda i: (freq[cm[i]], i))
    image = [-1] * n
    used = [False] * n

    def consistent(pos: int) -> bool:
        x = order[pos]
        fx = image[x]
        for k in range(pos):
            y = order[k]
            if pm[x][y] != pn[fx][image[y]]:
                return False
        done = order[:pos]
        for size in range(0, min(r, pos + 1)):
            for T in combinations(done, size):
                src = 1 << x
                dst = 1 << fx
                for t in T:
                    src |= 1 << t
                    dst |= 1 << image[t]
                if (src in ind_m) != (dst in ind_n):
                    return False
        return True

    def search(pos: int) -> bool:
        if pos == n:
            return True
        x = order[pos]
        # same position first, so that identical matroids map by the identity
        cands = sorted((j for j in range(n) if not used[j] and cn[j] == cm[x]),
                       key=lambda j: (j != x, j))
        for j in cands:
            image[x] = j
            used[j] = True
            if consistent(pos) and search(pos + 1):
                return True
            used[j] = False
        image[x] = -1
        return False

    if not search(0):
        return None
    mapping = {M.labels[i]: N.labels[image[i]] for i in range(n)}
    target = N._basis_set
    for b in M.bases:
        if sum(1 << image[i] for i in bits(b)) not in target:  # pragma: no cover
            return None
    return mapping


class MinorWitness(NamedTuple):
    contract: tuple[str, ...]
    delete: tuple[str, ...]
    mapping: dict[str, str]


def has_minor(M: Matroid, pattern: Matroid) -> MinorWitness | None:
    """Search for a minor of ``M`` isomorphic to ``pattern``.

    Every minor can be written M/I\\J with I independent and J
    coindependent, so only independent contraction sets of size
    r(M) - r(pattern) are tried. Pairs (I, J) are visited in lexicographic
    order; the first witness is returned with a map E(pattern) -> E(minor).
    """
    n, k = M.size, pattern.size
    n_contract = M.rank - pattern.rank
    n_delete = n - k - n_contract
    if k > n or n_contract < 0 or n_delete < 0:
        return None
    target_counts = sorted(membership_counts(pattern))
    ind = _independent_sets(M)
    for I in combinations(range(n), n_contract):
        imask = sum(1 << i for i in I)
        if imask not in ind:
            continue
        rest = [i for i in range(n) if i not in I]
        for J in combinations(rest, n_delete):
            lab_i = tuple(M.labels[i] for i in I)
            lab_j = tuple(M.labels[j] for j in J)
            N = matroid_minor(M, lab_i, lab_j)
            if N.rank != pattern.rank or len(N.bases) != len(pattern.bases):
                continue
            if sorted(membership_counts(N)) != target_counts:
                continue
            iso = is_isomorphic(pattern, N)
            if iso is not None:
                return MinorWitness(lab_i, lab_j, iso)
    return None

