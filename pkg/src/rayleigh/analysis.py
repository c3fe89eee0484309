"""Rayleigh differences and the hierarchy of correlation properties.

Symbolic quantities (``rayleigh_diff``, ``central_term``) are exact
``SparsePoly`` values. The checkers evaluate at exact rational points; a
point y = n / D is handled as the integer vector n with common denominator
D, using that every Rayleigh difference is homogeneous of degree 2r - 2.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm, prod
from typing import Iterable, Mapping, Sequence

from . import fields
from .errors import GroundTooLarge, MatroidError, NonPositiveAssignment, RankDeficient
from .matroid import Matroid, bits, from_matrix, popcount
from .poly import SparsePoly, basis_poly, minor_poly, partition_poly
from .report import (
    POSITIVE,
    REAL,
    PropertyReport,
    SampleDomain,
    Sampler,
    Verdict,
    complete_point,
    fmt,
    fmt_assignment,
)
from .unipoly import UniPoly, real_root_census

BALANCED_MAX_GROUND = 12


def _distinct(M: Matroid, *labels) -> list[int]:
    idx = [M.index(x) for x in labels]
    if len(set(idx)) != len(idx):
        raise MatroidError(f"elements must be distinct, got {labels}")
    return idx


# symbolic quantities

def rayleigh_diff(M: Matroid, e, f) -> SparsePoly:
    """M_e^f M_f^e - M_ef M^ef in the partition convention."""
    i, j = _distinct(M, e, f)
    ei, fj = 1 << i, 1 << j
    return (minor_poly(M, ei, fj) * minor_poly(M, fj, ei)
            - minor_poly(M, ei | fj, 0) * minor_poly(M, 0, ei | fj))


def rayleigh_diff_alt(M: Matroid, e, f) -> SparsePoly:
    """The same difference written as M_e M_f - M_ef M."""
    i, j = _distinct(M, e, f)
    ei, fj = 1 << i, 1 << j
    return (minor_poly(M, ei) * minor_poly(M, fj)
            - minor_poly(M, ei | fj) * basis_poly(M))


def central_term(M: Matroid, e, f, g) -> SparsePoly:
    """Middle coefficient of the Rayleigh difference of {e, f} viewed as a quadratic in y_g."""
    a, b, c = (1 << i for i in _distinct(M, e, f, g))
    mp = lambda I, J: minor_poly(M, I, J)  # noqa: E731
    return (mp(a, b | c) * mp(b | c, a) + mp(b, a | c) * mp(a | c, b)
            - mp(c, a | b) * mp(a | b, c) - mp(a | b | c, 0) * mp(0, a | b | c))


def contracted_diff(M: Matroid, e, f, g) -> SparsePoly:
    """Rayleigh difference of {e, f} in the contraction by g (partition convention)."""
    a, b, c = (1 << i for i in _distinct(M, e, f, g))
    mp = lambda I, J: minor_poly(M, I, J)  # noqa: E731
    return mp(a | c, b) * mp(b | c, a) - mp(a | b | c, 0) * mp(c, a | b)


def deleted_diff(M: Matroid, e, f, g) -> SparsePoly:
    """Rayleigh difference of {e, f} in the deletion of g (partition convention)."""
    a, b, c = (1 << i for i in _distinct(M, e, f, g))
    mp = lambda I, J: minor_poly(M, I, J)  # noqa: E731
    return mp(a, b | c) * mp(b, a | c) - mp(a | b, c) * mp(0, a | b | c)


# exact point evaluation

def _int_point(values: Sequence[Fraction]) -> tuple[list[int], int]:
    D = lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * D) for v in values], D


class _Evaluator:
    """Sums of basis weights split by how each basis meets a few fixed positions."""

    def __init__(self, M: Matroid):
        self.M = M
        self.basis_bits = [bits(b) for b in M.bases]
        self._groups: dict[tuple, dict[int, list[int]]] = {}

    def groups(self, P: tuple[int, ...]) -> dict[int, list[int]]:
        if P not in self._groups:
            out: dict[int, list[int]] = {p: [] for p in range(1 << len(P))}
            for k, b in enumerate(self.M.bases):
                pat = sum(1 << t for t, i in enumerate(P) if b >> i & 1)
                out[pat].append(k)
            self._groups[P] = out
        return self._groups[P]

    def weights(self, n: Sequence[int]) -> list[int]:
        return [prod(n[i] for i in bb) for bb in self.basis_bits]

    def sums(self, P: tuple[int, ...], n: Sequence[int], W: Sequence[int] | None) -> list[int]:
        """S[p] = sum over bases B with B meeting P in pattern p of prod_{i in B - P} n_i."""
        groups = self.groups(P)
        if W is not None and all(n[i] for i in P):
            out = []
            for p in range(1 << len(P)):
                div = prod(n[P[t]] for t in range(len(P)) if p >> t & 1)
                out.append(sum(W[k] for k in groups[p]) // div)
            return out
        n2 = list(n)
        for i in P:
            n2[i] = 1
        W2 = self.weights(n2)
        return [sum(W2[k] for k in groups[p]) for p in range(1 << len(P))]


def _pair_delta(S: Sequence[int]) -> int:
    return S[1] * S[2] - S[3] * S[0]


def _triple_terms(S: Sequence[int]) -> tuple[int, int, int]:
    """(contracted diff, central term, deleted diff) at integer scale."""
    d_con = S[5] * S[6] - S[7] * S[4]
    theta = S[1] * S[6] + S[2] * S[5] - S[4] * S[3] - S[7] * S[0]
    d_del = S[1] * S[2] - S[3] * S[0]
    return d_con, theta, d_del


def delta_at(M: Matroid, e, f, point: Mapping[str, object]) -> Fraction:
    """Exact value of the Rayleigh difference at a point (missing labels default to 1)."""
    i, j = _distinct(M, e, f)
    vals = complete_point(M.labels, point)
    n, D = _int_point(vals)
    ev = _Evaluator(M)
    return Fraction(_pair_delta(ev.sums((i, j), n, None))) / Fraction(D) ** (2 * M.rank - 2)


def delta_table(M: Matroid, point: Mapping[str, object] | None = None) -> dict[tuple[str, str], Fraction]:
    """Rayleigh differences of all pairs at a point (default all ones)."""
    vals = complete_point(M.labels, point or {})
    n, D = _int_point(vals)
    ev = _Evaluator(M)
    W = ev.weights(n)
    scale = Fraction(D) ** (2 * M.rank - 2)
    return {(M.labels[i], M.labels[j]): Fraction(_pair_delta(ev.sums((i, j), n, W))) / scale
            for i, j in combinations(range(M.size), 2)}


def _stamp(report: PropertyReport, t0: float) -> PropertyReport:
    report.runtime_ms = (time.perf_counter() - t0) * 1000
    return report


# negative correlation and balance

def _family_negcorr(family: Sequence[int], elems: Sequence[int]):
    """Rayleigh differences at all ones for every pair of ``elems`` in a basis family.

    Yields (i, j, value) for negative values and returns the number of
    pairs involving a loop.
    """
    N = len(family)
    single = {i: 0 for i in elems}
    pair: dict[tuple[int, int], int] = {}
    for b in family:
        bb = bits(b)
        for x in bb:
            single[x] += 1
        for x, y in combinations(bb, 2):
            pair[(x, y)] = pair.get((x, y), 0) + 1
    bad, trivial = [], 0
    for i, j in combinations(elems, 2):
        if not single[i] or not single[j]:
            trivial += 1
            continue
        cij = pair.get((i, j), 0)
        val = (single[i] - cij) * (single[j] - cij) - cij * (N - single[i] - single[j] + cij)
        if val < 0:
            bad.append((i, j, val))
    return bad, trivial


def negative_correlation_check(M: Matroid) -> PropertyReport:
    t0 = time.perf_counter()
    bad, trivial = _family_negcorr(M.bases, range(M.size))
    npairs = M.size * (M.size - 1) // 2
    witnesses = [{"pair": [M.labels[i], M.labels[j]], "value": fmt(v)} for i, j, v in bad]
    rep = PropertyReport(
        "negatively-correlated", Verdict.VIOLATED if bad else Verdict.HOLDS, M.name,
        parameters={"point": "all ones"}, witnesses=witnesses,
        work={"pairs": npairs, "trivial_pairs": trivial})
    if trivial:
        rep.notes.append("pairs meeting a loop have identically zero difference")
    return _stamp(rep, t0)


def _minor_leaves(bases: Sequence[int], n: int):
    """Distinct minor families reachable by keep/contract/delete per element.

    Yields (contract_mask, delete_mask, family). Identical families at the
    same depth are explored once, so repeated minors are skipped.
    """
    seen: set = set()
    stack = [(0, 0, 0, tuple(bases))]
    while stack:
        depth, ci, dj, fam = stack.pop()
        key = (depth, fam)
        if key in seen:
            continue
        seen.add(key)
        if depth == n:
            yield ci, dj, fam
            continue
        bit = 1 << depth
        has = [b for b in fam if b & bit]
        lacks = [b for b in fam if not b & bit]
        # contraction: loops contract as deletions
        con = tuple(sorted(b & ~bit for b in has)) if has else fam
        # deletion: coloops delete as contractions
        dele = tuple(lacks) if lacks else tuple(sorted(b & ~bit for b in has))
        # pushed in reverse so the keep branch is explored first
        stack.append((depth + 1, ci, dj | bit, dele))
        stack.append((depth + 1, ci | bit, dj, con))
        stack.append((depth + 1, ci, dj, fam))


def balanced_check(M: Matroid, max_ground: int = BALANCED_MAX_GROUND) -> PropertyReport:
    """Negative correlation of every minor, by exhaustive sweep over (I, J)."""
    t0 = time.perf_counter()
    if M.size > max_ground:
        raise GroundTooLarge(f"balanced sweep limited to {max_ground} elements, got {M.size}")
    full = M.ground_mask
    checked = set()
    minors = 0
    for ci, dj, fam in _minor_leaves(M.bases, M.size):
        rest = full & ~(ci | dj)
        key = (rest, fam)
        if key in checked:
            continue
        checked.add(key)
        minors += 1
        bad, _ = _family_negcorr(fam, bits(rest))
        if bad:
            witnesses = [{"minor": {"contract": list(M.labels_of(ci)), "delete": list(M.labels_of(dj))},
                          "pair": [M.labels[i], M.labels[j]], "value": fmt(v)} for i, j, v in bad]
            rep = PropertyReport("balanced", Verdict.VIOLATED, M.name, witnesses=witnesses,
                                 work={"minors": minors})
            return _stamp(rep, t0)
    rep = PropertyReport("balanced", Verdict.HOLDS, M.name, work={"minors": minors})
    return _stamp(rep, t0)


# sampling checks

def _points(M: Matroid, inject: Iterable[Mapping] | None, sampler: Sampler | None, samples: int):
    yield "injected", complete_point(M.labels, {})
    for partial in inject or ():
        yield "injected", complete_point(M.labels, partial)
    for _ in range(samples):
        yield "sampled", sampler.point(M.size)


def rayleigh_sample_check(M: Matroid, domain: SampleDomain | None = None, samples: int = 1000,
                          seed: int = 0, inject: Iterable[Mapping] | None = None) -> PropertyReport:
    """Search for a point where some Rayleigh difference is negative.

    The all-ones point and any ``inject`` points (partial assignments,
    unassigned elements at 1) are tried before ``samples`` random draws.
    Sampling never certifies the property: the verdict is VIOLATED or
    NO_VIOLATION_FOUND.
    """
    t0 = time.perf_counter()
    domain = domain or SampleDomain()
    if samples < 0:
        raise MatroidError("samples must be nonnegative")
    name = "rayleigh" if domain.mode == POSITIVE else "strongly-rayleigh"
    ev = _Evaluator(M)
    pairs = list(combinations(range(M.size), 2))
    scale_exp = 2 * M.rank - 2
    params = {"seed": seed, "samples": samples, **domain.describe()}
    count = 0
    for origin, vals in _points(M, inject, Sampler(domain, seed), samples):
        count += 1
        n, D = _int_point(vals)
        W = ev.weights(n)
        bad = []
        for i, j in pairs:
            v = _pair_delta(ev.sums((i, j), n, W))
            if v < 0:
                bad.append({"pair": [M.labels[i], M.labels[j]],
                            "assignment": fmt_assignment(M.labels, vals),
                            "value": fmt(v / Fraction(D) ** scale_exp), "origin": origin})
        if bad:
            rep = PropertyReport(name, Verdict.VIOLATED, M.name, params, bad,
                                 {"pairs": len(pairs), "samples": count})
            return _stamp(rep, t0)
    rep = PropertyReport(name, Verdict.NO_VIOLATION_FOUND, M.name, params, [],
                         {"pairs": len(pairs), "samples": count})
    return _stamp(rep, t0)


def coefficient_nonneg_check(M: Matroid) -> PropertyReport:
    """CERTIFIED when every Rayleigh difference has only nonnegative coefficients.

    Otherwise the offending pairs are listed and the verdict is
    NO_VIOLATION_FOUND: a negative coefficient is not a negative value.
    """
    t0 = time.perf_counter()
    flagged = []
    for e, f in combinations(M.labels, 2):
        low = rayleigh_diff(M, e, f).min_coefficient()
        if low is not None and low < 0:
            flagged.append({"pair": [e, f], "value": fmt(low), "kind": "negative-coefficient"})
    npairs = M.size * (M.size - 1) // 2
    if flagged:
        rep = PropertyReport("rayleigh-coefficients", Verdict.NO_VIOLATION_FOUND, M.name,
                             witnesses=flagged, work={"pairs": npairs})
        rep.notes.append("inconclusive: listed pairs have a negative coefficient")
    else:
        rep = PropertyReport("rayleigh-coefficients", Verdict.CERTIFIED, M.name,
                             work={"pairs": npairs},
                             certificate="all Rayleigh differences have nonnegative coefficients")
    return _stamp(rep, t0)


def inconclusive_pairs(report: PropertyReport) -> set[frozenset[str]]:
    return {frozenset(w["pair"]) for w in report.witnesses}


BALANCED_NECESSARY = "BALANCED-NECESSARY"
STRONG = "STRONG"


def triple_condition_check(M: Matroid, mode: str = BALANCED_NECESSARY, samples: int = 200,
                           seed: int = 0, inject: Iterable[Mapping] | None = None,
                           bound: int = 100) -> PropertyReport:
    """Check the quadratic-in-y_g condition for every pair {e, f} and third element g.

    With A, T, C the contracted difference, central term and deleted
    difference, the quadratic A t^2 + T t + C must be nonnegative for all
    t > 0 (BALANCED-NECESSARY: A, C >= 0 and T >= -2 sqrt(AC)) or for all
    real t (STRONG: A, C >= 0 and T^2 <= 4AC). Square roots are avoided by
    comparing squares. Points are positive in the first mode and arbitrary
    reals in the second.
    """
    t0 = time.perf_counter()
    if mode not in (BALANCED_NECESSARY, STRONG):
        raise MatroidError(f"unknown triple mode {mode!r}")
    domain = SampleDomain(POSITIVE if mode == BALANCED_NECESSARY else REAL, bound)
    ev = _Evaluator(M)
    r = M.rank
    triples = [(i, j, k) for i, j in combinations(range(M.size), 2)
               for k in range(M.size) if k not in (i, j)]
    params = {"mode": mode, "seed": seed, "samples": samples, **domain.describe()}
    count = 0
    for origin, vals in _points(M, inject, Sampler(domain, seed), samples):
        count += 1
        n, D = _int_point(vals)
        W = ev.weights(n)
        bad = []
        for i, j, k in triples:
            a, t, c = _triple_terms(ev.sums((i, j, k), n, W))
            # a and c carry scale D^(2r-4) and D^(2r-2); t carries D^(2r-3)
            if a >= 0 and c >= 0:
                if mode == STRONG:
                    ok = t * t <= 4 * a * c
                else:
                    ok = t >= 0 or t * t <= 4 * a * c
            else:
                ok = False
            if not ok:
                bad.append({"triple": [M.labels[i], M.labels[j], M.labels[k]],
                            "assignment": fmt_assignment(M.labels, vals),
                            "value": fmt(t / Fraction(D) ** (2 * r - 3)),
                            "contracted": fmt(a / Fraction(D) ** (2 * r - 4)),
                            "deleted": fmt(c / Fraction(D) ** (2 * r - 2)),
                            "origin": origin})
        if bad:
            rep = PropertyReport("triple-condition", Verdict.VIOLATED, M.name, params, bad,
                                 {"triples": len(triples), "samples": count})
            return _stamp(rep, t0)
    rep = PropertyReport("triple-condition", Verdict.NO_VIOLATION_FOUND, M.name, params, [],
                         {"triples": len(triples), "samples": count})
    return _stamp(rep, t0)


# partition polynomials: RZ[m], LC[m], half-plane spot checks

RZ = "RZ"
LC = "LC"


def _lc_failure(p: UniPoly, s: int) -> int | None:
    """First j where the binomially normalized sequence fails log-concavity."""
    for j in range(1, s):
        lhs = p[j] ** 2 * comb(s, j - 1) * comb(s, j + 1)
        rhs = p[j - 1] * p[j + 1] * comb(s, j) ** 2
        if lhs < rhs:
            return j
    return None


def rz_lc_check(M: Matroid, m: int, a: Mapping[str, object] | None = None, which: str = RZ,
                constraints: Sequence[tuple[Iterable, int]] = ()) -> PropertyReport:
    """Real-rootedness (RZ) or log-concavity (LC) of partition polynomials.

    Every S with 2 <= |S| <= m avoiding the constraint classes is tried at
    the positive point ``a`` (default all ones).
    """
    t0 = time.perf_counter()
    if which not in (RZ, LC):
        raise MatroidError(f"unknown condition {which!r}")
    point = {lab: Fraction(v) for lab, v in (a or {}).items()}
    for lab in M.labels:
        point.setdefault(lab, Fraction(1))
    if any(v <= 0 for v in point.values()):
        raise NonPositiveAssignment("RZ/LC checks need a positive point")
    cons = [(tuple(str(x) for x in C), c) for C, c in constraints]
    blocked = M.mask(x for C, _ in cons for x in C)
    free = [i for i in range(M.size) if not blocked >> i & 1]
    bad = []
    tried = 0
    for size in range(2, min(m, len(free)) + 1):
        for S in combinations(free, size):
            tried += 1
            labs = [M.labels[i] for i in S]
            p = partition_poly(M, labs, point, cons)
            if which == RZ:
                if not real_root_census(p).is_real_rooted:
                    bad.append({"subset": labs, "polynomial": str(p)})
            else:
                j = _lc_failure(p, size)
                if j is not None:
                    bad.append({"subset": labs, "j": j, "polynomial": str(p)})
    params = {"m": m, "which": which, "assignment": {k: fmt(v) for k, v in point.items()}}
    if cons:
        params["constraints"] = [[list(C), c] for C, c in cons]
    rep = PropertyReport(which + f"[{m}]", Verdict.VIOLATED if bad else Verdict.HOLDS, M.name,
                         params, bad, {"subsets": tried})
    return _stamp(rep, t0)


def linear_substitution(M: Matroid, slopes: Sequence[Fraction], offsets: Sequence[Fraction]) -> UniPoly:
    """Basis polynomial with y_e replaced by slopes[e] x + offsets[e]."""
    lin = [UniPoly([b, a]) for a, b in zip(slopes, offsets)]
    total = UniPoly()
    for b in M.bases:
        term = UniPoly([1])
        for i in bits(b):
            term = term * lin[i]
        total = total + term
    return total


def hpp_spot_check(M: Matroid, trials: int = 500, seed: int = 0, bound: int = 100,
                   max_indicator: int = 3) -> PropertyReport:
    """Necessary condition for the half-plane property.

    For nonnegative a, b the polynomial obtained from y_e = a_e x + b_e must
    have only real zeros. Indicator pairs (a = 1_S, b = 1_{E-S}) for all
    |S| <= max_indicator come first, then ``trials`` random pairs. A
    violation proves the matroid is not HPP.
    """
    t0 = time.perf_counter()
    sampler = Sampler(SampleDomain(POSITIVE, bound), seed)
    n = M.size
    params = {"seed": seed, "trials": trials, "bound": bound, "max_indicator": max_indicator}

    def candidates():
        for size in range(1, min(max_indicator, n) + 1):
            for S in combinations(range(n), size):
                a = [Fraction(int(i in S)) for i in range(n)]
                yield "indicator", a, [1 - x for x in a]
        for _ in range(trials):
            a = [sampler.nonnegative() for _ in range(n)]
            b = [sampler.nonnegative() for _ in range(n)]
            yield "sampled", a, b

    count = 0
    for origin, a, b in candidates():
        count += 1
        p = linear_substitution(M, a, b)
        if not real_root_census(p).is_real_rooted:
            w = {"slopes": fmt_assignment(M.labels, a), "offsets": fmt_assignment(M.labels, b),
                 "polynomial": str(p), "origin": origin}
            rep = PropertyReport("hpp-spot", Verdict.VIOLATED, M.name, params, [w], {"samples": count})
            rep.notes.append("a non-real-rooted specialization proves the matroid is not HPP")
            return _stamp(rep, t0)
    return _stamp(PropertyReport("hpp-spot", Verdict.NO_VIOLATION_FOUND, M.name, params, [],
                                 {"samples": count}), t0)


def independent_pair_check(M: Matroid, samples: int = 50, seed: int = 0, bound: int = 100,
                           inject: Iterable[Mapping] | None = None) -> PropertyReport:
    """M_I M_J >= M_IJ M for disjoint nonempty independent I, J at positive points.

    HOLDS means the inequality held at every point tried (all ones, the
    injected points and ``samples`` random positive points).
    """
    t0 = time.perf_counter()
    ind = set()
    for b in M.bases:
        sub = b
        while sub:
            ind.add(sub)
            sub = (sub - 1) & b
    ind = sorted(ind)
    pairs = [(I, J) for I, J in combinations(ind, 2) if not I & J]
    contains = {X: [k for k, b in enumerate(M.bases) if b & X == X] for X in set(ind) | {I | J for I, J in pairs}}
    ev = _Evaluator(M)
    params = {"seed": seed, "samples": samples, "bound": bound}
    count = 0
    sampler = Sampler(SampleDomain(POSITIVE, bound), seed)
    for origin, vals in _points(M, inject, sampler, samples):
        if any(v <= 0 for v in vals):
            raise NonPositiveAssignment("independent pair check needs positive points")
        count += 1
        n, D = _int_point(vals)
        W = ev.weights(n)
        total = sum(W)
        S = {X: sum(W[k] for k in ks) for X, ks in contains.items()}
        bad = []
        for I, J in pairs:
            diff = S[I] * S[J] - S[I | J] * total
            if diff < 0:
                den = prod(n[i] for i in bits(I)) * prod(n[j] for j in bits(J))
                deg = 2 * M.rank - popcount(I) - popcount(J)
                bad.append({"subset": [list(M.labels_of(I)), list(M.labels_of(J))],
                            "assignment": fmt_assignment(M.labels, vals),
                            "value": fmt(diff / (den * Fraction(D) ** deg)), "origin": origin})
        if bad:
            rep = PropertyReport("independent-pairs", Verdict.VIOLATED, M.name, params, bad,
                                 {"pairs": len(pairs), "samples": count})
            return _stamp(rep, t0)
    return _stamp(PropertyReport("independent-pairs", Verdict.HOLDS, M.name, params, [],
                                 {"pairs": len(pairs), "samples": count}), t0)


# determinant identity and symmetric matroids

def _symbolic_det(rows: list[list[SparsePoly]]) -> SparsePoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for c in range(n):
        if rows[0][c].is_zero():
            continue
        minor = [r[:c] + r[c + 1:] for r in rows[1:]]
        term = rows[0][c] * _symbolic_det(minor)
        if c % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else rows[0][0] * 0


def binet_cauchy_check(A: fields.FieldMatrix, labels=None, samples: int = 20, seed: int = 0,
                       bound: int = 100) -> PropertyReport:
    """det(A diag(y) A^T) against the sum of det(A[S])^2 y^S over column r-subsets.

    Both sides are expanded as exact polynomials and compared, then also
    compared numerically at ``samples`` random positive points.
    """
    t0 = time.perf_counter()
    if A.field != "rational":
        A = fields.FieldMatrix("rational", A.rows)
    r, ncol = A.nrows, A.ncols
    if A.rank() != r:
        raise RankDeficient(f"matrix has rank {A.rank()} < {r} rows")
    labels = tuple(str(x) for x in (labels or range(1, ncol + 1)))
    ys = [SparsePoly.variable(labels, lab) for lab in labels]
    zero = SparsePoly(labels)
    K = [[sum((ys[e] * (A.rows[i][e] * A.rows[j][e]) for e in range(ncol)), zero)
          for j in range(r)] for i in range(r)]
    lhs = _symbolic_det(K)
    weights = {}
    rhs = zero
    for S in combinations(range(ncol), r):
        d = A.det(S)
        if d:
            weights[S] = d * d
            rhs = rhs + SparsePoly(labels, {tuple(int(i in S) for i in range(ncol)): d * d})
    unimodular = all(w == 1 for w in weights.values())
    ok = lhs == rhs
    sampler = Sampler(SampleDomain(POSITIVE, bound), seed)
    mismatches = []
    for _ in range(samples):
        y = sampler.point(ncol)
        numeric = [[sum(A.rows[i][e] * A.rows[j][e] * y[e] for e in range(ncol)) for j in range(r)]
                   for i in range(r)]
        left = fields.det(numeric, "rational")
        right = rhs.evaluate(dict(zip(labels, y)))
        if left != right:
            mismatches.append({"assignment": fmt_assignment(labels, y), "value": fmt(left - right)})
    matches_basis_poly = None
    if unimodular:
        matches_basis_poly = rhs == basis_poly(from_matrix(A, labels))
    params = {"rows": r, "cols": ncol, "seed": seed, "samples": samples,
              "unimodular": unimodular, "matches_basis_poly": matches_basis_poly}
    holds = ok and not mismatches
    rep = PropertyReport("binet-cauchy", Verdict.HOLDS if holds else Verdict.VIOLATED, None,
                         params, mismatches, {"subsets": comb(ncol, r), "samples": samples})
    if not ok:
        rep.notes.append("symbolic expansions differ")
    return _stamp(rep, t0)


def transitive_formula_value(M: Matroid) -> Fraction:
    """M^2 r (m - r) / (m^2 (m - 1)) at all ones, with m = |E| and r = rank."""
    N, r, m = len(M.bases), M.rank, M.size
    return Fraction(N * N * r * (m - r), m * m * (m - 1))


def transitive_formula_check(M: Matroid) -> PropertyReport:
    """Every pair's difference at all ones must equal the 2-transitive closed form.

    The caller vouches for a 2-transitive automorphism group; it is not
    verified here.
    """
    t0 = time.perf_counter()
    if M.size < 2:
        raise MatroidError("need at least two elements")
    expected = transitive_formula_value(M)
    table = delta_table(M)
    bad = [{"pair": list(p), "value": fmt(v), "expected": fmt(expected)}
           for p, v in table.items() if v != expected]
    rep = PropertyReport("transitive-formula", Verdict.VIOLATED if bad else Verdict.HOLDS, M.name,
                         {"expected": fmt(expected)}, bad, {"pairs": len(table)})
    return _stamp(rep, t0)


# square certificates

@dataclass(frozen=True)
class SquareCertificate:
    """target = remainder + sum of c * p^2 with c > 0 and remainder coefficientwise >= 0."""

    squares: tuple[tuple[Fraction, SparsePoly], ...]
    remainder: SparsePoly

    def expand(self) -> SparsePoly:
        total = self.remainder
        for c, p in self.squares:
            total = total + p * p * Fraction(c)
        return total


def verify_square_certificate(target: SparsePoly, cert: SquareCertificate) -> bool:
    """True iff the certificate is well-formed and reproduces ``target`` exactly."""
    try:
        if any(Fraction(c) <= 0 for c, _ in cert.squares):
            return False
        low = cert.remainder.min_coefficient()
        if low is not None and low < 0:
            return False
        return cert.expand() == target
    except MatroidError:
        return False
