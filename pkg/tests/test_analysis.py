from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations

import pytest

from conftest import random_matroid
from rayleigh import analysis as an
from rayleigh import catalog
from rayleigh.errors import GroundTooLarge, MatroidError, NonPositiveAssignment, RankDeficient
from rayleigh.fields import FieldMatrix
from rayleigh.matroid import from_matrix, matroid_minor, parallel_expand, uniform
from rayleigh.poly import SparsePoly, basis_poly, minor_poly, partition_poly
from rayleigh.report import POSITIVE, REAL, SampleDomain, Verdict

JLINE = {"2": Fraction(7, 10), "3": Fraction(7, 10), "4": Fraction(7, 10), "5": 1, "6": 1, "7": 1}
F7_REAL = {"3": 2, "5": 2, "4": -1, "7": -1, "6": 2}


def v(labels, lab):
    return SparsePoly.variable(labels, lab)


# symbolic quantities

def test_rayleigh_diff_examples():
    assert an.delta_at(catalog.get("s8"), "1", "8", {}) == -16
    assert an.rayleigh_diff(uniform(1, 2), "1", "2") == 1
    U = uniform(2, 4)
    L = U.labels
    assert an.rayleigh_diff(U, "1", "2") == v(L, "3") ** 2 + v(L, "3") * v(L, "4") + v(L, "4") ** 2
    with pytest.raises(MatroidError):
        an.rayleigh_diff(U, "1", "1")


def test_central_term_small_cases():
    U = uniform(2, 3)
    # Delta{1,2} = y3^2: contracted part 1, central term 0, deleted part 0
    assert an.rayleigh_diff(U, "1", "2") == v(U.labels, "3") ** 2
    assert an.contracted_diff(U, "1", "2", "3") == 1
    assert an.central_term(U, "1", "2", "3") == 0
    assert an.deleted_diff(U, "1", "2", "3") == 0
    with pytest.raises(MatroidError):
        an.central_term(U, "1", "2", "2")


def test_decomposition_with_a_loop_and_on_s8():
    M = from_matrix(FieldMatrix("rational", [[1, 0, 1, 0], [0, 1, 1, 0]]))  # element 4 is a loop
    for S, g in ((M, "4"), (catalog.get("s8"), "2")):
        yg = v(S.labels, g)
        for e, f in combinations([x for x in S.labels if x != g], 2):
            assert an.rayleigh_diff(S, e, f) == (yg * yg * an.contracted_diff(S, e, f, g)
                                                 + yg * an.central_term(S, e, f, g)
                                                 + an.deleted_diff(S, e, f, g))


def test_pointwise_evaluation_matches_symbolic(rng):
    """The integer-scaled evaluator against plain substitution, zeros and negatives included."""
    sampler_vals = [Fraction(0), Fraction(-3, 2), Fraction(5, 7), Fraction(2), Fraction(-1)]
    for _ in range(40):
        M = random_matroid(rng, 6, min_n=2)
        pt = {lab: rng.choice(sampler_vals) for lab in M.labels}
        table = an.delta_table(M, pt)
        for (e, f), val in table.items():
            assert val == an.rayleigh_diff(M, e, f).evaluate(pt)
            assert val == an.delta_at(M, e, f, pt)
    assert an.delta_table(uniform(0, 3))[("1", "2")] == 0


def test_triple_terms_match_symbolic(rng):
    for _ in range(15):
        M = random_matroid(rng, 6)
        pt = {lab: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for lab in M.labels}
        vals = [Fraction(pt[lab]) for lab in M.labels]
        n, D = an._int_point(vals)
        ev = an._Evaluator(M)
        W = ev.weights(n)
        r = M.rank
        for i, j, k in list(combinations(range(M.size), 3))[:10]:
            a, t, c = an._triple_terms(ev.sums((i, j, k), n, W))
            e, f, g = M.labels[i], M.labels[j], M.labels[k]
            assert a / Fraction(D) ** (2 * r - 4) == an.contracted_diff(M, e, f, g).evaluate(pt)
            assert t / Fraction(D) ** (2 * r - 3) == an.central_term(M, e, f, g).evaluate(pt)
            assert c / Fraction(D) ** (2 * r - 2) == an.deleted_diff(M, e, f, g).evaluate(pt)


# negative correlation and balance

def test_negative_correlation_examples():
    rep = an.negative_correlation_check(catalog.get("s8"))
    assert rep.verdict is Verdict.VIOLATED
    assert rep.witnesses == [{"pair": ["1", "8"], "value": "-16"}]
    rep = an.negative_correlation_check(catalog.get("l-transversal"))
    assert rep.verdict is Verdict.VIOLATED
    assert [w["pair"] for w in rep.witnesses] == [["e", "f"]]
    for r, m in ((1, 3), (2, 4), (3, 6)):
        U = uniform(r, m)
        assert an.negative_correlation_check(U).verdict is Verdict.HOLDS
        assert set(an.delta_table(U).values()) == {an.transitive_formula_value(U)}


def test_negative_correlation_logs_loop_pairs():
    M = from_matrix(FieldMatrix("rational", [[1, 1, 0]]))
    rep = an.negative_correlation_check(M)
    assert rep.verdict is Verdict.HOLDS and rep.work["trivial_pairs"] == 2


def test_balanced_examples():
    rep = an.balanced_check(catalog.get("s8"))
    assert rep.verdict is Verdict.VIOLATED
    assert rep.witnesses[0]["minor"] == {"contract": [], "delete": []}
    assert an.balanced_check(catalog.get("jprime")).verdict is Verdict.HOLDS
    with pytest.raises(GroundTooLarge):
        an.balanced_check(uniform(2, 13))


def test_balanced_matches_naive_sweep(rng):
    """Against a plain loop over all disjoint (I, J) with standard minors."""
    for _ in range(15):
        M = random_matroid(rng, 6)
        naive = True
        labels = M.labels
        for k in range(3 ** M.size):
            I, J, x = [], [], k
            for lab in labels:
                x, d = divmod(x, 3)
                (I if d == 1 else J if d == 2 else []).append(lab)
            N = matroid_minor(M, I, J)
            if an.negative_correlation_check(N).verdict is Verdict.VIOLATED:
                naive = False
                break
        got = an.balanced_check(M).verdict
        assert got is (Verdict.HOLDS if naive else Verdict.VIOLATED)


# sampling

def test_rayleigh_sampling_examples():
    J = catalog.get("jprime")
    rep = an.rayleigh_sample_check(J, SampleDomain(POSITIVE), 5, 1, inject=[JLINE])
    assert rep.verdict is Verdict.VIOLATED
    w = rep.witnesses[0]
    assert w["pair"] == ["1", "8"] and w["value"] == "-280041/1000000" and w["origin"] == "injected"
    F = catalog.get("f7")
    rep = an.rayleigh_sample_check(F, SampleDomain(REAL), 5, 1, inject=[F7_REAL])
    assert rep.verdict is Verdict.VIOLATED and rep.property == "strongly-rayleigh"
    assert rep.witnesses[0]["pair"] == ["1", "2"] and rep.witnesses[0]["value"] == "-16"
    rep = an.rayleigh_sample_check(uniform(2, 4), SampleDomain(POSITIVE), 1000, 3)
    assert rep.verdict is Verdict.NO_VIOLATION_FOUND and rep.work["samples"] == 1001


def test_sampling_is_deterministic_per_seed():
    M = catalog.get("p7prime")
    a = an.rayleigh_sample_check(M, SampleDomain(REAL), 50, 7).to_json()
    b = an.rayleigh_sample_check(M, SampleDomain(REAL), 50, 7).to_json()
    assert a == b


def test_sample_domain_validation():
    with pytest.raises(MatroidError):
        SampleDomain(POSITIVE, 0)
    with pytest.raises(MatroidError):
        SampleDomain("COMPLEX")


# coefficient certificates

def test_coefficient_check_examples():
    assert an.coefficient_nonneg_check(uniform(2, 4)).verdict is Verdict.CERTIFIED
    rep = an.coefficient_nonneg_check(catalog.get("p7prime"))
    assert rep.verdict is Verdict.NO_VIOLATION_FOUND
    assert an.inconclusive_pairs(rep) == {frozenset(p) for p in ("14", "17", "25", "36")}
    rep = an.coefficient_nonneg_check(catalog.get("s8"))
    assert frozenset("18") in an.inconclusive_pairs(rep)


def test_hierarchy_consistency_on_catalog():
    for name in ("s8", "f7", "f7dual", "p7prime", "k4", "uniform(2,5)", "jprime"):
        M = catalog.get(name)
        sampled = an.rayleigh_sample_check(M, SampleDomain(POSITIVE), 30, 2)
        if an.coefficient_nonneg_check(M).verdict is Verdict.CERTIFIED:
            assert sampled.verdict is Verdict.NO_VIOLATION_FOUND, name
        if an.negative_correlation_check(M).verdict is Verdict.VIOLATED:
            assert sampled.verdict is Verdict.VIOLATED, name


def test_square_certificate_examples():
    L = ("1",)
    y1 = SparsePoly.variable(L, "1")
    zero = SparsePoly(L)
    assert an.verify_square_certificate(y1 * y1, an.SquareCertificate(((Fraction(1), y1),), zero))
    assert not an.verify_square_certificate(-y1, an.SquareCertificate(((Fraction(1), y1),), zero))
    assert not an.verify_square_certificate(-y1, an.SquareCertificate((), -y1))
    assert not an.verify_square_certificate(y1 * y1, an.SquareCertificate(((Fraction(0), y1),), y1 * y1))
    other = SparsePoly.variable(("2",), "2")
    assert not an.verify_square_certificate(y1 * y1, an.SquareCertificate(((Fraction(1), other),), zero))


def test_a8_certificate_fixture_is_rejected_when_tampered():
    cert = catalog.a8_certificate()
    moved = catalog.transport_certificate(cert, catalog.display_to_source_labels())
    target = an.rayleigh_diff(catalog.get("a8"), "7", "8")
    assert an.verify_square_certificate(target, moved)
    c0, p0 = moved.squares[0]
    bumped = an.SquareCertificate(((c0 * 2, p0),) + moved.squares[1:], moved.remainder)
    assert not an.verify_square_certificate(target, bumped)


# triple condition

def test_triple_condition_examples():
    K4 = catalog.get("k4")
    assert an.triple_condition_check(K4, an.STRONG, 200, 1).verdict is Verdict.NO_VIOLATION_FOUND
    rep = an.triple_condition_check(catalog.get("f7"), an.STRONG, 20, 1, inject=[F7_REAL])
    assert rep.verdict is Verdict.VIOLATED and rep.witnesses[0]["origin"] == "injected"
    assert an.triple_condition_check(catalog.get("a8"), an.BALANCED_NECESSARY, 20, 1).verdict \
        is Verdict.NO_VIOLATION_FOUND
    with pytest.raises(MatroidError):
        an.triple_condition_check(K4, "WEAK")


def test_triple_condition_with_coloop_is_trivial():
    M = from_matrix(FieldMatrix("rational", [[1, 1, 0], [0, 0, 1]]))  # element 3 is a coloop
    assert an.deleted_diff(M, "1", "2", "3") == 0
    assert an.central_term(M, "1", "2", "3") == 0
    rep = an.triple_condition_check(M, an.STRONG, 30, 1)
    assert rep.verdict is Verdict.NO_VIOLATION_FOUND


def test_triple_condition_rank_one_reports_cleanly():
    rep = an.triple_condition_check(uniform(1, 4), an.STRONG, 20, 1)
    json.loads(rep.to_json())


# partition polynomials

def test_rz_lc_examples():
    F = catalog.get("f7")
    rep = an.rz_lc_check(F, 3)
    assert rep.verdict is Verdict.VIOLATED
    assert {tuple(w["subset"]) for w in rep.witnesses} == {("1", "2", "6"), ("1", "3", "5"), ("1", "4", "7"),
                                                            ("2", "3", "4"), ("2", "5", "7"), ("3", "6", "7"),
                                                            ("4", "5", "6")}
    assert all(w["polynomial"] == "12 * x^2 + 12 * x + 4" for w in rep.witnesses)
    assert an.rz_lc_check(F, 1).verdict is Verdict.HOLDS
    assert an.rz_lc_check(F, 1, which=an.LC).verdict is Verdict.HOLDS
    assert an.rz_lc_check(uniform(2, 4), 4, which=an.LC).verdict is Verdict.HOLDS
    with pytest.raises(NonPositiveAssignment):
        an.rz_lc_check(F, 2, {"1": 0})
    with pytest.raises(MatroidError):
        an.rz_lc_check(F, 2, which="XX")


def test_rz_with_constraints():
    F = catalog.get("f7")
    rep = an.rz_lc_check(F, 2, constraints=[(["7"], 1)])
    assert rep.work["subsets"] == 15
    assert rep.parameters["constraints"] == [[["7"], 1]]


def test_lc2_and_negative_difference_correspond():
    """Delta < 0 at a positive point turns into an LC[2] failure once w_e = M_f^e, w_f = M_e^f."""
    J = catalog.get("jprime")
    for t in (Fraction(13, 20), Fraction(7, 10), Fraction(4, 5), Fraction(19, 20)):
        pt = {lab: Fraction(1) for lab in J.labels}
        pt.update({"2": t, "3": t, "4": t})
        neg = [(e, f) for (e, f), val in an.delta_table(J, pt).items() if val < 0]
        assert ("1", "8") in neg
        for e, f in neg:
            A = minor_poly(J, [e], [f]).evaluate(pt)
            B = minor_poly(J, [f], [e]).evaluate(pt)
            moved = {**pt, e: B, f: A}
            rep = an.rz_lc_check(J, 2, moved, an.LC)
            hit = [w for w in rep.witnesses if set(w["subset"]) == {e, f}]
            assert rep.verdict is Verdict.VIOLATED and hit
            # and any LC[2] failure already forces Delta < 0 at its own point
            for w in rep.witnesses:
                assert an.delta_at(J, *w["subset"], moved) < 0


# half-plane spot checks

def test_hpp_examples():
    rep = an.hpp_spot_check(catalog.get("f7"), 10, 1)
    assert rep.verdict is Verdict.VIOLATED and rep.witnesses[0]["origin"] == "indicator"
    w = rep.witnesses[0]
    assert w["polynomial"] == "12 * x^2 + 12 * x + 4"
    assert sorted(k for k, s in w["slopes"].items() if s == "1") == ["1", "2", "6"]
    assert an.hpp_spot_check(uniform(2, 4), 100, 1).verdict is Verdict.NO_VIOLATION_FOUND


def test_linear_substitution_reproduces_partition_polynomial():
    F = catalog.get("f7")
    S = {"1", "2", "6"}
    slopes = [Fraction(int(lab in S)) for lab in F.labels]
    p = an.linear_substitution(F, slopes, [1 - a for a in slopes])
    assert p == partition_poly(F, sorted(S), {lab: 1 for lab in F.labels})


# independent sets

def test_independent_pair_examples():
    assert an.independent_pair_check(uniform(2, 4), 0).verdict is Verdict.HOLDS
    assert an.independent_pair_check(catalog.get("k4"), 50, 1).verdict is Verdict.HOLDS
    rep = an.independent_pair_check(catalog.get("s8"), 0)
    assert rep.verdict is Verdict.VIOLATED
    assert [(w["subset"], w["value"]) for w in rep.witnesses] == [([["1"], ["8"]], "-16")]


def test_independent_pair_values_match_symbolic():
    J = catalog.get("jprime")
    rep = an.independent_pair_check(J, 0, inject=[JLINE])
    bad = [w for w in rep.witnesses if w["origin"] == "injected"]
    assert bad
    for w in bad[:5]:
        I, K = w["subset"]
        pt = {k: Fraction(x) for k, x in w["assignment"].items()}
        val = (minor_poly(J, I) * minor_poly(J, K) - minor_poly(J, I + K) * basis_poly(J)).evaluate(pt)
        assert Fraction(w["value"]) == val


# determinant identity

def test_binet_cauchy_examples():
    rep = an.binet_cauchy_check(FieldMatrix("rational", [[1, 0], [0, 1]]))
    assert rep.verdict is Verdict.HOLDS and rep.parameters["unimodular"]
    tri = FieldMatrix("rational", [[1, 1, 0], [-1, 0, 1]])
    rep = an.binet_cauchy_check(tri)
    assert rep.verdict is Verdict.HOLDS and rep.parameters["matches_basis_poly"] is True
    rep = an.binet_cauchy_check(FieldMatrix("rational", catalog.JPRIME_ROWS), samples=5)
    assert rep.verdict is Verdict.HOLDS and not rep.parameters["unimodular"]
    with pytest.raises(RankDeficient):
        an.binet_cauchy_check(FieldMatrix("rational", [[1, 1], [2, 2]]))


# 2-transitive formula

def test_transitive_formula_examples():
    U = uniform(2, 4)
    assert an.transitive_formula_value(U) == 3
    assert an.transitive_formula_check(U).verdict is Verdict.HOLDS
    assert an.transitive_formula_value(catalog.get("pg", 2)) == 32
    assert an.transitive_formula_value(uniform(1, 2)) == 1
    assert an.transitive_formula_check(catalog.get("s8")).verdict is Verdict.VIOLATED


# parallel expansion

def test_parallel_expansion_transfer(rng):
    """Delta of M[m] at all ones equals Delta of M at m, for singleton classes of e and f."""
    for _ in range(12):
        M = random_matroid(rng, 5, min_n=3)
        e, f = M.labels[0], M.labels[1]
        m = [1, 1] + [rng.randint(1, 3) for _ in M.labels[2:]]
        big = parallel_expand(M, m)
        assert an.delta_at(big, e, f, {}) == an.rayleigh_diff(M, e, f).evaluate(dict(zip(M.labels, m)))


# reports

def test_report_json_schema():
    rep = an.negative_correlation_check(catalog.get("s8"))
    d = json.loads(rep.to_json())
    assert set(d) >= {"property", "verdict", "matroid_name", "parameters", "witnesses", "work", "runtime_ms"}
    assert d["runtime_ms"] is None
    assert json.loads(rep.to_json(timing=True))["runtime_ms"] >= 0
