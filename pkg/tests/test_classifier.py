from __future__ import annotations

import pytest

from bidouble.classifier import (
    ClassifierError,
    NumericalCase,
    branch_genus,
    branch_matrix_determinant,
    candidate_k_triples,
    candidate_k_triples_trace,
    classify,
    classify_with_trace,
    eigenspace_dims,
    enumerate_m_triples,
    enumerate_m_triples_trace,
    sign_elimination_check,
)


def cofactor_det(m1: int, m2: int, m3: int) -> int:
    rows = ((-1, m1, m2), (m1, -1, m3), (m2, m3, -1))
    return (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )


def test_branch_matrix_determinant_spot_values():
    assert branch_matrix_determinant((1, 1, 1)) == 4
    assert branch_matrix_determinant((7, 9, 5)) == 784
    assert branch_matrix_determinant((1, 5, 7)) == 144
    assert branch_matrix_determinant((3, 9, 9)) == 656
    assert branch_matrix_determinant((5, 5, 3)) == 208
    assert branch_matrix_determinant((2, 2, 2)) == cofactor_det(2, 2, 2)


def test_eigenspace_dims():
    assert eigenspace_dims(7, (7, 5, 5)) == (7, 1, 0, 0)
    assert eigenspace_dims(7, (5, 5, 3)) == (6, 1, 1, 0)
    assert eigenspace_dims(7, (5, 3, 1)) == (5, 2, 1, 0)
    with pytest.raises(ClassifierError):
        eigenspace_dims(7, (7, 5, 4))


def test_eigenspace_dims_sum_rule():
    for k in candidate_k_triples(7):
        dims = eigenspace_dims(7, k)
        assert sum(dims) == 7 + 1


def test_candidate_k_triples():
    got = candidate_k_triples(7)
    assert got == [
        (7, 5, 5), (7, 3, 3), (7, 1, 1),
        (5, 5, 3), (5, 3, 1), (3, 3, 3), (3, 1, 1),
    ]
    first = {k for k in got if k[0] == 7}
    rest = {k for k in got if k[0] != 7}
    assert first == {(7, 1, 1), (7, 3, 3), (7, 5, 5)}
    assert rest == {(3, 1, 1), (3, 3, 3), (5, 3, 1), (5, 5, 3)}


def test_candidate_k_rejection_reasons():
    _, rejections = candidate_k_triples_trace(7)
    reasons = {r.k: r.reason for r in rejections}
    assert reasons[(7, 7, 5)] == "character dimension integrality"
    assert reasons[(7, 7, 3)] == "negative character dimension"
    assert reasons[(7, 7, 7)] == "bicanonical degree"


def test_m_survivors_per_k():
    surv = enumerate_m_triples(7, (7, 5, 5))
    assert len(surv) == 1
    assert surv[0].m == (7, 9, 5)
    assert surv[0].l == (2, 0, 2)
    assert surv[0].k_sigma_sq == 3
    assert surv[0].det_a == 784

    surv = enumerate_m_triples(7, (5, 5, 3))
    assert [(s.m, s.l, s.k_sigma_sq, s.det_a) for s in surv] == [
        ((1, 5, 7), (4, 2, 0), 1, 144),
        ((1, 5, 3), (4, 2, 2), -1, 64),
        ((1, 1, 7), (4, 4, 0), -1, 64),
    ]

    surv = enumerate_m_triples(7, (5, 3, 1))
    assert [(s.m, s.l) for s in surv] == [((1, 3, 1), (4, 2, 2))]

    for k in ((7, 3, 3), (7, 1, 1), (3, 3, 3), (3, 1, 1)):
        assert enumerate_m_triples(7, k) == []


def test_m_rejection_traces():
    _, rej = enumerate_m_triples_trace(7, (7, 5, 5))
    by_reported = {r.m_reported: r for r in rej}
    hit = by_reported[(9, 9, 3)]
    assert hit.filter_name == "determinant square test"
    assert "656" in hit.detail

    _, rej = enumerate_m_triples_trace(7, (5, 5, 3))
    by_reported = {r.m_reported: r for r in rej}
    hit = by_reported[(3, 5, 5)]
    assert hit.filter_name == "determinant square test"
    assert "208" in hit.detail

    _, rej = enumerate_m_triples_trace(7, (7, 3, 3))
    by_reported = {r.m_reported: r for r in rej}
    assert by_reported[(7, 7, 3)].filter_name == "triple index bound"


def test_survivor_canonical_under_k_symmetry():
    # k has a repeated entry, so (7, 9, 5) and (7, 5, 9) describe the same
    # case; the enumeration must return one canonical representative.
    surv = enumerate_m_triples(7, (7, 5, 5))
    assert [s.m for s in surv] == [(7, 9, 5)]


def k_fixing_perms(k):
    import itertools

    return [
        p
        for p in itertools.permutations(range(3))
        if tuple(k[i] for i in p) == k
    ]


def test_every_survivor_is_its_orbit_representative():
    # permuting indices that fix k yields the same case; the emitted triple
    # must be the canonical element of that orbit (max by rotated key), so
    # each orbit shows up exactly once
    for k in candidate_k_triples(7):
        survivors = enumerate_m_triples(7, k)
        seen_orbits = []
        for s in survivors:
            orbit = {tuple(s.m[i] for i in p) for p in k_fixing_perms(k)}
            assert s.m == max(orbit, key=lambda m: (m[1], m[2], m[0]))
            assert orbit not in seen_orbits
            seen_orbits.append(orbit)


def test_all_emitted_nodal_counts_are_even():
    for c in classify(7):
        assert all(x % 2 == 0 for x in c.l)
    for k in candidate_k_triples(7):
        for s in enumerate_m_triples(7, k):
            assert all(x % 2 == 0 for x in s.l)


def test_classify_k7_table():
    cases = classify(7)
    assert [c.to_json_dict() for c in cases] == [
        {"K2": 7, "k": [7, 5, 5], "m": [5, 9, 7], "r": [-1, -1, -1],
         "l": [2, 0, 2], "KSigma2": 3, "detA": 784, "status": "realized_inoue"},
        {"K2": 7, "k": [5, 5, 3], "m": [7, 5, 1], "r": [-1, -1, -1],
         "l": [4, 2, 0], "KSigma2": 1, "detA": 144, "status": "realized_dp1"},
        {"K2": 7, "k": [5, 5, 3], "m": [3, 5, 1], "r": [-1, -1, -1],
         "l": [4, 2, 2], "KSigma2": -1, "detA": 64, "status": "excluded_geometric"},
        {"K2": 7, "k": [5, 5, 3], "m": [7, 1, 1], "r": [-1, -1, -1],
         "l": [4, 4, 0], "KSigma2": -1, "detA": 64, "status": "excluded_geometric"},
        {"K2": 7, "k": [5, 3, 1], "m": [1, 3, 1], "r": [-1, -1, -1],
         "l": [4, 2, 2], "KSigma2": -1, "detA": 16, "status": "open"},
    ]


def test_classify_trace_flags_validation():
    outcome = classify_with_trace(7)
    assert outcome.validated
    assert len(outcome.cases) == 5
    other = classify_with_trace(5)
    assert not other.validated
    assert all(c.status == "open" for c in other.cases)


def test_numerical_case_consistency_enforced():
    good = classify(7)[0]
    with pytest.raises(ClassifierError):
        NumericalCase(
            k2=good.k2, k=good.k, m=good.m, l=good.l,
            k_sigma_sq=good.k_sigma_sq, det_a=good.det_a + 1, status=good.status,
        )
    with pytest.raises(ClassifierError):
        NumericalCase(
            k2=good.k2, k=good.k, m=good.m, l=(0, 0, 0),
            k_sigma_sq=good.k_sigma_sq, det_a=good.det_a, status=good.status,
        )
    with pytest.raises(ClassifierError):
        NumericalCase(
            k2=good.k2, k=good.k, m=good.m, l=good.l,
            k_sigma_sq=good.k_sigma_sq, det_a=good.det_a, status="fabulous",
        )


def case_by_m(m_reported):
    for c in classify(7):
        if c.m_reported == m_reported:
            return c
    raise AssertionError(m_reported)


def test_branch_genus_values():
    inoue = case_by_m((5, 9, 7))
    assert [branch_genus(inoue, i) for i in (1, 2, 3)] == [-1, -1, -2]
    dp1 = case_by_m((7, 5, 1))
    assert [branch_genus(dp1, i) for i in (1, 2, 3)] == [-1, 0, 0]
    open_case = case_by_m((1, 3, 1))
    assert [branch_genus(open_case, i) for i in (1, 2, 3)] == [1, 1, 0]
    with pytest.raises(ClassifierError):
        branch_genus(dp1, 4)


def test_branch_genus_non_integral_is_none():
    dp1 = case_by_m((7, 5, 1))
    tweaked = NumericalCase(
        k2=dp1.k2, k=dp1.k, m=dp1.m, l=dp1.l, k_sigma_sq=dp1.k_sigma_sq,
        det_a=dp1.det_a, status=dp1.status, r=(0, -1, -1),
    )
    assert branch_genus(tweaked, 1) is None


def test_sign_elimination():
    assert sign_elimination_check(0, 1) is False
    assert sign_elimination_check(2, 3) is False
    assert sign_elimination_check(20, 99) is False
    with pytest.raises(ClassifierError):
        sign_elimination_check(1, 3)
    with pytest.raises(ClassifierError):
        sign_elimination_check(-2, 3)
    with pytest.raises(ClassifierError):
        sign_elimination_check(2, 4)
