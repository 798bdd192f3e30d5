import random

import pytest

from weylcohom import report
from weylcohom.cohom import candidate_pairs, dim_frobtwist_cohomology, expected_sharp_bound, mu_bound
from weylcohom.errors import NotCovered
from weylcohom.scan import (
    MATCH,
    MISMATCH,
    NOT_COVERED,
    ScanTooLarge,
    check_a3_middle_weight_sum,
    check_a4_p11_sums,
    enumerate_candidates,
    vanishing_scan,
    verify_theorem,
)


def test_candidates_examples(system):
    c2 = system("C", 2)
    lams = {d.lam.fund for d in enumerate_candidates(c2.rs, c2.W, 5, 4)}
    assert {(1, 0), (0, 0)} <= lams
    a2 = system("A", 2)
    assert (3, 3) in {d.lam.fund for d in enumerate_candidates(a2.rs, a2.W, 5, 7)}
    assert [d.lam.fund for d in enumerate_candidates(a2.rs, a2.W, 5, 0)] == [(0, 0)]


def test_candidates_sorted_and_dominant(system):
    s = system("A", 3)
    decs = enumerate_candidates(s.rs, s.W, 7, 12)
    funds = [d.lam.fund for d in decs]
    assert funds == sorted(funds) and len(set(funds)) == len(funds)
    for d in decs:
        assert s.rs.is_dominant(d.lam) and s.rs.is_dominant(d.mu)
        assert 7 * d.mu + s.W.dot(d.w, s.rs.zero()) == d.lam


def test_scan_examples(system):
    c2 = system("C", 2)
    rep = vanishing_scan(c2.rs, c2.W, c2.table, 5, 8)
    assert rep.least_degree == 3 and rep.verdict == MATCH
    assert [(w.lam.fund, w.degree, w.dimension) for w in rep.witnesses] == [((1, 0), 3, 1)]

    a3 = system("A", 3)
    rep = vanishing_scan(a3.rs, a3.W, a3.table, 5, 8)
    assert rep.least_degree == 3 and rep.verdict == MATCH
    assert sorted((w.lam.fund, w.degree, w.dimension) for w in rep.witnesses) == [
        ((0, 0, 1), 3, 1),
        ((1, 0, 0), 3, 1),
    ]

    a2 = system("A", 2)
    rep = vanishing_scan(a2.rs, a2.W, a2.table, 11, 19)
    assert rep.least_degree == 19 and rep.verdict == MATCH
    assert [(w.lam.fund, w.dimension) for w in rep.witnesses] == [((9, 9), 1)]


def test_scan_report_invariants(system):
    s = system("A", 2)
    rep = vanishing_scan(s.rs, s.W, s.table, 7, None)
    assert rep.i_max == 12
    assert all(d > 0 for _, _, d in rep.nonzero)
    assert all(i >= rep.least_degree for _, i, _ in rep.nonzero)
    assert rep.pairs_checked == rep.candidates * rep.i_max


def test_early_exit_keeps_all_witnesses(system):
    s = system("A", 2)
    full = vanishing_scan(s.rs, s.W, s.table, 7, 14)
    early = vanishing_scan(s.rs, s.W, s.table, 7, 14, early_exit=True)
    assert early.least_degree == full.least_degree
    assert [w.lam for w in early.witnesses] == [w.lam for w in full.witnesses]
    assert early.pairs_checked == early.candidates * early.least_degree


def test_mismatch_and_not_covered(system):
    s = system("A", 2)
    # scanning short of the sharp degree cannot reproduce it
    rep = vanishing_scan(s.rs, s.W, s.table, 5, 5)
    assert rep.least_degree is None and rep.verdict == MISMATCH
    b = system("B", 2)
    rep = vanishing_scan(b.rs, b.W, b.table, 5, 4)
    assert rep.verdict == NOT_COVERED and rep.expected is None
    with pytest.raises(NotCovered):
        verify_theorem("B", 3, 11)
    with pytest.raises(ScanTooLarge):
        verify_theorem("A", 2, 37)


@pytest.mark.parametrize("family,rank,p,i_max", [("A", 2, 7, 10), ("C", 2, 7, 8), ("A", 3, 7, 10)])
def test_excluded_pairs_vanish(system, family, rank, p, i_max):
    s = system(family, rank)
    inside = {d.lam.fund for d in candidate_pairs(s.rs, s.W, p, i_max)}
    excluded = [d for d in candidate_pairs(s.rs, s.W, p, i_max + 3 * (p - 1)) if d.lam.fund not in inside]
    assert excluded
    rng = random.Random(f"{family}{rank}{p}")
    for dec in rng.sample(excluded, min(15, len(excluded))):
        assert s.rs.pairing_highest(dec.mu) > mu_bound(p, i_max)
        for i in range(1, i_max + 1):
            assert dim_frobtwist_cohomology(s.rs, s.W, s.table, dec.lam, p, i).dimension == 0


def test_report_identical_across_jobs(system):
    s = system("A", 3)
    one = vanishing_scan(s.rs, s.W, s.table, 7, 10, jobs=1)
    two = vanishing_scan(s.rs, s.W, s.table, 7, 10, jobs=2)
    assert report.to_json(report.scan_report(one, s.W)) == report.to_json(report.scan_report(two, s.W))


def test_c_type_witness_is_unique():
    for n, p in [(2, 5), (2, 7), (3, 7)]:
        rep = verify_theorem("C", n, p)
        assert [w.lam.fund for w in rep.witnesses] == [(p - 2 * n,) + (0,) * (n - 1)]


def test_a3_middle_weight_sum():
    for p in (7, 11):
        assert check_a3_middle_weight_sum(p) == {"sum": 1, "pass": True}
    with pytest.raises(ValueError):
        check_a3_middle_weight_sum(3)


def test_a4_p11_sums():
    res = check_a4_p11_sums()
    assert (res["sum_a"], res["sum_b"], res["sum_a_stabilizer"], res["pass"]) == (0, 0, 0, True)


def test_expected_used_by_default(system):
    s = system("A", 3)
    rep = vanishing_scan(s.rs, s.W, s.table, 7, 9)
    assert rep.expected == expected_sharp_bound("A", 3, 7)
