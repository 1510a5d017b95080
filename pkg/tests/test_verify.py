import json

import pytest

from dejean import verify
from dejean.perms import Permutation
from dejean.verify import (
    admissible_search_space,
    cross_check_sample,
    legacy_exhaustive,
    verify_range,
    verify_stabilizer_freeness,
)


@pytest.mark.parametrize("n, rs", [(27, (14, 15)), (28, (15,)), (29, (15,))])
def test_search_space(n, rs):
    space = admissible_search_space(n)
    assert space.r_values == rs
    assert [space.k_of_r(r) for r in rs] == [r + 1 for r in rs]
    assert all(space.params.p + 1 <= r < space.k_of_r(r) <= 16 for r in rs)


def test_search_space_range_checks():
    with pytest.raises(ValueError, match="outside"):
        admissible_search_space(30)
    with pytest.raises(ValueError, match="outside"):
        admissible_search_space(26)
    with pytest.raises(ValueError, match="n >= 18"):
        admissible_search_space(17, override=True)
    assert admissible_search_space(26, override=True).r_values == (14, 15)
    empty = admissible_search_space(30, override=True)
    assert empty.r_values == () and "no admissible" in empty.note


@pytest.mark.parametrize("n, counts", [
    (27, [(14, 364, 46_656), (15, 390, 44_992)]),
    (28, [(15, 405, 51_904)]),
    (29, [(15, 420, 53_824)]),
])
def test_reports_pass_with_closed_form_counts(n, counts):
    report = verify_stabilizer_freeness(n)
    assert report.status == "PASS" and report.violations == []
    assert [(c.r, c.factor_length, c.factors_checked) for c in report.per_r] == counts
    assert all(c.words_examined == 64 for c in report.per_r)
    for c in report.per_r:
        # every tested length is r(n-1) < k(n-1) with k = r+1
        assert c.factor_length == c.r * (n - 1) < (c.r + 1) * (n - 1)
        assert c.factors_checked == 64 * (3 * report.uniform_length - c.factor_length + 1)


def test_below_range_finds_violations():
    # the reduction applies from n=18 but f only avoids short stabilizers from 27 on
    report = verify_stabilizer_freeness(26, override=True)
    assert report.status == "FAIL"
    v = report.violations[0]
    assert (v.triple, v.start, v.length, v.k) == ("113", 687, 350, 15)
    assert all(v.length < v.k * 25 for v in report.violations)
    assert all(v.k >= v.length // 25 + 1 for v in report.violations)


def test_dedup_gives_same_verdict():
    plain = verify_stabilizer_freeness(26, override=True)
    dedup = verify_stabilizer_freeness(26, override=True, dedup=True)
    assert dedup.per_r == plain.per_r
    # dedup keeps the first occurrence of each distinct factor
    assert {(v.length, v.k) for v in dedup.violations} <= {(v.length, v.k) for v in plain.violations}
    assert bool(dedup.violations) == bool(plain.violations)
    assert verify_stabilizer_freeness(27, dedup=True).status == "PASS"


def test_empty_search_space_passes_vacuously():
    report = verify_stabilizer_freeness(31, override=True)
    assert report.status == "PASS" and report.per_r == []


def test_parallel_report_identical():
    serial = verify_stabilizer_freeness(27, 1).to_json(timing=False)
    assert verify_stabilizer_freeness(27, 2).to_json(timing=False) == serial
    a = verify_stabilizer_freeness(25, 1, override=True).to_json(timing=False)
    assert verify_stabilizer_freeness(25, 3, override=True).to_json(timing=False) == a


def test_report_json_schema():
    d = json.loads(verify_stabilizer_freeness(28).to_json())
    assert list(d) == ["n", "m", "p", "uniform_length", "per_r", "violations",
                       "elapsed_seconds", "status"]
    assert list(d["per_r"][0]) == ["r", "factor_length", "words_examined", "factors_checked"]
    assert d["elapsed_seconds"] >= 0


def test_verify_range():
    reports = verify_range(27, 29)
    assert [r.n for r in reports] == [27, 28, 29]
    assert all(r.status == "PASS" for r in reports)
    assert len(verify_range(28, 28)) == 1
    with pytest.raises(ValueError, match="empty range"):
        verify_range(29, 27)


def test_cross_check_trivial_and_small():
    assert cross_check_sample(28, 0, seed=1)
    assert cross_check_sample(27, 50, seed=2)


def test_cross_check_detects_mismatch(monkeypatch):
    monkeypatch.setattr(verify, "phi", lambda bits, n: Permutation.identity(n))
    assert not cross_check_sample(27, 5, seed=0)


def test_nesting_makes_k_r_plus_one_sufficient():
    # fixing 1..j pointwise implies fixing 1..i for i < j, on every permutation tried
    import itertools
    for image in itertools.permutations(range(1, 6)):
        p = Permutation(image)
        fixed = [all(p(j) == j for j in range(1, k + 1)) for k in range(1, 6)]
        assert fixed == sorted(fixed, reverse=True)


@pytest.mark.parametrize("n", [27, 28, 29])
def test_legacy_exhaustive_agrees(n):
    assert legacy_exhaustive(n) is None
    assert legacy_exhaustive(n, (4, 3, 2)) is None


@pytest.mark.parametrize("n", [27, 28, 29])
def test_unreduced_search_over_every_triple(n):
    # all lengths < (n-1)^2 and all k <= n-1: confirms the length reduction empirically
    import itertools
    for triple in itertools.product(range(1, 5), repeat=3):
        assert legacy_exhaustive(n, triple) is None
