import pytest

from nlcseq.bitseq import BitSeq, canonical_value, rotate_right, value_is_aperiodic
from nlcseq.complexity import nlc_finite_fast, nlc_periodic
from nlcseq.oracle import (
    build_catalog,
    lyndon_count,
    lyndon_words,
    oracle_P,
    scan_open_problem,
    verify_generation,
    verify_theorem1,
    verify_theorem2,
)
from nlcseq.structure import BForm, decompose, representative
from period8_rows import ROWS


@pytest.mark.parametrize("n", range(1, 17))
def test_lyndon_words(n):
    words = list(lyndon_words(n))
    assert words == sorted(set(words))
    assert len(words) == lyndon_count(n)
    assert all(canonical_value(v, n) == v for v in words)
    brute = {canonical_value(v, n) for v in range(1 << n) if value_is_aperiodic(v, n)}
    assert set(words) == brute


@pytest.mark.parametrize("n", range(2, 15))
def test_catalog_partitions_aperiodic_necklaces(n):
    cat = build_catalog(n)
    assert cat.class_count() == lyndon_count(n)
    lo = (n - 1).bit_length()
    assert all(lo <= w <= n - 1 for w in cat.classes)
    assert sum(cat.totals.values()) == n * lyndon_count(n)
    for w, classes in cat.classes.items():
        for k in classes:
            assert nlc_periodic(k.canonical, fast=True) == w


def test_catalog_parallel_matches_serial():
    a = build_catalog(14)
    b = build_catalog(14, workers=2)
    assert a.classes == b.classes and a.ops == b.ops


def test_oracle_examples():
    assert [str(k.canonical) for k in oracle_P(8, 7)] == ["00000001", "00100101", "01011011", "01111111"]
    want = {canonical_value(int(r[3], 2), 8) for r in ROWS if r[2] == 0}
    assert {k.canonical.value for k in oracle_P(8, 4)} == want
    assert oracle_P(4, 0) == []
    with pytest.raises(ValueError):
        oracle_P(25, 12)


def test_verify_theorem1():
    assert verify_theorem1(8, 4)
    assert verify_theorem1(9, 4)
    assert verify_theorem1(12, 7)
    with pytest.raises(ValueError):
        verify_theorem1(12, 8)
    with pytest.raises(ValueError):
        verify_theorem1(8, 2)
    with pytest.raises(ValueError):
        verify_theorem1(17, 5)


def test_verify_theorem2():
    r = verify_theorem2(8)
    assert r.passed and r.by_add == {0: 10, 1: 8, 2: 6, 3: 4}
    assert verify_theorem2(4).passed
    for n in range(9, 15):
        assert verify_theorem2(n).passed


def test_generation_reports():
    r8 = verify_generation(8)
    assert r8.passed
    assert {k.omega for k in r8.checks} == {3, 4, 5, 6, 7}
    r7 = verify_generation(7)
    assert [k.generated for k in r7.checks if k.omega == 3] == [4]
    assert verify_generation(12).passed
    with pytest.raises(ValueError):
        verify_generation(15)


def test_open_problem_scan_small_sizes_are_clean():
    scan = scan_open_problem(14)
    assert scan.findings == [] and scan.bound_failures == []
    assert scan.scanned > 0


def test_open_problem_counterexample_at_15():
    """A representative with add > n-c-d whose best rotation beats n - d."""
    s = BitSeq(15, int("100101010010100", 2))
    form = BForm.of(8, 7)
    assert form in decompose(s)
    assert representative(s, 8) == (s, 1)
    assert 1 > 15 - 8 - 7
    profile = [nlc_finite_fast(rotate_right(s, k)) for k in range(15)]
    assert max(profile) == 9 != 15 - 7
    scan = scan_open_problem(15, min_n=15)
    assert any(f.seq == str(s) and f.max_nlc == 9 for f in scan.findings)
    assert scan.bound_failures == []
