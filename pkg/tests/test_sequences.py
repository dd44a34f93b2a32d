from decimal import Decimal

import pytest

from _oracles import partitions_pentagonal
from sunroots import sequences
from sunroots.arith_functions import gell, sigma
from sunroots.sequences import (
    IntegerSequence,
    display_root,
    equivalence_property,
    is_logconcave_at,
    log_concavity_scan,
    monotone_root_verify,
    root_compare,
    root_decreasing_check,
    root_quotient_report,
    wohlfahrt_sequence,
)

N2 = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
N3 = [1, 1, 4, 8, 21, 39, 92, 170, 360, 667, 1316]
N4 = [1, 1, 8, 21, 84, 206, 717, 1810, 5462, 13859, 38497]


def test_wohlfahrt_examples():
    assert list(wohlfahrt_sequence(gell(2), 10).values) == N2
    assert wohlfahrt_sequence(gell(3), 6)[6] == 92
    assert wohlfahrt_sequence(gell(4), 10)[10] == 38497


def test_nell_table():
    assert list(sequences.nell_sequence(3, 10).values) == N3
    assert list(sequences.nell_sequence(4, 10).values) == N4


def test_wohlfahrt_integrality_is_enforced():
    with pytest.raises(ArithmeticError):
        wohlfahrt_sequence(lambda k: 1 if k == 1 else 2, 4)
    with pytest.raises(ValueError):
        wohlfahrt_sequence(sigma(1), -1)


def test_colored_examples():
    assert sequences.colored_partitions(1, 10).values == tuple(N2)
    p2 = sequences.colored_partitions(2, 2)
    assert (p2[1], p2[2]) == (2, 5)
    assert root_compare(p2, 1) < 0
    p3 = sequences.colored_partitions(3, 2)
    assert (p3[1], p3[2]) == (3, 9)
    assert root_compare(p3, 1) == 0
    with pytest.raises(ValueError):
        sequences.colored_partitions(0, 5)


def test_plane_and_over_examples():
    assert sequences.plane_partitions(2)[2] == 3
    pb = sequences.overpartitions(7)
    assert pb.values[:5] == (1, 2, 4, 8, 14)
    assert pb[7] == 64


def test_by_name():
    assert sequences.by_name("p", 5).values == (1, 1, 2, 3, 5, 7)
    assert sequences.by_name("pk:2", 2)[2] == 5
    assert sequences.by_name("Nell:4", 10)[10] == 38497
    assert sequences.by_name("pbar", 4)[4] == 14
    for bad in ("q", "pk:", "pk:x", "Nell:0", "pp:1"):
        with pytest.raises(ValueError):
            sequences.by_name(bad, 5)


def test_root_decreasing_examples():
    p = sequences.partitions(10)
    assert root_decreasing_check(p, 6)
    assert not root_decreasing_check(p, 5)
    pb = sequences.overpartitions(4)
    assert not root_decreasing_check(pb, 2)
    assert root_compare(pb, 2) == 0
    with pytest.raises(ValueError):
        root_decreasing_check(p, 0)


def test_table_roots_for_partitions():
    p = sequences.partitions(7)
    shown = [display_root(p[n], n, 2) for n in range(1, 8)]
    assert shown == ["1.00", "1.41", "1.44", "1.50", "1.48", "1.49", "1.47"]


def test_table_roots_for_plane_partitions():
    pp = sequences.plane_partitions(10)
    shown = [display_root(pp[n], n, 3) for n in range(1, 11)]
    assert shown == ["1.000", "1.732", "1.817", "1.899", "1.888", "1.906", "1.890",
                     "1.886", "1.872", "1.862"]


def test_display_root_rounding():
    assert display_root(2, 1, 3) == "2.000"
    assert display_root(2, 2, 0) == "1"
    with pytest.raises(ValueError):
        display_root(5, 0, 2)


def test_root_trend_towards_one():
    p = sequences.partitions(500)
    shown = [Decimal(display_root(p[n], n, 6)) for n in (10, 100, 500)]
    assert shown[0] > shown[1] > shown[2] > 1


def test_log_concavity_examples():
    p = sequences.partitions(501)
    assert log_concavity_scan(p, 26, 500) == []
    assert log_concavity_scan(sequences.plane_partitions(501), 12, 500) == []
    assert log_concavity_scan(sequences.overpartitions(501), 1, 500) == []
    low = log_concavity_scan(p, 2, 25)
    assert low and low[-1] == 25
    assert all(not is_logconcave_at(p, n) for n in low)
    with pytest.raises(ValueError):
        log_concavity_scan(p, 2, 501)


def test_equivalence_examples():
    assert equivalence_property(sequences.partitions(7), 6)
    assert equivalence_property(sequences.plane_partitions(4), 3)
    const = IntegerSequence("const", (5,) * 20)
    assert all(equivalence_property(const, n) for n in range(1, 19))


@pytest.mark.parametrize("name", ["p", "pp", "pbar", "pk:2", "pk:3", "pk:7", "Nell:3", "Nell:4"])
def test_equivalence_everywhere(name):
    seq = sequences.by_name(name, 300)
    assert all(equivalence_property(seq, n) for n in range(1, 301))


def test_root_quotient_report():
    r = root_quotient_report(sequences.partitions(10), 6, 2)
    assert r.root_decreasing and r.display_root == "1.49"
    assert r.logconcave == is_logconcave_at(sequences.partitions(10), 6)


def test_partitions_agree_with_pentagonal():
    assert list(sequences.partitions(300).values) == partitions_pentagonal(300)


def test_monotone_verify_partitions():
    r = monotone_root_verify(sequences.partitions(501), 26, 500)
    assert r.ok and r.induction_holds and r.agree
    assert r.decreasing_from == 6
    assert r.equalities == []


def test_monotone_verify_plane():
    r = monotone_root_verify(sequences.plane_partitions(501), 12, 500)
    assert r.ok and r.decreasing_from == 6


def test_monotone_verify_overpartitions():
    pb = sequences.overpartitions(501)
    r = monotone_root_verify(pb, 4, 500)
    assert r.ok and r.decreasing_from == 3
    assert r.equalities == [1, 2]
    # with n0 = 3 the initial condition is the equality pbar(2)^3 = pbar(3)^2
    r3 = monotone_root_verify(pb, 3, 500)
    assert not r3.initial_condition and not r3.induction_holds
    assert any("initial condition" in f for f in r3.failures)


def test_monotone_verify_reports_broken_premise():
    p = sequences.partitions(40)
    r = monotone_root_verify(p, 10, 39)
    assert r.logconcave_failures
    assert not r.induction_holds
    assert r.agree
    with pytest.raises(ValueError):
        monotone_root_verify(p, 1, 20)
