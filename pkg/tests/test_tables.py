from collections import Counter

import pytest

from closure_ops.analysis import classify, compose
from closure_ops.catalog import is_m0, is_mf
from closure_ops.ideals import UsageError, Window
from closure_ops.ops import BoundedPoint, DedekindBox, parse_op
from closure_ops.tables import NOT_SEMIPRIME, all_tables, table_ids, verify_table, verify_tables


@pytest.fixture(scope="module")
def corrected6(cusp6):
    return {r.checks[0].table: r for r in verify_tables(cusp6, "corrected")}


@pytest.fixture(scope="module")
def literal6(cusp6):
    return {r.checks[0].table: r for r in verify_tables(cusp6, "literal")}


def test_row_examples(cusp6):
    got = classify(compose(BoundedPoint(2, 0), BoundedPoint(5, 1), cusp6))
    assert got.op == BoundedPoint(2, 0)
    for a in (0, 1):
        for b in (0, 1):
            c = classify(compose(BoundedPoint(3, a, "target"), BoundedPoint(3, b), cusp6))
            assert c.failed or (a == b and c.op == BoundedPoint(3, a, "target"))
    w = Window("ded", 3)
    assert classify(compose(DedekindBox((2, None)), DedekindBox((3, 1)), w)).op == DedekindBox((2, 1))


@pytest.mark.parametrize("w", [Window("dvr", 8), Window("ded", 3)])
def test_dvr_and_dedekind_tables_pass(w):
    for r in verify_tables(w):
        assert r.ok and not r.gaps and not r.not_instantiable


def test_corrected_counts(corrected6):
    fails = {t: len(r.rows("fail")) for t, r in corrected6.items() if r.rows("fail")}
    assert fails == {"M3": 96, "M5": 156, "L2": 272, "L5b": 156}
    assert all(not r.conflicts and not r.not_instantiable for r in corrected6.values())
    assert {t: len(r.gaps) for t, r in corrected6.items() if r.gaps} == {"M4": 1350, "L3a": 1215, "L3b": 207}


def test_corrected_failures_are_point_on_the_left(corrected6):
    # what survives the corrections: a point map applied after an int map or a box
    for r in corrected6.values():
        for c in r.rows("fail"):
            outer = parse_op(c.expr.split(" o ")[0])
            assert isinstance(outer, BoundedPoint), c
            assert c.got.startswith("NotClosure(c:"), c


def test_literal_findings(literal6):
    conflicts = {t: len(r.conflicts) for t, r in literal6.items() if r.conflicts}
    assert conflicts == {"M4": 7176, "L1": 1008}
    fails = {t: len(r.rows("fail")) for t, r in literal6.items() if r.rows("fail")}
    assert fails == {"M3": 96, "M4": 7992, "M5": 324, "M6": 84, "L1": 1008, "L2": 272, "L4a": 10,
                     "L4b": 42, "L5b": 240, "L6a": 84, "L6b": 84}
    assert len(literal6["M2"].gaps) == 2880
    rows = Counter(c.row for c in literal6["M4"].rows("fail"))
    assert set(rows) == {"M4.1", "M4.7", "M4.8"}


def test_not_semiprime_rows_have_witnesses(corrected6):
    for r in corrected6.values():
        for c in r.rows():
            if c.expected == NOT_SEMIPRIME:
                assert c.status == "pass" and c.witness, c


def test_predicted_ops_live_in_the_right_set(corrected6):
    for t, r in corrected6.items():
        for c in r.rows("pass"):
            if c.expected == NOT_SEMIPRIME:
                continue
            op = parse_op(c.expected)
            if t.startswith("M"):
                assert is_m0(op), c
            elif c.order == "A o B" and all_tables("cusp")[table_ids("cusp").index(t)].left.startswith("f"):
                assert is_mf(op), c


def test_unknown_table_and_mode(cusp6):
    with pytest.raises(UsageError):
        verify_table("M9", cusp6)
    with pytest.raises(UsageError):
        verify_table("M1", cusp6, mode="loose")


def test_ids():
    assert table_ids("cusp") == ["M1", "M2", "M3", "M4", "M5", "M6", "L1", "L2", "L3a", "L3b",
                                 "L4a", "L4b", "L5a", "L5b", "L6a", "L6b"]
    assert table_ids("dvr") == ["DVR"] and table_ids("ded") == ["DED"]


def test_parallel_matches_serial(cusp6):
    ids = ["M6", "L4a", "L4b"]
    serial = verify_tables(cusp6, ids=ids, workers=1)
    par = verify_tables(cusp6, ids=ids, workers=2)
    assert [[vars(c) for c in r.checks] for r in serial] == [[vars(c) for c in r.checks] for r in par]
