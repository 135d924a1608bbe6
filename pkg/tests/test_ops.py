import pytest
from hypothesis import given, strategies as st

from closure_ops.catalog import catalog, closure_only_catalog
from closure_ops.ideals import CUSP_ZERO, M, P, UsageError, Window, exps, power
from closure_ops.ops import (
    BoundedBox,
    BoundedPoint,
    DedekindBox,
    DvrF,
    DvrG,
    IntUnbounded,
    JumpG,
    apply,
    ded_identity,
    parse_op,
)

WINDOWS = [Window("dvr", 6), Window("ded", 3), Window("cusp", 6, 2), Window("cusp", 5, 3)]


def all_ops():
    for w in WINDOWS:
        ops = catalog(w).ops + closure_only_catalog(w)
        for op in ops:
            yield w, op


@given(st.sampled_from(list(all_ops())))
def test_text_syntax_round_trip(pair):
    w, op = pair
    assert parse_op(str(op)) == op
    assert str(parse_op(str(op))) == str(op)


@pytest.mark.parametrize("text", [
    "dvr:f(3)", "dvr:g(3)", "dvr:jump(2)", "ded:box(P=2,Q=inf;zero=closed)", "ded:box(P=2,Q=1;zero=box)",
    "cusp:int(i=2,S={0},T={})", "cusp:fpoint(m=4,a=0,zero=closed)",
    "cusp:fbox(n=2,S={0},T={1},m=5,zero=target,exc=true)", "cusp:single(i=3)", "cusp:id", "dvr:id",
])
def test_documented_literals(text):
    assert str(parse_op(text)) == text


@pytest.mark.parametrize("text", ["dvr:h(2)", "ded:box(Q=1,P=2;zero=box)", "cusp:int(i=2,S={0})", "",
                                  "ded:box(P=inf,Q=1;zero=box)", "cusp:fbox(n=2,S={},T={},m=5,zero=closed,exc=false)"])
def test_bad_literals(text):
    with pytest.raises(UsageError):
        parse_op(text)


def test_dvr_maps():
    assert DvrF(3)(power(5)) == power(3)
    assert DvrF(3)(power(2)) == power(2)
    assert DvrG(3)(Window("dvr", 4).zero) == power(3)
    assert JumpG(3)(power(2)) == power(0)
    assert JumpG(3)(power(4)) == power(3)


def test_dedekind_box():
    w = Window("ded", 4)
    f = DedekindBox((2, None), "closed")
    assert f(exps(3, 4)) == exps(2, 4)
    assert f(w.zero) == w.zero
    assert DedekindBox((2, 1), "box")(w.zero) == exps(2, 1)
    assert ded_identity(2).is_identity


def test_cusp_point_and_box():
    f = BoundedPoint(4, 0)
    assert f(P(3, 1)) == M(3)
    assert f(P(4, 1)) == M(4)
    assert f(M(5)) == M(4)
    assert f(M(6)) == P(4, 0)
    assert f(CUSP_ZERO) == CUSP_ZERO
    assert BoundedPoint(4, 0, "target")(CUSP_ZERO) == P(4, 0)
    b = BoundedBox(2, {0}, {1}, 5)
    assert b(P(2, 0)) == M(2) and b(P(2, 1)) == P(2, 1)
    assert b(P(3, 1)) == M(3) and b(P(3, 0)) == P(3, 0)
    assert b(P(4, 0)) == M(4) and b(P(5, 1)) == M(5)
    e = BoundedBox(2, {0, 1}, {0, 1}, 6, exceptional=True)
    assert e(M(5)) == M(4) and e(P(5, 1)) == M(4) and e(M(7)) == M(6)


def test_int_map():
    f = IntUnbounded(2, {0}, set())
    assert f(P(2, 0)) == M(2) and f(P(2, 1)) == P(2, 1)
    assert f(P(3, 1)) == P(3, 1) and f(P(4, 1)) == M(4)


@pytest.mark.parametrize("make", [
    lambda: BoundedBox(3, {0}, {0}, 4),  # regular with m = n+1 needs T = K
    lambda: BoundedBox(3, {0}, {0, 1}, 5, exceptional=True),  # m = n+2 only for n = 2
    lambda: BoundedBox(2, {0}, {0, 1}, 5, exceptional=True),  # m = n+3 needs S = K
    lambda: BoundedBox(2, {0, 1}, {0}, 6, exceptional=True),  # m = n+4 needs T = K
    lambda: BoundedPoint(3, 2),
    lambda: IntUnbounded(2, {3}, set()),
])
def test_parameter_rules(make):
    w = Window("cusp", 8, 2)
    with pytest.raises(UsageError):
        make().validate(w)


def test_apply_checks_family():
    with pytest.raises(UsageError):
        apply(DvrF(2), M(2))
    with pytest.raises(UsageError):
        apply(DvrF(2), power(2), Window("cusp", 5))
    assert apply(DvrF(2), power(4), Window("dvr", 4)) == power(2)
