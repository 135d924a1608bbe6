import pytest
from hypothesis import given, settings, strategies as st

from closure_ops.analysis import (
    classify,
    compose,
    is_exceptional,
    noncommutativity_witnesses,
    prime_scan,
    right_act_failure,
    verify_act_structure,
)
from closure_ops.axioms import to_raw
from closure_ops.catalog import catalog, floor_in_window, identity
from closure_ops.ideals import M, P, UsageError, Window, power
from closure_ops.ops import BoundedBox, BoundedPoint, DvrF, DvrG, IntUnbounded


def test_compose_examples():
    w = Window("dvr", 8)
    assert compose(DvrF(2), DvrF(5), w) == to_raw(DvrF(2), w)
    assert compose(DvrF(2), DvrG(5), w) == to_raw(DvrG(2), w)
    g = compose(DvrG(5), DvrF(2), w)
    assert g(w.zero) == power(5) and g(power(5)) == power(2)


def test_classify_examples(cusp6):
    got = classify(compose(IntUnbounded(2, {0}, set()), IntUnbounded(3, {1}, set()), cusp6))
    assert got.kind == "op" and got.op == IntUnbounded(2, {0}, {1})
    w = Window("dvr", 8)
    bad = classify(compose(DvrG(5), DvrF(2), w))
    assert bad.kind == "not_closure" and bad.axiom == "c"
    assert str(bad.witness) == "at (0): f=P^5, f(f)=P^2 is not idempotent"
    assert classify(to_raw(identity(cusp6), cusp6)).op == identity(cusp6)


def test_classify_reports_aliases():
    w = Window("dvr", 6)
    got = classify(to_raw(DvrF(6), w))
    assert str(got.op) == "dvr:id" and [str(a) for a in got.aliases] == ["dvr:f(6)"]


@pytest.mark.parametrize("w", [Window("dvr", 6), Window("ded", 3), Window("cusp", 6, 2)])
def test_classify_round_trip(w):
    cat = catalog(w)
    for op in cat.ops:
        got = classify(to_raw(op, w))
        assert got.kind == "op"
        assert cat.tables[got.op] == cat.tables[op]
        assert got.op is cat.by_table[cat.tables[op]][0]


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_compose_is_associative(data):
    w = Window("cusp", 6, 2)
    ops = st.sampled_from(catalog(w).ops)
    f, g, h = data.draw(ops), data.draw(ops), data.draw(ops)
    assert compose(compose(f, g, w), h, w) == compose(f, compose(g, h, w), w)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_classified_composites_are_exact(data):
    w = Window("cusp", 6, 2)
    ops = st.sampled_from(catalog(w).ops)
    c = compose(data.draw(ops), data.draw(ops), w)
    got = classify(c)
    if got.kind == "op":
        assert to_raw(got.op, w) == c


@pytest.mark.parametrize("w", [Window("dvr", 8), Window("ded", 4)])
def test_act_structure_holds(w):
    rep = verify_act_structure(w)
    assert rep.ok, [(c.name, c.witness) for c in rep.checks if not c.ok]


def test_act_structure_cusp_finding(cusp6):
    # point maps on the left of a composition can leave the closure operations
    rep = verify_act_structure(cusp6)
    bad = {c.name: c for c in rep.checks if not c.ok}
    assert set(bad) == {"M0 closed under composition", "Mf closed under composition",
                        "left act: M0 o (Mf - e) lands in Mf"}
    assert (bad["M0 closed under composition"].failures, bad["Mf closed under composition"].failures) == (132, 120)
    for c in bad.values():
        assert c.witness.startswith("cusp:fpoint(")
    c = classify(compose(BoundedPoint(2, 0), IntUnbounded(2, {0}, set()), cusp6))
    assert str(c) == "NotClosure(c: at (M(4)): f=P(2,0), f(f)=M(2) is not idempotent)"
    assert rep.get("act associativity").ok and rep.get("act identity e o g = g o e = g").ok


def test_right_act_witnesses():
    assert right_act_failure(Window("dvr", 6)).startswith("dvr:g(")
    assert right_act_failure(Window("ded", 3)) is not None
    assert right_act_failure(Window("cusp", 6, 2)) is not None


def test_exceptional_examples(cusp8):
    ok, chain = is_exceptional(BoundedBox(2, {0, 1}, {0, 1}, 6, exceptional=True), cusp8)
    assert ok and chain[0].kind == "P" and chain[0].i == 5 and chain[-1] == M(4)
    assert is_exceptional(BoundedPoint(4, 0), cusp8) == (False, None)
    assert is_exceptional(BoundedBox(2, {0}, {1}, 6), cusp8) == (False, None)
    with pytest.raises(UsageError):
        is_exceptional(to_raw(identity(cusp8), cusp8), cusp8)


def test_exceptional_exactly_the_exceptional_boxes(cusp6):
    for op in catalog(cusp6).ops:
        if floor_in_window(op, cusp6):
            want = isinstance(op, BoundedBox) and op.exceptional
            assert is_exceptional(op, cusp6)[0] is want, op


def test_noncommutativity(cusp8):
    a, b = noncommutativity_witnesses(cusp8)
    assert (a.ideal, a.forward, a.backward) == (M(6), M(4), M(5))
    assert (b.ideal, b.forward, b.backward) == (M(7), M(4), M(5))
    with pytest.raises(UsageError):
        noncommutativity_witnesses(Window("cusp", 6, 2))
    # the printed S={0}, T={} parameters are not admissible for the m-1 = n+3 box
    with pytest.raises(UsageError):
        noncommutativity_witnesses(cusp8, S={0}, T=set())


@pytest.mark.parametrize("w,n_witnesses", [(Window("dvr", 8), 17), (Window("ded", 5), 71),
                                           (Window("cusp", 6, 2), 170)])
def test_prime_scan(w, n_witnesses):
    ps = prime_scan(w)
    assert ps.only_identity
    assert len(ps.witnesses) == n_witnesses
    assert all(r.status == "fail" for r in ps.witnesses.values())
    # one scan entry per distinct window table of the catalog
    assert len(ps.witnesses) + 1 == len(catalog(w).by_table)


def test_identity_commutes(cusp6):
    e = identity(cusp6)
    for op in catalog(cusp6).ops[:50]:
        assert compose(e, op, cusp6) == compose(op, e, cusp6)
