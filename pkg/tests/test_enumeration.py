import pytest

from closure_ops.analysis import classify
from closure_ops.axioms import check_axiom, is_semiprime, to_raw
from closure_ops.catalog import catalog, closure_only_catalog
from closure_ops.enumeration import (
    MAX_IDEALS,
    SearchTooLarge,
    brute_force_extensive,
    enumerate_closure_maps,
    enumerate_semiprime,
    extends_to,
    literal_int_mismatches,
    literal_int_partial,
    match_classification,
    propagation_check,
    zero_dichotomy,
)
from closure_ops.ideals import M, P, UsageError, Window
from closure_ops.ops import DvrF, DvrG, Identity, JumpG


def tables(maps):
    return sorted(m.indices() for m in maps)


def test_dvr2_closure_maps():
    w = Window("dvr", 2)
    found = list(enumerate_closure_maps(w))
    assert tables(found) == tables(brute_force_extensive(w))
    named = {to_raw(op, w).indices() for op in
             [Identity("dvr")] + [DvrF(m) for m in range(3)] + [DvrG(m) for m in range(3)] + [JumpG(2)]}
    assert named <= {m.indices() for m in found}
    assert len(found) == 8


@pytest.mark.parametrize("w", [Window("dvr", 3), Window("ded", 1)])
def test_pruned_equals_brute_force(w):
    assert tables(enumerate_closure_maps(w)) == tables(brute_force_extensive(w))


def test_brute_force_guard():
    with pytest.raises(SearchTooLarge):
        next(brute_force_extensive(Window("dvr", 8)))


def test_search_guard():
    w = Window("cusp", 14, 2)
    assert len(w.ideals()) > MAX_IDEALS
    with pytest.raises(SearchTooLarge):
        enumerate_semiprime(w)


@pytest.mark.parametrize("w", [Window("dvr", 6), Window("cusp", 5, 2)])
def test_soundness_and_uniqueness(w):
    found = list(enumerate_closure_maps(w))
    assert len(tables(found)) == len(set(tables(found)))
    for m in found:
        assert all(check_axiom(m, x).ok for x in "abc")
    for m in enumerate_semiprime(w):
        assert is_semiprime(m)
    assert to_raw(Identity(w.family), w) in found


@pytest.mark.parametrize("w", [Window("dvr", 8), Window("ded", 3), Window("cusp", 6, 2), Window("cusp", 5, 3)])
def test_pruning_variants_agree(w):
    plain = tables(enumerate_semiprime(w))
    assert tables(enumerate_semiprime(w, propagate=True)) == plain
    assert tables(enumerate_semiprime(w, prune=False)) == plain


@pytest.mark.parametrize("w", [Window("dvr", 6), Window("cusp", 7, 2)])
def test_closure_only_maps_are_excluded(w):
    found = {m.indices() for m in enumerate_semiprime(w)}
    for op in closure_only_catalog(w):
        assert to_raw(op, w).indices() not in found


@pytest.mark.parametrize("w,count", [(Window("dvr", 6), 14), (Window("ded", 3), 32), (Window("ded", 4), 50)])
def test_empty_diffs(w, count):
    found = enumerate_semiprime(w)
    assert len(found) == count
    diff = match_classification(found, w)
    assert diff.empty and not diff.boundary


@pytest.mark.parametrize("p,D,count,boundary", [(2, 5, 106, 5), (2, 6, 175, 0), (3, 5, 329, 10)])
def test_cusp_enumeration(p, D, count, boundary):
    w = Window("cusp", D, p)
    found = enumerate_semiprime(w)
    assert len(found) == count
    diff = match_classification(found, w)
    assert not diff.expected_missing
    assert len(diff.boundary) == boundary
    assert len(diff.found_unexpected) == 4


def test_unexpected_cusp_maps(cusp6):
    """The four semiprime maps outside the catalog at p=2, D=6."""
    diff = match_classification(enumerate_semiprime(cusp6), cusp6)
    big = Window("cusp", 8, 2)
    ids = cusp6.ideals()
    shapes = set()
    for m in diff.found_unexpected:
        assert classify(m).kind == "unknown" and extends_to(m, big)
        nonzero = [m(I) for I in ids if not I.is_zero]
        if set(nonzero) == {ids[0]}:
            shapes.add(("all to R", str(m(cusp6.zero))))
        else:
            assert m(P(2, 0)) == P(2, 0) and m(P(2, 1)) == P(2, 1)
            assert m(M(3)) == M(2) and m(P(3, 0)) == M(2) and m(M(5)) == M(4)
            shapes.add(("floor M(4)", str(m(cusp6.zero))))
    assert shapes == {("all to R", "0"), ("all to R", "R"), ("floor M(4)", "0"), ("floor M(4)", "M(4)")}


def test_extends_to_rejects_smaller(cusp6):
    m = to_raw(Identity("cusp"), cusp6)
    with pytest.raises(UsageError):
        extends_to(m, Window("cusp", 5, 2))


def test_aliases_are_listed():
    w = Window("dvr", 6)
    diff = match_classification(enumerate_semiprime(w), w)
    assert [(str(a), str(b)) for a, b in diff.aliased] == [("dvr:id", "dvr:f(6)")]


@pytest.mark.parametrize("w", [Window("dvr", 8), Window("ded", 4), Window("cusp", 6, 2), Window("cusp", 5, 3)])
def test_lemma_properties(w):
    found = enumerate_semiprime(w)
    pr = propagation_check(found, w)
    assert pr.ok
    assert all(zero_dichotomy(m) for m in found)


def test_propagation_triggers_fire():
    pr = propagation_check(enumerate_semiprime(Window("cusp", 6, 2)), Window("cusp", 6, 2))
    assert pr.triggered == 40 and pr.boundary == 0
    pr = propagation_check(enumerate_semiprime(Window("cusp", 5, 3)), Window("cusp", 5, 3))
    assert pr.boundary == 10


def test_propagation_detects_a_planted_violation():
    # the jump map is constant (= R) on [R, P] but drops to P^3 further down
    w = Window("dvr", 6)
    pr = propagation_check([to_raw(JumpG(3), w)], w)
    assert pr.violations and pr.violations[0][0] == "constant interval"


def test_literal_int_form(cusp6):
    K = cusp6.field
    part = literal_int_partial(3, frozenset({0}), frozenset(K), cusp6)
    assert P(2, 0) not in part and part[P(3, 0)] == M(3)
    mm = literal_int_mismatches(enumerate_semiprime(cusp6), cusp6)
    assert len(mm) == 115 and not any(total for *_, total in mm)


def test_catalog_is_in_the_enumeration(cusp6):
    found = {m.indices() for m in enumerate_semiprime(cusp6)}
    assert set(catalog(cusp6).by_table) <= found
