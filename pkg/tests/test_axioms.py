import pytest

from closure_ops.axioms import check_axiom, from_indices, is_bounded, is_closure, is_semiprime, lattice, to_raw
from closure_ops.catalog import catalog, closure_only_catalog
from closure_ops.ideals import P, UsageError, Window, power
from closure_ops.ops import BoundedPoint, DvrF, DvrG, IntSingle, JumpG


@pytest.mark.parametrize("w", [Window("dvr", 8), Window("ded", 3), Window("cusp", 6, 2), Window("cusp", 5, 3)])
def test_catalog_members_are_semiprime(w):
    for op in catalog(w).ops:
        assert is_semiprime(to_raw(op, w)), op


@pytest.mark.parametrize("w", [Window("dvr", 8), Window("cusp", 7, 2)])
def test_closure_only_members(w):
    for op in closure_only_catalog(w):
        m = to_raw(op, w)
        assert all(r.ok for r in is_closure(m))
        assert check_axiom(m, "d").status == "fail"


def test_single_witness():
    w = Window("cusp", 6, 2)
    r = check_axiom(to_raw(IntSingle(2), w), "d")
    assert str(r.witness) == "at (P(2,0), P(2,0)): f*f=M(2)*M(2)=M(4) not inside f(IJ)=P(4,0)"


def test_jump_fails_product_law():
    w = Window("dvr", 6)
    r = check_axiom(to_raw(JumpG(3), w), "d")
    assert r.status == "fail"
    assert r.witness.ideals == (power(1), power(2))


def test_skipped_instances_are_counted():
    w = Window("cusp", 4, 2)
    r = check_axiom(to_raw(BoundedPoint(2, 0), w), "d")
    assert r.skipped > 0 and r.checked > 0
    assert str(r).startswith("(d) pass")


def test_zero_instances_is_an_error():
    # in a D=0 dvr window there is no principal generator, so (e) never runs
    w = Window("dvr", 0)
    assert check_axiom(to_raw(DvrF(0), w), "e").status == "error"


def test_axiom_witnesses():
    w = Window("dvr", 4)  # R, P, P^2, P^3, P^4, 0
    shrink = from_indices(w, (0, 1, 1, 3, 4, 5))  # P^2 -> P is fine, then nothing breaks
    assert all(r.ok for r in is_closure(shrink))
    not_ext = from_indices(w, (0, 2, 2, 3, 4, 5))  # P -> P^2 is not extensive
    r = check_axiom(not_ext, "a")
    assert r.status == "fail" and r.witness.ideals == (power(1),)
    not_mono = from_indices(w, (0, 1, 2, 0, 4, 5))  # P^3 -> R but P^2 -> P^2
    assert check_axiom(not_mono, "b").status == "fail"
    not_idem = from_indices(w, (0, 1, 1, 2, 4, 5))  # P^3 -> P^2 -> P
    r = check_axiom(not_idem, "c")
    assert r.status == "fail" and str(r.witness) == "at (P^3): f=P^2, f(f)=P is not idempotent"


def test_unknown_axiom():
    w = Window("dvr", 3)
    with pytest.raises(ValueError):
        check_axiom(to_raw(DvrF(1), w), "z")


def test_prime_law_examples():
    w = Window("dvr", 6)
    assert check_axiom(to_raw(DvrF(6), w), "e").ok  # aliases the identity on this window
    r = check_axiom(to_raw(DvrF(2), w), "e")
    assert r.status == "fail" and r.witness.ideals[0] == power(1)


def test_bounded_detection():
    w = Window("cusp", 6, 2)
    assert is_bounded(to_raw(BoundedPoint(3, 1), w)) == (True, P(3, 1))
    assert is_bounded(to_raw(DvrG(2), Window("dvr", 5))) == (True, power(2))
    ok, _ = is_bounded(to_raw(catalog(w).ops[0], w))
    assert not ok


def test_to_raw_rejects_images_outside():
    w = Window("cusp", 5, 2)
    with pytest.raises(UsageError):
        to_raw(BoundedPoint(6, 0, "target"), w)
    assert len(lattice(w)) == 1 + 4 * 3 + 1
