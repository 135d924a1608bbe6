import pytest
from hypothesis import given, strategies as st

from closure_ops.ideals import M, P, UNIT, UsageError, Window
from closure_ops.subspace import Subspace, colength, from_subspace, oracle_mismatches, to_subspace


@pytest.mark.parametrize("p", [2, 3, 5])
def test_round_trip_through_subspace(p):
    for I in Window("cusp", 6, p).ideals():
        assert from_subspace(to_subspace(I, 9, p)) == I


def test_echelon_invariants():
    V = to_subspace(P(3, 1), 8, 2)
    piv = V.pivots
    assert piv == sorted(set(piv))
    assert all(any(x for x in row) for row in V.basis)
    assert V.is_ideal()
    assert piv == [3, 5, 6, 7, 8]


def test_text_round_trip():
    V = to_subspace(M(2), 6, 3)
    assert Subspace.from_text(V.to_text(), 6, 3) == V
    assert V.to_text().splitlines()[0].split() == ["0", "0", "1", "0", "0", "0", "0"]


def test_colength():
    assert colength(P(2, 0), M(2)) == 1
    assert colength(M(4), M(2)) == 2
    assert colength(M(3), UNIT) == 2
    with pytest.raises(UsageError):
        colength(M(2), M(4))


def test_truncation_guard():
    with pytest.raises(UsageError):
        to_subspace(M(6), 6, 2)


@pytest.mark.parametrize("p", [2, 3])
def test_oracle_equivalence_small(p):
    for rel, (n, bad) in oracle_mismatches(Window("cusp", 5, p)).items():
        assert n > 0 and bad == [], rel


@given(st.sampled_from([2, 3]), st.integers(2, 5), st.integers(0, 2), st.integers(2, 5), st.integers(0, 2))
def test_product_of_generators(p, i, a, j, b):
    a, b = a % p, b % p
    V = to_subspace(P(i, a), 14, p).times(to_subspace(P(j, b), 14, p))
    assert from_subspace(V) == P(i + j, (a + b) % p)
