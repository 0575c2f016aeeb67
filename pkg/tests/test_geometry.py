import pytest
from hypothesis import given, strategies as st

from flagaut.errors import DomainError
from flagaut.geometry import (CurveClass, DivisorClass, contraction_target, is_nef, pairing,
                              pairing_matrix, picard_rank, smooth_target)
from flagaut.parabolic import parse_spec as P


def test_picard_rank():
    assert picard_rank(P("C3:p3:a1:T,a2:G1")) == 2
    assert picard_rank(P("G2:p2:a1:T,a2:T")) == 2
    assert picard_rank(P("E6:p5:a2:G3")) == 1
    assert picard_rank(P("G2:p2:Q1,a2:G1")) == 2


def test_pairing_is_identity(catalog):
    for s in catalog[::11]:
        M = pairing_matrix(s)
        assert all(M[i][j] == int(i == j) for i in range(len(M)) for j in range(len(M)))


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_pairing_bilinear(a, b):
    idx = {1, 2, 3}
    D = DivisorClass.of(idx, dict(zip((1, 2, 3), a)))
    C = CurveClass.of(idx, dict(zip((1, 2, 3), b)))
    assert pairing(D, C) == sum(x * y for x, y in zip(a, b))
    assert pairing(D + D, C) == 2 * pairing(D, C)
    assert pairing(D - D, C) == 0


def test_class_errors_and_nef():
    s = P("C3:p3:a1:T,a2:G1")
    with pytest.raises(DomainError):
        DivisorClass.of(s, {3: 1})
    with pytest.raises(DomainError):
        pairing(DivisorClass.basis(s, 1), CurveClass.basis({1, 2, 3}, 1))
    assert is_nef(DivisorClass.of(s, {1: 1, 2: 3}))
    assert not is_nef(DivisorClass.of(s, {1: 1, 2: -1}))


def test_contraction_targets():
    s = P("C3:p5:a1:T,a2:G1")
    assert contraction_target(s, 2) == P("C3:p5:a2:G1")
    assert contraction_target(s, 1) == P("C3:p5:a1:T")
    s = P("G2:p3:a2:T,a1:N0")
    assert contraction_target(s, 1) == P("G2:p3:a1:N0")
    with pytest.raises(DomainError) as exc:
        contraction_target(s, 3)
    assert exc.value.code == "not-a-factor"
    assert contraction_target(P("G2:p2:Q1,a2:G1"), 1) == P("G2:p2:Q1")


def test_smooth_target():
    assert smooth_target(P("C3:p3:a1:T,a2:G1")) == {1}
    assert smooth_target(P("A4:p2:a1:T,a3:T")) == {1, 3}
    with pytest.raises(DomainError) as exc:
        smooth_target(P("G2:p2:Q1,a2:G1"))
    assert exc.value.code == "exotic"
