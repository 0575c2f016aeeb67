import itertools

import pytest
from hypothesis import given, settings, strategies as st

from flagaut.oracle.truncated import TruncatedRing, in_span, in_span_brute, in_span_howell


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_ring_structure(m):
    R = TruncatedRing(m)
    assert R.e == 2 ** (m + 1)
    assert R.pow(R.t, R.e) == R.one
    assert R.mul(R.s, R.s) == R.one and R.s != R.one
    assert R.is_unit(R.t)
    assert R.mul(R.t, R.inverse(R.t)) == R.one
    assert R.valuation(R.zero) == R.e
    assert R.valuation(R.add(R.t, R.one)) == 1


@settings(max_examples=100)
@given(st.integers(0, 2), st.data())
def test_ring_axioms(m, data):
    R = TruncatedRing(m)
    el = st.integers(0, R.size - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert R.mul(a, b) == R.mul(b, a)
    assert R.mul(a, R.mul(b, c)) == R.mul(R.mul(a, b), c)
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.frobenius(R.mul(a, b)) == R.mul(R.frobenius(a), R.frobenius(b))
    assert R.frobenius(a) == R.mul(a, a)
    assert R.from_u(R.to_u(a)) == a
    assert R.valuation(R.mul(a, b)) == min(R.e, R.valuation(a) + R.valuation(b))
    if R.valuation(a) >= R.valuation(b) and b:
        assert R.mul(R.divide(a, b), b) == a


def test_units_are_valuation_zero():
    R = TruncatedRing(1)
    units = [a for a in R.elements() if R.is_unit(a)]
    assert len(units) == R.size // 2
    assert {a for a in R.elements() if any(R.mul(a, b) == 1 for b in R.elements())} == set(units)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_howell_agrees_with_brute_force(data):
    R = TruncatedRing(1)
    el = st.integers(0, R.size - 1)
    k = data.draw(st.integers(1, 3))
    n = data.draw(st.integers(1, 3))
    gens = [tuple(data.draw(el) for _ in range(n)) for _ in range(k)]
    v = tuple(data.draw(el) for _ in range(n))
    assert in_span_howell(R, gens, v) == in_span_brute(R, gens, v)


def test_in_span_methods():
    R = TruncatedRing(1)
    gens = [(R.t, R.one)]
    assert in_span(R, gens, (R.one, R.inverse(R.t)))
    assert not in_span(R, gens, (R.one, R.one))
    with pytest.raises(ValueError):
        in_span(R, gens, (0, 0), method="magic")


def test_submodule_of_ideal():
    R = TruncatedRing(1)
    u = R.add(R.t, R.one)
    # the ideal (u) has 2^(e-1) elements
    ideal = {R.mul(u, a) for a in R.elements()}
    assert len(ideal) == R.size // 2
    for a in itertools.islice(R.elements(), 16):
        assert in_span(R, [(u,)], (a,)) == (a in ideal)
