import numpy as np
import pytest

from flagaut.acceptance import antisymmetry_defect, jacobi_defect, restricted_defect
from flagaut.chevalley import (bracket, build_lie_algebra, integral_structure, jacobson_sum,
                               parabolic_subalgebra, reduced_parabolic_subalgebra, root_space)
from flagaut.errors import DomainError
from flagaut.parabolic import parse_spec
from flagaut.rootsys import all_types

ALGEBRAS = [(str(t), p) for t in all_types(4) for p in (2, 3, 5)]


@pytest.mark.parametrize("t,p", ALGEBRAS)
def test_jacobi_mod_p_dense(t, p):
    L = build_lie_algebra(t, p)
    assert antisymmetry_defect(L) == 0
    assert jacobi_defect(L) == 0


@pytest.mark.parametrize("t,p", ALGEBRAS)
def test_p_power_is_restricted(t, p):
    L = build_lie_algebra(t, p)
    assert restricted_defect(L, samples=100, seed=hash((t, p)) % 2**32) == 0


def _ad_pow(L, x):
    out = np.eye(L.dim, dtype=np.int64)
    for _ in range(L.p):
        out = (out @ L.ad(x)) % L.p
    return out


def test_p_power_small_cases():
    L = build_lie_algebra("A1", 2)
    e, f = L.e((1,)), L.e((-1,))
    # (e + f)^[2] = h
    assert np.array_equal(L.p_power((e + f) % 2), L.h(1))
    C2 = build_lie_algebra("C2", 2)
    assert not np.any(bracket(C2, C2.e((1, 0)), C2.e((1, 1))))


def test_jacobson_formula_matches():
    L = build_lie_algebra("G2", 3)
    rng = np.random.default_rng(7)
    x, y = rng.integers(0, 3, (2, L.dim))
    lhs = L.p_power((x + y) % 3)
    rhs = jacobson_sum(L, x, y, L.p_power(x), L.p_power(y))
    assert np.array_equal(lhs, rhs)


def test_integral_basis_order():
    labels, roots, _ = integral_structure("A2")
    assert len(labels) == 8 and roots[:3] == ((0, 1), (1, 0), (1, 1))


def test_errors():
    with pytest.raises(DomainError):
        build_lie_algebra("A2", 11)
    L = build_lie_algebra("A2", 3)
    with pytest.raises(DomainError):
        L.root_index((2, 2))
    with pytest.raises(DomainError):
        parabolic_subalgebra(L, parse_spec("A2:p3:a1:G1"))


def test_parabolic_dimensions():
    L = build_lie_algebra("G2", 2)
    assert reduced_parabolic_subalgebra(L, [1]).dim == 9
    assert reduced_parabolic_subalgebra(L, [1, 2]).dim == 8
    assert root_space(L, (3, 2)).dim == 1
