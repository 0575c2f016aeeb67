import pytest

from flagaut.errors import DomainError
from flagaut.isogeny import (chain_compare, compose_very_special, dual_root, isogeny_for,
                             lie_N_dimension, very_special_dual)
from flagaut.parabolic import KernelSpec
from flagaut.rootsys import DynkinType, build_root_system

K = KernelSpec.parse


def test_chain_compare():
    assert chain_compare(K("G1"), K("N1")) == -1
    assert chain_compare(K("N0"), K("G1")) == -1
    assert chain_compare(K("T"), K("N0")) == -1
    assert chain_compare(K("G2"), K("G2")) == 0
    assert chain_compare(K("G2"), K("N1")) == 1
    with pytest.raises(DomainError):
        chain_compare(K("N0"), K("T"), "A3", 2)


def test_very_special_dual():
    assert very_special_dual("B3", 2)[0] == DynkinType("C", 3)
    t, rmap = very_special_dual("G2", 3)
    assert t == DynkinType("G", 2) and rmap == {1: 2, 2: 1}
    assert very_special_dual("F4", 2)[1] == {1: 4, 2: 3, 3: 2, 4: 1}
    with pytest.raises(DomainError) as exc:
        very_special_dual("C3", 3)
    assert exc.value.code == "no-very-special-isogeny"


@pytest.mark.parametrize("t,p", [("B2", 2), ("B3", 2), ("C3", 2), ("F4", 2), ("G2", 3)])
def test_dual_root_swaps_lengths(t, p):
    rs = build_root_system(t)
    target = build_root_system(very_special_dual(t, p)[0])
    images = {dual_root(t, p, r) for r in rs.roots}
    assert images == set(target.roots)
    for r in rs.roots:
        assert rs.is_short(r) != target.is_short(dual_root(t, p, r))


@pytest.mark.parametrize("t,p", [("C2", 2), ("B3", 2), ("G2", 3), ("F4", 2)])
def test_composition_is_frobenius(t, p):
    rec = compose_very_special(t, p)
    assert rec.ok
    assert len(rec.rows) == len(build_root_system(t).roots)


def test_isogeny_for():
    assert isogeny_for("B3", 2, K("N1")).target == DynkinType("C", 3)
    assert isogeny_for("B3", 2, K("G2")).twist == 2


@pytest.mark.parametrize("t,p,lower", [("B3", 2, 6), ("C2", 2, 4), ("G2", 3, 6)])
def test_lie_n_dimension(t, p, lower):
    d = lie_N_dimension(t, p)
    assert lower <= d < build_root_system(t).dimension


def test_lie_n_values():
    # p-closures of the short root spaces: short roots plus the coroots they span
    assert lie_N_dimension("G2", 3) == 7
    assert lie_N_dimension("B3", 2) == 7
