import pytest
from hypothesis import given, strategies as st

from flagaut.errors import DomainError
from flagaut.rootsys import (DynkinType, all_types, as_type, build_root_system, fundamental_weight,
                             height, is_dominant, neg, root_label, support_roots, weyl_dim)

# (type, number of positive roots, dimension of the group)
KNOWN = [("A1", 1, 3), ("A4", 10, 24), ("B2", 4, 10), ("B3", 9, 21), ("C3", 9, 21), ("D4", 12, 28),
         ("G2", 6, 14), ("F4", 24, 52), ("E6", 36, 78), ("E7", 63, 133), ("E8", 120, 248)]


@pytest.mark.parametrize("name,npos,dim", KNOWN)
def test_root_counts(name, npos, dim):
    rs = build_root_system(name)
    assert len(rs.positive_roots) == npos
    assert rs.dimension == dim


def test_bourbaki_lengths():
    b3, c3, g2, f4 = (build_root_system(t) for t in ("B3", "C3", "G2", "F4"))
    assert b3.is_short(b3.simple_roots[2]) and not b3.is_short(b3.simple_roots[0])
    assert not c3.is_short(c3.simple_roots[2]) and c3.is_short(c3.simple_roots[0])
    assert g2.is_short(g2.simple_roots[0]) and not g2.is_short(g2.simple_roots[1])
    assert [f4.is_short(a) for a in f4.simple_roots] == [False, False, True, True]


def test_c3_long_positive_roots_are_the_three_2e_i():
    rs = build_root_system("C3")
    long_roots = [r for r in rs.positive_roots if not rs.is_short(r)]
    # 2e3 = a3, 2e2 = 2a2 + a3, 2e1 = 2a1 + 2a2 + a3
    assert sorted(long_roots) == sorted([(0, 0, 1), (0, 2, 1), (2, 2, 1)])


def test_root_order_is_height_then_tuple():
    rs = build_root_system("C3")
    assert rs.positive_roots[0] == (0, 0, 1)
    hs = [height(r) for r in rs.positive_roots]
    assert hs == sorted(hs)


def test_unsupported_type():
    with pytest.raises(DomainError):
        DynkinType("E", 5)
    with pytest.raises(DomainError):
        as_type("Z3")


@pytest.mark.parametrize("t", [str(t) for t in all_types(6)])
def test_reflections_permute_roots(t):
    rs = build_root_system(t)
    roots = set(rs.roots)
    for i in range(1, rs.rank + 1):
        assert {rs.reflect(i, r) for r in roots} == roots
        # s_i sends alpha_i to its negative and permutes the other positive roots
        a = rs.simple_roots[i - 1]
        assert rs.reflect(i, a) == neg(a)


@pytest.mark.parametrize("t", ["B3", "C4", "G2", "F4"])
def test_coroots_pair_to_two(t):
    rs = build_root_system(t)
    for r in rs.roots:
        assert rs.pairing(r, r) == 2


def test_weyl_dim_examples():
    assert weyl_dim("G2", fundamental_weight("G2", 1)) == 7
    assert weyl_dim("G2", fundamental_weight("G2", 2)) == 14
    assert weyl_dim("C3", fundamental_weight("C3", 1)) == 6
    assert weyl_dim("A5", (0, 1, 0, 0, 0)) == 15
    assert weyl_dim("B3", fundamental_weight("B3", 3)) == 8
    assert weyl_dim("E8", fundamental_weight("E8", 8)) == 248


def test_dominance_conventions():
    assert is_dominant("C3", (1, 0, 2))
    assert not is_dominant("C3", (1, 0, 2), borel="B-")
    assert is_dominant("C3", (-1, 0, -2), borel="B-")
    with pytest.raises(ValueError):
        is_dominant("C3", (0, 0, 0), borel="X")


def test_support_roots_and_labels():
    rs = build_root_system("G2")
    assert len(support_roots(rs, 1)) == 5
    assert root_label((3, 2)) == "3a1+2a2"
    assert root_label((-1, -1)) == "-(a1+a2)"


@given(st.sampled_from([str(t) for t in all_types(5)]), st.data())
def test_pairing_integrality(t, data):
    rs = build_root_system(t)
    a = data.draw(st.sampled_from(rs.roots))
    b = data.draw(st.sampled_from(rs.roots))
    # <a, b^vee> is an integer in [-3, 3]
    assert -3 <= rs.pairing(a, b) <= 3
