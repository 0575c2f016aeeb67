import pytest

from flagaut.autgroup import (aut_group, demazure_aut, group_dim, normalize,
                              picard_rank_one_variety_label, q2_tangent_dimension,
                              relative_tangent_sections_dim, sp6_shifted_tangent_weights)
from flagaut.errors import DomainError
from flagaut.parabolic import minimize, parse_spec as P
from flagaut.rootsys import DynkinType, all_types


def test_demazure_table():
    assert demazure_aut("C3", 1).hat_type == DynkinType("A", 5)
    assert demazure_aut("B3", 3).hat_type == DynkinType("D", 4)
    assert demazure_aut("G2", 1).hat_type == DynkinType("B", 3)
    assert demazure_aut("G2", 2) is None
    assert demazure_aut("C3", 1).hat_name == "PGL6"
    hits = [(str(t), a) for t in all_types(8) for a in range(1, t.rank + 1) if demazure_aut(t, a)]
    assert len(hits) == 7 + 7 + 1  # C2..C8, B2..B8, G2


@pytest.mark.parametrize("text,describe,dim,reduced", [
    ("C3:p3:a1:T,a2:G1", "1(A5)·C3", 35, False),
    ("G2:p2:Q2", "G2", 14, True),
    ("G2:p2:Q1", "A5", 35, True),
    ("G2:p2:Q1,a2:G1", "1(A5)·G2", 35, False),
    ("G2:p2:Q1,a2:G2", "2(A5)·G2", 35, False),
    ("G2:p2:Q1,a2:T", "G2", 14, True),
    ("G2:p2:Q2,a2:G2", "G2", 14, True),
    ("B3:p2:a3:T,a1:N1", "1(D4)·B3", 28, False),
    ("B3:p2:a3:T,a1:N0", "B3", 21, True),
    ("C3:p2:a1:N0", "B3", 21, True),
    ("C3:p3:a1:G2", "A5^(2)", 35, True),
    ("A4:p2:a1:T,a2:G1,a4:G2", "A4", 24, True),
])
def test_aut_examples(text, describe, dim, reduced):
    d = aut_group(P(text))
    assert d.describe() == describe
    assert d.lie_dim == dim and d.is_reduced == reduced


def test_dual_and_twist_flags():
    d = aut_group(P("C3:p2:a1:N0"))
    assert d.reduced_is_dual and d.acting_type == DynkinType("B", 3)
    d = aut_group(P("C3:p3:a1:G2"))
    assert d.frobenius_twist == 2
    n = normalize(P("G2:p2:Q1*F1,a2:G2"))
    assert n.twist == 1 and str(n.spec) == "G2:p2:Q1,a2:G1"


def test_invariants_on_catalog(catalog):
    for s in catalog:
        try:
            d = aut_group(s)
        except DomainError as e:
            assert e.code in ("not-uniform", "contains-isogeny-kernel")
            continue
        assert d.lie_dim >= group_dim(d.acting_type)
        assert aut_group(minimize(s)) == d
        if s.exotic is None and s.type.family != "A":
            # pulling back the whole spec only changes the twist
            e = aut_group(s.pullback(1))
            assert e.frobenius_twist == d.frobenius_twist + 1
            assert (e.reduced_type, e.infinitesimal_factor, e.lie_dim) == \
                   (d.reduced_type, d.infinitesimal_factor, d.lie_dim)


def test_monotone_in_xi():
    ms = [aut_group(P(f"C3:p2:a1:T,a2:{k}")).infinitesimal_factor for k in ("G1", "N1", "G2", "N2", "G3")]
    assert [m[1] for m in ms] == [1, 1, 2, 2, 3]


def test_relative_tangent_sections():
    assert relative_tangent_sections_dim(P("C3:p3:a1:T,a2:G1")) == 0
    assert relative_tangent_sections_dim(P("A3:p2:a1:T,a2:G1")) == 0
    assert relative_tangent_sections_dim(P("B3:p2:a1:T,a2:G1")) == 0
    with pytest.raises(DomainError) as exc:
        relative_tangent_sections_dim(P("G2:p3:a2:T,a1:G1"))  # xi = N only
    assert exc.value.code == "kernel-too-small"


def test_labels():
    assert picard_rank_one_variety_label(P("C3:p3:a1:T")) == "P⁵"
    assert picard_rank_one_variety_label(P("G2:p2:Q1")) == "P⁵"
    assert picard_rank_one_variety_label(P("G2:p2:Q2")) == \
        "general hyperplane section of the Lagrangian Grassmannian"
    assert picard_rank_one_variety_label(P("G2:p5:a1:G1")) == "smooth quadric in P⁶"
    with pytest.raises(DomainError):
        picard_rank_one_variety_label(P("A3:p2:a1:T,a2:T"))


def test_q2_arithmetic():
    assert q2_tangent_dimension() == 14
    ws = sp6_shifted_tangent_weights()
    assert len(ws) == 6  # positive roots of C3 containing the long simple root
