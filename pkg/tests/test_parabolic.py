import pytest
from hypothesis import given, settings, strategies as st

from flagaut.errors import DomainError
from flagaut.parabolic import (INF, ExoticFactor, KernelSpec, ParabolicSpec, PhiFunction,
                               SpecParseError, canonical_form, contains, format_spec, intersect,
                               minimize, parse_spec, phi_from_spec, spec_from_phi, up_minus_profile)
from flagaut.rootsys import build_root_system


def P(text):
    return parse_spec(text)


# ---------------------------------------------------------------- kernels

def test_kernel_chain_order():
    T, N0, G1, N1, G2 = (KernelSpec.parse(x) for x in ("T", "N0", "G1", "N1", "G2"))
    assert T < N0 < G1 < N1 < G2
    assert [k.position for k in (T, N0, G1, N1, G2)] == [0, 1, 2, 3, 4]
    assert [k.frobenius_part for k in (T, N0, G1, N1, G2)] == [0, 0, 1, 1, 2]
    assert KernelSpec.parse("G0") == T


@given(st.integers(0, 40))
def test_kernel_position_roundtrip(pos):
    assert KernelSpec.from_position(pos).position == pos


def test_kernel_parse_errors():
    with pytest.raises(SpecParseError):
        KernelSpec.parse("X3")
    with pytest.raises(DomainError):
        KernelSpec("G", 0)


# ------------------------------------------------------------ validation

@pytest.mark.parametrize("text,code", [
    ("B3:p3:a1:N0", "no-very-special-isogeny"),
    ("C3:p2:a4:T", "not-a-root"),
    ("A3:p4:a1:T", "bad-prime"),
    ("B3:p3:Q1", "no-exotic"),
    ("G2:p2:Q1,a1:T", "no-exotic"),
    ("A3:p2:a1:T,a1:G1", "duplicate-factor"),
])
def test_domain_errors(text, code):
    with pytest.raises(DomainError) as exc:
        P(text)
    assert exc.value.code == code


@pytest.mark.parametrize("text", ["C3", "C3:3:a1:T", "C3:p3:b1:T", "C3:p3:a1:T,Q3", "X3:p3:a1:T"])
def test_parse_errors_name_token(text):
    with pytest.raises(SpecParseError) as exc:
        P(text)
    assert exc.value.token


@pytest.mark.parametrize("text", ["C3:p3:a1:T,a2:G1", "G2:p2:Q1*F1,a2:G1", "B3:p2:a1:N1,a3:T",
                                  "F4:p2:a1:N0,a4:T"])
def test_format_parse_roundtrip(text):
    assert format_spec(P(text)) == text


# --------------------------------------------------------------- phi

def test_phi_frobenius_factor():
    phi = phi_from_spec(P("C3:p5:a1:G2"))
    for r, v in phi.items():
        assert v == (2 if r[0] else INF)


def test_phi_very_special_c2():
    phi = phi_from_spec(P("C2:p2:a2:N0"))
    assert phi[(2, 1)] == 0  # 2e1 (long)
    assert phi[(1, 1)] == 1  # e1 + e2 (short)
    assert phi[(1, 0)] == INF  # e1 - e2


def test_phi_exotic_q1():
    phi = phi_from_spec(P("G2:p2:Q1"))
    assert [phi[r] for r in [(1, 0), (1, 1), (2, 1), (3, 1), (3, 2)]] == [0, 0, 1, 0, 0]
    assert phi[(0, 1)] == INF


def test_phi_sign_flip_lookup():
    phi = phi_from_spec(P("G2:p2:Q1"))
    assert phi[(-2, -1)] == phi[(2, 1)]


def test_spec_from_phi_examples():
    rs = build_root_system("C3")
    phi = {r: (1 if r[0] else INF) for r in rs.positive_roots}
    assert spec_from_phi("C3", 5, phi) == P("C3:p5:a1:G1")
    g2 = build_root_system("G2")
    vals = dict(zip([(1, 0), (1, 1), (2, 1), (3, 1), (3, 2)], [1, 1, 0, 0, 0]))
    vals[(0, 1)] = INF
    assert spec_from_phi("G2", 2, vals) == P("G2:p2:Q2")
    assert set(vals) == set(g2.positive_roots)


def test_spec_from_phi_rejects_non_parabolic():
    rs = build_root_system("A2")
    with pytest.raises(DomainError) as exc:
        spec_from_phi("A2", 3, {(1, 0): 0, (0, 1): INF, (1, 1): INF})
    assert exc.value.code == "not-a-parabolic" and exc.value.details["witness"]
    # a phi strictly between two chain kernels is not a parabolic either
    vals = {r: (1 if r[0] and r != (1, 0) else INF) for r in rs.positive_roots}
    vals[(1, 0)] = 0
    with pytest.raises(DomainError):
        spec_from_phi("A2", 3, vals)
    with pytest.raises(DomainError):
        spec_from_phi("A2", 3, {r: INF for r in rs.positive_roots})


def test_roundtrip_on_catalog(catalog):
    for s in catalog:
        phi = phi_from_spec(s)
        m = spec_from_phi(s.type, s.p, phi)
        assert phi_from_spec(m) == phi
        assert spec_from_phi(m.type, m.p, phi_from_spec(m)) == m
        assert contains(m, s) and contains(s, m)


def test_merging_of_short_kernels():
    # P^{a2} ∩ 1G P^{a1} = P^{a2} ∩ N P^{a1} for G2 at p = 3
    s = intersect(P("G2:p3:a2:T"), P("G2:p3:a1:G1"))
    assert s.kernel_at(1) == KernelSpec("N", 0)


# ------------------------------------------------------- intersect laws

@settings(max_examples=150, deadline=None)
@given(st.data())
def test_intersect_laws(catalog, data):
    a = data.draw(st.sampled_from([s for s in catalog if s.exotic is None]))
    same = [s for s in catalog if (s.type, s.p) == (a.type, a.p)]
    b = data.draw(st.sampled_from(same))
    c = data.draw(st.sampled_from(same))
    assert intersect(a, a) == minimize(a)
    assert intersect(a, b) == intersect(b, a)
    assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))
    ab = intersect(a, b)
    assert contains(a, ab) and contains(b, ab)


def test_intersect_reduced():
    assert intersect(P("B3:p2:a1:T"), P("B3:p2:a3:T")) == ParabolicSpec.reduced("B3", 2, [1, 3])
    with pytest.raises(DomainError):
        intersect(P("B3:p2:a1:T"), P("C3:p2:a1:T"))


# ------------------------------------------------------ canonical form

def test_canonical_form_examples():
    cf = canonical_form(P("C3:p3:a1:T,a2:G1"))
    assert cf.J == {1} and cf.xi == KernelSpec("G", 1) and cf.Jprime == {2}
    cf = canonical_form(P("G2:p3:a2:T,a1:G1"))
    assert cf.xi == KernelSpec("N", 0)
    cf = canonical_form(P("A3:p2:a1:T,a3:T"))
    assert cf.J == {1, 3} and cf.xi.is_trivial and not cf.Jprime


def test_canonical_form_errors_and_exotic():
    with pytest.raises(DomainError) as exc:
        canonical_form(P("A3:p2:a1:T,a2:G1,a3:G2"))
    assert exc.value.code == "not-uniform"
    merged = canonical_form(P("A3:p2:a1:T,a2:G1,a3:G2"), merge_nonuniform=True)
    assert merged.xi == KernelSpec("G", 1)
    with pytest.raises(DomainError) as exc:
        canonical_form(P("A3:p2:a1:G1,a2:G1"))
    assert exc.value.code == "contains-isogeny-kernel"
    cf = canonical_form(P("G2:p2:Q1,a2:G1"))
    assert cf.is_exotic and cf.exotic == ExoticFactor("Q1")


def test_up_minus_profile():
    assert up_minus_profile(P("A3:p2:a1:T,a2:T")) == [(r, 0) for r in
                                                      [(0, 1, 0), (1, 0, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1)]]
    prof = up_minus_profile(P("G2:p2:Q1"))
    assert sorted(v for _, v in prof) == [0, 0, 0, 0, 1]
    prof = up_minus_profile(P("C3:p2:a1:G2"))
    # one entry per positive root of C3 whose support contains a1
    assert len(prof) == 5 and all(v == 2 for _, v in prof)


def test_pullback_shifts_phi():
    s = P("G2:p2:Q1,a2:G1")
    t = s.pullback(2)
    assert phi_from_spec(t) == phi_from_spec(s).shift(2)
    assert str(t) == "G2:p2:Q1*F2,a2:G3"


def test_phi_function_validation():
    with pytest.raises(DomainError):
        PhiFunction.from_dict("A2", {(1, 0): 0})
