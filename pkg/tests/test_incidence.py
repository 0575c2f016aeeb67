import pytest

from flagaut.errors import DomainError
from flagaut.oracle import WitnessScenario, mu_incidence_check, mu_incidence_report

CASES = ["bn-frob", "g2-so7", "bn-veryspecial"]


@pytest.mark.parametrize("case", CASES)
@pytest.mark.parametrize("n,m", [(2, 1), (3, 1), (2, 2)])
def test_identity_preserves(case, n, m):
    assert mu_incidence_check(WitnessScenario(case, n=n, m=m), "identity")


@pytest.mark.parametrize("n,m", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_bn_frobenius_not_preserved(n, m):
    assert not mu_incidence_check(WitnessScenario("bn-frob", n=n, m=m))


@pytest.mark.parametrize("m", [1, 2])
def test_g2_so7_not_preserved(m):
    rep = mu_incidence_report(WitnessScenario("g2-so7", m=m))
    assert not rep.preserved
    assert rep.format_vectors(rep.moved) == ["(0, 0, s, 1, s, 0, 0)"]


def test_bn_veryspecial_quotient_model_is_preserved():
    # in the coherent model the very special factor absorbs the moved coordinate
    for n, m in [(2, 1), (3, 1)]:
        assert mu_incidence_check(WitnessScenario("bn-veryspecial", n=n, m=m))


def test_bn_veryspecial_literal_base_point_is_rejected():
    with pytest.raises(DomainError) as exc:
        mu_incidence_check(WitnessScenario("bn-veryspecial", base="literal"))
    assert exc.value.code == "bad-scenario"


@pytest.mark.parametrize("kwargs", [dict(case="xx"), dict(case="bn-frob", n=1),
                                    dict(case="bn-frob", m=0), dict(case="bn-frob", n=3, i=3),
                                    dict(case="bn-frob", base="other")])
def test_bad_scenarios(kwargs):
    with pytest.raises(DomainError) as exc:
        WitnessScenario(**kwargs)
    assert exc.value.code == "bad-scenario"


def test_aliases_and_methods_agree():
    w = WitnessScenario("bn-frobenius", n=2, m=1)
    assert w.case == "bn-frob"
    assert mu_incidence_check(w, method="howell") == mu_incidence_check(w, method="brute")
