"""Brute-force verifiers: closures, normalizers, module generation, μ-incidence."""

from .closure import (ExoticEnumeration, LinearAction, center, enumerate_exotic_subalgebras,
                      is_p_subalgebra, is_simple_by_sweep, is_subalgebra, normalizer, p_closure,
                      submodule_generated)
from .incidence import IncidenceReport, WitnessScenario, mu_incidence_check, mu_incidence_report
from .models import (MatrixLieAlgebra, QuadraticForm, even_orthogonal_form, exterior_square_action,
                     octonion_form, odd_form, orthogonal_lie_algebra, orthogonal_wedge_model,
                     symplectic_lie_algebra)
from .truncated import TruncatedRing, in_span, submodule_contains

__all__ = [
    "ExoticEnumeration", "IncidenceReport", "LinearAction", "MatrixLieAlgebra", "QuadraticForm",
    "TruncatedRing", "WitnessScenario", "center", "enumerate_exotic_subalgebras",
    "even_orthogonal_form", "exterior_square_action", "in_span", "is_p_subalgebra",
    "is_simple_by_sweep", "is_subalgebra", "mu_incidence_check", "mu_incidence_report",
    "normalizer", "octonion_form", "odd_form", "orthogonal_lie_algebra", "orthogonal_wedge_model",
    "p_closure", "submodule_contains", "submodule_generated", "symplectic_lie_algebra",
]
