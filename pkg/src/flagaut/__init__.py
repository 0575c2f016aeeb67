"""flagaut — automorphism group schemes of (possibly non-reduced) flag varieties.

Quick start::

    >>> from flagaut import parse_spec, aut_group
    >>> aut_group(parse_spec("C3:p3:a1:T,a2:G1")).describe()
    '1(A5)·C3'
"""

__version__ = "0.1.0"

from .autgroup import AutDescriptor, aut_group, demazure_aut, relative_tangent_sections_dim
from .chevalley import ModularLieAlgebra, build_lie_algebra
from .errors import DomainError
from .parabolic import (KernelSpec, ParabolicSpec, PhiFunction, SpecParseError, canonical_form,
                        format_spec, intersect, parse_spec, phi_from_spec, spec_from_phi)
from .rootsys import DynkinType, build_root_system

__all__ = [
    "AutDescriptor", "DomainError", "DynkinType", "KernelSpec", "ModularLieAlgebra", "ParabolicSpec",
    "PhiFunction", "SpecParseError", "aut_group", "build_lie_algebra", "build_root_system",
    "canonical_form", "demazure_aut", "format_spec", "intersect", "parse_spec", "phi_from_spec",
    "relative_tangent_sections_dim", "spec_from_phi",
]
