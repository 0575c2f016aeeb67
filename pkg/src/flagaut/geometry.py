"""Schubert divisors and curves on X = G/P, and contractions of Schubert curves.

The Picard group of X has the basis D_alpha (alpha a factor root of P) and
the cone of curves is generated by the dual classes C_beta.  Contracting
C_alpha gives G/Q^alpha, where Q^alpha is the least parabolic containing
both P and P^alpha; containment is read off phi-functions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .parabolic import (ExoticFactor, ParabolicSpec, minimal_factor_above,
                        phi_from_spec)


def picard_rank(spec: ParabolicSpec) -> int:
    return len(spec.factor_roots)


@dataclass(frozen=True)
class _Class:
    index: frozenset
    coeffs: tuple  # (alpha, coefficient) sorted by alpha

    def __post_init__(self):
        idx = frozenset(self.index)
        object.__setattr__(self, "index", idx)
        d = dict(self.coeffs)
        if not set(d) <= idx:
            raise DomainError("not-a-factor", f"coefficients on {sorted(set(d) - idx)} outside {sorted(idx)}")
        object.__setattr__(self, "coeffs", tuple(sorted((a, int(c)) for a, c in d.items() if c)))

    @classmethod
    def of(cls, spec_or_index, coeffs: dict | None = None):
        idx = spec_or_index.factor_roots if isinstance(spec_or_index, ParabolicSpec) else spec_or_index
        return cls(frozenset(idx), tuple((coeffs or {}).items()))

    @classmethod
    def basis(cls, spec_or_index, alpha: int):
        return cls.of(spec_or_index, {alpha: 1})

    def __getitem__(self, alpha: int) -> int:
        return dict(self.coeffs).get(alpha, 0)

    def _same(self, other):
        if type(other) is not type(self) or other.index != self.index:
            raise DomainError("index-mismatch", "classes live on different Picard groups")

    def __add__(self, other):
        self._same(other)
        d = dict(self.coeffs)
        for a, c in other.coeffs:
            d[a] = d.get(a, 0) + c
        return type(self)(self.index, tuple(d.items()))

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, k: int):
        return type(self)(self.index, tuple((a, k * c) for a, c in self.coeffs))


class DivisorClass(_Class):
    """A Z-combination of Schubert divisors D_alpha."""


class CurveClass(_Class):
    """A Z-combination of Schubert curves C_beta."""


def pairing(d: DivisorClass, c: CurveClass) -> int:
    """Intersection number, bilinear with D_alpha . C_beta = delta."""
    if d.index != c.index:
        raise DomainError("index-mismatch", "divisor and curve on different varieties")
    return sum(d[a] * c[a] for a in d.index)


def pairing_matrix(spec: ParabolicSpec) -> list[list[int]]:
    idx = sorted(spec.factor_roots)
    return [[pairing(DivisorClass.basis(spec, a), CurveClass.basis(spec, b)) for b in idx] for a in idx]


def is_nef(d: DivisorClass) -> bool:
    return all(c >= 0 for _, c in d.coeffs)


def contraction_target(spec: ParabolicSpec, alpha: int) -> ParabolicSpec:
    """Q^alpha: the least parabolic containing P and P^alpha, as a one-factor spec."""
    if alpha not in spec.factor_roots:
        raise DomainError("not-a-factor", f"a{alpha} is not a factor of the spec")
    k = minimal_factor_above(spec.type, spec.p, alpha, phi_from_spec(spec))
    if isinstance(k, ExoticFactor):
        return ParabolicSpec(spec.type, spec.p, (), k)
    return ParabolicSpec(spec.type, spec.p, ((alpha, k),))


def smooth_target(spec: ParabolicSpec) -> frozenset:
    """J with P^sm = P_J, the least reduced parabolic containing P."""
    if spec.exotic is not None:
        raise DomainError("exotic", "the smooth target is not defined for exotic parabolics")
    return frozenset(a for a in spec.factor_roots
                     if contraction_target(spec, a).is_reduced)
