"""The connected automorphism group scheme of X = G/P.

The decision procedure works on the phi-function of P:

1. Strip a Frobenius twist: if P contains mG (phi >= m everywhere) then
   X = G^(m)/P' and only the twist is remembered.
2. If P contains the very special kernel N, pass to the dual group
   Gbar = G/N (phi drops by one on short roots).
3. On the untwisted parabolic: Picard rank one is Demazure's table (plus the
   two exotic G2 varieties); in higher rank the canonical form
   P = P_J ∩ (ker xi) P' decides whether an infinitesimal factor mGhat
   appears (J = {alpha} exceptional and mG ⊆ ker xi).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .isogeny import dual_root, very_special_dual
from .parabolic import (INF, ExoticFactor, ParabolicSpec, PhiFunction,
                        canonical_form, format_spec, has_very_special_isogeny,
                        phi_from_spec, spec_from_phi)
from .rootsys import DynkinType, as_type, build_root_system, fundamental_weight, weyl_dim

_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _sup(n: int) -> str:
    return str(n).translate(_SUP)


@dataclass(frozen=True)
class ExceptionalPairInfo:
    pair: tuple  # (DynkinType, alpha)
    hat_type: DynkinType
    hat_name: str


def _hat_name(h: DynkinType) -> str:
    if h.family == "A":
        return f"PGL{h.rank + 1}"
    if h.family == "D":
        return f"PSO{2 * h.rank}"
    if h.family == "B":
        return f"SO{2 * h.rank + 1}"
    return str(h)


def demazure_aut(t, alpha: int) -> ExceptionalPairInfo | None:
    """Demazure's exceptional pairs; None means Aut^0(G/P^alpha) = G."""
    t = as_type(t)
    if not 1 <= alpha <= t.rank:
        raise DomainError("not-a-root", f"a{alpha} is not a simple root of {t}")
    n = t.rank
    hat = None
    if t.family == "C" and alpha == 1:
        hat = DynkinType("A", 2 * n - 1)
    elif t.family == "B" and alpha == n:
        hat = DynkinType("D", n + 1)
    elif t.family == "G" and alpha == 1:
        hat = DynkinType("B", 3)
    if hat is None:
        return None
    return ExceptionalPairInfo((t, alpha), hat, _hat_name(hat))


def group_dim(t) -> int:
    return build_root_system(as_type(t)).dimension


@dataclass(frozen=True)
class AutDescriptor:
    """Aut^0(X) = mGhat · G (or just the reduced group), with G acting through a twist."""

    reduced_type: DynkinType
    frobenius_twist: int
    reduced_is_dual: bool
    infinitesimal_factor: tuple | None  # (hat_type, m)
    lie_dim: int
    is_reduced: bool
    acting_type: DynkinType
    notes: tuple = ()

    def __post_init__(self):
        if self.infinitesimal_factor is not None:
            hat, m = self.infinitesimal_factor
            assert m >= 1 and not self.is_reduced and self.lie_dim == group_dim(hat)
        else:
            assert self.is_reduced and self.lie_dim == group_dim(self.reduced_type)

    def describe(self) -> str:
        twist = f"^({self.frobenius_twist})" if self.frobenius_twist else ""
        base = f"{self.reduced_type}{twist}"
        if self.infinitesimal_factor:
            hat, m = self.infinitesimal_factor
            return f"{m}({hat})·{base}"
        return base

    def to_json(self) -> dict:
        inf = None
        if self.infinitesimal_factor:
            inf = {"hat": str(self.infinitesimal_factor[0]), "m": self.infinitesimal_factor[1]}
        return {"reduced_type": str(self.reduced_type), "twist": self.frobenius_twist,
                "reduced_is_dual": self.reduced_is_dual, "infinitesimal": inf,
                "lie_dim": self.lie_dim, "is_reduced": self.is_reduced}


@dataclass(frozen=True)
class Normalized:
    """P written as the pullback of an untwisted parabolic of G or Gbar."""

    spec: ParabolicSpec
    twist: int
    dual: bool


def normalize(spec: ParabolicSpec) -> Normalized:
    """Strip the Frobenius twist and, if present, the very special kernel."""
    t, p = spec.type, spec.p
    phi = phi_from_spec(spec)
    twist = phi.finite_min()
    phi = phi.shift(-twist)
    dual = False
    rs = build_root_system(t)
    if has_very_special_isogeny(t, p) and all(
            v >= (1 if rs.is_short(r) else 0) for r, v in phi.items()):
        target, _ = very_special_dual(t, p)
        vals = {}
        for r, v in phi.items():
            vals[dual_root(t, p, r)] = v - (1 if rs.is_short(r) else 0) if v != INF else INF
        phi = PhiFunction.from_dict(target, vals)
        t, dual = target, True
        assert phi.finite_min() == 0
    return Normalized(spec_from_phi(t, p, phi), twist, dual)


def _exotic_rank_one(ex: ExoticFactor):
    if ex.which == "Q1":
        return DynkinType("A", 5), ("homogeneous under PGL6 (the variety is P⁵)",)
    return DynkinType("G", 2), ("dim H⁰(T) = dim Lie Sp6 − dim V(ϖ1) = 21 − 7",)


def aut_group(spec: ParabolicSpec, merge_nonuniform: bool = False) -> AutDescriptor:
    norm = normalize(spec)
    P = norm.spec
    G = P.type
    common = dict(frobenius_twist=norm.twist, reduced_is_dual=norm.dual, acting_type=G)
    notes = []
    if norm.twist:
        notes.append(f"P is the pullback by F^{norm.twist} of {format_spec(P)}")
    if norm.dual:
        notes.append(f"P contains the very special kernel; G acts through {G}")

    def reduced(t, extra=()):
        return AutDescriptor(t, infinitesimal_factor=None, lie_dim=group_dim(t),
                             is_reduced=True, notes=tuple(notes) + tuple(extra), **common)

    def infinitesimal(hat, m):
        notes.append(f"{m}({hat}) acts on the exceptional contraction target")
        return AutDescriptor(G, infinitesimal_factor=(hat, m), lie_dim=group_dim(hat),
                             is_reduced=False, notes=tuple(notes), **common)

    rank = len(P.factor_roots)
    if rank == 1:
        if P.exotic is not None:
            t, extra = _exotic_rank_one(P.exotic)
            return reduced(t, extra)
        (alpha, k), = P.factors
        assert k.is_trivial
        info = demazure_aut(G, alpha)
        if info is None:
            return reduced(G)
        return reduced(info.hat_type, (f"exceptional pair ({G}, a{alpha}): Aut = {info.hat_name}",))

    if P.exotic is None and not any(demazure_aut(G, a) for a in P.factor_roots):
        # an infinitesimal factor needs an exceptional smooth target P^alpha,
        # so the kernels (uniform or not) cannot matter here
        return reduced(G)
    cf = canonical_form(P, merge_nonuniform=merge_nonuniform)
    if cf.is_exotic:
        # G2, p = 2, rank two: Y_m = Q1 ∩ mG P^a2 and Z_m = Q2 ∩ mG P^a2
        if cf.xi is None or cf.xi.is_trivial:
            return reduced(G, ("smooth contraction to G/P^a2",))
        m = cf.xi.frobenius_part
        if cf.exotic.which == "Q1" and m >= 1:
            return infinitesimal(DynkinType("A", 5), m)
        return reduced(G)
    if len(cf.J) == 1:
        (alpha,) = cf.J
        info = demazure_aut(G, alpha)
        if info is not None:
            m = cf.xi.frobenius_part
            if m >= 1:
                return infinitesimal(info.hat_type, m)
    return reduced(G)


def relative_tangent_sections_dim(spec: ParabolicSpec) -> int:
    """dim H^0(X, T_f) for the smooth contraction f : X -> G/P^sm (always 0).

    Requires the untwisted canonical form P = P_J ∩ (ker xi) P' with
    1G ⊆ ker xi.  Computed as the difference of Lie algebra dimensions of
    Aut^0(X) and Aut^0(G/P_J).
    """
    norm = normalize(spec)
    P = norm.spec
    if P.exotic is not None or len(P.factor_roots) < 2:
        raise DomainError("kernel-too-small", "needs a non-exotic spec of Picard rank >= 2")
    cf = canonical_form(P)
    if cf.xi.frobenius_part < 1:
        raise DomainError("kernel-too-small", f"xi = {cf.xi} does not contain 1G")
    target = ParabolicSpec.reduced(P.type, P.p, cf.J)
    diff = aut_group(spec).lie_dim - aut_group(target).lie_dim
    if diff != 0:
        raise AssertionError(f"H^0(T_f) = {diff} for {format_spec(spec)}")
    return diff


def picard_rank_one_variety_label(spec: ParabolicSpec) -> str:
    """Name of the projective variety X (as an abstract variety)."""
    norm = normalize(spec)
    P = norm.spec
    if len(P.factor_roots) != 1:
        raise DomainError("not-picard-rank-one", f"{format_spec(spec)} has Picard rank {len(P.factor_roots)}")
    if P.exotic is not None:
        if P.exotic.which == "Q1":
            return "P⁵"
        return "general hyperplane section of the Lagrangian Grassmannian"
    t = P.type
    (alpha, _), = P.factors
    n, fam = t.rank, t.family
    if fam == "A":
        if alpha in (1, n):
            return f"P{_sup(n)}"
        return f"Grassmannian Gr({alpha}, {n + 1})"
    if fam == "C" and alpha == 1:
        return f"P{_sup(2 * n - 1)}"
    if fam == "C" and alpha == n:
        return f"Lagrangian Grassmannian LG({n}, {2 * n})"
    if fam == "C":
        return f"symplectic Grassmannian SpGr({alpha}, {2 * n})"
    if fam == "B" and alpha == 1:
        return f"smooth quadric in P{_sup(2 * n)}"
    if fam == "B" and alpha == n:
        return f"orthogonal Grassmannian OG({n}, {2 * n + 1})"
    if fam == "B":
        return f"orthogonal Grassmannian OG({alpha}, {2 * n + 1})"
    if fam == "D" and alpha == 1:
        return f"smooth quadric in P{_sup(2 * n - 1)}"
    if fam == "D" and alpha in (n - 1, n):
        return f"spinor variety OG({n}, {2 * n})"
    if fam == "G" and alpha == 1:
        return "smooth quadric in P⁶"
    return f"{t}/P^a{alpha}"


# ------------------------------------- G2 / Q2 inside the Lagrangian Grassmannian

def sp6_shifted_tangent_weights(shift: str = "root") -> list[tuple]:
    """Weights of (Lie Sp6 / Lie P^beta) ⊗ k_{-beta}, beta the long simple root of C3.

    The weights of Lie G / Lie P^beta are the negative roots -gamma with
    beta in the support of gamma; each is shifted by -beta (``shift="root"``)
    or, reading k_{-beta} as the fibre of O(-1), by the fundamental weight
    -varpi_3 (``shift="fundamental"``).  Fundamental-weight coordinates.
    """
    rs = build_root_system("C3")
    beta = rs.simple_roots[2]
    if shift == "root":
        delta = tuple(rs.pairing(beta, s) for s in rs.simple_roots)
    elif shift == "fundamental":
        delta = fundamental_weight("C3", 3)
    else:
        raise ValueError(f"shift must be 'root' or 'fundamental', not {shift!r}")
    out = []
    for g in rs.positive_roots:
        if g[2]:
            w = tuple(-rs.pairing(g, s) for s in rs.simple_roots)
            out.append(tuple(a - b for a, b in zip(w, delta)))
    return out


def q2_tangent_dimension() -> int:
    """dim Lie Sp6 − dim V(ϖ1) for G2."""
    return group_dim("C3") - weyl_dim("G2", fundamental_weight("G2", 1))
