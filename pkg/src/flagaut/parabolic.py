"""Parabolic subgroup schemes encoded by their phi-functions.

A parabolic of a simple adjoint group G is written as an intersection
``(ker xi_1) P^{a_1} ∩ ... ∩ (ker xi_r) P^{a_r}`` where each ``xi_i`` is a
non-central isogeny whose kernel lies in the chain

    1 < N < 1G < 1N < 2G < 2N < ...

(``mG`` the m-th Frobenius kernel, ``mN`` the kernel of F^m composed with the
very special isogeny).  For G2 in characteristic 2 the factor at a_1 may
instead be one of the two exotic parabolics Q1, Q2 (pulled back by F^m).

The phi-function records, for every positive root gamma, the height of
P ∩ U_{-gamma}; it determines P.  Positions in the chain are encoded as
integers: Trivial = 0, G(m) = 2m, N(m) = 2m + 1.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .rootsys import (DynkinType, Root, RootSystem, as_type, build_root_system,
                      root_label)

INF = math.inf


class SpecParseError(ValueError):
    """The text of a spec does not follow the grammar."""

    def __init__(self, token: str, message: str):
        self.token = token
        super().__init__(f"cannot parse {token!r}: {message}")


# ------------------------------------------------------------------ kernels

@dataclass(frozen=True)
class KernelSpec:
    """A kernel in the chain of non-central isogenies.

    ``kind`` is ``"T"`` (trivial), ``"G"`` (Frobenius kernel, m >= 1) or
    ``"N"`` (very special kernel composed with F^m, m >= 0).
    """

    kind: str
    m: int = 0

    def __post_init__(self):
        if self.kind not in ("T", "G", "N"):
            raise DomainError("bad-kernel", f"unknown kernel kind {self.kind!r}")
        if self.kind == "T" and self.m != 0:
            raise DomainError("bad-kernel", "trivial kernel takes no parameter")
        if self.kind == "G" and self.m < 1:
            raise DomainError("bad-kernel", "Frobenius kernel needs m >= 1")
        if self.kind == "N" and self.m < 0:
            raise DomainError("bad-kernel", "very special kernel needs m >= 0")

    @classmethod
    def trivial(cls) -> "KernelSpec":
        return cls("T")

    @classmethod
    def frob(cls, m: int) -> "KernelSpec":
        return cls("G", m) if m else cls("T")

    @classmethod
    def very_special(cls, m: int = 0) -> "KernelSpec":
        return cls("N", m)

    @classmethod
    def from_position(cls, pos: int) -> "KernelSpec":
        if pos < 0:
            raise DomainError("bad-kernel", f"negative chain position {pos}")
        if pos == 0:
            return cls("T")
        return cls("N", pos // 2) if pos % 2 else cls("G", pos // 2)

    @property
    def position(self) -> int:
        return {"T": 0, "G": 2 * self.m, "N": 2 * self.m + 1}[self.kind]

    @property
    def is_trivial(self) -> bool:
        return self.kind == "T"

    @property
    def frobenius_part(self) -> int:
        """Largest m with mG contained in this kernel."""
        return self.position // 2

    def height(self, short: bool) -> int:
        """Height of the kernel on a root group of the given length."""
        if self.kind == "T":
            return 0
        if self.kind == "G":
            return self.m
        return self.m + (1 if short else 0)

    def __lt__(self, other: "KernelSpec") -> bool:
        return self.position < other.position

    def __le__(self, other: "KernelSpec") -> bool:
        return self.position <= other.position

    def __str__(self):
        return "T" if self.kind == "T" else f"{self.kind}{self.m}"

    @classmethod
    def parse(cls, text: str) -> "KernelSpec":
        m = re.fullmatch(r"(T)|([GN])(\d+)", text.strip())
        if not m:
            raise SpecParseError(text, "kernel must be T, G<m> or N<m>")
        if m.group(1):
            return cls("T")
        kind, val = m.group(2), int(m.group(3))
        if kind == "G" and val == 0:
            return cls("T")
        return cls(kind, val)


def has_very_special_isogeny(t, p: int) -> bool:
    """True when the Dynkin diagram has an edge of multiplicity p."""
    rs = build_root_system(as_type(t))
    return rs.multiplicity_edge == p


def _check_kernel(t: DynkinType, p: int, k: KernelSpec) -> None:
    if k.kind == "N" and not has_very_special_isogeny(t, p):
        raise DomainError("no-very-special-isogeny",
                          f"{t} at p={p} has no edge of multiplicity p", type=str(t), p=p)


# --------------------------------------------------------- exotic profiles

EXOTIC_KINDS = ("Q1", "Q2")

#: phi-values of Q1, Q2 on the positive roots of G2 supported at alpha_1,
#: listed in root order (a1, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2).
_EXOTIC_OFFSETS = {
    "Q1": {(1, 0): 0, (1, 1): 0, (2, 1): 1, (3, 1): 0, (3, 2): 0},
    "Q2": {(1, 0): 1, (1, 1): 1, (2, 1): 0, (3, 1): 0, (3, 2): 0},
}


@dataclass(frozen=True, order=True)
class ExoticFactor:
    which: str
    m: int = 0

    def __post_init__(self):
        if self.which not in EXOTIC_KINDS:
            raise DomainError("no-exotic", f"unknown exotic parabolic {self.which!r}")
        if self.m < 0:
            raise DomainError("no-exotic", "Frobenius pullback exponent must be >= 0")

    def height(self, gamma: Root) -> int:
        return self.m + _EXOTIC_OFFSETS[self.which][tuple(gamma)]

    def __str__(self):
        return self.which + (f"*F{self.m}" if self.m else "")


# ------------------------------------------------------------------ specs

def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class ParabolicSpec:
    """The parabolic ⋂ (ker xi_i) P^{alpha_i}, optionally with an exotic factor.

    ``factors`` is a tuple of (alpha, KernelSpec) with 1-based simple root
    labels, kept sorted by alpha.  ``exotic`` occupies alpha_1 of G2 at p=2.
    """

    type: DynkinType
    p: int
    factors: tuple = ()
    exotic: ExoticFactor | None = None

    def __post_init__(self):
        t = as_type(self.type)
        object.__setattr__(self, "type", t)
        if not _is_prime(self.p):
            raise DomainError("bad-prime", f"{self.p} is not prime")
        facs = tuple(sorted((int(a), k) for a, k in self.factors))
        object.__setattr__(self, "factors", facs)
        alphas = [a for a, _ in facs]
        if len(set(alphas)) != len(alphas):
            raise DomainError("duplicate-factor", f"repeated simple root in {alphas}")
        for a, k in facs:
            if not 1 <= a <= t.rank:
                raise DomainError("not-a-root", f"a{a} is not a simple root of {t}")
            if not isinstance(k, KernelSpec):
                raise DomainError("bad-kernel", f"factor a{a} has kernel {k!r}")
            _check_kernel(t, self.p, k)
        if self.exotic is not None:
            if (str(t), self.p) != ("G2", 2):
                raise DomainError("no-exotic", f"exotic parabolics exist only for G2 at p=2, not {t} p={self.p}")
            if 1 in alphas:
                raise DomainError("no-exotic", "an exotic factor already occupies a1")
        if not facs and self.exotic is None:
            raise DomainError("empty-spec", "a parabolic needs at least one factor")

    @classmethod
    def make(cls, t, p: int, factors: dict | Iterable = (), exotic=None) -> "ParabolicSpec":
        """Convenience constructor; kernels may be given as text ("G1", "T")."""
        items = factors.items() if isinstance(factors, dict) else factors
        facs = []
        for a, k in items:
            facs.append((int(a), k if isinstance(k, KernelSpec) else KernelSpec.parse(k)))
        if isinstance(exotic, str):
            exotic = ExoticFactor(exotic)
        elif isinstance(exotic, tuple):
            exotic = ExoticFactor(*exotic)
        return cls(as_type(t), p, tuple(facs), exotic)

    @classmethod
    def reduced(cls, t, p: int, alphas: Iterable[int]) -> "ParabolicSpec":
        return cls.make(t, p, [(a, KernelSpec.trivial()) for a in alphas])

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.type)

    @property
    def factor_roots(self) -> frozenset:
        roots = {a for a, _ in self.factors}
        if self.exotic is not None:
            roots.add(1)
        return frozenset(roots)

    @property
    def levi(self) -> frozenset:
        """The Levi subset I = Delta minus the factor roots."""
        return frozenset(range(1, self.type.rank + 1)) - self.factor_roots

    def kernel_at(self, alpha: int) -> KernelSpec | None:
        for a, k in self.factors:
            if a == alpha:
                return k
        return None

    @property
    def is_reduced(self) -> bool:
        return self.exotic is None and all(k.is_trivial for _, k in self.factors)

    def pullback(self, m: int) -> "ParabolicSpec":
        """The Frobenius pullback F^{-m}(P): every chain kernel moves up by 2m."""
        facs = [(a, KernelSpec.from_position(k.position + 2 * m)) for a, k in self.factors]
        ex = None if self.exotic is None else ExoticFactor(self.exotic.which, self.exotic.m + m)
        return ParabolicSpec(self.type, self.p, tuple(facs), ex)

    def __str__(self):
        return format_spec(self)


# ------------------------------------------------------------ phi-functions

@dataclass(frozen=True)
class PhiFunction:
    """phi : positive roots -> N ∪ {inf}, stored in the root order of the type."""

    type: DynkinType
    values: tuple

    def __post_init__(self):
        t = as_type(self.type)
        object.__setattr__(self, "type", t)
        rs = build_root_system(t)
        vals = tuple(self.values)
        if len(vals) != len(rs.positive_roots):
            raise DomainError("bad-dimension",
                              f"phi needs {len(rs.positive_roots)} values, got {len(vals)}")
        clean = []
        for v in vals:
            if v == INF or v is None:
                clean.append(INF)
            elif int(v) == v and v >= 0:
                clean.append(int(v))
            else:
                raise DomainError("bad-phi", f"phi value {v!r} is not in N ∪ {{inf}}")
        object.__setattr__(self, "values", tuple(clean))

    @classmethod
    def from_dict(cls, t, values: dict) -> "PhiFunction":
        rs = build_root_system(as_type(t))
        missing = [r for r in rs.positive_roots if tuple(r) not in values]
        if missing:
            raise DomainError("bad-phi", f"phi undefined at {missing[0]}")
        return cls(rs.type, tuple(values[r] for r in rs.positive_roots))

    @property
    def roots(self) -> tuple:
        return build_root_system(self.type).positive_roots

    def __getitem__(self, gamma) -> int | float:
        gamma = tuple(gamma)
        if sum(gamma) < 0:
            gamma = tuple(-c for c in gamma)
        try:
            return self.values[self.roots.index(gamma)]
        except ValueError:
            raise DomainError("not-a-root", f"{gamma} is not a root of {self.type}") from None

    def items(self):
        return zip(self.roots, self.values)

    def as_dict(self) -> dict:
        return dict(self.items())

    def __le__(self, other: "PhiFunction") -> bool:
        return self.type == other.type and all(a <= b for a, b in zip(self.values, other.values))

    def meet(self, other: "PhiFunction") -> "PhiFunction":
        if self.type != other.type:
            raise DomainError("type-mismatch", f"{self.type} vs {other.type}")
        return PhiFunction(self.type, tuple(min(a, b) for a, b in zip(self.values, other.values)))

    def shift(self, d: int) -> "PhiFunction":
        return PhiFunction(self.type, tuple(v + d if v != INF else INF for v in self.values))

    def finite_min(self) -> int | None:
        fin = [v for v in self.values if v != INF]
        return min(fin) if fin else None

    def to_json(self) -> dict:
        return {root_label(r): (v if v != INF else "inf") for r, v in self.items()}


def _factor_heights(rs: RootSystem, alpha: int, k) -> dict:
    """phi-profile of a single factor on the roots supported at alpha."""
    out = {}
    for r in rs.positive_roots:
        if r[alpha - 1]:
            out[r] = k.height(r) if isinstance(k, ExoticFactor) else k.height(rs.is_short(r))
    return out


def phi_from_spec(spec: ParabolicSpec) -> PhiFunction:
    rs = spec.root_system
    vals = {r: INF for r in rs.positive_roots}
    contributions = [(a, k) for a, k in spec.factors]
    if spec.exotic is not None:
        contributions.append((1, spec.exotic))
    for a, k in contributions:
        for r, h in _factor_heights(rs, a, k).items():
            vals[r] = min(vals[r], h)
    return PhiFunction(rs.type, tuple(vals[r] for r in rs.positive_roots))


def factor_menu(t, p: int, alpha: int, max_height: int):
    """Candidate factors at alpha in increasing order of containment.

    Yields chain kernels (and, for G2 at p=2 and alpha_1, the exotic
    factors sitting between G(m) and G(m+1)) up to height max_height + 1.
    """
    t = as_type(t)
    exotic_here = (str(t), p, alpha) == ("G2", 2, 1)
    vs = has_very_special_isogeny(t, p)
    for pos in range(0, 2 * max_height + 3):
        k = KernelSpec.from_position(pos)
        if k.kind == "N" and not vs:
            continue
        yield k
        if exotic_here and k.kind in ("T", "G"):
            yield ExoticFactor("Q1", k.frobenius_part)
            yield ExoticFactor("Q2", k.frobenius_part)


def minimal_factor_above(t, p: int, alpha: int, phi: PhiFunction):
    """Least menu element at alpha whose profile dominates phi on alpha-supported roots."""
    rs = build_root_system(as_type(t))
    target = {r: phi[r] for r in rs.positive_roots if r[alpha - 1]}
    finite = [v for v in target.values() if v != INF]
    if len(finite) != len(target):
        return None
    for k in factor_menu(t, p, alpha, max(finite)):
        prof = _factor_heights(rs, alpha, k)
        if all(prof[r] >= target[r] for r in target):
            return k
    raise AssertionError("menu exhausted")  # G(max+1) always dominates


def spec_from_phi(t, p: int, phi: PhiFunction | dict) -> ParabolicSpec:
    """The unique spec with the given phi, each factor kernel minimal."""
    t = as_type(t)
    if isinstance(phi, dict):
        phi = PhiFunction.from_dict(t, phi)
    if phi.type != t:
        raise DomainError("type-mismatch", f"phi of type {phi.type} for {t}")
    rs = build_root_system(t)
    factors, exotic = [], None
    for a in range(1, t.rank + 1):
        simple = rs.simple_roots[a - 1]
        if phi[simple] == INF:
            continue
        k = minimal_factor_above(t, p, a, phi)
        if k is None:
            bad = next(r for r in rs.positive_roots if r[a - 1] and phi[r] == INF)
            raise DomainError("not-a-parabolic",
                              f"phi(a{a}) is finite but phi({root_label(bad)}) = inf",
                              witness=(simple, bad))
        if isinstance(k, ExoticFactor):
            exotic = k
        else:
            factors.append((a, k))
    if not factors and exotic is None:
        raise DomainError("not-a-parabolic", "phi is infinite on every simple root (P = G)",
                          witness=())
    candidate = ParabolicSpec(t, p, tuple(factors), exotic)
    got = phi_from_spec(candidate)
    for r, want, have in zip(rs.positive_roots, phi.values, got.values):
        if want != have:
            raise DomainError(
                "not-a-parabolic",
                f"phi({root_label(r)}) = {want} but the least parabolic above phi "
                f"({format_spec(candidate)}) has {have}",
                witness=(r,), candidate=format_spec(candidate))
    return candidate


def minimize(spec: ParabolicSpec) -> ParabolicSpec:
    return spec_from_phi(spec.type, spec.p, phi_from_spec(spec))


def intersect(a: ParabolicSpec, b: ParabolicSpec) -> ParabolicSpec:
    if (a.type, a.p) != (b.type, b.p):
        raise DomainError("type-mismatch", f"{a.type}/p{a.p} vs {b.type}/p{b.p}")
    return spec_from_phi(a.type, a.p, phi_from_spec(a).meet(phi_from_spec(b)))


def contains(big: ParabolicSpec, small: ParabolicSpec) -> bool:
    """small ⊆ big, decided by pointwise comparison of phi-functions."""
    return phi_from_spec(small) <= phi_from_spec(big)


# ------------------------------------------------------------ canonical form

@dataclass(frozen=True)
class CanonicalForm:
    """P = P_J ∩ (ker xi) P' with P' reduced at the roots J'.

    For exotic specs ``exotic`` is set, ``xi`` is None and ``J``/``Jprime``
    describe the remaining (alpha_2) factor only.
    """

    J: frozenset
    xi: KernelSpec | None
    Jprime: frozenset
    spec: ParabolicSpec
    exotic: ExoticFactor | None = None

    @property
    def is_exotic(self) -> bool:
        return self.exotic is not None


def canonical_form(spec: ParabolicSpec, merge_nonuniform: bool = False) -> CanonicalForm:
    """Minimize kernels and split the factors into J (trivial) and J' (kernel xi).

    Raises ``not-uniform`` when the nontrivial minimized kernels differ
    (unless ``merge_nonuniform``, which reports the smallest of them as xi)
    and ``contains-isogeny-kernel`` when no factor is reduced.
    """
    m = minimize(spec)
    J = frozenset(a for a, k in m.factors if k.is_trivial)
    rest = {a: k for a, k in m.factors if not k.is_trivial}
    if m.exotic is not None:
        xi = None
        if rest:
            (xi,) = rest.values()
        return CanonicalForm(J, xi, frozenset(rest), m, m.exotic)
    if not J:
        raise DomainError("contains-isogeny-kernel",
                          f"{format_spec(m)} contains a non-central isogeny kernel; strip it first",
                          spec=format_spec(m))
    kernels = set(rest.values())
    if len(kernels) > 1 and not merge_nonuniform:
        raise DomainError("not-uniform",
                          "factors carry distinct kernels: "
                          + ", ".join(f"a{a}:{k}" for a, k in sorted(rest.items())),
                          kernels={a: str(k) for a, k in rest.items()})
    xi = min(kernels) if kernels else KernelSpec.trivial()
    return CanonicalForm(J, xi, frozenset(rest), m)


def up_minus_profile(spec: ParabolicSpec) -> list:
    """(gamma, phi(gamma)) for every positive root with finite phi, in root order."""
    return [(r, v) for r, v in phi_from_spec(spec).items() if v != INF]


# ------------------------------------------------------------------ grammar

_FACTOR_RE = re.compile(r"a(\d+):(\S+)")
_EXOTIC_RE = re.compile(r"(Q[12])(?:\*F(\d+))?")


def parse_spec(text: str) -> ParabolicSpec:
    """Parse ``TYPE:pP:FACTOR,FACTOR,...``.

    A factor is ``aK:KERNEL`` with KERNEL in ``T | G<m> | N<m>``, or an
    exotic ``Q1`` / ``Q2`` optionally followed by ``*F<m>``.
    """
    parts = text.strip().split(":", 2)
    if len(parts) != 3:
        raise SpecParseError(text, "expected TYPE:pP:FACTORS")
    ttext, ptext, ftext = parts
    try:
        t = DynkinType.parse(ttext)
    except DomainError:
        raise SpecParseError(ttext, "unknown Dynkin type") from None
    pm = re.fullmatch(r"p(\d+)", ptext.strip())
    if not pm:
        raise SpecParseError(ptext, "prime must be written p<digits>")
    p = int(pm.group(1))
    factors, exotic = [], None
    for tok in ftext.split(","):
        tok = tok.strip()
        fm = _FACTOR_RE.fullmatch(tok)
        em = _EXOTIC_RE.fullmatch(tok)
        if fm:
            factors.append((int(fm.group(1)), KernelSpec.parse(fm.group(2))))
        elif em:
            if exotic is not None:
                raise SpecParseError(tok, "at most one exotic factor")
            exotic = ExoticFactor(em.group(1), int(em.group(2) or 0))
        else:
            raise SpecParseError(tok, "factor must be aK:KERNEL, Q1 or Q2 (optionally *Fm)")
    return ParabolicSpec(t, p, tuple(factors), exotic)


def format_spec(spec: ParabolicSpec) -> str:
    toks = []
    if spec.exotic is not None:
        toks.append(str(spec.exotic))
    toks += [f"a{a}:{k}" for a, k in spec.factors]
    return f"{spec.type}:p{spec.p}:" + ",".join(toks)
