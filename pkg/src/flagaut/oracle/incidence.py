"""Does mu_{2^(m+1)} preserve an incidence variety?  Checks over truncated rings.

Each scenario fixes a base point of an incidence variety X inside a product
of two homogeneous varieties, a diagonal action of the generator t of
mu_{2^(m+1)} on the first factor (followed by the m-th Frobenius twist) and
the trivial action on the second.  The action preserves X only if the
incidence still holds over R = F_2[t]/(t^(2^(m+1)) - 1) after moving the
base point by t.

Scenarios
---------
``bn-frob``
    B_n, X ⊂ OG(n, 2n+1) × OG(i, 2n+1), incidence E ⊆ F^m(W).  Coordinates
    on v0^⊥ = k v0 ⊕ k e_1 ⊕ ... ⊕ k e_2n with q = y0² + Σ y_i y_{2n+1-i};
    t scales the v0 coordinate.
``g2-so7``
    G2 ⊂ SO7 on the pure octonions with q = x3² + x2x4 + x1x5 + x0x6,
    incidence F^m(l) ⊆ E, t = diag(1, 1, t, 1, t⁻¹, 1, 1).
``bn-veryspecial``
    B_n with the second factor G/mN P^{a_i}, the Lagrangian Grassmannian of
    the symplectic quotient v0^⊥ / k v0.  Its points are E ∋ v0 and the
    incidence is E ⊆ F^m(W) + k v0 (``base="quotient"``, the default).
    ``base="literal"`` uses W̃0 = span(e_1..e_{n+1}) ⊂ k^{2n+2} and
    E0 = k v0 ⊕ k e_1 ⊕ ... ⊕ k e_i with incidence E ⊆ F^m(W̃) ∩ v0^⊥; that
    base point is not on X (v0 is not singular), so it is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import gfp
from ..errors import DomainError
from .models import QuadraticForm, even_orthogonal_form, octonion_form, odd_form
from .truncated import TruncatedRing, submodule_contains

CASES = ("bn-frob", "g2-so7", "bn-veryspecial")
CASE_ALIASES = {"bn-frobenius": "bn-frob", "g2so7": "g2-so7", "bn-vs": "bn-veryspecial"}


@dataclass(frozen=True)
class WitnessScenario:
    case: str
    n: int = 2
    m: int = 1
    i: int = 1
    base: str = "quotient"

    def __post_init__(self):
        case = CASE_ALIASES.get(self.case, self.case)
        object.__setattr__(self, "case", case)
        if case not in CASES:
            raise DomainError("bad-scenario", f"unknown case {self.case!r}; expected one of {CASES}")
        if self.m < 1:
            raise DomainError("bad-scenario", "m must be >= 1")
        if case != "g2-so7":
            if self.n < 2:
                raise DomainError("bad-scenario", "n must be >= 2")
            if not 1 <= self.i < self.n:
                raise DomainError("bad-scenario", f"need 1 <= i < n, got i={self.i}, n={self.n}")
        if self.base not in ("quotient", "literal"):
            raise DomainError("bad-scenario", f"unknown base point convention {self.base!r}")


@dataclass
class IncidenceReport:
    scenario: WitnessScenario
    element: str
    preserved: bool
    moved: list = field(default_factory=list)   # generators of the moved subspace
    fixed: list = field(default_factory=list)   # generators of the other subspace
    direction: str = ""                         # "fixed ⊆ moved" or "moved ⊆ fixed"
    ring: TruncatedRing | None = None

    def format_vectors(self, vecs) -> list[str]:
        R = self.ring
        names = {R.zero: "0", R.one: "1", R.t: "t", R.s: "s", R.inverse(R.t): "t⁻¹"}
        return ["(" + ", ".join(names.get(x, f"[{x:b}]") for x in v) + ")" for v in vecs]


def _unit(N: int, k: int) -> tuple:
    return tuple(int(j == k) for j in range(N))


def _odd_base(n: int, i: int):
    """W0 (dim n) and E0 (dim i) in coordinates (v0, e_1, ..., e_2n)."""
    N = 2 * n + 1
    d = tuple(1 if j in (0, 1, 2 * n) else 0 for j in range(N))
    W0 = [d] + [_unit(N, k) for k in range(2, n + 1)]
    E0 = [d] + [_unit(N, k) for k in range(2, i + 1)]
    return W0, E0


def _check_singular(form: QuadraticForm, gens) -> None:
    B = form.polar()
    G = np.array(gens) % 2
    if any(form(g) for g in G) or np.any((G @ B @ G.T) % 2):
        raise DomainError("bad-scenario", "base subspace is not totally singular")


def _act(R: TruncatedRing, diag, vecs):
    return [tuple(R.mul(d, x) for d, x in zip(diag, v)) for v in vecs]


def _frob(R: TruncatedRing, k: int, vecs):
    return [tuple(R.frobenius(x, k) for x in v) for v in vecs]


def _literal_veryspecial_on_X(n: int, i: int) -> bool:
    N = 2 * n + 2
    form = even_orthogonal_form(n)
    W = [_unit(N, k) for k in range(1, n + 2)]
    v0 = tuple(int(j in (0, N - 1)) for j in range(N))
    E = [v0] + [_unit(N, k) for k in range(1, i + 1)]
    B = form.polar()
    Wm = np.array(W)
    singular = not any(form(w) for w in Wm) and not np.any((Wm @ B @ Wm.T) % 2)
    # W ∩ v0^⊥ where v0^⊥ = {x0 = x_{N-1}}
    Wperp = gfp.Subspace(Wm, N, 2).intersect(gfp.Subspace(gfp.nullspace(np.array([B @ np.array(v0)]), 2), N, 2))
    return singular and Wperp.contains(np.array(E))


def mu_incidence_report(w: WitnessScenario, element: str = "generator",
                        method: str = "auto") -> IncidenceReport:
    """Move the base point by t (or by 1) and test the incidence over R."""
    if element not in ("generator", "identity"):
        raise DomainError("bad-scenario", f"element must be 'generator' or 'identity', not {element!r}")
    R = TruncatedRing(w.m)
    t = R.t if element == "generator" else R.one
    twist = w.m

    if w.case == "bn-frob":
        W0, E0 = _odd_base(w.n, w.i)
        _check_singular(odd_form(w.n), W0)
        diag = [t] + [R.one] * (2 * w.n)
        moved = _frob(R, twist, _act(R, diag, W0))
        ok = submodule_contains(R, moved, E0, method)
        return IncidenceReport(w, element, ok, moved, E0, "fixed ⊆ moved", R)

    if w.case == "g2-so7":
        form = octonion_form()
        l0 = [(0, 0, 1, 1, 1, 0, 0)]
        E0 = [(0, 0, 1, 1, 1, 0, 0), (1, 1, 0, 0, 0, 1, 1)]
        _check_singular(form, l0)
        _check_singular(form, E0)
        diag = [R.one, R.one, t, R.one, R.inverse(t), R.one, R.one]
        moved = _frob(R, twist, _act(R, diag, l0))
        ok = submodule_contains(R, E0, moved, method)
        return IncidenceReport(w, element, ok, moved, E0, "moved ⊆ fixed", R)

    # bn-veryspecial
    if w.base == "literal":
        if not _literal_veryspecial_on_X(w.n, w.i):
            raise DomainError(
                "bad-scenario",
                "literal base point is not on X: span(e_1..e_{n+1}) is not totally singular "
                "and cannot contain v0, so E0 ⊄ W̃0 ∩ v0^⊥ already at t = 1")
    W0, E0q = _odd_base(w.n, w.i)
    _check_singular(odd_form(w.n), W0)
    N = 2 * w.n + 1
    v0 = _unit(N, 0)
    E0 = [v0, tuple((a + b) % 2 for a, b in zip(E0q[0], v0))] + E0q[1:]
    diag = [t] + [R.one] * (2 * w.n)
    moved = _frob(R, twist, _act(R, diag, W0)) + [v0]
    ok = submodule_contains(R, moved, E0, method)
    return IncidenceReport(w, element, ok, moved, E0, "fixed ⊆ moved + k v0", R)


def mu_incidence_check(w: WitnessScenario, element: str = "generator", method: str = "auto") -> bool:
    return mu_incidence_report(w, element, method).preserved
