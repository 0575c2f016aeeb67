"""The chain of non-central isogeny kernels and the very special isogeny.

Everything here is combinatorial: a kernel is a position in the chain
``1 < N < 1G < 1N < 2G < ...`` and the very special isogeny pi : G -> Gbar
is described by its dual Dynkin type together with the bijection on simple
roots exchanging short and long.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .parabolic import KernelSpec, has_very_special_isogeny
from .rootsys import DynkinType, Root, as_type, build_root_system, root_label


@dataclass(frozen=True)
class IsogenyDescriptor:
    source: DynkinType
    target: DynkinType
    kernel: KernelSpec

    @property
    def twist(self) -> int:
        return self.kernel.frobenius_part


def _require_vs(t: DynkinType, p: int) -> None:
    if not has_very_special_isogeny(t, p):
        raise DomainError("no-very-special-isogeny",
                          f"{t} at p={p} has no edge of multiplicity p", type=str(t), p=p)


def chain_compare(a: KernelSpec, b: KernelSpec, t=None, p: int | None = None) -> int:
    """-1, 0, 1 as a is strictly below, equal to, or above b in the chain."""
    if t is not None and p is not None:
        t = as_type(t)
        for k in (a, b):
            if k.kind == "N":
                _require_vs(t, p)
    return (a.position > b.position) - (a.position < b.position)


def very_special_dual(t, p: int) -> tuple[DynkinType, dict[int, int]]:
    """Target type of pi and the induced map alpha_i -> alpha_bar_j (1-based)."""
    t = as_type(t)
    _require_vs(t, p)
    n = t.rank
    if t.family == "B":
        return DynkinType("C", n), {i: i for i in range(1, n + 1)}
    if t.family == "C":
        return DynkinType("B", n), {i: i for i in range(1, n + 1)}
    if t.family == "F":
        return t, {i: 5 - i for i in range(1, 5)}
    if t.family == "G":
        return t, {1: 2, 2: 1}
    raise AssertionError(t)


def dual_root(t, p: int, gamma: Root) -> Root:
    """Image of gamma under pi: the coroot of gamma written on the dual simple roots."""
    t = as_type(t)
    rs = build_root_system(t)
    target, rmap = very_special_dual(t, p)
    cv = rs.coroot(gamma)
    out = [0] * t.rank
    for i, c in enumerate(cv):
        out[rmap[i + 1] - 1] = c
    out = tuple(out)
    assert build_root_system(target).is_root(out), (t, gamma, out)
    return out


def isogeny_for(t, p: int, kernel: KernelSpec) -> IsogenyDescriptor:
    t = as_type(t)
    if kernel.kind == "N":
        return IsogenyDescriptor(t, very_special_dual(t, p)[0], kernel)
    return IsogenyDescriptor(t, t, kernel)


@dataclass(frozen=True)
class CompositionRecord:
    """Per-root heights of pi and pi_bar; their sum is the Frobenius height 1."""

    source: DynkinType
    target: DynkinType
    rows: tuple  # (gamma, gamma_bar, height under pi, height under pi_bar)

    @property
    def ok(self) -> bool:
        return all(a + b == 1 for _, _, a, b in self.rows)

    def table(self) -> list[str]:
        return [f"{root_label(g):>12} -> {root_label(gb):<12} {a} + {b} = {a + b}"
                for g, gb, a, b in self.rows]


def compose_very_special(t, p: int) -> CompositionRecord:
    """Check that pi_bar ∘ pi kills each root group to height 1 (= Frobenius).

    pi has height 1 exactly on short root groups of G; pi_bar then has
    height 1 exactly on short root groups of Gbar, i.e. on the images of
    long roots of G.
    """
    t = as_type(t)
    rs = build_root_system(t)
    target, _ = very_special_dual(t, p)
    trs = build_root_system(target)
    rows = []
    for g in rs.roots:
        gb = dual_root(t, p, g)
        rows.append((g, gb, int(rs.is_short(g)), int(trs.is_short(gb))))
    return CompositionRecord(t, target, tuple(rows))


def lie_N_dimension(t, p: int) -> int:
    """Dimension of the p-closure of the short root spaces in the Chevalley algebra."""
    from .chevalley import build_lie_algebra
    from .oracle import p_closure

    t = as_type(t)
    _require_vs(t, p)
    L = build_lie_algebra(t, p)
    rs = L.root_system
    short = [L.e(r) for r in rs.roots if rs.is_short(r)]
    return p_closure(L, L.span(short)).dim
