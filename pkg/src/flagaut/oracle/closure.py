"""Brute-force closures in restricted Lie algebras and their modules."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .. import gfp
from ..chevalley import LieAlgebraFp, ModularLieAlgebra, build_lie_algebra, reduced_parabolic_subalgebra
from ..errors import DomainError
from ..gfp import Subspace
from ..rootsys import root_label


def _brackets_with(L: LieAlgebraFp, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """All brackets [x, y] for rows x of X, y of Y, as rows."""
    out = []
    for x in X:
        A = L.ad(x)
        out.append((Y @ A.T) % L.p)
    return np.concatenate(out) if out else np.zeros((0, L.dim), dtype=np.int64)


def is_subalgebra(L: LieAlgebraFp, S: Subspace) -> bool:
    B = S.basis
    return S.contains(_brackets_with(L, B, B)) if S.dim else True


def is_p_subalgebra(L: LieAlgebraFp, S: Subspace) -> bool:
    if not is_subalgebra(L, S):
        return False
    return all(S.contains(L.p_power(b)) for b in S.basis)


def p_closure(L: LieAlgebraFp, S: Subspace) -> Subspace:
    """Least p-subalgebra containing S (fixpoint of brackets and p-powers).

    Once the span is bracket-closed, closure under p-th powers of a basis
    suffices by Jacobson's formula.
    """
    cur = S
    while True:
        B = cur.basis
        nxt = cur.extended(_brackets_with(L, B, B)) if cur.dim else cur
        if nxt == cur:
            nxt = cur.extended(np.array([L.p_power(b) for b in B])) if cur.dim else cur
            if nxt == cur:
                return cur
        cur = nxt


def normalizer(L: LieAlgebraFp, S: Subspace) -> Subspace:
    """{x : [x, S] ⊆ S}, the kernel of x -> ([x, s_j] mod S)_j."""
    if S.dim == 0:
        return L.full()
    ann = S.annihilator()
    if ann.shape[0] == 0:
        return L.full()
    blocks = []
    for s in S.basis:
        # [x, s] = -ad(s) x; the sign does not change the kernel
        blocks.append((ann @ L.ad(s)) % L.p)
    return Subspace(gfp.nullspace(np.concatenate(blocks), L.p), L.dim, L.p)


def center(L: LieAlgebraFp) -> Subspace:
    """{x : [x, L] = 0}."""
    rows = []
    for i in range(L.dim):
        rows.append(L.ad(L.basis_vector(i)))
    # ad(b_i) x = [b_i, x]; stack over i
    return Subspace(gfp.nullspace(np.concatenate(rows), L.p), L.dim, L.p)


# ------------------------------------------------------------- modules

class LinearAction:
    """A representation given by one matrix per basis element of an algebra.

    When the algebra has structure constants the homomorphism property
    rho([b_i, b_j]) = [rho(b_i), rho(b_j)] is checked on construction.
    """

    def __init__(self, algebra: LieAlgebraFp | None, matrices, p: int | None = None,
                 check: bool = True):
        self.algebra = algebra
        self.p = algebra.p if algebra is not None else p
        if self.p is None:
            raise ValueError("p is required without an algebra")
        self.matrices = gfp.reduce(np.asarray(matrices), self.p)
        if self.matrices.ndim != 3 or self.matrices.shape[1] != self.matrices.shape[2]:
            raise DomainError("bad-dimension", "action matrices must be square and stacked")
        self.module_dim = self.matrices.shape[1]
        if algebra is not None:
            if self.matrices.shape[0] != algebra.dim:
                raise DomainError("bad-dimension", "one matrix per basis element required")
            if check:
                self._check()

    def _check(self) -> None:
        L, M, p = self.algebra, self.matrices, self.p
        for i, j in combinations(range(L.dim), 2):
            br = L.bracket(L.basis_vector(i), L.basis_vector(j))
            lhs = np.tensordot(br, M, axes=1) % p
            rhs = (M[i] @ M[j] - M[j] @ M[i]) % p
            if not np.array_equal(lhs, rhs):
                raise DomainError("not-a-representation", f"fails on basis pair ({i}, {j})")

    @classmethod
    def adjoint(cls, L: LieAlgebraFp) -> "LinearAction":
        return cls(L, np.stack([L.ad(L.basis_vector(i)) for i in range(L.dim)]))

    def act(self, x, v) -> np.ndarray:
        M = np.tensordot(gfp.reduce(x, self.p), self.matrices, axes=1) % self.p
        return (M @ gfp.reduce(v, self.p)) % self.p


def submodule_generated(A: LinearAction, v) -> Subspace:
    """Least subspace containing v and stable under every action matrix."""
    cur = Subspace(np.atleast_2d(v), A.module_dim, A.p)
    while True:
        imgs = np.concatenate([(cur.basis @ M.T) % A.p for M in A.matrices]) if cur.dim else cur.basis
        nxt = cur.extended(imgs)
        if nxt == cur:
            return cur
        cur = nxt


def is_simple_by_sweep(A: LinearAction, vectors) -> bool:
    """True iff every given nonzero vector generates the whole module."""
    return all(submodule_generated(A, v).dim == A.module_dim for v in vectors if np.any(v))


# ------------------------------------------------- exotic subalgebras of G2

@dataclass(frozen=True)
class ExoticEnumeration:
    algebra: ModularLieAlgebra
    lie_p: Subspace
    candidates: int
    found: tuple  # (roots added, Subspace), proper p-subalgebras strictly above lie_p
    improper_closed: bool
    caveat: str = ("search restricted to T-stable subspaces: Lie P^a1 plus a set of "
                   "negative root lines")

    def dims(self) -> list[int]:
        return sorted(s.dim for _, s in self.found)

    def describe(self) -> list[str]:
        return [f"dim {s.dim}: Lie P^a1 + " + " + ".join(f"g[{root_label(r)}]" for r in roots)
                for roots, s in self.found]


def enumerate_exotic_subalgebras() -> ExoticEnumeration:
    """All T-stable p-subalgebras of Lie G2 (p = 2) strictly between Lie P^a1 and Lie G."""
    L = build_lie_algebra("G2", 2)
    lie_p = reduced_parabolic_subalgebra(L, [1])
    extra = [r for r in L.basis_roots if sum(r) < 0 and r[0]]
    found, improper = [], False
    count = 0
    for k in range(1, len(extra) + 1):
        for roots in combinations(extra, k):
            count += 1
            S = lie_p.extended(np.array([L.e(r) for r in roots]))
            if not is_p_subalgebra(L, S):
                continue
            if S.dim == L.dim:
                improper = True
            else:
                found.append((roots, S))
    return ExoticEnumeration(L, lie_p, count + 1, tuple(found), improper)
