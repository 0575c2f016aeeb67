"""Restricted Lie algebras over F_p in a Chevalley basis.

The basis is ``e_gamma`` for the positive roots (in root order), then
``e_-gamma`` in the same order, then the simple coroots ``h_1 .. h_n``.
Structure constants N_{r,s} are computed over Z from a choice of signs on
extraspecial pairs (Carter's algorithm) and only then reduced mod p, so the
same integral table serves every prime.

The restricted structure is ``e_gamma^[p] = 0`` and ``h_i^[p] = h_i``,
extended to arbitrary vectors with Jacobson's formula.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np
import scipy.sparse as sp

from .errors import DomainError
from .gfp import Subspace
from .rootsys import (RootSystem, as_type, build_root_system, is_positive, neg,
                      root_label, root_order_key)

SUPPORTED_PRIMES = (2, 3, 5, 7)


class _StructureConstants:
    """Integral N_{r,s} for one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.roots = set(rs.roots)
        self.pos = rs.positive_roots
        self.rank_of = {r: k for k, r in enumerate(self.pos)}
        self.extraspecial = {}
        for xi in self.pos:
            for a in self.pos:
                b = tuple(x - y for x, y in zip(xi, a))
                if b in self.roots and is_positive(b) and self._prec(a, b):
                    self.extraspecial[xi] = (a, b)
                    break
        self._memo = {}

    def _prec(self, a, b) -> bool:
        return root_order_key(a) < root_order_key(b)

    def _add(self, a, b):
        s = tuple(x + y for x, y in zip(a, b))
        return s if s in self.roots else None

    def string_p(self, r, s) -> int:
        """Largest k with s - k r a root."""
        k = 0
        while tuple(y - (k + 1) * x for x, y in zip(r, s)) in self.roots:
            k += 1
        return k

    def N(self, r, s) -> int:
        key = (r, s)
        if key in self._memo:
            return self._memo[key]
        val = self._compute(r, s)
        self._memo[key] = val
        return val

    def _compute(self, r, s) -> int:
        if self._add(r, s) is None:
            return 0
        n2 = self.rs.norm2
        if is_positive(r) and is_positive(s):
            if self._prec(s, r):
                return -self.N(s, r)
            xi = self._add(r, s)
            a, b = self.extraspecial[xi]
            if (r, s) == (a, b):
                return self.string_p(a, b) + 1
            total = Fraction(0)
            sa = self._add(s, neg(a))
            if sa is not None:
                total += Fraction(self.N(s, neg(a)) * self.N(r, neg(b)), n2(sa))
            ra = self._add(r, neg(a))
            if ra is not None:
                total += Fraction(self.N(neg(a), r) * self.N(s, neg(b)), n2(ra))
            val = total * n2(xi) / self.N(a, b)
            assert val.denominator == 1
            return int(val)
        if not is_positive(r) and not is_positive(s):
            return -self.N(neg(r), neg(s))
        # mixed signs: r + s + t = 0 with t = -(r + s)
        t = neg(self._add(r, s))
        if not is_positive(r):
            # N_{r,s} = -N_{s,r}; put the positive root first
            return -self.N(s, r)
        if is_positive(t):
            val = Fraction(n2(t), n2(s)) * self.N(t, r)
        else:
            val = Fraction(n2(t), n2(r)) * self.N(s, t)
        assert val.denominator == 1
        return int(val)


@lru_cache(maxsize=None)
def integral_structure(t):
    """Sparse integral structure tensor and basis data for a type.

    Returns (labels, roots_in_basis_order, dict (i, j) -> {k: c}).  The
    Jacobi identity is verified before returning.
    """
    rs = build_root_system(as_type(t))
    sc = _StructureConstants(rs)
    pos = list(rs.positive_roots)
    basis_roots = pos + [neg(r) for r in pos]
    n = rs.rank
    nroots = len(basis_roots)
    dim = nroots + n
    idx = {r: k for k, r in enumerate(basis_roots)}
    labels = [f"e[{root_label(r)}]" for r in basis_roots] + [f"h{i + 1}" for i in range(n)]

    table: dict[tuple[int, int], dict[int, int]] = {}

    def put(i, j, k, c):
        if c:
            table.setdefault((i, j), {})[k] = c

    for i, r in enumerate(basis_roots):
        for j, s in enumerate(basis_roots):
            if r == neg(s):
                cv = rs.coroot(r) if is_positive(r) else tuple(-c for c in rs.coroot(s))
                for q, c in enumerate(cv):
                    put(i, j, nroots + q, c)
            else:
                rs_sum = sc._add(r, s)
                if rs_sum is not None:
                    put(i, j, idx[rs_sum], sc.N(r, s))
        for q in range(n):
            c = rs.pairing(r, rs.simple_roots[q])
            put(nroots + q, i, i, c)
            put(i, nroots + q, i, -c)
    _check_jacobi(table, dim)
    return tuple(labels), tuple(basis_roots), table


def _check_jacobi(table, dim: int) -> None:
    """Verify ad([x, y]) = [ad x, ad y] on all basis pairs (over Z)."""
    ads = []
    for i in range(dim):
        rows, cols, vals = [], [], []
        for j in range(dim):
            for k, c in table.get((i, j), {}).items():
                rows.append(k)
                cols.append(j)
                vals.append(c)
        ads.append(sp.csr_matrix((vals, (rows, cols)), shape=(dim, dim), dtype=np.int64))
    for i in range(dim):
        for j in range(i + 1, dim):
            lhs = ads[i] @ ads[j] - ads[j] @ ads[i]
            for k, c in table.get((i, j), {}).items():
                lhs = lhs - c * ads[k]
            if lhs.count_nonzero():
                raise DomainError("jacobi-failure", f"basis pair ({i}, {j})")


class LieAlgebraFp:
    """A finite-dimensional Lie algebra over F_p given by structure constants.

    Subclasses provide ``p_power``.  ``struct`` is a sparse matrix of shape
    (dim * dim, dim): row ``i * dim + j`` holds the coordinates of
    ``[b_i, b_j]``.
    """

    def __init__(self, p: int, labels, struct: sp.csr_matrix):
        self.p = p
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.struct = struct
        self._ad_stack = struct.reshape((self.dim, self.dim * self.dim)).tocsr()

    def _vec(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if x.shape != (self.dim,):
            raise DomainError("bad-dimension", f"expected length {self.dim}, got {x.shape}")
        return x % self.p

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def bracket(self, x, y) -> np.ndarray:
        x, y = self._vec(x), self._vec(y)
        xy = np.outer(x, y).ravel()
        return np.asarray(self.struct.T @ xy, dtype=np.int64) % self.p

    def ad(self, x) -> np.ndarray:
        """Matrix of ad(x) acting on column coordinate vectors."""
        x = self._vec(x)
        M = np.asarray(x @ self._ad_stack, dtype=np.int64).reshape(self.dim, self.dim)
        return M.T % self.p

    def ad_basis(self) -> np.ndarray:
        """All ad(b_i) stacked, shape (dim, dim, dim)."""
        return np.stack([self.ad(self.basis_vector(i)) for i in range(self.dim)])

    def structure_constants(self) -> np.ndarray:
        """Dense tensor C with [b_i, b_j] = sum_k C[i, j, k] b_k."""
        return (self.struct.toarray().reshape(self.dim, self.dim, self.dim) % self.p)

    def p_power(self, x) -> np.ndarray:
        raise NotImplementedError

    def span(self, vectors) -> Subspace:
        return Subspace(vectors, self.dim, self.p)

    def full(self) -> Subspace:
        return Subspace.full(self.dim, self.p)


def _sparse_struct(table, dim, p=None):
    rows, cols, vals = [], [], []
    for (i, j), out in table.items():
        for k, c in out.items():
            c = c % p if p else c
            if c:
                rows.append(i * dim + j)
                cols.append(k)
                vals.append(c)
    return sp.csr_matrix((vals, (rows, cols)), shape=(dim * dim, dim), dtype=np.int64)


def jacobson_sum(L: LieAlgebraFp, x, y, x_p, y_p) -> np.ndarray:
    """(x + y)^[p] from x, y and their p-th powers, by Jacobson's formula.

    ad(t x + y)^(p-1)(x) = sum_i i s_i(x, y) t^(i-1).
    """
    p = L.p
    x, y = L._vec(x), L._vec(y)
    poly = [x.copy()]  # coefficients of t^0, t^1, ...
    for _ in range(p - 1):
        new = [np.zeros(L.dim, dtype=np.int64) for _ in range(len(poly) + 1)]
        for d, v in enumerate(poly):
            if not v.any():
                continue
            new[d] = (new[d] + L.bracket(y, v)) % p
            new[d + 1] = (new[d + 1] + L.bracket(x, v)) % p
        poly = new
    out = (np.asarray(x_p) + np.asarray(y_p)) % p
    for i in range(1, p):
        coeff = poly[i - 1] if i - 1 < len(poly) else 0
        out = (out + coeff * pow(i, -1, p)) % p
    return out


class ModularLieAlgebra(LieAlgebraFp):
    """Chevalley-basis Lie algebra of a simple type reduced mod p."""

    def __init__(self, t, p: int):
        t = as_type(t)
        if p not in SUPPORTED_PRIMES:
            raise DomainError("unsupported-type", f"prime {p} not in {SUPPORTED_PRIMES}")
        labels, basis_roots, table = integral_structure(t)
        dim = len(labels)
        super().__init__(p, labels, _sparse_struct(table, dim, p))
        self.type = t
        self.root_system = build_root_system(t)
        self.basis_roots = basis_roots
        self.n_roots = len(basis_roots)
        self._root_index = {r: k for k, r in enumerate(basis_roots)}
        pt = np.zeros((dim, dim), dtype=np.int64)
        for q in range(t.rank):
            pt[self.n_roots + q, self.n_roots + q] = 1
        self.p_power_table = pt  # row i = b_i^[p]
        self.p_power_table.setflags(write=False)

    def __repr__(self):
        return f"ModularLieAlgebra({self.type}, p={self.p}, dim={self.dim})"

    def root_index(self, gamma) -> int:
        gamma = tuple(gamma)
        if gamma not in self._root_index:
            raise DomainError("not-a-root", f"{gamma} is not a root of {self.type}")
        return self._root_index[gamma]

    def e(self, gamma) -> np.ndarray:
        return self.basis_vector(self.root_index(gamma))

    def h(self, i: int) -> np.ndarray:
        """Simple coroot h_i (1-based)."""
        return self.basis_vector(self.n_roots + i - 1)

    def cartan_indices(self) -> list[int]:
        return list(range(self.n_roots, self.dim))

    def p_power(self, x) -> np.ndarray:
        x = self._vec(x)
        p = self.p
        acc = np.zeros(self.dim, dtype=np.int64)
        acc_p = np.zeros(self.dim, dtype=np.int64)
        for i in np.nonzero(x)[0]:
            c = int(x[i])
            term = c * self.basis_vector(i) % p
            term_p = pow(c, p, p) * self.p_power_table[i] % p
            if not acc.any():
                acc, acc_p = term, term_p
                continue
            acc_p = jacobson_sum(self, acc, term, acc_p, term_p)
            acc = (acc + term) % p
        return acc_p


@lru_cache(maxsize=None)
def build_lie_algebra(t, p: int) -> ModularLieAlgebra:
    return ModularLieAlgebra(as_type(t), p)


def bracket(L: LieAlgebraFp, x, y) -> np.ndarray:
    return L.bracket(x, y)


def p_power(L: LieAlgebraFp, x) -> np.ndarray:
    return L.p_power(x)


def root_space(L: ModularLieAlgebra, gamma) -> Subspace:
    return Subspace(L.e(gamma)[None, :], L.dim, L.p)


def reduced_parabolic_subalgebra(L: ModularLieAlgebra, factor_roots) -> Subspace:
    """Cartan + positive root spaces + negative root spaces of the Levi.

    ``factor_roots`` are the simple roots (1-based) outside the Levi.
    """
    factors = set(factor_roots)
    idx = list(L.cartan_indices())
    for k, r in enumerate(L.basis_roots):
        if is_positive(r) or not any(r[a - 1] for a in factors):
            idx.append(k)
    return Subspace.coordinate(sorted(idx), L.dim, L.p)


def parabolic_subalgebra(L: ModularLieAlgebra, spec) -> Subspace:
    """Lie algebra of a reduced parabolic given by a ParabolicSpec."""
    from .parabolic import KernelSpec

    if spec.exotic is not None or any(k != KernelSpec.trivial() for _, k in spec.factors):
        raise DomainError("not-reduced", "parabolic_subalgebra needs all kernels trivial")
    if spec.type != L.type:
        raise DomainError("bad-dimension", f"spec of type {spec.type} on algebra {L.type}")
    return reduced_parabolic_subalgebra(L, [a for a, _ in spec.factors])
