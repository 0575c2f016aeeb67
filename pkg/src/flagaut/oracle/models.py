"""Explicit matrix models of the classical algebras used in the lemmas.

* :func:`orthogonal_wedge_model` — Lie SO_{2n+2} = Λ²k^{2n+2} at p = 2 for
  the quadratic form x0² + x0 x_{2n+1} + x_{2n+1}² + Σ_{i=1}^{n} x_i x_{2n+1-i},
  with v0 = e0 + e_{2n+1}; the stabilizer of k v0 is a copy of Lie SO_{2n+1}.
* :func:`orthogonal_lie_algebra` — Lie SO(q) (or Lie O(q)) as matrices, for
  odd-dimensional forms whose polar form has a one-dimensional radical.
* :func:`symplectic_lie_algebra` and :func:`exterior_square_action` — Lie
  Sp_{2n} and its action on Λ²k^{2n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np
import scipy.sparse as sp

from .. import gfp
from ..chevalley import LieAlgebraFp
from ..errors import DomainError
from ..gfp import CoordinateMap, Subspace


class MatrixLieAlgebra(LieAlgebraFp):
    """A Lie subalgebra of gl_N(F_p) given by basis matrices.

    The bracket is the commutator and the p-operation is the matrix p-th
    power; both are checked to stay inside the span on construction.
    """

    def __init__(self, basis_matrices, p: int, labels=None):
        mats = gfp.reduce(np.asarray(basis_matrices), p)
        k, N, _ = mats.shape
        self.N = N
        self.matrices = mats
        self._coords = CoordinateMap(mats.reshape(k, N * N), p)
        labels = labels or [f"b{i}" for i in range(k)]
        rows, cols, vals = [], [], []
        for i in range(k):
            for j in range(k):
                c = self._coords_of((mats[i] @ mats[j] - mats[j] @ mats[i]) % p, "bracket")
                for l in np.nonzero(c)[0]:
                    rows.append(i * k + j)
                    cols.append(l)
                    vals.append(int(c[l]))
        struct = sp.csr_matrix((vals, (rows, cols)), shape=(k * k, k), dtype=np.int64)
        super().__init__(p, labels, struct)
        self.p_power_table = np.stack([self._coords_of(self._mpow(m), "p-power") for m in mats])

    def _mpow(self, M):
        out = np.eye(self.N, dtype=np.int64)
        for _ in range(self.p):
            out = (out @ M) % self.p
        return out

    def _coords_of(self, M, what: str) -> np.ndarray:
        try:
            return self._coords.coords(M.reshape(-1))
        except ValueError:
            raise DomainError("not-closed", f"{what} leaves the span of the basis matrices") from None

    def matrix(self, x) -> np.ndarray:
        return np.tensordot(self._vec(x), self.matrices, axes=1) % self.p

    def coords(self, M) -> np.ndarray:
        return self._coords_of(gfp.reduce(M, self.p), "matrix")

    def p_power(self, x) -> np.ndarray:
        return self.coords(self._mpow(self.matrix(x)))

    def natural_action(self):
        from .closure import LinearAction
        return LinearAction(self, self.matrices)


def _subalgebra_from_conditions(mats: np.ndarray, p: int, conditions) -> np.ndarray:
    """Basis matrices of {X in gl_N : conditions(X) = 0}, conditions linear."""
    k = mats.shape[0]
    A = np.stack([conditions(mats[i]) for i in range(k)], axis=1)
    null = gfp.nullspace(A, p)
    return np.tensordot(null, mats, axes=1) % p


def _elementary(N: int) -> np.ndarray:
    E = np.zeros((N * N, N, N), dtype=np.int64)
    for a in range(N):
        for b in range(N):
            E[a * N + b, a, b] = 1
    return E


# ------------------------------------------------------- quadratic forms

@dataclass(frozen=True)
class QuadraticForm:
    """q(x) = sum_i diag_i x_i^2 + sum_{i<j} cross[i, j] x_i x_j over F_2."""

    diag: tuple
    cross: tuple  # ((i, j), ...) pairs with coefficient 1

    @property
    def dim(self) -> int:
        return len(self.diag)

    def __call__(self, x) -> int:
        x = np.asarray(x) % 2
        val = sum(d * x[i] * x[i] for i, d in enumerate(self.diag))
        val += sum(x[i] * x[j] for i, j in self.cross)
        return int(val % 2)

    def polar(self) -> np.ndarray:
        B = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i, j in self.cross:
            B[i, j] = B[j, i] = 1
        return B

    def radical(self) -> Subspace:
        return Subspace(gfp.nullspace(self.polar(), 2), self.dim, 2)


def even_orthogonal_form(n: int) -> QuadraticForm:
    """x0² + x0 x_{2n+1} + x_{2n+1}² + Σ_{i=1}^{n} x_i x_{2n+1-i} on k^{2n+2}."""
    N = 2 * n + 2
    diag = [0] * N
    diag[0] = diag[N - 1] = 1
    cross = [(0, N - 1)] + [(i, N - 1 - i) for i in range(1, n + 1)]
    return QuadraticForm(tuple(diag), tuple(cross))


def odd_form(n: int) -> QuadraticForm:
    """y0² + Σ_{i=1}^{n} y_i y_{2n+1-i} on k^{2n+1} (radical k e0)."""
    N = 2 * n + 1
    diag = [0] * N
    diag[0] = 1
    cross = [(i, N - i) for i in range(1, n + 1)]
    return QuadraticForm(tuple(diag), tuple(cross))


def octonion_form() -> QuadraticForm:
    """x3² + x2 x4 + x1 x5 + x0 x6 on the 7-dimensional pure octonions."""
    return QuadraticForm((0, 0, 0, 1, 0, 0, 0), ((2, 4), (1, 5), (0, 6)))


def wedge_matrix(B: np.ndarray, u, v, p: int = 2) -> np.ndarray:
    """u∧v acting by w -> b(v, w) u - b(u, w) v."""
    u, v = np.asarray(u), np.asarray(v)
    return (np.outer(u, B @ v) - np.outer(v, B @ u)) % p


# ----------------------------------------------------- the Λ² model of so

@dataclass
class OrthogonalWedgeModel:
    n: int
    form: QuadraticForm
    algebra: MatrixLieAlgebra
    pairs: list  # (i, j) for the basis element e_i∧e_j
    v0: np.ndarray

    def wedge(self, u, v) -> np.ndarray:
        """Coordinates of u∧v in the algebra."""
        return self.algebra.coords(wedge_matrix(self.form.polar(), u, v))

    def e(self, i: int) -> np.ndarray:
        x = np.zeros(2 * self.n + 2, dtype=np.int64)
        x[i] = 1
        return x

    def lie_G(self) -> Subspace:
        """Lie SO_{2n+1}: the matrices killing v0, of dimension n(2n+1)."""
        L = self.algebra
        A = np.stack([(L.matrices[k] @ self.v0) % 2 for k in range(L.dim)], axis=1)
        return Subspace(gfp.nullspace(A, 2), L.dim, 2)

    def line_stabilizer(self) -> Subspace:
        """Stabilizer of the line k v0: Lie G plus the scalars."""
        L = self.algebra
        N = 2 * self.n + 2
        # X v0 ∈ k v0  <=>  (X v0)_j = 0 for 1 <= j <= 2n and (X v0)_0 = (X v0)_{N-1}
        rows = []
        for k in range(L.dim):
            w = (L.matrices[k] @ self.v0) % 2
            rows.append([w[j] for j in range(1, N - 1)] + [(w[0] + w[N - 1]) % 2])
        return Subspace(gfp.nullspace(np.array(rows).T, 2), L.dim, 2)

    def lie_N(self) -> Subspace:
        return self.algebra.span([self.wedge(self.v0, self.e(j)) for j in range(1, 2 * self.n + 1)])

    def e0_wedge_last(self) -> np.ndarray:
        return self.wedge(self.e(0), self.e(2 * self.n + 1))


def orthogonal_wedge_model(n: int) -> OrthogonalWedgeModel:
    if n < 1:
        raise DomainError("bad-dimension", "n must be >= 1")
    form = even_orthogonal_form(n)
    B = form.polar()
    N = 2 * n + 2
    pairs = list(combinations(range(N), 2))
    I = np.eye(N, dtype=np.int64)
    mats = np.stack([wedge_matrix(B, I[i], I[j]) for i, j in pairs])
    L = MatrixLieAlgebra(mats, 2, labels=[f"e{i}^e{j}" for i, j in pairs])
    v0 = I[0] + I[N - 1]
    return OrthogonalWedgeModel(n, form, L, pairs, v0)


def orthogonal_lie_algebra(form: QuadraticForm, traceless: bool = True) -> MatrixLieAlgebra:
    """Lie O(q) = {X : b(v, X v) = 0 for all v}, optionally intersected with sl.

    For odd dimension at p = 2, Lie O(q) = Lie SO(q) ⊕ k·Id and Lie SO(q) is
    the traceless part.
    """
    N = form.dim
    B = form.polar()

    def cond(X):
        BX = (B @ X) % 2
        # B X alternating: symmetric with zero diagonal
        out = [BX[i, i] for i in range(N)] + [(BX[i, j] + BX[j, i]) % 2
                                              for i in range(N) for j in range(i + 1, N)]
        if traceless:
            out.append(int(np.trace(X)) % 2)
        return np.array(out)

    mats = _subalgebra_from_conditions(_elementary(N), 2, cond)
    return MatrixLieAlgebra(mats, 2)


# ------------------------------------------------------------- symplectic

def symplectic_form(n: int) -> np.ndarray:
    """Alternating form with ω(e_i, e_{2n+1-i}) = 1 on k^{2n} (basis e_1..e_{2n})."""
    N = 2 * n
    J = np.zeros((N, N), dtype=np.int64)
    for i in range(n):
        J[i, N - 1 - i] = 1
        J[N - 1 - i, i] = -1
    return J


def symplectic_lie_algebra(n: int, p: int = 2) -> MatrixLieAlgebra:
    """Lie Sp_{2n} = {X : X^T J + J X = 0}."""
    J = symplectic_form(n)
    N = 2 * n

    def cond(X):
        return ((X.T @ J + J @ X) % p).reshape(-1)

    mats = _subalgebra_from_conditions(_elementary(N), p, cond)
    return MatrixLieAlgebra(mats, p)


def exterior_square_action(L: MatrixLieAlgebra):
    """Action of a matrix Lie algebra on Λ²k^N, basis e_i∧e_j (i < j)."""
    from .closure import LinearAction

    N, p = L.N, L.p
    pairs = list(combinations(range(N), 2))
    idx = {pr: k for k, pr in enumerate(pairs)}

    def wedge_coords(u, v):
        out = np.zeros(len(pairs), dtype=np.int64)
        for a in range(N):
            for b in range(N):
                c = u[a] * v[b]
                if c and a != b:
                    if a < b:
                        out[idx[(a, b)]] += c
                    else:
                        out[idx[(b, a)]] -= c
        return out % p

    I = np.eye(N, dtype=np.int64)
    mats = []
    for X in L.matrices:
        M = np.zeros((len(pairs), len(pairs)), dtype=np.int64)
        for k, (i, j) in enumerate(pairs):
            M[:, k] = (wedge_coords(X @ I[i], I[j]) + wedge_coords(I[i], X @ I[j])) % p
        mats.append(M)
    return LinearAction(L, np.stack(mats)), pairs
