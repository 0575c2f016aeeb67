"""Dense exact linear algebra over the prime field F_p.

Matrices are numpy int64 arrays with entries reduced to 0..p-1.  A
:class:`Subspace` always stores its basis in reduced row-echelon form, which
makes equality of subspaces a plain array comparison.
"""

from __future__ import annotations

import numpy as np


def reduce(a, p: int) -> np.ndarray:
    return np.mod(np.asarray(a, dtype=np.int64), p)


def rref(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form of M over F_p, zero rows dropped."""
    A = reduce(M, p).copy()
    if A.ndim == 1:
        A = A[None, :]
    m, n = A.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(A[row:, col])[0]
        if nz.size == 0:
            continue
        r = row + nz[0]
        if r != row:
            A[[row, r]] = A[[r, row]]
        A[row] = (A[row] * pow(int(A[row, col]), -1, p)) % p
        others = np.nonzero(A[:, col])[0]
        others = others[others != row]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, col], A[row])) % p
        pivots.append(col)
        row += 1
    return A[:row], pivots


def rank(M, p: int) -> int:
    return len(rref(M, p)[1])


def nullspace(M, p: int) -> np.ndarray:
    """Basis (as rows) of {x : M x = 0}."""
    M = reduce(M, p)
    if M.ndim == 1:
        M = M[None, :]
    n = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(M, p)
    free = [j for j in range(n) if j not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(piv):
            basis[k, pc] = (-R[i, f]) % p
    return basis


def solve(A, b, p: int):
    """One solution x of A x = b, or None."""
    A, b = reduce(A, p), reduce(b, p)
    aug = np.concatenate([A, b[:, None]], axis=1)
    R, piv = rref(aug, p)
    n = A.shape[1]
    if n in piv:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = R[i, n]
    return x


class Subspace:
    """A subspace of F_p^n with canonical (RREF) basis matrix."""

    __slots__ = ("p", "ambient_dim", "basis", "pivots")

    def __init__(self, vectors, ambient_dim: int, p: int):
        self.p = p
        self.ambient_dim = ambient_dim
        V = reduce(vectors, p).reshape(-1, ambient_dim) if np.size(vectors) else \
            np.zeros((0, ambient_dim), dtype=np.int64)
        if V.shape[0]:
            self.basis, self.pivots = rref(V, p)
        else:
            self.basis, self.pivots = V, []
        self.basis.setflags(write=False)

    @classmethod
    def zero(cls, n: int, p: int) -> "Subspace":
        return cls(np.zeros((0, n), dtype=np.int64), n, p)

    @classmethod
    def full(cls, n: int, p: int) -> "Subspace":
        return cls(np.eye(n, dtype=np.int64), n, p)

    @classmethod
    def coordinate(cls, indices, n: int, p: int) -> "Subspace":
        V = np.zeros((len(indices), n), dtype=np.int64)
        for k, i in enumerate(indices):
            V[k, i] = 1
        return cls(V, n, p)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.p == other.p
                and self.ambient_dim == other.ambient_dim
                and self.basis.shape == other.basis.shape
                and bool(np.array_equal(self.basis, other.basis)))

    def __hash__(self):
        return hash((self.p, self.ambient_dim, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, p={self.p})"

    def contains(self, v) -> bool:
        v = reduce(v, self.p)
        if v.ndim == 1:
            v = v[None, :]
        return rank(np.concatenate([self.basis, v]), self.p) == self.dim

    def __contains__(self, v):
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        return other.contains(self.basis) if self.dim else True

    def __le__(self, other):
        return self.issubspace(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(np.concatenate([self.basis, other.basis]), self.ambient_dim, self.p)

    def extended(self, vectors) -> "Subspace":
        vectors = reduce(vectors, self.p).reshape(-1, self.ambient_dim)
        return Subspace(np.concatenate([self.basis, vectors]), self.ambient_dim, self.p)

    def annihilator(self) -> np.ndarray:
        """Rows a with a . s = 0 for every s in the subspace."""
        if self.dim == 0:
            return np.eye(self.ambient_dim, dtype=np.int64)
        return nullspace(self.basis, self.p)

    def intersect(self, other: "Subspace") -> "Subspace":
        ann = np.concatenate([self.annihilator(), other.annihilator()])
        return Subspace(nullspace(ann, self.p), self.ambient_dim, self.p)

    def coordinates(self, v) -> np.ndarray:
        """Coefficients of v in the stored basis (v must lie in the span)."""
        v = reduce(v, self.p)
        return v[self.pivots]


def inverse(M, p: int) -> np.ndarray:
    """Inverse of a square matrix over F_p (ValueError if singular)."""
    M = reduce(M, p)
    n = M.shape[0]
    R, piv = rref(np.concatenate([M, np.eye(n, dtype=np.int64)], axis=1), p)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ValueError("matrix is singular mod p")
    return R[:n, n:].copy()


class CoordinateMap:
    """Coordinates with respect to a fixed (not necessarily echelon) basis.

    ``basis`` has independent rows; ``coords(v)`` returns c with
    ``c @ basis == v`` and raises ValueError if v is outside the span.
    """

    def __init__(self, basis, p: int):
        self.p = p
        self.basis = reduce(basis, p)
        _, piv = rref(self.basis, p)
        if len(piv) != self.basis.shape[0]:
            raise ValueError("basis rows are dependent")
        self.cols = piv
        self._inv = inverse(self.basis[:, piv], p)

    def coords(self, v) -> np.ndarray:
        v = reduce(v, self.p)
        c = (v[..., self.cols] @ self._inv) % self.p
        if not np.array_equal((c @ self.basis) % self.p, v):
            raise ValueError("vector outside the span")
        return c
