"""Root systems of the simple Dynkin types A-G.

Roots are integer tuples of coefficients in the simple-root basis, with
Bourbaki numbering: for B_n the last simple root is short, for C_n the
last one is long, for F_4 the roots alpha_1, alpha_2 are long and for G_2
the first simple root is short.  Simple roots are labelled 1..rank in every
public function (``support`` returns such labels); tuple positions are
0-based as usual.

Weights are given by their coordinates in the fundamental-weight basis,
i.e. by the integers <lambda, alpha_i^vee>.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError

Root = tuple[int, ...]

# classical ranks go past 8 so that hat types such as A_{2n-1} for C_8 exist
_RANK_BOUNDS = {"A": (1, 16), "B": (2, 16), "C": (2, 16), "D": (3, 16),
                "E": (6, 8), "F": (4, 4), "G": (2, 2)}


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        bounds = _RANK_BOUNDS.get(self.family)
        if bounds is None or not bounds[0] <= self.rank <= bounds[1]:
            raise DomainError("unsupported-type", f"{self.family}{self.rank}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise DomainError("unsupported-type", repr(text))
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"


def as_type(t) -> DynkinType:
    return t if isinstance(t, DynkinType) else DynkinType.parse(t)


def all_types(max_rank: int = 8):
    """Every supported type of rank <= max_rank, in a fixed order."""
    out = []
    for fam, (lo, hi) in _RANK_BOUNDS.items():
        for r in range(lo, min(hi, max_rank) + 1):
            out.append(DynkinType(fam, r))
    return out


def _gram(t: DynkinType) -> np.ndarray:
    """Integer Gram matrix (alpha_i, alpha_j) of the simple roots."""
    n, fam = t.rank, t.family
    g = np.zeros((n, n), dtype=np.int64)
    chain = list(range(n - 1))
    if fam == "A" or fam == "D" or fam == "E":
        np.fill_diagonal(g, 2)
        if fam == "A":
            edges = [(i, i + 1) for i in chain]
        elif fam == "D":
            edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        else:
            # Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
            edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        for i, j in edges:
            g[i, j] = g[j, i] = -1
    elif fam == "B":
        np.fill_diagonal(g, 4)
        g[n - 1, n - 1] = 2
        for i in chain:
            g[i, i + 1] = g[i + 1, i] = -2
    elif fam == "C":
        np.fill_diagonal(g, 2)
        g[n - 1, n - 1] = 4
        for i in chain:
            g[i, i + 1] = g[i + 1, i] = -1
        g[n - 2, n - 1] = g[n - 1, n - 2] = -2
    elif fam == "F":
        g[:] = [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    elif fam == "G":
        g[:] = [[2, -3], [-3, 6]]
    return g


@dataclass(frozen=True)
class RootSystem:
    type: DynkinType
    gram: np.ndarray = field(repr=False)
    cartan_matrix: np.ndarray = field(repr=False)
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    lengths: dict = field(repr=False)
    multiplicity_edge: int | None

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(neg(r) for r in self.positive_roots)

    @property
    def dimension(self) -> int:
        """Dimension of the (adjoint) group of this type."""
        return 2 * len(self.positive_roots) + self.rank

    def norm2(self, r: Root) -> int:
        v = np.asarray(r, dtype=np.int64)
        return int(v @ self.gram @ v)

    def pairing(self, a: Root, b: Root) -> int:
        """The Cartan integer <a, b^vee> = 2 (a, b) / (b, b)."""
        va, vb = np.asarray(a), np.asarray(b)
        return int(2 * (va @ self.gram @ vb) // (vb @ self.gram @ vb))

    def is_short(self, r: Root) -> bool:
        return self.lengths[abs_root(r)] == "short"

    def is_long(self, r: Root) -> bool:
        return not self.is_short(r)

    def is_root(self, r) -> bool:
        return tuple(r) in self._root_set

    @property
    def _root_set(self):
        return _root_set(self.type)

    def coroot(self, r: Root) -> tuple[int, ...]:
        """Coordinates of r^vee in the basis of simple coroots."""
        n2 = self.norm2(r)
        return tuple(int(c * self.gram[i, i] // n2) for i, c in enumerate(r))

    def reflect(self, i: int, r: Root) -> Root:
        """Simple reflection s_i (i 1-based) applied to r."""
        k = self.pairing(r, self.simple_roots[i - 1])
        return tuple(c - k * (j == i - 1) for j, c in enumerate(r))


def neg(r: Root) -> Root:
    return tuple(-c for c in r)


def abs_root(r: Root) -> Root:
    return r if sum(r) > 0 else neg(r)


def height(r: Root) -> int:
    return sum(r)


def is_positive(r: Root) -> bool:
    return sum(r) > 0


def support(r: Root) -> frozenset[int]:
    """Labels (1-based) of the simple roots occurring in r."""
    return frozenset(i + 1 for i, c in enumerate(r) if c)


def root_order_key(r: Root):
    """Total order on roots used for the Chevalley sign conventions."""
    return (height(r), tuple(r))


@lru_cache(maxsize=None)
def build_root_system(t) -> RootSystem:
    t = as_type(t)
    g = _gram(t)
    n = t.rank
    cartan = np.array([[2 * g[i, j] // g[i, i] for j in range(n)] for i in range(n)],
                      dtype=np.int64)
    simple = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    # closure of the simple roots under the simple reflections
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            v = np.asarray(r)
            for i in range(n):
                k = int(2 * (v @ g[:, i]) // g[i, i])
                s = tuple(int(c) for c in v - k * np.eye(n, dtype=np.int64)[i])
                if s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt

    pos = tuple(sorted((r for r in found if is_positive(r)), key=root_order_key))
    norms = {r: int(np.asarray(r) @ g @ np.asarray(r)) for r in pos}
    top = max(norms.values())
    if t.simply_laced:
        lengths = {r: "long" for r in pos}
    else:
        lengths = {r: "long" if norms[r] == top else "short" for r in pos}
    edge = {"B": 2, "C": 2, "F": 2, "G": 3}.get(t.family)
    if t.family in "BC" and n == 1:
        edge = None
    return RootSystem(t, g, cartan, simple, pos, lengths, edge)


@lru_cache(maxsize=None)
def _root_set(t: DynkinType) -> frozenset:
    rs = build_root_system(t)
    return frozenset(rs.roots)


def support_roots(rs: RootSystem, alpha: int) -> list[Root]:
    """Positive roots whose support contains the simple root alpha."""
    return [r for r in rs.positive_roots if r[alpha - 1]]


# ---------------------------------------------------------------- weights

def _check_weight(rs: RootSystem, lam) -> tuple:
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise DomainError("bad-dimension", f"weight of length {len(lam)} for {rs.type}")
    return lam


def is_dominant(t, lam, borel: str = "B") -> bool:
    """Dominance of lam (fundamental-weight coordinates).

    ``borel="B"`` asks for <lam, alpha^vee> >= 0 on all simple coroots;
    ``borel="B-"`` uses the opposite Borel, i.e. the same test for -lam.
    """
    rs = build_root_system(as_type(t))
    lam = _check_weight(rs, lam)
    if borel not in ("B", "B-"):
        raise ValueError(f"borel must be 'B' or 'B-', got {borel!r}")
    sign = 1 if borel == "B" else -1
    return all(sign * c >= 0 for c in lam)


def root_to_weight(rs: RootSystem, r: Root) -> tuple[int, ...]:
    """Fundamental-weight coordinates of a root (a row of the Cartan pairing)."""
    return tuple(rs.pairing(r, a) for a in rs.simple_roots)


def fundamental_weight(t, i: int) -> tuple[int, ...]:
    t = as_type(t)
    return tuple(int(j == i - 1) for j in range(t.rank))


def weyl_dim(t, lam) -> int:
    """Dimension of the Weyl module V(lam) for dominant lam."""
    rs = build_root_system(as_type(t))
    lam = _check_weight(rs, lam)
    if any(Fraction(c).denominator != 1 for c in lam) or not is_dominant(rs.type, lam):
        raise DomainError("not-dominant", f"{lam} is not dominant for {rs.type}")
    num = Fraction(1)
    for r in rs.positive_roots:
        cv = rs.coroot(r)
        a = sum(c * (l + 1) for c, l in zip(cv, lam))
        b = sum(cv)
        num *= Fraction(a, b)
    assert num.denominator == 1
    return int(num)


def root_label(r: Root) -> str:
    """Readable form such as '3a1+2a2' or '-a1'."""
    sign = "-" if sum(r) < 0 else ""
    parts = []
    for i, c in enumerate(abs_root(r)):
        if c:
            parts.append(f"{'' if c == 1 else c}a{i + 1}")
    body = "+".join(parts)
    return f"{sign}({body})" if sign and len(parts) > 1 else sign + body
