"""The ring R = F_2[t]/(t^e - 1), e = 2^(m+1), and linear algebra over it.

R is local: with u = t - 1 it is F_2[u]/(u^e), a chain ring, so every
ideal is (u^k).  Elements are stored as integer bit masks of their
coefficients in the t-basis; valuations are read in the u-basis.

Submodule membership in R^n is decided two ways:

* ``brute``  — enumerate all coefficient tuples (only for |R|^k <= 2^16);
* ``howell`` — echelon form over the chain ring, pivoting on minimal
  u-valuation and adding the annihilator multiples u^(e-v) * row so that
  reduction is complete (a Howell form).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from ..errors import DomainError

BRUTE_LIMIT = 1 << 16


def _subset_mask(k: int) -> int:
    """Bits j with j ⊆ k: the binomial coefficients C(k, j) mod 2."""
    out, j = 0, k
    while True:
        out |= 1 << j
        if j == 0:
            return out
        j = (j - 1) & k


@dataclass(frozen=True)
class TruncatedRing:
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise DomainError("bad-scenario", "m must be >= 0")

    @property
    def p(self) -> int:
        return 2

    @property
    def e(self) -> int:
        return 2 ** (self.m + 1)

    @property
    def size(self) -> int:
        return 2 ** self.e

    @property
    def full(self) -> int:
        return (1 << self.e) - 1

    # elements
    zero = 0
    one = 1

    @property
    def t(self) -> int:
        return 0b10 if self.e > 1 else 1

    @property
    def s(self) -> int:
        """s = t^(2^m), an element of order 2."""
        return self.pow(self.t, 2 ** self.m)

    def elements(self):
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def neg(self, a: int) -> int:
        return a

    def mul(self, a: int, b: int) -> int:
        e, out = self.e, 0
        i = 0
        while a:
            if a & 1:
                out ^= ((b << i) | (b >> (e - i))) & self.full if i else b
            a >>= 1
            i += 1
        return out

    def pow(self, a: int, k: int) -> int:
        out = self.one
        while k:
            if k & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            k >>= 1
        return out

    def frobenius(self, a: int, k: int = 1) -> int:
        """a -> a^(2^k): t^i -> t^(i 2^k)."""
        out, i = 0, 0
        while a:
            if a & 1:
                out ^= 1 << ((i * 2 ** k) % self.e)
            a >>= 1
            i += 1
        return out

    # u-adic structure
    @cached_property
    def _conv(self) -> list[int]:
        return [_subset_mask(k) for k in range(self.e)]

    def to_u(self, a: int) -> int:
        """Coefficient mask in the basis u^j, u = t + 1 (the map is an involution)."""
        out, i = 0, 0
        while a:
            if a & 1:
                out ^= self._conv[i]
            a >>= 1
            i += 1
        return out

    from_u = to_u

    def valuation(self, a: int) -> int:
        """u-adic valuation; e for zero."""
        if a == 0:
            return self.e
        ua = self.to_u(a)
        return (ua & -ua).bit_length() - 1

    def is_unit(self, a: int) -> bool:
        return self.valuation(a) == 0

    def inverse(self, a: int) -> int:
        if not self.is_unit(a):
            raise ZeroDivisionError("not a unit")
        # the unit group has order 2^(e-1)
        return self.pow(a, 2 ** (self.e - 1) - 1)

    def u_pow(self, k: int) -> int:
        return self.from_u(1 << k) if k < self.e else 0

    def divide(self, a: int, b: int) -> int:
        """Some q with q b = a; requires valuation(a) >= valuation(b)."""
        vb = self.valuation(b)
        if self.valuation(a) < vb:
            raise ZeroDivisionError("not divisible")
        if a == 0:
            return 0
        w = self.from_u(self.to_u(b) >> vb)          # b = u^vb * w, w a unit
        a1 = self.from_u(self.to_u(a) >> vb)         # a = u^vb * a1
        q = self.mul(a1, self.inverse(w))
        assert self.mul(q, b) == a
        return q


Vector = tuple  # tuple of ring elements


def scale(R: TruncatedRing, c: int, v: Vector) -> Vector:
    return tuple(R.mul(c, x) for x in v)


def vadd(R: TruncatedRing, v: Vector, w: Vector) -> Vector:
    return tuple(a ^ b for a, b in zip(v, w))


def in_span_brute(R: TruncatedRing, gens: list[Vector], v: Vector) -> bool:
    if R.size ** len(gens) > BRUTE_LIMIT:
        raise DomainError("too-large", "brute-force enumeration exceeds 2^16 combinations")
    n = len(v)
    for coeffs in product(R.elements(), repeat=len(gens)):
        acc = (0,) * n
        for c, g in zip(coeffs, gens):
            if c:
                acc = vadd(R, acc, scale(R, c, g))
        if acc == tuple(v):
            return True
    return False


def howell_form(R: TruncatedRing, gens: list[Vector]) -> list[tuple[int, Vector]]:
    """Echelon rows (pivot column, row) spanning the same submodule."""
    rows = [tuple(g) for g in gens if any(g)]
    if not rows:
        return []
    n = len(rows[0])
    echelon = []
    for col in range(n):
        live = [r for r in rows if r[col]]
        if not live:
            continue
        piv = min(live, key=lambda r: R.valuation(r[col]))
        rest = []
        for r in rows:
            if r is piv:
                continue
            if r[col]:
                q = R.divide(r[col], piv[col])
                r = vadd(R, r, scale(R, q, piv))
            if any(r):
                rest.append(r)
        # multiples of the pivot row that vanish in this column
        v = R.valuation(piv[col])
        ann = scale(R, R.u_pow(R.e - v), piv)
        if any(ann):
            rest.append(ann)
        echelon.append((col, piv))
        rows = rest
    return echelon


def in_span_howell(R: TruncatedRing, gens: list[Vector], v: Vector) -> bool:
    v = tuple(v)
    for col, row in howell_form(R, gens):
        if v[col]:
            if R.valuation(v[col]) < R.valuation(row[col]):
                return False
            v = vadd(R, v, scale(R, R.divide(v[col], row[col]), row))
    return not any(v)


def in_span(R: TruncatedRing, gens: list[Vector], v: Vector, method: str = "auto") -> bool:
    """Membership of v in the R-submodule generated by gens.

    ``auto`` runs the Howell route and, when affordable, confirms it by
    enumeration; a disagreement raises AssertionError.
    """
    if method == "brute":
        return in_span_brute(R, gens, v)
    if method == "howell":
        return in_span_howell(R, gens, v)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    h = in_span_howell(R, gens, v)
    if R.size ** len(gens) <= BRUTE_LIMIT:
        b = in_span_brute(R, gens, v)
        if b != h:
            raise AssertionError("Howell and brute-force membership disagree")
    return h


def submodule_contains(R: TruncatedRing, big: list[Vector], small: list[Vector], method: str = "auto") -> bool:
    return all(in_span(R, big, v, method) for v in small)
