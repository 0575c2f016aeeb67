"""A generated catalog of parabolic specs for property checks and the CLI.

The catalog covers every type of rank <= 4, the primes 2, 3, 5, every
nonempty set of factor roots and every assignment of kernels from the
chain up to 2G (T, N, 1G, 1N, 2G; the N-kernels only where a very special
isogeny exists), plus the exotic G2 specs at p = 2.
"""

from __future__ import annotations

from itertools import combinations, product

from .errors import DomainError
from .parabolic import ExoticFactor, KernelSpec, ParabolicSpec, has_very_special_isogeny
from .rootsys import all_types

PRIMES = (2, 3, 5)
MAX_POSITION = 4  # chain position of 2G


def kernel_choices(t, p: int, max_position: int = MAX_POSITION) -> list[KernelSpec]:
    vs = has_very_special_isogeny(t, p)
    ks = [KernelSpec.from_position(pos) for pos in range(max_position + 1)]
    return [k for k in ks if vs or k.kind != "N"]


def exotic_specs(max_m: int = 2) -> list[ParabolicSpec]:
    out = []
    a2_choices = [None] + kernel_choices("G2", 2)
    for which in ("Q1", "Q2"):
        for m in range(max_m + 1):
            for k in a2_choices:
                facs = () if k is None else ((2, k),)
                out.append(ParabolicSpec.make("G2", 2, facs, exotic=ExoticFactor(which, m)))
    return out


def generate_catalog(max_rank: int = 4, primes=PRIMES, max_position: int = MAX_POSITION,
                     include_exotic: bool = True) -> list[ParabolicSpec]:
    """Deterministic list of specs; duplicates are impossible by construction."""
    out = []
    for t in all_types(max_rank):
        for p in primes:
            ks = kernel_choices(t, p, max_position)
            for r in range(1, t.rank + 1):
                for J in combinations(range(1, t.rank + 1), r):
                    for kern in product(ks, repeat=r):
                        try:
                            out.append(ParabolicSpec.make(t, p, list(zip(J, kern))))
                        except DomainError:  # pragma: no cover - filtered above
                            continue
    if include_exotic:
        out.extend(exotic_specs())
    return out
