"""Lie-algebra facts behind the proofs, checked by brute-force linear algebra over F_p."""

import numpy as np

from flagaut.isogeny import compose_very_special, lie_N_dimension
from flagaut.oracle import (center, exterior_square_action, normalizer, octonion_form,
                            orthogonal_lie_algebra, orthogonal_wedge_model, submodule_generated,
                            symplectic_lie_algebra)

# so_{2n+2} = Λ²k^{2n+2} at p = 2, with G = SO_{2n+1} the stabilizer of v0.
M = orthogonal_wedge_model(3)
L, N = M.algebra, M.lie_N()
Z = center(L)
print(f"Λ²k⁸: dim {L.dim}, centre {Z.dim}, Lie G {M.lie_G().dim}, Lie N {N.dim}")
print(f"  normalizer of Lie N: {normalizer(L, N).dim} in Λ²k⁸, "
      f"{normalizer(L, N + Z).dim - Z.dim} modulo the centre")

so7 = orthogonal_lie_algebra(octonion_form())
o7 = orthogonal_lie_algebra(octonion_form(), traceless=False)
print(f"so(q) on the pure octonions: dim {so7.dim}, centre {center(so7).dim}; "
      f"o(q): dim {o7.dim}, centre {center(o7).dim}")

for n in (2, 3):
    A, _ = exterior_square_action(symplectic_lie_algebra(n, 2))
    dims = sorted({submodule_generated(A, v).dim for v in np.eye(A.module_dim, dtype=np.int64)})
    print(f"Λ²k^{2 * n} under sp_{2 * n} (p=2): submodules generated by weight vectors have dims {dims}")

for t, p in (("B3", 2), ("C3", 2), ("G2", 3)):
    rec = compose_very_special(t, p)
    print(f"{t} p={p}: dim Lie N = {lie_N_dimension(t, p)}, pi_bar∘pi = F: {rec.ok}")
