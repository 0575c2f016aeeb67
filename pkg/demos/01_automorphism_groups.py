"""Automorphism groups of flag varieties, from Demazure's table to non-reduced stabilizers.

Run:  python demos/01_automorphism_groups.py
"""

from flagaut import aut_group, demazure_aut, parse_spec
from flagaut.autgroup import picard_rank_one_variety_label
from flagaut.parabolic import canonical_form, phi_from_spec
from flagaut.rootsys import all_types, root_label

# --- 1. Reduced stabilizers, Picard rank one --------------------------------
# Aut⁰(G/P^α) is G itself, except for three families of pairs (G, α).
print("Exceptional pairs of rank <= 4:")
for t in all_types(4):
    for a in range(1, t.rank + 1):
        info = demazure_aut(t, a)
        if info:
            print(f"  ({t}, a{a}) -> Aut = {info.hat_name}")

# --- 2. A non-reduced parabolic and its phi-function -------------------------
# P = P^{a1} ∩ 1G·P^{a2} in Sp6 at p = 3: the first Frobenius kernel is glued
# onto the a2-factor.  phi records the height of P on each negative root group.
spec = parse_spec("C3:p3:a1:T,a2:G1")
print(f"\nphi of {spec}:")
for r, v in phi_from_spec(spec).items():
    print(f"  {root_label(r):>12}: {v}")

cf = canonical_form(spec)
print(f"canonical form: J = {sorted(cf.J)}, xi = {cf.xi}, J' = {sorted(cf.Jprime)}")

# The smooth contraction goes to G/P^{a1} = P⁵, whose automorphism group PGL6
# is bigger than PSp6; its first Frobenius kernel survives on X.
d = aut_group(spec)
print(f"Aut⁰(X) = {d.describe()}, dim H⁰(X, T_X) = {d.lie_dim}")
print(f"target of the smooth contraction: {picard_rank_one_variety_label(parse_spec('C3:p3:a1:T'))}")

# --- 3. More examples --------------------------------------------------------
print()
for text in ["C3:p3:a1:T,a2:G2", "B3:p2:a3:T,a1:N1", "B3:p2:a3:T,a1:N0",
             "C3:p2:a1:N0", "G2:p3:a2:T,a1:G1", "A4:p2:a1:T,a2:G1,a4:G2"]:
    d = aut_group(parse_spec(text))
    print(f"  {text:<28} Aut⁰ = {d.describe():<12} dim {d.lie_dim}")
