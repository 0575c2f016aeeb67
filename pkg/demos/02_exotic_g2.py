"""The two exotic parabolics of G2 in characteristic two.

Above Lie P^{a1} there are exactly two proper T-stable restricted
subalgebras of Lie G2; they give parabolic subgroup schemes Q1, Q2 whose
reduced part is P^{a1} but which do not come from any isogeny.
"""

from flagaut import aut_group, parse_spec
from flagaut.autgroup import picard_rank_one_variety_label, q2_tangent_dimension
from flagaut.oracle import enumerate_exotic_subalgebras
from flagaut.parabolic import phi_from_spec
from flagaut.rootsys import root_label

res = enumerate_exotic_subalgebras()
print(f"{res.candidates} candidate subspaces; closed under bracket and 2-power:")
for line in res.describe():
    print("  " + line)
print(f"  ({res.caveat})\n")

for name in ("Q1", "Q2"):
    spec = parse_spec(f"G2:p2:{name}")
    phi = {root_label(r): v for r, v in phi_from_spec(spec).items()}
    d = aut_group(spec)
    print(f"{name}: phi = {phi}")
    print(f"    X = {picard_rank_one_variety_label(spec)}, Aut⁰ = {d.describe()} (dim {d.lie_dim})")

print(f"\nFor Q2: dim Lie Sp6 - dim V(w1) = {q2_tangent_dimension()}")

# Rank two: Y_m = Q1 ∩ mG P^{a2} picks up an infinitesimal PGL6 factor,
# Z_m = Q2 ∩ mG P^{a2} does not.
print()
for m in (1, 2):
    for q in ("Q1", "Q2"):
        spec = parse_spec(f"G2:p2:{q},a2:G{m}")
        print(f"  {str(spec):<18} Aut⁰ = {aut_group(spec).describe()}")
