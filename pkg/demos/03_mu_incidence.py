"""Why the centre of Lie Ĝ does not integrate to an action on X.

For B_n and G2 at p = 2 the Lie algebra of Ĝ has a one-dimensional centre.
A subgroup H = mu_{2^(m+1)} with that Lie algebra acts on both factors of
X ⊂ G/P1 × G/P2; we test, over F_2[t]/(t^(2^(m+1)) - 1), whether it keeps
the incidence relation.
"""

from flagaut.oracle import WitnessScenario, mu_incidence_report

for case, n in (("bn-frob", 2), ("bn-frob", 3), ("g2-so7", 2), ("bn-veryspecial", 2)):
    for element in ("identity", "generator"):
        rep = mu_incidence_report(WitnessScenario(case, n=n, m=1), element)
        print(f"{case:<15} n={n} {element:<9} {rep.direction:<22} preserved: {rep.preserved}")
    print(f"    moved generators: {', '.join(rep.format_vectors(rep.moved))}")

print("""
bn-veryspecial: with the second factor read as the Lagrangian Grassmannian of
v0^⊥ / k v0, scaling the v0 coordinate is invisible and the incidence survives.
The literal base point span(e1..e_{n+1}) is not totally singular, and
WitnessScenario(..., base="literal") refuses it.""")
