"""A walk through the reduced tensor product on D(S3)-modules.

Run with ``python3 demos/s3_reduced_center.py``.
"""

from redcenter.algebra import center_dimension, drinfeld_double
from redcenter.bundles import find_isomorphism, fusion_table, reduced_tensor, simples
from redcenter.oracle import q_report
from redcenter.zoo import default_zoo

zoo = default_zoo()
G = zoo.group("S3")

# Simple D(S3)-modules are equivariant bundles induced from a conjugacy class
# and an irrep of its centralizer.  There are as many as the center of D(S3) has dimensions.
S = simples(zoo, "S3")
print("simples:", [X.label for X in S])
print("center dimension of D(S3):", center_dimension(drinfeld_double(G)))

# The reduced product is fiberwise: (V (x)bar W)_g = V_g (x) W_g.
# Bundles with disjoint supports multiply to zero.
table = fusion_table(S, reduced_tensor)
print("\nreduced fusion rules (row x column -> nonzero multiplicities):")
for a, row in enumerate(table):
    for b, mult in enumerate(row):
        if any(mult):
            out = " + ".join(f"{m}{S[c].label}" if m > 1 else S[c].label for c, m in enumerate(mult) if m)
            print(f"  {S[a].label} . {S[b].label} = {out}")

# The same product arises as the image of a projector built from a string
# diagram: a regular loop around V (x) W, evaluated with exact matrices.
V, W = S[6], S[7]
report = q_report(V, W)
print("\nQ projector on", V.label, "x", W.label)
print("  idempotent:", report.idempotent, " equivariant:", report.equivariant)
print("  graded image dims:", report.graded_dims)
print("  fiberwise dims:   ", report.expected_dims)

# The reduced product is braided by the plain swap, so V.W ~ W.V.
print("\nV.W ~ W.V:", find_isomorphism(reduced_tensor(V, W), reduced_tensor(W, V)) is not None)
