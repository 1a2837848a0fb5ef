"""The matrix model of A (x) A for the Fibonacci (golden) label set.

Simple objects X_i^j multiply like matrix units; the reduced product is not
symmetric, and the left and right dimensions are d_j/d_i and d_i/d_j.
"""

from redcenter.matvec import (
    MatVecObject,
    cyclic_labels,
    dim_matrices,
    golden_labels,
    red_product,
    um_action,
)

L = golden_labels()
phi = L.dims[1]
print("d_tau =", phi, " (approx", float(phi.to_complex().real), ")")
print("phi^2 == phi + 1:", phi * phi == phi + 1)

left, right = dim_matrices(L)
for i in range(2):
    for j in range(2):
        print(f"X_{L.labels[i]}^{L.labels[j]}: left {left[i][j]}, right {right[i][j]}")

A = MatVecObject.simple(L, 0, 1)
B = MatVecObject.simple(L, 1, 1)
print("\nX_1^tau . X_tau^tau =", red_product(A, B))
print("X_tau^tau . X_1^tau =", red_product(B, A))

Z3 = cyclic_labels(3)
X = MatVecObject.simple(Z3, 0, 1)
print("\nZ/3 labels, X_0^1 under the swap of factors:", um_action(X))
