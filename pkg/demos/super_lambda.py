"""Supergroups: the z-twisted fiberwise product and the parity regrading Lambda.

On Z/4 with z = 2, odd vectors in the fiber over g pair with odd vectors over
g z and land over g.  Regrading every bundle by Lambda turns this twisted
product back into the plain fiberwise one.
"""

import random

from redcenter.bundles import (
    lambda_comparison,
    random_pair,
    reduced_tensor,
    reduced_tensor_z,
    simples,
)
from redcenter.oracle import braiding_sign_check, q_report
from redcenter.zoo import default_zoo

zoo = default_zoo()
for name in ["Z4", "Q8"]:
    G = zoo.group(name)
    S = simples(zoo, name)
    print(f"{name}: order {G.order}, z = {G.z}, {len(S)} simples")
    rng = random.Random(3)
    for _ in range(3):
        V, W = random_pair(S, rng)
        X = reduced_tensor_z(V, W)
        odd = sum(1 for s, t, _ in X.pieces if s and t)
        print(f"  {V.label} x {W.label}:")
        print(f"    twisted product dim {X.dim} (plain {reduced_tensor(V, W).dim}), odd x odd pieces {odd}")
        print(f"    super Q projector matches: {q_report(V, W, super_=True).ok}")
        print(f"    Lambda comparison found: {lambda_comparison(V, W) is not None}")
        signs = braiding_sign_check(V, W)
        print(f"    braiding: -1 exactly on odd x odd: {signs['sign -1 on odd pieces']}")
