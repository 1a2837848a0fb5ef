"""D(G)-modules as G-equivariant vector bundles over G.

A bundle has a basis sorted by fiber: the first ``fiber_dims[0]`` basis
vectors span V_0, the next ``fiber_dims[1]`` span V_1, and so on.  Each
group element h acts by a full matrix carrying V_g into V_{hgh^-1}.  The
Drinfeld double element g delta_h acts as action(g) times the projection
onto V_h.

Products are realised as explicit subspaces of the plain tensor product of
the underlying spaces.  Every product bundle remembers that inclusion as
``embedding`` (columns in Kronecker coordinates of V (x) W), so two
constructions of "the same" object can be compared by their subspaces.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraMap
from .group import FiniteGroup, ZMissing, require_z
from .linalg import Embedding, Matrix, block_diag, same_column_space
from .rep import GModule, GroupMismatch, commutant, intertwiner_space

HALF = Fraction(1, 2)


class NotABundle(ValueError):
    pass


class NotNonzero(ValueError):
    pass


class EquivariantBundle:
    def __init__(self, group: FiniteGroup, fiber_dims, action, embedding=None, label=None,
                 pieces=None, check=True):
        self.group = group
        self.fiber_dims = tuple(int(d) for d in fiber_dims)
        if len(self.fiber_dims) != group.order:
            raise NotABundle("need one fiber dimension per group element")
        self.dim = sum(self.fiber_dims)
        offsets = [0]
        for d in self.fiber_dims:
            offsets.append(offsets[-1] + d)
        self.offsets = tuple(offsets)
        self.grading = tuple(g for g in group.elements for _ in range(self.fiber_dims[g]))
        self.action = list(action)
        self.embedding = embedding
        self.label = label
        # optional per-basis-vector bookkeeping of how a product was assembled
        self.pieces = pieces
        self._parity = {}
        if check:
            self.validate()

    # ------------------------------------------------------------------
    def validate(self):
        G = self.group
        if len(self.action) != G.order:
            raise NotABundle("need one action matrix per group element")
        for h, A in enumerate(self.action):
            if A.shape != (self.dim, self.dim):
                raise NotABundle(f"action of {h} has shape {A.shape}")
            for i, row in enumerate(A.rows):
                for j in row:
                    if self.grading[i] != G.conj(h, self.grading[j]):
                        raise NotABundle(f"action of {h} does not carry fiber {self.grading[j]} "
                                         f"into fiber {G.conj(h, self.grading[j])}")
        if not self.action[G.identity].is_identity():
            raise NotABundle("identity does not act trivially")
        for s in G.generators:
            S = self.action[s]
            for g in G.elements:
                if self.action[G.m(g, s)] != self.action[g] @ S:
                    raise NotABundle(f"action({g}*{s}) != action({g}) action({s})")
        if G.has_z:
            Z = self.action[G.z_or_e]
            if Z @ Z != Matrix.identity(self.dim):
                raise NotABundle("z does not act as an involution")

    def __repr__(self):
        return f"<Bundle {self.label or ''} dims={self.fiber_dims}>"

    def __eq__(self, other):
        if not isinstance(other, EquivariantBundle):
            return NotImplemented
        return (self.group is other.group and self.fiber_dims == other.fiber_dims
                and self.action == other.action)

    __hash__ = None

    # ------------------------------------------------------------------
    def fiber(self, g):
        return range(self.offsets[g], self.offsets[g + 1])

    def support(self):
        return [g for g in self.group.elements if self.fiber_dims[g]]

    def projector(self, g) -> Matrix:
        rows = [dict() for _ in range(self.dim)]
        for i in self.fiber(g):
            rows[i][i] = Fraction(1)
        return Matrix(self.dim, self.dim, rows)

    def act(self, x: dict) -> Matrix:
        """Matrix of a D(G) element given as {g*n + h: coeff}."""
        n = self.group.order
        out = Matrix.zeros(self.dim, self.dim)
        for idx, c in x.items():
            g, h = divmod(idx, n)
            out = out + (self.action[g] @ self.projector(h)) * c
        return out

    def module(self) -> GModule:
        """Forget the grading."""
        return GModule(self.group, self.action, label=self.label, check=False)

    def parity_projector(self, sigma) -> Matrix:
        """e^sigma = (1 + (-1)^sigma z)/2 acting on the total space."""
        Z = self.action[self.group.z_or_e]
        I = Matrix.identity(self.dim)
        return (I + Z) * HALF if sigma % 2 == 0 else (I - Z) * HALF

    def parity_basis(self, g, sigma) -> Matrix:
        """Columns spanning V_g^sigma, in the coordinates of V."""
        key = (g, sigma % 2)
        if key not in self._parity:
            P = self.parity_projector(sigma) @ self.projector(g)
            self._parity[key] = P.column_space()
        return self._parity[key]

    def parity_dims(self):
        return {(g, s): self.parity_basis(g, s).ncols for g in self.group.elements for s in (0, 1)}

    def is_even(self):
        return all(self.parity_basis(g, 1).ncols == 0 for g in self.group.elements)

    def to_json(self):
        from .cyclo import scalar_to_json

        return {
            "group": self.group.name,
            "fibers": {str(g): d for g, d in enumerate(self.fiber_dims)},
            "action": {str(h): [[scalar_to_json(x) for x in row] for row in A.to_dense()]
                       for h, A in enumerate(self.action)},
        }

    @classmethod
    def from_json(cls, group, data, M=None):
        from .cyclo import scalar_from_json

        dims = [int(data["fibers"].get(str(g), 0)) for g in group.elements]
        action = [Matrix.from_dense([[scalar_from_json(x, M) for x in row]
                                     for row in data["action"][str(h)]], ncols=sum(dims))
                  for h in group.elements]
        return cls(group, dims, action)


# ---------------------------------------------------------------------------
# helpers


def _same_group(V, W):
    if V.group is not W.group:
        raise GroupMismatch("bundles live over different groups")


_require_z = require_z


def _sorted_by_grading(G, gradings):
    """Stable order of basis vectors by grading, and the fiber dims."""
    order = sorted(range(len(gradings)), key=lambda k: gradings[k])
    dims = [0] * G.order
    for g in gradings:
        dims[g] += 1
    return order, dims


def _reindexed(G, action, gradings, label=None):
    """Bundle from a graded basis in arbitrary order: sort it by fiber."""
    order, dims = _sorted_by_grading(G, gradings)
    P = _perm_columns(order, len(gradings))
    action = [P.T @ A @ P for A in action]
    return EquivariantBundle(G, dims, action, label=label, check=False)


def _perm_columns(order, n):
    rows = [dict() for _ in range(n)]
    for k, i in enumerate(order):
        rows[i][k] = Fraction(1)
    return Matrix(n, len(order), rows)


def subbundle(G, columns_by_grading, ambient_action, label=None, pieces=None):
    """Bundle on the span of the given columns, graded as listed.

    ``columns_by_grading`` is a list of (g, Matrix) blocks; the blocks are
    concatenated in order of g (stably), and the action is the restriction
    of ``ambient_action``.
    """
    blocks = sorted(enumerate(columns_by_grading), key=lambda t: (t[1][0], t[0]))
    dims = [0] * G.order
    mats = []
    piece_tags = []
    for k, (g, B) in blocks:
        if B.ncols == 0:
            continue
        dims[g] += B.ncols
        mats.append(B)
        if pieces is not None:
            piece_tags.extend([pieces[k]] * B.ncols)
    if not mats:
        n = ambient_action[0].nrows
        return EquivariantBundle(G, dims, [Matrix.zeros(0, 0)] * G.order,
                                 embedding=Matrix.zeros(n, 0), label=label,
                                 pieces=piece_tags if pieces is not None else None, check=False)
    E = mats[0]
    for B in mats[1:]:
        E = E.hstack(B)
    emb = Embedding(E)
    action = [emb.restrict(A) for A in ambient_action]
    return EquivariantBundle(G, dims, action, embedding=E, label=label,
                             pieces=piece_tags if pieces is not None else None, check=False)


def rebase(V, G: FiniteGroup) -> EquivariantBundle:
    """The same fibers and matrices over another group object with the same table
    (for instance the group with a different choice of z)."""
    if G.mul != V.group.mul:
        raise GroupMismatch("rebase needs the same multiplication table")
    return EquivariantBundle(G, V.fiber_dims, V.action, embedding=V.embedding, label=V.label,
                             pieces=V.pieces)


def kron_action(V, W):
    return [A.kron(B) for A, B in zip(V.action, W.action)]


def basis_block(V, g):
    """Standard basis columns of V_g."""
    cols = [{i: Fraction(1)} for i in V.fiber(g)]
    return Matrix.from_columns(V.dim, cols)


# ---------------------------------------------------------------------------
# units, duals and simple constructions


def unit_reduced(G) -> EquivariantBundle:
    """1-bar = sum_g k_g, with h carrying k_g to k_{hgh^-1}."""
    action = [Matrix.permutation([G.conj(h, g) for g in G.elements]) for h in G.elements]
    return EquivariantBundle(G, [1] * G.order, action, label="1bar", check=False)


def unit_convolution(G) -> EquivariantBundle:
    dims = [0] * G.order
    dims[G.identity] = 1
    return EquivariantBundle(G, dims, [Matrix.identity(1)] * G.order, label="1", check=False)


def zero_bundle(G) -> EquivariantBundle:
    return EquivariantBundle(G, [0] * G.order, [Matrix.zeros(0, 0)] * G.order, label="0", check=False)


def dual_reduced(V) -> EquivariantBundle:
    """(V^vee)_g = (V_g)^*, with h acting by the transpose of action(h^-1)."""
    G = V.group
    action = [V.action[G.inv[h]].T for h in G.elements]
    return EquivariantBundle(G, V.fiber_dims, action, label=f"{V.label}^v", check=False)


def dual_convolution(V) -> EquivariantBundle:
    """(V^*)_g = (V_{g^-1})^*."""
    G = V.group
    action = [V.action[G.inv[h]].T for h in G.elements]
    return _reindexed(G, action, [G.inv[g] for g in V.grading], label=f"{V.label}^*")


def us_action(V) -> EquivariantBundle:
    """U_S: (U_S V)_g = V_{g^-1}, same action matrices rerouted."""
    G = V.group
    return _reindexed(G, V.action, [G.inv[g] for g in V.grading], label=f"U({V.label})")


def direct_sum(V, W) -> EquivariantBundle:
    _same_group(V, W)
    action = [block_diag(A, B) for A, B in zip(V.action, W.action)]
    return _reindexed(V.group, action, list(V.grading) + list(W.grading),
                      label=f"({V.label}+{W.label})")


def direct_sum_all(bundles):
    out = bundles[0]
    for B in bundles[1:]:
        out = direct_sum(out, B)
    return out


def change_basis(V, S: Matrix) -> EquivariantBundle:
    """The isomorphic bundle with basis given by the columns of S (fiber preserving)."""
    Sinv = S.inverse()
    action = [Sinv @ A @ S for A in V.action]
    return EquivariantBundle(V.group, V.fiber_dims, action, label=V.label, check=False)


def induction_I(A: GModule) -> EquivariantBundle:
    """I(A): fiber A over every g, h acting by rho_A(h) while moving g to hgh^-1."""
    G = A.group
    action = [Matrix.permutation([G.conj(h, g) for g in G.elements]).kron(A.mats[h])
              for h in G.elements]
    return EquivariantBundle(G, [A.dim] * G.order, action, label=f"I({A.label})", check=False)


def induced_simple(G, rep, H, embedding, chi: GModule, label=None) -> EquivariantBundle:
    """k[G] (x)_{Z(g)} chi, graded by x (x) v -> x g x^-1.

    ``H`` is the zoo group isomorphic to the centralizer Z(rep), via
    ``embedding[i]`` = ambient element of the i-th element of H.
    """
    back = {a: i for i, a in enumerate(embedding)}
    reps = []
    seen = set()
    for x in G.elements:
        if x in seen:
            continue
        coset = {G.m(x, c) for c in embedding}
        seen |= coset
        reps.append(x)
    d = chi.dim
    k = len(reps)
    base = [G.conj(x, rep) for x in reps]
    # basis (j, a): x_j (x) e_a sits over base[j]
    action = []
    for h in G.elements:
        entries = []
        for j, x in enumerate(reps):
            hx = G.m(h, x)
            for jj, y in enumerate(reps):
                c = G.m(G.inv[y], hx)
                if c in back:
                    block = chi.mats[back[c]]
                    for a, row in enumerate(block.rows):
                        for b, v in row.items():
                            entries.append((jj * d + a, j * d + b, v))
                    break
        action.append(Matrix.from_entries(k * d, k * d, entries))
    gradings = [base[j] for j in range(k) for _ in range(d)]
    out = _reindexed(G, action, gradings, label=label)
    out.validate()
    return out


def simples(zoo, name, M=None):
    """All simple bundles over the named zoo group, class by class."""
    G = zoo.group(name)
    out = []
    for rep, H, emb, irreps in zoo.centralizers(name, M):
        for lab, chi in zip(irreps.labels, irreps.irreps):
            out.append(induced_simple(G, rep, H, emb, chi, label=f"({rep},{lab})"))
    return out


# ---------------------------------------------------------------------------
# the three tensor products


def convolution_tensor(V, W) -> EquivariantBundle:
    """(V (x) W)_g = sum_h V_{gh} (x) W_{h^-1}: grade a (x) b by ab."""
    _same_group(V, W)
    G = V.group
    gradings = [G.m(a, b) for a in V.grading for b in W.grading]
    order, dims = _sorted_by_grading(G, gradings)
    P = _perm_columns(order, V.dim * W.dim)
    action = [P.T @ A @ P for A in kron_action(V, W)]
    return EquivariantBundle(G, dims, action, embedding=P, label=f"({V.label}*{W.label})", check=False)


def reduced_tensor(V, W) -> EquivariantBundle:
    """Fiberwise product (V (x)bar W)_g = V_g (x) W_g."""
    _same_group(V, W)
    G = V.group
    cols = []
    m = W.dim
    for g in G.elements:
        cols.append((g, Matrix.from_columns(V.dim * m, [{i * m + j: Fraction(1)}
                                                        for i in V.fiber(g) for j in W.fiber(g)])))
    return subbundle(G, cols, kron_action(V, W), label=f"({V.label}.{W.label})")


def reduced_tensor_z(V, W) -> EquivariantBundle:
    """(V (x)_z W)_g = sum_{s,t} V^s_{gz^t} (x) W^t_{gz^s}, of parity s+t."""
    _same_group(V, W)
    G = V.group
    _require_z(G)
    z = G.z_or_e
    cols, tags = [], []
    for g in G.elements:
        for s in (0, 1):
            for t in (0, 1):
                a = G.m(g, z) if t else g
                b = G.m(g, z) if s else g
                Bv = V.parity_basis(a, s)
                Bw = W.parity_basis(b, t)
                if Bv.ncols and Bw.ncols:
                    cols.append((g, Bv.kron(Bw)))
                    tags.append((s, t, g))
    return subbundle(G, cols, kron_action(V, W), label=f"({V.label}.z{W.label})", pieces=tags)


def lambda_pullback(V) -> EquivariantBundle:
    """Lambda(V)_g = V^0_g + V^1_{gz}; same G-action, basis changed accordingly."""
    G = V.group
    _require_z(G)
    cols = []
    for g in G.elements:
        B0 = V.parity_basis(g, 0)
        B1 = V.parity_basis(G.m(g, G.z_or_e), 1)
        cols.append((g, B0.hstack(B1)))
    return subbundle(G, cols, V.action, label=f"L({V.label})")


def pushed(X, outer: Matrix) -> EquivariantBundle:
    """X with its embedding composed with a further inclusion ``outer``."""
    return EquivariantBundle(X.group, X.fiber_dims, X.action, embedding=outer @ X.embedding,
                             label=X.label, pieces=X.pieces, check=False)


def lambda_comparison(V, W):
    """Lambda(V (x)_z W) against Lambda(V) (x)bar Lambda(W) inside V (x) W.

    Returns the identity-underlying bundle isomorphism (as a transition
    matrix) or None when the two sub-bundles differ.
    """
    X = reduced_tensor_z(V, W)
    A = pushed(lambda_pullback(X), X.embedding)
    LV, LW = lambda_pullback(V), lambda_pullback(W)
    B = pushed(reduced_tensor(LV, LW), LV.embedding.kron(LW.embedding))
    return transition(A, B)


def braiding_reduced(V, W) -> Matrix:
    """Swap P on (V (x)bar W) -> (W (x)bar V), in the bundles' coordinates."""
    X, Y = reduced_tensor(V, W), reduced_tensor(W, V)
    return Embedding(Y.embedding).coords(_swap(V.dim, W.dim) @ X.embedding)


def braiding_z(V, W) -> Matrix:
    """(-1)^{st} P on V^s (x) W^t pieces of V (x)_z W -> W (x)_z V."""
    X, Y = reduced_tensor_z(V, W), reduced_tensor_z(W, V)
    signs = Matrix.from_entries(X.dim, X.dim, [(k, k, -1 if s and t else 1)
                                               for k, (s, t, _) in enumerate(X.pieces)])
    return Embedding(Y.embedding).coords(_swap(V.dim, W.dim) @ X.embedding @ signs)


def _swap(m, n) -> Matrix:
    """P: V (x) W -> W (x) V in Kronecker coordinates."""
    return Matrix.permutation([j * m + i for i in range(m) for j in range(n)])


# ---------------------------------------------------------------------------
# morphisms


def hom_space(V, W):
    """Basis of bundle maps V -> W (grading preserving, G-equivariant)."""
    _same_group(V, W)
    G = V.group
    allowed = [(i, j) for g in G.elements for i in W.fiber(g) for j in V.fiber(g)]
    if not allowed:
        return []
    gens = G.generators
    return commutant([V.action[s] for s in gens], [W.action[s] for s in gens], V.dim, W.dim,
                     allowed=allowed)


def is_bundle_map(T: Matrix, V, W) -> bool:
    G = V.group
    for i, row in enumerate(T.rows):
        for j in row:
            if W.grading[i] != V.grading[j]:
                return False
    return all(T @ V.action[s] == W.action[s] @ T for s in G.generators)


def find_isomorphism(V, W, seed=0):
    """An explicit invertible bundle map V -> W, or None."""
    if V.fiber_dims != W.fiber_dims:
        return None
    basis = hom_space(V, W)
    if not basis:
        return Matrix.zeros(0, 0) if V.dim == 0 else None
    rng = random.Random(seed)
    for _ in range(8):
        T = Matrix.zeros(W.dim, V.dim)
        for B in basis:
            T = T + B * rng.randint(-5, 5)
        if T.rank() == V.dim:
            return T
    return None


def transition(X, Y):
    """If X and Y are the same sub-bundle of a common ambient space (fiber by
    fiber), the identity-underlying map Y -> X in their coordinates."""
    if X.fiber_dims != Y.fiber_dims:
        return None
    G = X.group
    for g in G.elements:
        if X.fiber_dims[g]:
            A = X.embedding.submatrix(list(range(X.embedding.nrows)), list(X.fiber(g)))
            B = Y.embedding.submatrix(list(range(Y.embedding.nrows)), list(Y.fiber(g)))
            if not same_column_space(A, B):
                return None
    if X.dim == 0:
        return Matrix.zeros(0, 0)
    T = Embedding(X.embedding).coords(Y.embedding)
    return T if is_bundle_map(T, Y, X) else None


# ---------------------------------------------------------------------------
# modules pulled back along coproducts


def coproduct_image(V, W, coproduct: AlgebraMap) -> EquivariantBundle:
    """Delta(1) . (V (x) W) with the D(G)-module structure pulled back along Delta."""
    _same_group(V, W)
    G = V.group
    D = coproduct.source
    n = G.order
    m = D.dim

    def act_pair(y):
        out = Matrix.zeros(V.dim * W.dim, V.dim * W.dim)
        cache = {}
        for idx, c in y.items():
            a, b = divmod(idx, m)
            if a not in cache:
                cache[a] = V.act({a: Fraction(1)})
            out = out + cache[a].kron(W.act({b: Fraction(1)})) * c
        return out

    cols = []
    for g in G.elements:
        P = act_pair(coproduct({G.identity * n + g: Fraction(1)}))
        cols.append((g, P.column_space()))
    action = []
    for h in G.elements:
        x = {h * n + k: Fraction(1) for k in G.elements}
        action.append(act_pair(coproduct(x)))
    # restrict only after the subspace is known; the action matrices of Delta(h)
    # preserve the image of Delta(1)
    return subbundle(G, cols, action, label=f"D1.({V.label}x{W.label})")


# ---------------------------------------------------------------------------
# fusion


def multiplicity(X, S) -> int:
    """dim Hom(X, S) for S simple."""
    return len(hom_space(X, S))


def fusion_table(simple_list, product):
    """N[a][b][c] = dim Hom(a * b, c) for the chosen product function."""
    table = []
    for a in simple_list:
        row = []
        for b in simple_list:
            P = product(a, b)
            row.append([multiplicity(P, c) if P.dim else 0 for c in simple_list])
        table.append(row)
    return table


PRODUCTS = {"conv": convolution_tensor, "red": reduced_tensor, "redz": reduced_tensor_z}


def verify_dominance(V) -> bool:
    """V is a summand of I(forget V): detected by a nonzero map I(forget V) -> V."""
    if V.dim == 0:
        raise NotNonzero("dominance check needs a nonzero bundle")
    return len(hom_space(induction_I(V.module()), V)) >= 1


def adjunction_dims(A: GModule, W) -> tuple:
    """(dim Hom(I(A), W), dim Hom_G(A, forget W)); equal by adjunction."""
    return len(hom_space(induction_I(A), W)), len(intertwiner_space(A, W.module()))


# ---------------------------------------------------------------------------
# random bundles


def random_unimodular(n, rng, spread=2) -> Matrix:
    """Random integer matrix of determinant +-1 (product of triangular factors)."""
    entries = []
    for i in range(n):
        entries.append((i, i, rng.choice((1, -1))))
        for j in range(i + 1, n):
            entries.append((i, j, rng.randint(-spread, spread)))
    U = Matrix.from_entries(n, n, entries)
    entries = [(i, i, 1) for i in range(n)]
    for i in range(n):
        for j in range(i):
            entries.append((i, j, rng.randint(-spread, spread)))
    return Matrix.from_entries(n, n, entries) @ U


def random_bundle(simple_list, rng, max_summands=2, include=None):
    """A direct sum of random simples with a random basis change in each fiber.

    ``include`` forces one given simple to be among the summands.
    """
    k = rng.randint(1, max_summands)
    parts = [rng.choice(simple_list) for _ in range(k)]
    if include is not None:
        parts[rng.randrange(k)] = include
    V = direct_sum_all(parts)
    blocks = [random_unimodular(d, rng) if d else Matrix.zeros(0, 0) for d in V.fiber_dims]
    S = block_diag(*blocks)
    out = change_basis(V, S)
    out.label = "+".join(p.label for p in parts)
    return out


def random_pair(simple_list, rng, max_summands=2):
    """Two random bundles whose supports meet (up to z), so products are rarely zero."""
    V = random_bundle(simple_list, rng, max_summands)
    G = V.group
    g = rng.choice(V.support())
    targets = {g, G.m(g, G.z_or_e)}
    near = [s for s in simple_list if targets & set(s.support())]
    W = random_bundle(simple_list, rng, max_summands, include=rng.choice(near))
    return V, W


# ---------------------------------------------------------------------------
# reduced pivotal structure in the bundle model (parity split when z != e)


def _parity_fiber_proj(V, sigma, g) -> Matrix:
    return V.parity_projector(sigma) @ V.projector(g)


def reduced_ev(V) -> Matrix:
    """ev: V^vee (x) V -> 1bar in Kronecker coordinates (|G| x d^2).

    xi (x) v with both in the parity sigma part of fiber a goes to xi(v) 1_{a z^sigma};
    mixed-parity pieces are sent to zero.
    """
    G = V.group
    d = V.dim
    entries = []
    for a in G.elements:
        for s in (0, 1):
            b = G.m(a, G.z_or_e) if s else a
            P = _parity_fiber_proj(V, s, a)
            # xi (x) v -> xi(P v) = sum_ij xi_i P[i, j] v_j
            for i, row in enumerate(P.rows):
                for j, v in row.items():
                    entries.append((b, i * d + j, v))
    return Matrix.from_entries(G.order, d * d, entries)


def reduced_coev(V) -> Matrix:
    """coev: 1bar -> V (x) V^vee: 1_g -> sum over a basis of V^0_g + V^1_{gz} of b (x) b^*."""
    G = V.group
    d = V.dim
    entries = []
    for g in G.elements:
        P = _parity_fiber_proj(V, 0, g) + _parity_fiber_proj(V, 1, G.m(g, G.z_or_e))
        for i, row in enumerate(P.rows):
            for j, v in row.items():
                entries.append((i * d + j, g, v))
    return Matrix.from_entries(d * d, G.order, entries)


def left_unit_inv(V) -> Matrix:
    """V -> 1bar (x) V: x in V^s_g goes to 1_{g z^s} (x) x."""
    G = V.group
    d = V.dim
    entries = []
    for g in G.elements:
        for s in (0, 1):
            b = G.m(g, G.z_or_e) if s else g
            P = _parity_fiber_proj(V, s, g)
            for i, row in enumerate(P.rows):
                for j, v in row.items():
                    entries.append((b * d + i, j, v))
    return Matrix.from_entries(G.order * d, d, entries)


def right_unit(V) -> Matrix:
    """V (x) 1bar -> V: x (x) 1_b goes to x when x in V^s_g with b = g z^s."""
    G = V.group
    n = G.order
    d = V.dim
    entries = []
    for g in G.elements:
        for s in (0, 1):
            b = G.m(g, G.z_or_e) if s else g
            P = _parity_fiber_proj(V, s, g)
            for i, row in enumerate(P.rows):
                for j, v in row.items():
                    entries.append((i, j * n + b, v))
    return Matrix.from_entries(d, d * n, entries)


def left_unit(V) -> Matrix:
    G = V.group
    d = V.dim
    entries = []
    for g in G.elements:
        for s in (0, 1):
            b = G.m(g, G.z_or_e) if s else g
            P = _parity_fiber_proj(V, s, g)
            for i, row in enumerate(P.rows):
                for j, v in row.items():
                    entries.append((i, b * d + j, v))
    return Matrix.from_entries(d, G.order * d, entries)


def right_unit_inv(V) -> Matrix:
    G = V.group
    n = G.order
    d = V.dim
    entries = []
    for g in G.elements:
        for s in (0, 1):
            b = G.m(g, G.z_or_e) if s else g
            P = _parity_fiber_proj(V, s, g)
            for i, row in enumerate(P.rows):
                for j, v in row.items():
                    entries.append((i * n + b, j, v))
    return Matrix.from_entries(d * n, d, entries)


def reduced_zigzags(V):
    """The two snake composites for the reduced duality; both should be identities."""
    d = V.dim
    Vd = dual_reduced(V)
    Id = Matrix.identity(d)
    ev, coev = reduced_ev(V), reduced_coev(V)
    snake_v = right_unit(V) @ Id.kron(ev) @ coev.kron(Id) @ left_unit_inv(V)
    snake_dual = left_unit(Vd) @ ev.kron(Id) @ Id.kron(coev) @ right_unit_inv(Vd)
    return snake_v, snake_dual
