"""Representations of finite groups over Q(zeta_M) and intertwiner spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .group import FiniteGroup
from .linalg import Matrix, Singular


class GroupMismatch(ValueError):
    pass


class NotARepresentation(ValueError):
    pass


class DegeneratePairing(ArithmeticError):
    pass


class GModule:
    """A representation given by one matrix per group element."""

    def __init__(self, group: FiniteGroup, mats, label=None, check=True):
        mats = list(mats)
        if len(mats) != group.order:
            raise NotARepresentation("need one matrix per group element")
        self.group = group
        self.mats = mats
        self.dim = mats[0].nrows
        self.label = label
        if check:
            self.validate()

    def validate(self):
        G = self.group
        for g, A in enumerate(self.mats):
            if A.shape != (self.dim, self.dim):
                raise NotARepresentation(f"matrix of element {g} has shape {A.shape}")
        if not self.mats[G.identity].is_identity():
            raise NotARepresentation("identity element does not act as the identity")
        for s in G.generators:
            S = self.mats[s]
            for g in G.elements:
                if self.mats[G.m(g, s)] != self.mats[g] @ S:
                    raise NotARepresentation(f"rho({g}*{s}) != rho({g}) rho({s})")

    def __call__(self, g):
        return self.mats[g]

    def __repr__(self):
        return f"<GModule {self.label or ''} dim={self.dim} over {self.group!r}>"

    def __eq__(self, other):
        if not isinstance(other, GModule):
            return NotImplemented
        return self.group is other.group and self.mats == other.mats

    __hash__ = None

    # constructions ---------------------------------------------------------
    @classmethod
    def trivial(cls, G, dim=1):
        return cls(G, [Matrix.identity(dim)] * G.order, label="1", check=False)

    @classmethod
    def regular(cls, G):
        """k[G] with left multiplication; basis vector g at index g."""
        mats = [Matrix.permutation([G.m(h, g) for g in G.elements]) for h in G.elements]
        return cls(G, mats, label="k[G]", check=False)

    @classmethod
    def functions(cls, G):
        """F(G) with (h . delta_a) = delta_{ha}; the same matrices as k[G]."""
        mats = [Matrix.permutation([G.m(h, a) for a in G.elements]) for h in G.elements]
        return cls(G, mats, label="F(G)", check=False)

    def restrict(self, H, embed, label=None):
        return GModule(H, [self.mats[g] for g in embed], label=label, check=False)


def _same_group(V, W):
    if V.group is not W.group:
        raise GroupMismatch("modules live over different groups")


def tensor(V: GModule, W: GModule) -> GModule:
    _same_group(V, W)
    mats = [A.kron(B) for A, B in zip(V.mats, W.mats)]
    return GModule(V.group, mats, label=f"({V.label}*{W.label})", check=False)


def tensor_all(mods):
    out = mods[0]
    for M in mods[1:]:
        out = tensor(out, M)
    return out


def dual(V: GModule) -> GModule:
    G = V.group
    mats = [V.mats[G.inv[g]].T for g in G.elements]
    return GModule(G, mats, label=f"{V.label}^*", check=False)


def direct_sum(V: GModule, W: GModule) -> GModule:
    from .linalg import block_diag

    _same_group(V, W)
    mats = [block_diag(A, B) for A, B in zip(V.mats, W.mats)]
    return GModule(V.group, mats, label=f"({V.label}+{W.label})", check=False)


# ---------------------------------------------------------------------------
# commutant solver


def commutant(src_mats, tgt_mats, nsrc, ntgt, allowed=None):
    """Basis of {X : T X = X S for every pair (S, T)}.

    ``allowed`` optionally restricts the support of X to a set of
    (row, col) positions; all other entries are forced to zero.
    """
    if allowed is None:
        var_pos = [(i, j) for i in range(ntgt) for j in range(nsrc)]
    else:
        var_pos = sorted(allowed)
    rows = []
    for S, T in zip(src_mats, tgt_mats):
        Tcols = T.columns()
        eqs = {}
        for k, (r, c) in enumerate(var_pos):
            # T X contributes T[a, r] * X[r, c] to equation (a, c)
            for a, t in Tcols[r].items():
                e = eqs.setdefault((a, c), {})
                e[k] = e.get(k, 0) + t
            # X S contributes X[r, c] * S[c, b] to equation (r, b)
            for b, s in S.rows[c].items():
                e = eqs.setdefault((r, b), {})
                e[k] = e.get(k, 0) - s
        for e in eqs.values():
            e = {k: v for k, v in e.items() if v}
            if e:
                rows.append(e)
    system = Matrix(len(rows), len(var_pos), rows)
    basis = []
    for vec in system.nullspace():
        entries = [(var_pos[k][0], var_pos[k][1], v) for k, v in vec.items()]
        basis.append(Matrix.from_entries(ntgt, nsrc, entries))
    return basis


def intertwiner_space(V: GModule, W: GModule):
    """Exact basis of Hom_G(V, W) as matrices of shape (dim W, dim V)."""
    _same_group(V, W)
    gens = V.group.generators
    return commutant([V.mats[s] for s in gens], [W.mats[s] for s in gens], V.dim, W.dim)


def invariants(V: GModule):
    """Basis of the invariant vectors of V as column vectors (dim x 1)."""
    one = GModule.trivial(V.group)
    return intertwiner_space(one, V)


def pair_reversed(phi: Matrix, psi: Matrix, dims):
    """Contract phi in V_1..V_n against psi in V_n^*..V_1^* (reverse order)."""
    total = Fraction(0)
    for i, row in enumerate(phi.rows):
        if not row:
            continue
        # read off the digits of i least significant first: index_n, ..., index_1,
        # which is psi's ordering read most significant first
        j, x = 0, i
        for d in reversed(dims):
            j = j * d + x % d
            x //= d
        v = psi.rows[j].get(0)
        if v:
            total = total + row[0] * v
    return total


def invariants_and_dual_basis(V_list):
    """Dual bases of <V_1,...,V_n> and <V_n^*,...,V_1^*>.

    Returns ``(phi, phi_dual)``: lists of column vectors with
    ``pair_reversed(phi[a], phi_dual[b]) = delta_ab``.
    """
    if not V_list:
        raise ValueError("need at least one module")
    dims = [V.dim for V in V_list]
    top = tensor_all(V_list)
    bottom = tensor_all([dual(V) for V in reversed(V_list)])
    phi = invariants(top)
    psi = invariants(bottom)
    if len(phi) != len(psi):
        raise DegeneratePairing("invariant spaces have different dimensions")
    if not phi:
        return [], []
    pairing = Matrix.from_dense([[pair_reversed(a, b, dims) for b in psi] for a in phi])
    try:
        C = pairing.inverse()
    except Singular as exc:
        raise DegeneratePairing("pairing matrix is singular") from exc
    dual_basis = []
    for g in range(len(phi)):
        acc = Matrix.zeros(bottom.dim, 1)
        for b in range(len(psi)):
            c = C[b, g]
            if c:
                acc = acc + psi[b] * c
        dual_basis.append(acc)
    return phi, dual_basis


# ---------------------------------------------------------------------------
# irrep zoos


@dataclass
class IrrepZoo:
    group: FiniteGroup
    irreps: list
    labels: list = field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = [X.label or str(i) for i, X in enumerate(self.irreps)]

    @property
    def dims(self):
        return [X.dim for X in self.irreps]

    def __len__(self):
        return len(self.irreps)

    def __getitem__(self, i):
        return self.irreps[i]

    def index(self, label):
        return self.labels.index(label)


@dataclass
class ZooReport:
    ok: bool
    sum_d2: int
    failures: list

    def __bool__(self):
        return self.ok


def zoo_validate(zoo: IrrepZoo) -> ZooReport:
    failures = []
    G = zoo.group
    s = sum(d * d for d in zoo.dims)
    if s != G.order:
        failures.append(f"sum of squared dims is {s}, group order is {G.order}")
    if zoo.irreps:
        X0 = zoo.irreps[0]
        if X0.dim != 1 or any(not m.is_identity() for m in X0.mats):
            failures.append(f"first label {zoo.labels[0]} is not the trivial representation")
    for i, X in enumerate(zoo.irreps):
        try:
            X.validate()
        except Exception as exc:  # report, do not raise
            failures.append(f"{zoo.labels[i]}: {exc}")
    for i, X in enumerate(zoo.irreps):
        for j, Y in enumerate(zoo.irreps):
            if j < i:
                continue
            d = len(intertwiner_space(X, Y))
            want = 1 if i == j else 0
            if d != want:
                failures.append(f"Hom({zoo.labels[i]}, {zoo.labels[j]}) has dimension {d}, expected {want}")
    return ZooReport(not failures, s, failures)
