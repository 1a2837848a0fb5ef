"""Algebras given by structure constants: D(G), the elliptic double and the
torus algebra, together with the coproducts, the parity automorphism and
exact center dimensions.

Elements are sparse ``{basis index: Fraction}`` dicts.  The basis of D(G)
is ``g (x) delta_h`` at index ``g*n + h``; multiplication is

    (g1 delta_h1)(g2 delta_h2) = g1 g2 delta_{g2^-1 h1 g2} delta_h2 .
"""

from __future__ import annotations

import random
from fractions import Fraction

from .group import FiniteGroup, ZMissing, commuting_pairs, conjugacy_classes, diagonal_orbits, require_z
from .linalg import Matrix

HALF = Fraction(1, 2)
ASSOC_BUDGET = 2_000_000  # basis triples checked exhaustively below this count


class NotAnAlgebra(ValueError):
    pass


def _acc(out, c, v):
    nv = out.get(c, 0) + v
    if nv:
        out[c] = nv
    else:
        out.pop(c, None)


class StructAlgebra:
    """A finite-dimensional algebra given by a basis product rule.

    ``mul_basis(a, b)`` returns the product of two basis elements as a
    sparse dict.  ``generators`` (optional) is a list of elements that
    generate the algebra; it is only used to shorten center computations.
    """

    def __init__(self, dim, mul_basis, unit, labels=None, generators=None, name=None, cache=True):
        self.dim = dim
        self._mul_basis = mul_basis
        self.unit = dict(unit)
        self._labels = labels
        self.generators = generators
        self.name = name
        self._cache = {} if cache else None

    def __repr__(self):
        return f"<StructAlgebra {self.name or ''} dim={self.dim}>"

    def label(self, a):
        if self._labels is None:
            return str(a)
        return self._labels(a) if callable(self._labels) else self._labels[a]

    def mul_basis(self, a, b):
        if self._cache is None:
            return self._mul_basis(a, b)
        key = (a, b)
        r = self._cache.get(key)
        if r is None:
            r = self._mul_basis(a, b)
            self._cache[key] = r
        return r

    def basis(self, a):
        return {a: Fraction(1)}

    def mul(self, x, y):
        out = {}
        for a, u in x.items():
            for b, v in y.items():
                for c, w in self.mul_basis(a, b).items():
                    _acc(out, c, u * v * w)
        return out

    def check(self, seed=0, samples=20000):
        """Associativity and unitality; exhaustive when the triple count is small."""
        n = self.dim
        if n ** 3 <= ASSOC_BUDGET:
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
            mode = "exhaustive"
        else:
            rng = random.Random(seed)
            triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples)]
            mode = "sampled"
        for a, b, c in triples:
            left = self.mul(self.mul_basis(a, b), {c: Fraction(1)})
            right = self.mul({a: Fraction(1)}, self.mul_basis(b, c))
            if left != right:
                raise NotAnAlgebra(f"({self.label(a)} {self.label(b)}) {self.label(c)} differs")
        for a in range(n):
            e = {a: Fraction(1)}
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                raise NotAnAlgebra(f"unit fails on {self.label(a)}")
        return mode

    def is_central(self, x):
        gens = self.generators or [{a: Fraction(1)} for a in range(self.dim)]
        return all(self.mul(x, y) == self.mul(y, x) for y in gens)


def tensor_algebra(A: StructAlgebra, B: StructAlgebra, name=None) -> StructAlgebra:
    """A (x) B with basis index a * dim B + b, products computed on demand."""
    m = B.dim

    def mul_basis(x, y):
        a1, b1 = divmod(x, m)
        a2, b2 = divmod(y, m)
        pa = A.mul_basis(a1, a2)
        if not pa:
            return {}
        pb = B.mul_basis(b1, b2)
        return {a * m + b: u * v for a, u in pa.items() for b, v in pb.items()}

    unit = {a * m + b: u * v for a, u in A.unit.items() for b, v in B.unit.items()}
    return StructAlgebra(A.dim * m, mul_basis, unit, name=name or f"{A.name}(x){B.name}", cache=False)


def simple_tensor(x, y, m):
    """x (x) y for elements x of A and y of B, with m = dim B."""
    return {a * m + b: u * v for a, u in x.items() for b, v in y.items()}


class AlgebraMap:
    def __init__(self, source: StructAlgebra, target: StructAlgebra, images, name=None):
        if len(images) != source.dim:
            raise ValueError("need one image per source basis element")
        self.source = source
        self.target = target
        self.images = images
        self.name = name

    def __call__(self, x):
        out = {}
        for a, u in x.items():
            for c, v in self.images[a].items():
                _acc(out, c, u * v)
        return out

    def multiplicative_failures(self, pairs=None):
        S, T = self.source, self.target
        if pairs is None:
            pairs = ((a, b) for a in range(S.dim) for b in range(S.dim))
        bad = []
        for a, b in pairs:
            if self(S.mul_basis(a, b)) != T.mul(self.images[a], self.images[b]):
                bad.append((a, b))
        return bad

    def is_multiplicative(self, pairs=None):
        return not self.multiplicative_failures(pairs)

    def is_unital(self):
        return self(self.source.unit) == self.target.unit

    def matrix(self) -> Matrix:
        return Matrix.from_columns(self.target.dim, self.images)

    def is_bijective(self):
        return self.source.dim == self.target.dim and self.matrix().rank() == self.source.dim

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """self after other."""
        return AlgebraMap(other.source, self.target, [self(x) for x in other.images])


def tensor_map(f: AlgebraMap, g: AlgebraMap, source=None, target=None) -> AlgebraMap:
    source = source or tensor_algebra(f.source, g.source)
    target = target or tensor_algebra(f.target, g.target)
    m = g.target.dim
    images = []
    for x in range(source.dim):
        a, b = divmod(x, g.source.dim)
        images.append(simple_tensor(f.images[a], g.images[b], m))
    return AlgebraMap(source, target, images)


# ---------------------------------------------------------------------------
# the Drinfeld double


def group_algebra(G: FiniteGroup) -> StructAlgebra:
    def mul_basis(a, b):
        return {G.m(a, b): Fraction(1)}

    return StructAlgebra(G.order, mul_basis, {G.identity: Fraction(1)}, name=f"k[{G.name}]",
                         generators=[{s: Fraction(1)} for s in G.generators])


def drinfeld_double(G: FiniteGroup) -> StructAlgebra:
    n = G.order
    inv, t = G.inv, G.mul

    def mul_basis(x, y):
        g1, h1 = divmod(x, n)
        g2, h2 = divmod(y, n)
        if t[t[inv[g2]][h1]][g2] != h2:
            return {}
        return {t[g1][g2] * n + h2: Fraction(1)}

    unit = {G.identity * n + h: Fraction(1) for h in G.elements}
    A = StructAlgebra(n * n, mul_basis, unit, labels=lambda x: f"g{x // n}.d{x % n}",
                      name=f"D({G.name})")
    A.group = G
    A.generators = [group_element(A, s) for s in G.generators] + [delta(A, h) for h in G.elements]
    return A


def group_element(D: StructAlgebra, g) -> dict:
    """g = g (x) 1 = sum_h g delta_h."""
    n = D.group.order
    return {g * n + h: Fraction(1) for h in range(n)}


def delta(D: StructAlgebra, h) -> dict:
    """delta_h = e (x) delta_h."""
    G = D.group
    return {G.identity * G.order + h: Fraction(1)}


def parity_delta(D: StructAlgebra, h, sigma) -> dict:
    """delta_h^sigma = e^sigma . delta_h with e^sigma = (1 + (-1)^sigma z)/2 acting by left multiplication."""
    G = D.group
    n = G.order
    sign = 1 if sigma % 2 == 0 else -1
    out = {G.identity * n + h: HALF}
    _acc(out, G.z_or_e * n + h, sign * HALF)
    return out


def parity_delta_function(G: FiniteGroup, h, sigma) -> dict:
    """The F(G)-side idempotent (delta_h + (-1)^sigma delta_{hz})/2 as a function on G."""
    sign = 1 if sigma % 2 == 0 else -1
    out = {h: HALF}
    _acc(out, G.m(h, G.z_or_e), sign * HALF)
    return out


def r_matrix(D: StructAlgebra) -> dict:
    """R = sum_g g (x) delta_g inside D(G) (x) D(G)."""
    G = D.group
    out = {}
    for g in G.elements:
        out.update(simple_tensor(group_element(D, g), delta(D, g), D.dim))
    return out


_require_z = require_z


def coproduct_bar(D: StructAlgebra) -> AlgebraMap:
    """Delta(g delta_h) = (g delta_h) (x) (g delta_h)."""
    DD = tensor_algebra(D, D)
    images = [{x * D.dim + x: Fraction(1)} for x in range(D.dim)]
    return AlgebraMap(D, DD, images, name="coproduct_bar")


def coproduct_bar_z(D: StructAlgebra) -> AlgebraMap:
    """Delta_z(g delta_h) = (g (x) g) sum_{s,t} delta^s_{hz^t} (x) delta^t_{hz^s}."""
    G = D.group
    _require_z(G)
    DD = tensor_algebra(D, D)
    m = D.dim

    def zpow(h, k):
        return G.m(h, G.z_or_e) if k % 2 else h

    delta_images = []
    for h in G.elements:
        acc = {}
        for s in (0, 1):
            for t in (0, 1):
                term = simple_tensor(parity_delta(D, zpow(h, t), s), parity_delta(D, zpow(h, s), t), m)
                for c, v in term.items():
                    _acc(acc, c, v)
        delta_images.append(acc)
    images = []
    n = G.order
    for x in range(D.dim):
        g, h = divmod(x, n)
        gg = simple_tensor(group_element(D, g), group_element(D, g), m)
        images.append(DD.mul(gg, delta_images[h]))
    return AlgebraMap(D, DD, images, name="coproduct_bar_z")


def lambda_automorphism(D: StructAlgebra) -> AlgebraMap:
    """lambda(g delta_h) = g (delta_h^0 + delta_{hz}^1)."""
    G = D.group
    _require_z(G)
    n = G.order
    images = []
    for x in range(D.dim):
        g, h = divmod(x, n)
        inner = parity_delta(D, h, 0)
        for c, v in parity_delta(D, G.m(h, G.z_or_e), 1).items():
            _acc(inner, c, v)
        images.append(D.mul(group_element(D, g), inner))
    return AlgebraMap(D, D, images, name="lambda")


# ---------------------------------------------------------------------------
# elliptic double and torus algebra


def elliptic_double(G: FiniteGroup) -> StructAlgebra:
    """Basis g delta_h1 delta_h2 at index (g*n + h1)*n + h2.

    (g, h1, h2)(g', h1', h2') = (g g', h1', h2') when conjugation by g'
    carries (h1, h2) to (h1', h2'), and zero otherwise.
    """
    n = G.order
    t, inv = G.mul, G.inv

    def mul_basis(x, y):
        g1, r = divmod(x, n * n)
        a1, b1 = divmod(r, n)
        g2, r = divmod(y, n * n)
        a2, b2 = divmod(r, n)
        gi = inv[g2]
        if t[t[gi][a1]][g2] != a2 or t[t[gi][b1]][g2] != b2:
            return {}
        return {t[g1][g2] * n * n + r: Fraction(1)}

    unit = {G.identity * n * n + r: Fraction(1) for r in range(n * n)}
    A = StructAlgebra(n ** 3, mul_basis, unit, name=f"Del({G.name})", cache=False,
                      labels=lambda x: f"g{x // (n * n)}.d{(x // n) % n}.d{x % n}")
    A.group = G
    A.generators = (
        [{s * n * n + r: Fraction(1) for r in range(n * n)} for s in G.generators]
        + [{G.identity * n * n + r: Fraction(1)} for r in range(n * n)]
    )
    return A


def omega_idempotent(G: FiniteGroup) -> dict:
    """delta_Omega inside the elliptic double."""
    n = G.order
    return {G.identity * n * n + a * n + b: Fraction(1) for a, b in commuting_pairs(G)}


def torus_subalgebra(G: FiniteGroup) -> StructAlgebra:
    """D_{T^2}(G) = D^el(G) delta_Omega, basis g delta_{(h, h')} with (h, h') commuting."""
    n = G.order
    pairs = commuting_pairs(G)
    pidx = {p: k for k, p in enumerate(pairs)}
    P = len(pairs)
    t, inv = G.mul, G.inv

    def mul_basis(x, y):
        g1, k1 = divmod(x, P)
        g2, k2 = divmod(y, P)
        a, b = pairs[k1]
        gi = inv[g2]
        if pidx[(t[t[gi][a]][g2], t[t[gi][b]][g2])] != k2:
            return {}
        return {t[g1][g2] * P + k2: Fraction(1)}

    unit = {G.identity * P + k: Fraction(1) for k in range(P)}
    A = StructAlgebra(n * P, mul_basis, unit, name=f"DT2({G.name})",
                      labels=lambda x: f"g{x // P}.d{pairs[x % P]}")
    A.group = G
    A.pairs = pairs
    A.generators = (
        [{s * P + k: Fraction(1) for k in range(P)} for s in G.generators]
        + [{G.identity * P + k: Fraction(1)} for k in range(P)]
    )
    return A


# ---------------------------------------------------------------------------
# centers


def center_basis(A: StructAlgebra):
    """Exact basis of the center, as sparse dict elements."""
    gens = A.generators or [{a: Fraction(1)} for a in range(A.dim)]
    rows = []
    for y in gens:
        # column a of the equation block is a*y - y*a
        eqs = {}
        for a in range(A.dim):
            e = {a: Fraction(1)}
            diff = A.mul(e, y)
            for c, v in A.mul(y, e).items():
                _acc(diff, c, -v)
            for c, v in diff.items():
                eqs.setdefault(c, {})[a] = v
        rows.extend(r for r in eqs.values() if r)
    return Matrix(len(rows), A.dim, rows).nullspace()


def center_dimension(A: StructAlgebra) -> int:
    return len(center_basis(A))


def torus_center_check(G: FiniteGroup):
    """(lhs, rhs, orbit count, all equal) for the torus algebra of G.

    lhs is the center dimension of D_{T^2}(G); rhs sums the center
    dimensions of D(Z(g)) over class representatives; the orbit count sums
    the class numbers of stabilizers over diagonal orbits on commuting pairs.
    """
    lhs = center_dimension(torus_subalgebra(G))
    rhs = 0
    for c in conjugacy_classes(G):
        H, _ = G.subgroup(G.centralizer(c.representative))
        rhs += center_dimension(drinfeld_double(H))
    orbit_count = 0
    for orb in diagonal_orbits(G, commuting_pairs(G)):
        H, _ = G.subgroup(orb.stabilizer)
        orbit_count += len(conjugacy_classes(H))
    return lhs, rhs, orbit_count, lhs == rhs == orbit_count
