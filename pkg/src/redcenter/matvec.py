"""The matrix model of A (x) A with the reduced product.

For a modular category A with simple objects X_i, write X_i^j for the
simple object X_i (x) X_j^* of A (x) A.  An object is then a matrix of
multiplicities m[i][j], the reduced product is matrix multiplication, and
the pivotal dimensions are deformed: X_i^j has left dimension d_j/d_i.
Only the combinatorics is modelled here; the hom spaces are collapsed to
their dimensions.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cyclo import Cyclo, scalar_from_json, scalar_to_json


class LabelMismatch(ValueError):
    pass


class BadLabelFile(ValueError):
    pass


def _positive(x) -> bool:
    if isinstance(x, Cyclo):
        if x != x.conjugate():
            return False
        return x.interval(64)[0].a > 0
    return x > 0


class FusionLabelSet:
    """Simple labels with a duality involution and exact positive dimensions.

    ``star[i]`` is the index of the dual label; label 0 is the unit.
    """

    def __init__(self, labels, star, dims, M=1):
        self.labels = tuple(labels)
        self.star = tuple(int(s) for s in star)
        self.dims = tuple(dims)
        self.M = M
        n = len(self.labels)
        if not n:
            raise BadLabelFile("need at least one label")
        if len(self.star) != n or len(self.dims) != n:
            raise BadLabelFile("labels, involution and dims must have the same length")
        if any(not 0 <= s < n for s in self.star):
            raise BadLabelFile("involution index out of range")
        if any(self.star[self.star[i]] != i for i in range(n)):
            raise BadLabelFile("duality is not an involution")
        if self.star[0] != 0 or self.dims[0] != 1:
            raise BadLabelFile("the first label must be a self-dual unit of dimension 1")
        for i in range(n):
            if not _positive(self.dims[i]):
                raise BadLabelFile(f"dimension of {self.labels[i]} is not positive")
            if self.dims[self.star[i]] != self.dims[i]:
                raise BadLabelFile(f"{self.labels[i]} and its dual have different dimensions")

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, FusionLabelSet):
            return NotImplemented
        return (self.labels, self.star, self.dims) == (other.labels, other.star, other.dims)

    __hash__ = None

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise BadLabelFile(f"unknown label {label!r}") from None

    @classmethod
    def from_json(cls, data):
        """Parse ``{"labels": [...], "dual": {a: b}, "dims": {a: scalar}, "conductor": M}``.

        ``dual`` may list each pair once; labels not mentioned are self-dual.  Scalars use the exact_scalar
        JSON encoding, or plain integers / "p/q" strings.
        """
        try:
            labels = [str(x) for x in data["labels"]]
            M = int(data.get("conductor", 1))
            pos = {x: i for i, x in enumerate(labels)}
            dual_map = {}
            for a, b in data.get("dual", {}).items():
                a, b = str(a), str(b)
                for x, y in ((a, b), (b, a)):
                    if dual_map.get(x, y) != y:
                        raise BadLabelFile(f"conflicting duals for {x!r}")
                    dual_map[x] = y
            star = [pos[str(dual_map.get(x, x))] for x in labels]
            dims = []
            for x in labels:
                raw = data["dims"][x]
                if isinstance(raw, (int, str)):
                    dims.append(Fraction(raw))
                else:
                    dims.append(scalar_from_json(raw, M))
        except (KeyError, TypeError, ValueError) as exc:
            raise BadLabelFile(f"malformed label file: {exc}") from exc
        return cls(labels, star, dims, M=M)

    @classmethod
    def load(cls, path):
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise BadLabelFile(str(exc)) from exc
        return cls.from_json(data)

    def to_json(self):
        return {
            "labels": list(self.labels),
            "dual": {self.labels[i]: self.labels[s] for i, s in enumerate(self.star)},
            "dims": {self.labels[i]: scalar_to_json(d) for i, d in enumerate(self.dims)},
            "conductor": self.M,
        }


def golden_labels() -> FusionLabelSet:
    """{1, tau} with d_tau = (1 + sqrt 5)/2 = 1 + zeta_5 + zeta_5^4."""
    phi = 1 + Cyclo.zeta(5, 1) + Cyclo.zeta(5, 4)
    return FusionLabelSet(["1", "tau"], [0, 1], [Fraction(1), phi], M=5)


def ising_labels() -> FusionLabelSet:
    """{1, psi, sigma} with d_sigma = sqrt 2 = zeta_8 + zeta_8^-1."""
    r2 = Cyclo.zeta(8, 1) + Cyclo.zeta(8, 7)
    return FusionLabelSet(["1", "psi", "sigma"], [0, 1, 2], [Fraction(1), Fraction(1), r2], M=8)


def cyclic_labels(n) -> FusionLabelSet:
    """Pointed labels Z/n with i^* = -i; the simplest non-self-dual case."""
    return FusionLabelSet([str(i) for i in range(n)], [(-i) % n for i in range(n)],
                          [Fraction(1)] * n)


class MatVecObject:
    """A multiplicity matrix m[i][j] = multiplicity of X_i^j."""

    __slots__ = ("labels", "m")

    def __init__(self, labels: FusionLabelSet, m):
        n = len(labels)
        rows = tuple(tuple(int(x) for x in row) for row in m)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise LabelMismatch("multiplicity matrix does not match the label set")
        if any(x < 0 for r in rows for x in r):
            raise ValueError("multiplicities must be nonnegative")
        self.labels = labels
        self.m = rows

    @classmethod
    def simple(cls, labels, i, j):
        n = len(labels)
        return cls(labels, [[1 if (a, b) == (i, j) else 0 for b in range(n)] for a in range(n)])

    @classmethod
    def unit(cls, labels):
        """The reduced unit: the sum of all X_i^i."""
        n = len(labels)
        return cls(labels, [[1 if a == b else 0 for b in range(n)] for a in range(n)])

    @classmethod
    def zero(cls, labels):
        n = len(labels)
        return cls(labels, [[0] * n for _ in range(n)])

    def __repr__(self):
        return f"MatVecObject({[list(r) for r in self.m]})"

    def __eq__(self, other):
        if not isinstance(other, MatVecObject):
            return NotImplemented
        return self.labels == other.labels and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __add__(self, other):
        _check(self, other)
        return MatVecObject(self.labels, [[a + b for a, b in zip(r, s)] for r, s in zip(self.m, other.m)])

    def summands(self):
        """Simple summands (i, j), with repetition."""
        return [(i, j) for i, row in enumerate(self.m) for j, c in enumerate(row) for _ in range(c)]

    def is_zero(self):
        return not any(any(r) for r in self.m)


def _check(V, W):
    if V.labels != W.labels:
        raise LabelMismatch("objects use different label sets")


def red_product(V: MatVecObject, W: MatVecObject) -> MatVecObject:
    """(V (x)bar W)_i^l = sum_j V_i^j W_j^l."""
    _check(V, W)
    n = len(V.labels)
    out = [[sum(V.m[i][j] * W.m[j][l] for j in range(n)) for l in range(n)] for i in range(n)]
    return MatVecObject(V.labels, out)


def pairing_multiplicity(labels: FusionLabelSet, a, b) -> int:
    """dim Hom(1, X_a (x) X_b) for simples: 1 exactly when b is dual to a."""
    return 1 if labels.star[a] == b else 0


def red_product_oracle(V: MatVecObject, W: MatVecObject) -> MatVecObject:
    """The reduced product summand by summand.

    (Y_1 (x) Y_2) (x)bar (W_1 (x) W_2) = <Y_2, W_1> Y_1 (x) W_2 with
    X_i^j = X_i (x) X_j^*, so the pairing is between X_j^* and X_k.
    """
    _check(V, W)
    L = V.labels
    n = len(L)
    acc = [[0] * n for _ in range(n)]
    for i, j in V.summands():
        for k, l in W.summands():
            acc[i][l] += pairing_multiplicity(L, L.star[j], k)
    return MatVecObject(L, acc)


def dual(V: MatVecObject) -> MatVecObject:
    """(X_i^j)^vee = X_j^i, so duality transposes the matrix."""
    n = len(V.labels)
    return MatVecObject(V.labels, [[V.m[j][i] for j in range(n)] for i in range(n)])


def um_action(V: MatVecObject) -> MatVecObject:
    """X (x) Y -> Y (x) X sends X_i^j to X_{j*}^{i*}."""
    L = V.labels
    n = len(L)
    return MatVecObject(L, [[V.m[L.star[b]][L.star[a]] for b in range(n)] for a in range(n)])


def _dim_sum(V, f):
    L = V.labels
    total = Fraction(0)
    for i, row in enumerate(V.m):
        for j, c in enumerate(row):
            if c:
                total = total + c * f(L.dims[i], L.dims[j])
    if isinstance(total, Cyclo):
        total = total.simplify()
    return total


def left_dim(V: MatVecObject):
    """Sum of multiplicity * d_j / d_i."""
    return _dim_sum(V, lambda di, dj: dj / di)


def right_dim(V: MatVecObject):
    """Sum of multiplicity * d_i / d_j."""
    return _dim_sum(V, lambda di, dj: di / dj)


def simple_fusion_table(labels: FusionLabelSet):
    """For every pair of simples X_i^j, X_k^l: the product as a list of (a, b, mult)."""
    n = len(labels)
    out = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    P = red_product(MatVecObject.simple(labels, i, j), MatVecObject.simple(labels, k, l))
                    out[(i, j, k, l)] = [(a, b, c) for a, row in enumerate(P.m) for b, c in enumerate(row) if c]
    return out


def dim_matrices(labels: FusionLabelSet):
    """Left and right dimension of every X_i^j as two matrices."""
    n = len(labels)
    left = [[left_dim(MatVecObject.simple(labels, i, j)) for j in range(n)] for i in range(n)]
    right = [[right_dim(MatVecObject.simple(labels, i, j)) for j in range(n)] for i in range(n)]
    return left, right
