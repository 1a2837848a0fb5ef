"""Exact arithmetic in the cyclotomic field Q(zeta_M).

Elements are stored in the power basis 1, z, ..., z^(phi(M)-1) reduced
modulo the M-th cyclotomic polynomial, so equality is coefficient-wise.
Rational scalars are ordinary :class:`fractions.Fraction` objects; every
operation between a ``Fraction`` and a :class:`Cyclo` returns a ``Cyclo``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath


class DivisionByZero(ZeroDivisionError):
    pass


class ConductorMismatch(ValueError):
    pass


class NotAMultiple(ValueError):
    pass


class ConductorTooSmall(ValueError):
    pass


def _poly_divmod(num, den):
    """Exact division of integer polynomials (low degree first), den monic."""
    num = list(num)
    dq = len(den) - 1
    quot = [0] * max(len(num) - dq, 1)
    for k in range(len(num) - 1, dq - 1, -1):
        c = num[k]
        if c:
            quot[k - dq] = c
            for j in range(dq + 1):
                num[k - dq + j] -= c * den[j]
    return quot, num[:dq]


@lru_cache(maxsize=None)
def cyclotomic_poly(M: int) -> tuple[int, ...]:
    """Coefficients of Phi_M, lowest degree first.

    Obtained from x^M - 1 by dividing out Phi_d for every proper divisor d.
    """
    if M < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (M - 1) + [1]
    for d in range(1, M):
        if M % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_poly(d))
            assert not any(rem)
    return tuple(poly)


def euler_phi(M: int) -> int:
    return len(cyclotomic_poly(M)) - 1


class _Field:
    """Per-conductor tables: Phi_M, reduced powers of zeta and traces."""

    def __init__(self, M):
        self.M = M
        self.poly = cyclotomic_poly(M)
        self.phi = len(self.poly) - 1
        phi = self.phi
        powers = []
        cur = [Fraction(0)] * phi
        cur[0] = Fraction(1)
        for _ in range(M):
            powers.append(tuple(cur))
            # multiply by zeta: shift and reduce x^phi
            top = cur[-1]
            nxt = [Fraction(0)] + cur[:-1]
            if top:
                for j in range(phi):
                    nxt[j] -= top * self.poly[j]
            cur = nxt
        self.powers = powers
        units = [a for a in range(1, M + 1) if math.gcd(a, M) == 1]
        # trace of zeta^k is rational: sum the Galois images
        self.traces = tuple(
            sum((powers[(a * k) % M][0] for a in units), Fraction(0)) for k in range(phi)
        )

    def reduce(self, coeffs):
        """Reduce a coefficient list of arbitrary length modulo Phi_M."""
        phi, poly = self.phi, self.poly
        c = list(coeffs)
        if len(c) <= phi:
            c = c + [0] * (phi - len(c))
            return tuple(Fraction(x) for x in c)
        if len(c) >= self.M + phi:
            # fold by zeta^M = 1 first
            folded = [0] * self.M
            for k, x in enumerate(c):
                folded[k % self.M] += x
            c = folded
        for k in range(len(c) - 1, phi - 1, -1):
            top = c[k]
            if top:
                for j in range(phi):
                    c[k - phi + j] -= top * poly[j]
        return tuple(Fraction(x) for x in c[:phi])


@lru_cache(maxsize=None)
def field(M: int) -> _Field:
    return _Field(M)


class Cyclo:
    """An element of Q(zeta_M) in canonical power-basis form."""

    __slots__ = ("M", "coeffs", "_rat")

    def __init__(self, M: int, coeffs=()):
        F = field(M)
        self.M = M
        self.coeffs = F.reduce(coeffs)
        self._rat = not any(self.coeffs[1:])

    @classmethod
    def _raw(cls, M, coeffs):
        obj = object.__new__(cls)
        obj.M = M
        obj.coeffs = coeffs
        obj._rat = not any(coeffs[1:])
        return obj

    # constructors --------------------------------------------------------
    @classmethod
    def rational(cls, M: int, q) -> Cyclo:
        phi = field(M).phi
        return cls._raw(M, (Fraction(q),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zeta(cls, M: int, k: int = 1) -> Cyclo:
        F = field(M)
        return cls._raw(M, F.powers[k % M])

    # inspection ----------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self._rat

    def rational_value(self) -> Fraction:
        if not self._rat:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def simplify(self):
        """Return a plain Fraction when the element is rational."""
        return self.coeffs[0] if self._rat else self

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"({c})*z{self.M}^{k}")
        return " + ".join(terms) if terms else "0"

    # arithmetic ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.M != self.M:
                raise ConductorMismatch(f"conductors {self.M} and {other.M} differ")
            return other
        if isinstance(other, Rational):
            return Cyclo.rational(self.M, other)
        return None

    def __add__(self, other):
        if isinstance(other, Rational):
            c = list(self.coeffs)
            c[0] += other
            return Cyclo._raw(self.M, tuple(c))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo._raw(self.M, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._raw(self.M, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, Rational):
            return self + (-other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo._raw(self.M, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, q):
        return Cyclo._raw(self.M, tuple(a * q for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self._scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o._rat:
            return self._scale(o.coeffs[0])
        if self._rat:
            return o._scale(self.coeffs[0])
        a, b = self.coeffs, o.coeffs
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclo._raw(self.M, field(self.M).reduce(prod))

    __rmul__ = __mul__

    def inv(self) -> Cyclo:
        if not self:
            raise DivisionByZero("inverse of zero in Q(zeta_%d)" % self.M)
        if self._rat:
            return Cyclo.rational(self.M, 1 / self.coeffs[0])
        F = field(self.M)
        phi = F.phi
        # columns: self * zeta^k; solve for y with self*y = 1
        cols = []
        cur = self
        z = Cyclo.zeta(self.M)
        for _ in range(phi):
            cols.append(cur.coeffs)
            cur = cur * z
        aug = [[cols[k][r] for k in range(phi)] + [Fraction(int(r == 0))] for r in range(phi)]
        for c in range(phi):
            p = next(r for r in range(c, phi) if aug[r][c])
            aug[c], aug[p] = aug[p], aug[c]
            piv = aug[c][c]
            row = [x / piv for x in aug[c]]
            aug[c] = row
            for r in range(phi):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], row)]
        y = [aug[r][phi] for r in range(phi)]
        return Cyclo._raw(self.M, tuple(y))

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self._scale(Fraction(1) / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return self.inv() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = Cyclo.rational(self.M, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclo):
            if other.M == self.M:
                return self.coeffs == other.coeffs
            L = math.lcm(self.M, other.M)
            return self.lift(L).coeffs == other.lift(L).coeffs
        if isinstance(other, Rational):
            return self._rat and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        # normalised trace is independent of the conductor used
        if self._rat:
            return hash(self.coeffs[0])
        F = field(self.M)
        tr = sum((c * t for c, t in zip(self.coeffs, F.traces)), Fraction(0))
        return hash(tr / F.phi)

    # field maps ----------------------------------------------------------
    def conjugate(self) -> Cyclo:
        """Galois automorphism zeta -> zeta^-1 (complex conjugation)."""
        if self._rat:
            return self
        F = field(self.M)
        out = [Fraction(0)] * F.phi
        for k, c in enumerate(self.coeffs):
            if c:
                for j, p in enumerate(F.powers[(-k) % self.M]):
                    if p:
                        out[j] += c * p
        return Cyclo._raw(self.M, tuple(out))

    def lift(self, M2: int) -> Cyclo:
        """The same field element viewed in Q(zeta_M2), for M | M2."""
        if M2 % self.M:
            raise NotAMultiple(f"{M2} is not a multiple of {self.M}")
        if M2 == self.M:
            return self
        step = M2 // self.M
        c = [0] * (step * (len(self.coeffs) - 1) + 1)
        for k, x in enumerate(self.coeffs):
            c[k * step] = x
        return Cyclo(M2, c)

    def galois(self, a: int) -> Cyclo:
        """The automorphism zeta -> zeta^a, a coprime to M."""
        if math.gcd(a, self.M) != 1:
            raise ValueError(f"{a} is not a unit mod {self.M}")
        F = field(self.M)
        out = [Fraction(0)] * F.phi
        for k, c in enumerate(self.coeffs):
            if c:
                for j, p in enumerate(F.powers[(a * k) % self.M]):
                    out[j] += c * p
        return Cyclo._raw(self.M, tuple(out))

    def to_complex(self, prec: int = 53) -> mpmath.mpc:
        with mpmath.workprec(prec):
            z = mpmath.expjpi(mpmath.mpf(2) / self.M)
            return mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * z**k
                               for k, c in enumerate(self.coeffs) if c)

    def interval(self, prec: int = 64):
        """(real, imag) intervals of the embedding zeta -> exp(2 pi i / M)."""
        iv = mpmath.iv
        saved = iv.prec
        iv.prec = prec
        try:
            re = iv.mpf(0)
            im = iv.mpf(0)
            for k, c in enumerate(self.coeffs):
                if c:
                    ang = 2 * iv.pi * k / self.M
                    q = iv.mpf(c.numerator) / c.denominator
                    re += q * iv.cos(ang)
                    im += q * iv.sin(ang)
            return re, im
        finally:
            iv.prec = saved

    # serialisation -------------------------------------------------------
    def to_json(self) -> dict:
        return {"M": self.M, "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> Cyclo:
        M = int(data["M"])
        coeffs = [Fraction(int(n), int(d)) for n, d in data["coeffs"]]
        if len(coeffs) != euler_phi(M):
            raise ValueError(f"expected {euler_phi(M)} coefficients for conductor {M}")
        return cls(M, coeffs)


# ---------------------------------------------------------------------------
# scalar helpers shared by the linear algebra


def lift_scalar(x, M: int):
    """Bring a Fraction/int/Cyclo into conductor M, rationals stay Fractions."""
    if isinstance(x, Cyclo):
        if x.is_rational:
            return x.coeffs[0]
        return x.lift(M)
    return Fraction(x)


def simplify(x):
    if isinstance(x, Cyclo) and x._rat:
        return x.coeffs[0]
    return x


def scalar_to_json(x) -> dict:
    if isinstance(x, Cyclo):
        return x.to_json()
    q = Fraction(x)
    return {"M": 1, "coeffs": [[q.numerator, q.denominator]]}


def scalar_from_json(data, M: int | None = None):
    """Decode a serialised Cyclo; lifted into conductor M when given."""
    x = Cyclo.from_json(data)
    if x.is_rational:
        return x.coeffs[0]
    return x if M is None else x.lift(M)


def conj_scalar(x):
    return x.conjugate() if isinstance(x, Cyclo) else x


# ---------------------------------------------------------------------------
# square roots of integers via quadratic Gauss sums


def _squarefree_split(n):
    """n = s^2 * m with m squarefree; returns (s, sorted primes of m)."""
    s, primes = 1, []
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            primes.append(p)
        p += 1
    if n > 1:
        primes.append(n)
    return s, primes


def min_sqrt_conductor(n: int) -> int:
    """Smallest M with sqrt(n) in Q(zeta_M)."""
    _, primes = _squarefree_split(n)
    m = math.prod(primes)
    if m == 1:
        return 1
    return m if m % 4 == 1 else 4 * m


@lru_cache(maxsize=None)
def sqrt_int(n: int, M: int) -> Cyclo:
    """The positive square root of the positive integer n inside Q(zeta_M).

    Any M divisible by 4n works; ``ConductorTooSmall`` is raised only when
    sqrt(n) genuinely does not lie in Q(zeta_M).
    """
    if n < 1:
        raise ValueError("sqrt_int needs a positive integer")
    need = min_sqrt_conductor(n)
    if M % need:
        raise ConductorTooSmall(f"sqrt({n}) needs conductor divisible by {need}, got {M}")
    s, primes = _squarefree_split(n)
    root = Cyclo.rational(M, s)
    n_three_mod_four = 0
    for p in primes:
        if p == 2:
            root = root * (Cyclo.zeta(M, M // 8) + Cyclo.zeta(M, -(M // 8)))
            continue
        step = M // p
        # g_p = sum_a zeta_p^(a^2): sqrt(p) if p = 1 mod 4, i*sqrt(p) otherwise
        gauss = [0] * M
        for a in range(p):
            gauss[(a * a % p) * step] += 1
        root = root * Cyclo(M, gauss)
        if p % 4 == 3:
            n_three_mod_four += 1
    # divide out i^k: i^-k = (-i)^k
    k = n_three_mod_four % 4
    if k % 2:
        root = root * Cyclo.zeta(M, -(M // 4) * k)
    elif k == 2:
        root = -root
    assert root * root == n, f"sqrt_int({n}, {M}) failed to square back"
    re, im = root.interval(64)
    if not (re.a > 0 and im.a <= 0 <= im.b):
        raise ArithmeticError(f"sqrt_int({n}, {M}) is not the positive real root: {re}, {im}")
    return root
