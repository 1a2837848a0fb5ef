"""Finite groups given by multiplication tables.

Elements are the dense indices ``0..n-1``.  A group may carry a central
element ``z`` with ``z*z = e``, which turns ``Rep(G)`` into the super
category ``Rep(G, z)``; ``z = e`` is the purely even case.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property


class GroupError(ValueError):
    pass


class NotAssociative(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class BadCentralElement(GroupError):
    pass


class ZMissing(ValueError):
    """A super construction was asked for on a group without z."""


def require_z(G):
    if G.z is None:
        raise ZMissing("group has no central element z")


EXHAUSTIVE_LIMIT = 256


@dataclass(frozen=True)
class ConjClass:
    representative: int
    members: tuple

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class Orbit:
    """An orbit of simultaneous conjugation on pairs, with its stabilizer."""

    representative: tuple
    members: tuple
    stabilizer: tuple


class FiniteGroup:
    def __init__(self, mul, z=None, name=None, seed=0):
        n = len(mul)
        if n == 0:
            raise GroupError("empty table")
        table = []
        for row in mul:
            row = tuple(int(x) for x in row)
            if len(row) != n or any(x < 0 or x >= n for x in row):
                raise GroupError("table must be square with entries in 0..n-1")
            table.append(row)
        self.mul = tuple(table)
        self.order = n
        self.name = name

        ident = None
        for e in range(n):
            if all(table[e][g] == g and table[g][e] == g for g in range(n)):
                ident = e
                break
        if ident is None:
            raise NoIdentity("no two-sided identity element in the table")
        self.identity = ident

        inv = []
        for g in range(n):
            cands = [h for h in range(n) if table[g][h] == ident and table[h][g] == ident]
            if not cands:
                raise NoInverse(f"element {g} has no two-sided inverse")
            inv.append(cands[0])
        self.inv = tuple(inv)

        if n <= EXHAUSTIVE_LIMIT:
            self.assoc_mode = "exhaustive"
            for a in range(n):
                ra = table[a]
                for b in range(n):
                    ab = ra[b]
                    rb = table[b]
                    rab = table[ab]
                    for c in range(n):
                        if rab[c] != ra[rb[c]]:
                            raise NotAssociative(f"(g{a}*g{b})*g{c} != g{a}*(g{b}*g{c})")
        else:
            self.assoc_mode = "sampled"
            rng = random.Random(seed)
            for _ in range(10 * n * n):
                a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise NotAssociative(f"(g{a}*g{b})*g{c} != g{a}*(g{b}*g{c})")

        if z is not None:
            z = int(z)
            if not 0 <= z < n:
                raise BadCentralElement(f"z = {z} out of range")
            if table[z][z] != ident:
                raise BadCentralElement(f"z = {z} does not square to the identity")
            for g in range(n):
                if table[z][g] != table[g][z]:
                    raise BadCentralElement(f"z = {z} does not commute with {g}")
        self.z = z

    # basic operations ----------------------------------------------------
    def __repr__(self):
        label = self.name or f"order {self.order}"
        return f"<FiniteGroup {label}>"

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def m(self, a, b):
        return self.mul[a][b]

    def conj(self, h, g):
        """h g h^-1."""
        return self.mul[self.mul[h][g]][self.inv[h]]

    @property
    def elements(self):
        return range(self.order)

    @property
    def has_z(self) -> bool:
        """True when a super structure (possibly z = e) is attached."""
        return self.z is not None

    @property
    def z_or_e(self) -> int:
        return self.identity if self.z is None else self.z

    def is_abelian(self) -> bool:
        t = self.mul
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def element_order(self, g):
        k, x = 1, g
        while x != self.identity:
            x = self.mul[x][g]
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        out = 1
        for g in self.elements:
            out = lcm(out, self.element_order(g))
        return out

    @cached_property
    def generators(self) -> tuple:
        """A small generating set, chosen greedily by element index."""
        gens = []
        span = {self.identity}
        for g in self.elements:
            if g in span:
                continue
            gens.append(g)
            span = self.closure(gens)
            if len(span) == self.order:
                break
        return tuple(gens)

    def closure(self, gens):
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def with_z(self, z):
        """Same table, different central element."""
        return FiniteGroup(self.mul, z=z, name=self.name)

    # classes and centralizers --------------------------------------------
    @cached_property
    def _classes(self):
        seen = set()
        out = []
        for g in self.elements:
            if g in seen:
                continue
            members = tuple(sorted({self.conj(x, g) for x in self.elements}))
            seen.update(members)
            out.append(ConjClass(g, members))
        return tuple(out)

    @cached_property
    def class_index(self):
        idx = [0] * self.order
        for k, c in enumerate(self._classes):
            for g in c.members:
                idx[g] = k
        return tuple(idx)

    def centralizer(self, g) -> tuple:
        t = self.mul
        return tuple(x for x in self.elements if t[x][g] == t[g][x])

    def subgroup(self, elements, name=None):
        """The subgroup on ``elements`` re-indexed as a FiniteGroup.

        Returns ``(H, embed)`` where ``embed[i]`` is the ambient index of the
        i-th element of H.
        """
        elems = tuple(sorted(elements))
        pos = {g: i for i, g in enumerate(elems)}
        try:
            table = [[pos[self.mul[a][b]] for b in elems] for a in elems]
        except KeyError as exc:
            raise GroupError("element set is not closed under multiplication") from exc
        z = pos.get(self.z) if self.z is not None else None
        return FiniteGroup(table, z=z, name=name), elems


def group_from_table(mul, z=None, name=None) -> FiniteGroup:
    return FiniteGroup(mul, z=z, name=name)


def conjugacy_classes(G: FiniteGroup):
    return list(G._classes)


def centralizer(G: FiniteGroup, g: int):
    return G.centralizer(g)


def commuting_pairs(G: FiniteGroup):
    t = G.mul
    return [(a, b) for a in G.elements for b in G.elements if t[a][b] == t[b][a]]


def diagonal_orbits(G: FiniteGroup, pairs):
    """Orbits of simultaneous conjugation on a closed set of pairs."""
    pending = set(pairs)
    out = []
    for p in sorted(pairs):
        if p not in pending:
            continue
        h1, h2 = p
        members = set()
        stab = []
        for x in G.elements:
            q = (G.conj(x, h1), G.conj(x, h2))
            members.add(q)
            if q == p:
                stab.append(x)
        if not members <= pending:
            raise GroupError("pair set is not closed under conjugation")
        pending -= members
        out.append(Orbit(p, tuple(sorted(members)), tuple(stab)))
    return out


# ---------------------------------------------------------------------------
# small constructors used by the zoo generator and tests


def cyclic_group(n, name=None):
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], name=name or f"Z{n}")


def permutation_group(perms, name=None, z=None):
    """Group whose elements are the given permutations (tuples), composed as (p*q)(i) = p(q(i))."""
    perms = [tuple(p) for p in perms]
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[i]] for i in range(len(q)))] for q in perms] for p in perms]
    return FiniteGroup(table, z=z, name=name)


def direct_product(G: FiniteGroup, H: FiniteGroup, name=None):
    n, m = G.order, H.order
    table = [[G.mul[a // m][b // m] * m + H.mul[a % m][b % m] for b in range(n * m)]
             for a in range(n * m)]
    return FiniteGroup(table, name=name)
