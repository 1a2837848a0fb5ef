"""Regenerate src/redcenter/data/zoo.json.

Groups are built from concrete models (integers mod n, permutations,
unit quaternions) and their irreps from classical formulas.  Centralizer
cross-references are found by brute-force isomorphism search.
"""

import itertools
import json
import pathlib

from redcenter.cyclo import Cyclo, scalar_to_json
from redcenter.group import FiniteGroup, conjugacy_classes

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "redcenter" / "data" / "zoo.json"


def table_of(elements, mul):
    pos = {x: i for i, x in enumerate(elements)}
    return [[pos[mul(a, b)] for b in elements] for a in elements]


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def closure(gens, mul, ident):
    seen = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.append(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def zeta(n, k):
    if n == 1 or k % n == 0:
        return 1
    if 2 * (k % n) == n:
        return -1
    return Cyclo.zeta(n, k)


# --- groups ----------------------------------------------------------------


def cyclic(n):
    els = list(range(n))
    irreps = [(f"chi{k}", [[[zeta(n, g * k)]] for g in els]) for k in range(n)]
    return els, (lambda a, b: (a + b) % n), irreps, [str(g) for g in els]


def klein():
    els = [(a, b) for a in range(2) for b in range(2)]
    irreps = [(f"chi{s}{t}", [[[(-1) ** (s * a + t * b)]] for a, b in els])
              for s in range(2) for t in range(2)]
    return els, (lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)), irreps, [f"{a}{b}" for a, b in els]


def s3():
    els = sorted(itertools.permutations(range(3)))

    def sign(p):
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
        return (-1) ** inv

    def coords(a):
        # e_a - e_2 in the basis e_0 - e_2, e_1 - e_2
        return [1 if a == 0 else 0, 1 if a == 1 else 0]

    def std(p):
        cols = []
        for b in (0, 1):
            x = coords(p[b])
            y = coords(p[2])
            cols.append([x[0] - y[0], x[1] - y[1]])
        return [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]

    irreps = [("1", [[[1]] for _ in els]), ("sgn", [[[sign(p)]] for p in els]), ("std", [std(p) for p in els])]
    return els, compose, irreps, ["".join(map(str, p)) for p in els]


def d4():
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    els = sorted(closure([r, s], compose, (0, 1, 2, 3)))
    verts = [(1, 0), (0, 1), (-1, 0), (0, -1)]

    def geo(p):
        c0, c1 = verts[p[0]], verts[p[1]]
        return [[c0[0], c1[0]], [c0[1], c1[1]]]

    def kind(p):
        m = geo(p)
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        return p[0], 0 if det == 1 else 1

    irreps = [
        ("1", [[[1]] for _ in els]),
        ("det", [[[(-1) ** kind(p)[1]]] for p in els]),
        ("rot", [[[(-1) ** kind(p)[0]]] for p in els]),
        ("rotdet", [[[(-1) ** sum(kind(p))]] for p in els]),
        ("geo", [geo(p) for p in els]),
    ]
    return els, compose, irreps, ["".join(map(str, p)) for p in els]


def qmul(x, y):
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def q8():
    units = []
    names = []
    for k, nm in enumerate(["1", "i", "j", "k"]):
        for sgn in (1, -1):
            v = [0, 0, 0, 0]
            v[k] = sgn
            units.append(tuple(v))
            names.append(("" if sgn == 1 else "-") + nm)
    # order: 1, -1, i, -i, j, -j, k, -k
    I = Cyclo.zeta(4, 1)

    def two_dim(q):
        a, b, c, d = q
        return [[a + b * I, c + d * I], [-c + d * I, a - b * I]]

    def kind(q):
        return next(k for k in range(4) if q[k])

    irreps = [("1", [[[1]] for _ in units])]
    for u, nm in ((1, "chi_i"), (2, "chi_j"), (3, "chi_k")):
        irreps.append((nm, [[[1 if kind(q) in (0, u) else -1]] for q in units]))
    irreps.append(("spin", [two_dim(q) for q in units]))
    return units, qmul, irreps, names


SPECS = [
    ("Z2", lambda: cyclic(2), None),
    ("Z3", lambda: cyclic(3), None),
    ("Z4", lambda: cyclic(4), 2),
    ("Z2xZ2", klein, None),
    ("S3", s3, None),
    ("D4", d4, None),
    ("Q8", q8, 1),
]


def isomorphisms(H, G, target):
    """Yield embeddings H -> G with image ``target`` (brute force on generators)."""
    gens = H.generators
    cand = sorted(target)
    for imgs in itertools.product(cand, repeat=len(gens)):
        phi = {H.identity: G.identity}
        frontier = [H.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for s, t in zip(gens, imgs):
                    y = H.m(x, s)
                    v = G.m(phi[x], t)
                    if y in phi:
                        if phi[y] != v:
                            ok = False
                            break
                    else:
                        phi[y] = v
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if ok and len(phi) == H.order and set(phi.values()) == set(target):
            yield [phi[h] for h in H.elements]


def build():
    groups, irreps_json, built = [], {}, {}
    for name, ctor, z in SPECS:
        els, mul, irreps, names = ctor()
        table = table_of(els, mul)
        G = FiniteGroup(table, z=z, name=name)
        built[name] = G
        groups.append({"name": name, "table": table, "z": z, "element_names": names})
        irreps_json[name] = [
            {
                "label": label,
                "dim": len(mats[0]),
                "matrices": {str(g): [[scalar_to_json(x) for x in row] for row in mats[g]]
                             for g in range(len(els))},
            }
            for label, mats in irreps
        ]
    centralizers = {}
    for name, G in built.items():
        refs = []
        for c in conjugacy_classes(G):
            g = c.representative
            target = set(G.centralizer(g))
            found = None
            if len(target) == G.order:
                found = (name, list(G.elements))
            else:
                for hname, H in built.items():
                    if H.order != len(target):
                        continue
                    emb = next(isomorphisms(H, G, target), None)
                    if emb is not None:
                        found = (hname, emb)
                        break
            if found is None:
                raise SystemExit(f"no zoo group matches the centralizer of {g} in {name}")
            refs.append({"rep": g, "group": found[0], "embedding": found[1]})
        centralizers[name] = refs
    return {"schema": 1, "groups": groups, "irreps": irreps_json, "centralizers": centralizers}


if __name__ == "__main__":
    data = build()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(data, indent=1))
    print(f"wrote {OUT}")
