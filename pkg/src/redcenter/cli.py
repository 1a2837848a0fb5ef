"""Command-line front end.

Exit codes: 0 when every reported check passes, 1 when a mathematical
check fails, 2 for usage or input errors (unknown group, bad label file,
unknown suite, missing z).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time

from . import bundles as B
from .algebra import torus_center_check
from .cyclo import Cyclo, scalar_to_json
from .group import ZMissing, commuting_pairs, conjugacy_classes, diagonal_orbits
from .matvec import (
    BadLabelFile,
    FusionLabelSet,
    MatVecObject,
    cyclic_labels,
    dim_matrices,
    golden_labels,
    ising_labels,
    red_product,
)
from .oracle import (
    al_natural_check,
    braiding_sign_check,
    combine_check,
    pivotal_checks,
    q_report,
    sliding_check,
    super_pivotal_checks,
    u_equivariance_check,
)
from .rep import intertwiner_space
from .zoo import MissingCentralizerZoo, UnknownGroup, Zoo, ZooInvalid

SCHEMA = 1
DEFAULT_SEED = 20240229


class UnknownSuite(LookupError):
    pass


class UsageError(Exception):
    pass


def _scalar(x):
    """JSON form of an exact scalar plus a float rendering for humans."""
    if isinstance(x, Cyclo):
        c = x.to_complex()
        approx = float(c.real) if abs(float(c.imag)) < 1e-12 else str(complex(c))
        return {"exact": scalar_to_json(x), "approx": approx}
    return {"exact": scalar_to_json(x), "approx": float(x)}


def _approx(x):
    return _scalar(x)["approx"]


# ---------------------------------------------------------------------------
# commands; each returns (results, ok)


def cmd_group_info(zoo: Zoo, name: str):
    G = zoo.group(name)
    classes = conjugacy_classes(G)
    names = zoo.names.get(name)
    pairs = commuting_pairs(G)
    orbits = diagonal_orbits(G, pairs)
    label = (lambda g: names[g]) if names else str
    results = {
        "group": name,
        "order": G.order,
        "z": None if G.z is None else label(G.z),
        "classes": len(classes),
        "class_table": [
            {"representative": label(c.representative), "size": len(c),
             "centralizer_order": len(G.centralizer(c.representative))}
            for c in classes
        ],
        "commuting_pairs": len(pairs),
        "diagonal_orbits": len(orbits),
    }
    return results, True


def _dual_index(simple_list, dual_fn):
    out = []
    for s in simple_list:
        d = dual_fn(s)
        match = [k for k, t in enumerate(simple_list) if B.hom_space(d, t)]
        out.append(match[0] if len(match) == 1 else None)
    return out


def cmd_fusion(zoo: Zoo, name: str, product: str):
    if product not in B.PRODUCTS:
        raise UsageError(f"unknown product {product!r}; choose from {sorted(B.PRODUCTS)}")
    G = zoo.group(name)
    if product == "redz" and G.z is None:
        raise ZMissing(f"{name} has no central element z")
    S = B.simples(zoo, name)
    prod = B.PRODUCTS[product]
    dims = [s.dim for s in S]
    n = len(S)
    N, dims_ok = [], True
    for a in S:
        row = []
        for b in S:
            P = prod(a, b)
            mult = [B.multiplicity(P, c) if P.dim else 0 for c in S]
            dims_ok = dims_ok and sum(m * d for m, d in zip(mult, dims)) == P.dim
            row.append(mult)
        N.append(row)
    dual_fn = B.dual_convolution if product == "conv" else B.dual_reduced
    star = _dual_index(S, dual_fn)
    recip = None not in star and all(N[a][b][c] == N[star[a]][c][b]
                                     for a in range(n) for b in range(n) for c in range(n))
    checks = {"dimension consistency": dims_ok, "Frobenius reciprocity": recip}
    if product == "red":
        cls = G.class_index
        cls_of = [cls[s.support()[0]] for s in S]
        checks["class diagonal"] = all(not N[a][b][c] or cls_of[a] == cls_of[b] == cls_of[c]
                                       for a in range(n) for b in range(n) for c in range(n))
    results = {
        "group": name,
        "product": product,
        "simples": [{"label": s.label, "dim": s.dim} for s in S],
        "dual": star,
        "tensor": N,
        "checks": checks,
    }
    return results, all(checks.values())


def cmd_torus(zoo: Zoo, name: str):
    G = zoo.group(name)
    lhs, rhs, orbit, ok = torus_center_check(G)
    results = {
        "group": name,
        "center_dim_torus_algebra": lhs,
        "sum_over_classes_center_dim_double_of_centralizer": rhs,
        "orbit_weighted_class_count": orbit,
        "equal": ok,
    }
    return results, ok


PRESETS = {"golden": golden_labels, "ising": ising_labels, "z3": lambda: cyclic_labels(3)}


def _load_labels(source):
    if source in PRESETS:
        return PRESETS[source]()
    return FusionLabelSet.load(source)


def cmd_matvec(source: str):
    L = _load_labels(source)
    n = len(L)
    table = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    P = red_product(MatVecObject.simple(L, i, j), MatVecObject.simple(L, k, l))
                    if not P.is_zero():
                        table.append({"left": [L.labels[i], L.labels[j]],
                                      "right": [L.labels[k], L.labels[l]],
                                      "product": [[L.labels[a], L.labels[b], c]
                                                  for a, b, c in _entries(P)]})
    left, right = dim_matrices(L)
    delta_ok = all(
        red_product(MatVecObject.simple(L, i, j), MatVecObject.simple(L, k, l))
        == (MatVecObject.simple(L, i, l) if j == k else MatVecObject.zero(L))
        for i in range(n) for j in range(n) for k in range(n) for l in range(n)
    )
    results = {
        "labels": list(L.labels),
        "dual": [L.labels[s] for s in L.star],
        "nonzero_products": table,
        "left_dim": [[_scalar(x) for x in row] for row in left],
        "right_dim": [[_scalar(x) for x in row] for row in right],
        "checks": {"delta pattern": delta_ok},
    }
    return results, delta_ok


def _entries(P):
    return [(a, b, c) for a, row in enumerate(P.m) for b, c in enumerate(row) if c]


# ---------------------------------------------------------------------------
# oracle suites


def _check(name, ok, witness=None):
    out = {"check": name, "pass": bool(ok)}
    if not ok and witness is not None:
        out["witness"] = witness
    return out


def suite_q(zoo, name, trials, rng, super_=False):
    G = zoo.group(name)
    S = B.simples(zoo, name)
    out = []
    for t in range(trials):
        V, W = B.random_pair(S, rng)
        r = q_report(V, W, super_=super_)
        out.append(_check(f"pair {t}: {V.label} | {W.label}", r.ok,
                          {"idempotent": r.idempotent, "equivariant": r.equivariant,
                           "graded_dims": list(r.graded_dims), "expected": list(r.expected_dims)}))
    return out


def suite_pivotal(zoo, name, trials, rng):
    G = zoo.group(name)
    irr = zoo.irreps(name)
    out = []
    targets = [B.unit_reduced(G)] + B.simples(zoo, name)
    for V in targets:
        rep = pivotal_checks(V, irr)
        out.append(_check(f"pivotal {V.label or 'unit'}", rep.ok, rep.failures))
    wrong = pivotal_checks(B.unit_reduced(G), irr, normalization="unnormalized")
    msg = wrong.failures.get("ev coev (V)", "")
    out.append(_check("unnormalized variant detected", msg == f"equals {G.order} * id", wrong.failures))
    return out


def suite_sliding(zoo, name, trials, rng):
    irr = zoo.irreps(name)
    out = []
    X = irr.irreps
    weights = [k + 1 for k in range(len(X))]
    for x in X:
        r = sliding_check(x, irr, weights)
        out.append(_check(f"sliding {x.label}", r.ok, {"loop": _approx(r.loop_value)}))
    for a in X:
        for b in X:
            out.append(_check(f"combine {a.label},{b.label}", combine_check([a, b], irr)))
    top = X[-1]
    for x in X:
        fs = intertwiner_space(x, x)
        out.append(_check(f"naturality {x.label}", al_natural_check([x, top], x, fs[0] * 3)))
    return out


def suite_super(zoo, name, trials, rng):
    G = zoo.group(name)
    if G.z is None:
        raise ZMissing(f"{name} has no central element z")
    S = B.simples(zoo, name)
    out = suite_q(zoo, name, trials, rng, super_=True)
    for t in range(trials):
        V, W = B.random_pair(S, rng)
        out.append(_check(f"lambda pair {t}", B.lambda_comparison(V, W) is not None))
        sig = braiding_sign_check(V, W)
        ok = sig["plain on Lambda side"] and sig["agree off odd pieces"] and sig["sign -1 on odd pieces"]
        out.append(_check(f"braiding signs pair {t}", ok, sig))
    for V in S:
        rep = super_pivotal_checks(V)
        out.append(_check(f"super pivotal {V.label}", rep.ok, rep.failures))
    return out


def suite_uequiv(zoo, name, trials, rng):
    S = B.simples(zoo, name)
    out = [_check(f"U_S {V.label}", u_equivariance_check(V)) for V in S]
    for t in range(trials):
        V = B.random_bundle(S, rng)
        out.append(_check(f"U_S random {t}", u_equivariance_check(V)))
    return out


SUITES = {
    "q": suite_q,
    "pivotal": suite_pivotal,
    "sliding": suite_sliding,
    "super": suite_super,
    "uequiv": suite_uequiv,
}


def cmd_oracle(zoo: Zoo, suite: str, name: str, trials: int, seed: int):
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    rng = random.Random(seed)
    checks = SUITES[suite](zoo, name, trials, rng)
    ok = all(c["pass"] for c in checks)
    return {"suite": suite, "group": name, "trials": trials, "checks": checks,
            "passed": sum(c["pass"] for c in checks), "total": len(checks)}, ok


# ---------------------------------------------------------------------------
# rendering


def _table(results) -> str:
    lines = []

    def emit(key, value, indent=0):
        pad = "  " * indent
        if isinstance(value, dict) and "exact" in value and "approx" in value:
            lines.append(f"{pad}{key}: {value['approx']}")
        elif isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict) and "check" in value[0]:
            lines.append(f"{pad}{key}:")
            width = max(len(c["check"]) for c in value)
            for c in value:
                lines.append(f"{pad}  {c['check']:<{width}}  {'PASS' if c['pass'] else 'FAIL'}")
        elif isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{pad}{key}:")
            for row in value:
                cells = [str(x["approx"]) if isinstance(x, dict) and "approx" in x else str(x) for x in row]
                lines.append(f"{pad}  " + "  ".join(f"{c:>8}" for c in cells))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            keys = list(value[0])
            widths = [max(len(k), *(len(str(r.get(k))) for r in value)) for k in keys]
            lines.append(f"{pad}  " + "  ".join(k.ljust(w) for k, w in zip(keys, widths)))
            for r in value:
                lines.append(f"{pad}  " + "  ".join(str(r.get(k)).ljust(w) for k, w in zip(keys, widths)))
        else:
            lines.append(f"{pad}{key}: {value}")

    for k, v in results.items():
        emit(k, v)
    return "\n".join(lines)


def build_parser():
    p = argparse.ArgumentParser(prog="redcenter", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--zoo", default=None, help="path to a zoo JSON file (default: shipped zoo)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--trials", type=int, default=20)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group-info", parents=[common], help="classes, centralizers, commuting pairs")
    g.add_argument("name", nargs="?")
    g.add_argument("--group")

    f = sub.add_parser("fusion", parents=[common], help="fusion tensor of the simples")
    f.add_argument("name", nargs="?")
    f.add_argument("--group")
    f.add_argument("--product", default="red")

    t = sub.add_parser("torus", parents=[common], help="torus algebra center check")
    t.add_argument("name", nargs="?")
    t.add_argument("--group")

    m = sub.add_parser("matvec", parents=[common], help="matrix model tables")
    m.add_argument("labels", help="label file or one of: " + ", ".join(PRESETS))

    o = sub.add_parser("oracle", parents=[common], help="run a named check suite")
    o.add_argument("suite")
    o.add_argument("--group", default="S3")
    return p


def _group_arg(args):
    name = getattr(args, "group", None) or getattr(args, "name", None)
    if not name:
        raise UsageError("a group name is required")
    return name


def run(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.seed < 0 or args.seed >= 2 ** 64:
        print("error: --seed must be a 64-bit unsigned integer", file=err)
        return 2
    start = time.perf_counter()
    try:
        zoo = Zoo.load(args.zoo) if args.zoo else None
        if zoo is None:
            from .zoo import default_zoo

            zoo = default_zoo()
        if args.command == "group-info":
            inputs = {"group": _group_arg(args)}
            results, ok = cmd_group_info(zoo, inputs["group"])
        elif args.command == "fusion":
            inputs = {"group": _group_arg(args), "product": args.product}
            results, ok = cmd_fusion(zoo, inputs["group"], args.product)
        elif args.command == "torus":
            inputs = {"group": _group_arg(args)}
            results, ok = cmd_torus(zoo, inputs["group"])
        elif args.command == "matvec":
            inputs = {"labels": args.labels}
            results, ok = cmd_matvec(args.labels)
        else:
            inputs = {"suite": args.suite, "group": args.group, "trials": args.trials}
            results, ok = cmd_oracle(zoo, args.suite, args.group, args.trials, args.seed)
    except (UnknownGroup, UnknownSuite, MissingCentralizerZoo, ZooInvalid, BadLabelFile,
            ZMissing, UsageError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return 2
    digest = hashlib.sha256(json.dumps([args.command, inputs, args.seed], sort_keys=True).encode()).hexdigest()
    report = {
        "schema": SCHEMA,
        "command": args.command,
        "inputs": inputs,
        "inputs_digest": digest[:16],
        "seed": args.seed,
        "results": results,
        "ok": ok,
        "timing_s": round(time.perf_counter() - start, 3),
    }
    if args.format == "json":
        print(json.dumps(report, indent=1), file=out)
    else:
        print(_table({"command": args.command, **inputs, "seed": args.seed, **results,
                      "ok": ok}), file=out)
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
