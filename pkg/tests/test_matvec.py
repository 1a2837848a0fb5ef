import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from redcenter.cyclo import Cyclo
from redcenter.matvec import (
    BadLabelFile,
    FusionLabelSet,
    LabelMismatch,
    MatVecObject,
    cyclic_labels,
    dim_matrices,
    dual,
    golden_labels,
    ising_labels,
    left_dim,
    red_product,
    red_product_oracle,
    right_dim,
    um_action,
)

PRESETS = [golden_labels(), ising_labels(), cyclic_labels(3), cyclic_labels(4)]


def objects(labels):
    n = len(labels)
    return st.lists(st.lists(st.integers(0, 2), min_size=n, max_size=n), min_size=n, max_size=n).map(
        lambda m: MatVecObject(labels, m))


def test_golden_dims():
    L = golden_labels()
    phi = L.dims[1]
    left, right = dim_matrices(L)
    assert left[0][1] == phi
    assert left[1][0] == phi.inv()
    assert right[0][1] == phi.inv()
    assert left[0][0] == 1 and left[1][1] == 1


def test_ising_dims():
    L = ising_labels()
    left, _ = dim_matrices(L)
    r2 = L.dims[2]
    assert left[0][2] == r2
    assert left[2][1] * r2 == 1


@pytest.mark.parametrize("L", PRESETS, ids=["golden", "ising", "z3", "z4"])
def test_simple_delta_pattern(L):
    n = len(L)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    P = red_product(MatVecObject.simple(L, i, j), MatVecObject.simple(L, k, l))
                    expected = MatVecObject.simple(L, i, l) if j == k else MatVecObject.zero(L)
                    assert P == expected
                    assert red_product_oracle(MatVecObject.simple(L, i, j), MatVecObject.simple(L, k, l)) == P


def test_not_symmetric():
    L = cyclic_labels(3)
    A, B = MatVecObject.simple(L, 0, 1), MatVecObject.simple(L, 1, 2)
    assert not red_product(A, B).is_zero()
    assert red_product(B, A).is_zero()


def test_unit():
    for L in PRESETS:
        one = MatVecObject.unit(L)
        X = MatVecObject.simple(L, 0, len(L) - 1)
        assert red_product(one, X) == X == red_product(X, one)


@pytest.mark.parametrize("L", PRESETS, ids=["golden", "ising", "z3", "z4"])
def test_um_and_dual(L):
    n = len(L)
    for i in range(n):
        for j in range(n):
            X = MatVecObject.simple(L, i, j)
            assert um_action(um_action(X)) == X
            assert dual(dual(X)) == X
            assert left_dim(dual(X)) == right_dim(X)


@settings(max_examples=50, deadline=None)
@given(objects(cyclic_labels(3)), objects(cyclic_labels(3)))
def test_product_reversal(V, W):
    assert um_action(red_product(V, W)) == red_product(um_action(W), um_action(V))
    assert dual(red_product(V, W)) == red_product(dual(W), dual(V))
    assert red_product(V, W) == red_product_oracle(V, W)


def test_non_self_dual_um():
    L = cyclic_labels(3)
    X = MatVecObject.simple(L, 0, 1)
    # X_0^1 goes to X_{1*}^{0*} = X_2^0
    assert um_action(X) == MatVecObject.simple(L, 2, 0)
    assert dual(X) == MatVecObject.simple(L, 1, 0)


def test_label_file_round_trip(tmp_path):
    for L in PRESETS:
        p = tmp_path / "labels.json"
        p.write_text(json.dumps(L.to_json()))
        assert FusionLabelSet.load(p) == L


def test_dual_pairs_listed_once():
    L = FusionLabelSet.from_json({"labels": ["1", "a", "b"], "dual": {"a": "b"},
                                  "dims": {"1": 1, "a": 1, "b": 1}})
    assert L.star == (0, 2, 1)
    with pytest.raises(BadLabelFile):
        FusionLabelSet.from_json({"labels": ["1", "a", "b"], "dual": {"a": "b", "b": "1"},
                                  "dims": {"1": 1, "a": 1, "b": 1}})


def test_label_file_errors(tmp_path):
    with pytest.raises(BadLabelFile):
        FusionLabelSet.from_json({"labels": ["1", "a"], "dims": {"1": 1}})
    with pytest.raises(BadLabelFile):
        FusionLabelSet(["1", "a", "b"], [0, 2, 2], [1, 1, 1])
    with pytest.raises(BadLabelFile):
        FusionLabelSet(["1", "a"], [0, 1], [Fraction(1), Fraction(-2)])
    with pytest.raises(BadLabelFile):
        FusionLabelSet(["1", "a"], [0, 1], [Fraction(1), Cyclo.zeta(4)])
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(BadLabelFile):
        FusionLabelSet.load(p)


def test_label_mismatch():
    with pytest.raises(LabelMismatch):
        red_product(MatVecObject.unit(cyclic_labels(2)), MatVecObject.unit(cyclic_labels(3)))


def test_rep_s3_dims():
    # Rep(S3) as a label set: dims 1, 1, 2
    L = FusionLabelSet(["1", "sgn", "std"], [0, 1, 2], [Fraction(1), Fraction(1), Fraction(2)])
    left, right = dim_matrices(L)
    assert left[2][0] == Fraction(1, 2) and right[2][0] == 2
