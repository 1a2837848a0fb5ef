import pytest

from redcenter.group import cyclic_group
from redcenter.linalg import Matrix
from redcenter.rep import (
    GModule,
    GroupMismatch,
    NotARepresentation,
    direct_sum,
    dual,
    intertwiner_space,
    invariants,
    invariants_and_dual_basis,
    pair_reversed,
    tensor,
    tensor_all,
    zoo_validate,
)

from conftest import ALL_GROUPS


@pytest.mark.parametrize("name", ALL_GROUPS)
def test_zoo_irreps_are_valid(zoo, name):
    irr = zoo.irreps(name)
    report = zoo_validate(irr)
    assert report.ok, report.failures
    assert report.sum_d2 == zoo.group(name).order


@pytest.mark.parametrize("name", ALL_GROUPS)
def test_schur_orthogonality(zoo, name):
    irr = zoo.irreps(name)
    for i, X in enumerate(irr.irreps):
        for j, Y in enumerate(irr.irreps):
            assert len(intertwiner_space(X, Y)) == (1 if i == j else 0)


def test_regular_decomposition(zoo):
    G = zoo.group("S3")
    R = GModule.regular(G)
    irr = zoo.irreps("S3")
    for X in irr.irreps:
        assert len(intertwiner_space(X, R)) == X.dim
    assert len(invariants(R)) == 1


def test_tensor_and_dual(zoo):
    irr = zoo.irreps("S3")
    std = irr.irreps[-1]
    T = tensor(std, dual(std))
    assert T.dim == 4
    assert len(invariants(T)) == 1
    assert dual(dual(std)) == std
    assert tensor_all([std, std, std]).dim == 8
    assert direct_sum(std, irr.irreps[0]).dim == 3


def test_dual_bases_pair_to_identity(zoo):
    irr = zoo.irreps("S3")
    std = irr.irreps[-1]
    mods = [std, std, std]
    phi, phid = invariants_and_dual_basis(mods)
    assert len(phi) == 1
    for a, f in enumerate(phi):
        for b, g in enumerate(phid):
            assert pair_reversed(f, g, [2, 2, 2]) == (1 if a == b else 0)


def test_bad_module():
    G = cyclic_group(3)
    with pytest.raises(NotARepresentation):
        GModule(G, [Matrix.identity(1)] * 2)
    with pytest.raises(NotARepresentation):
        GModule(G, [Matrix.identity(1), Matrix.scalar(1, 2), Matrix.scalar(1, 4)])


def test_group_mismatch():
    A = GModule.trivial(cyclic_group(2))
    B = GModule.trivial(cyclic_group(3))
    with pytest.raises(GroupMismatch):
        tensor(A, B)
