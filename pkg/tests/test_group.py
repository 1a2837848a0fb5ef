import itertools

import pytest

from redcenter.group import (
    BadCentralElement,
    FiniteGroup,
    NoIdentity,
    NoInverse,
    NotAssociative,
    ZMissing,
    commuting_pairs,
    conjugacy_classes,
    cyclic_group,
    diagonal_orbits,
    direct_product,
    permutation_group,
    require_z,
)

from conftest import ALL_GROUPS


def test_s3_classes_pairs_orbits(zoo):
    G = zoo.group("S3")
    classes = conjugacy_classes(G)
    assert sorted(len(c) for c in classes) == [1, 2, 3]
    pairs = commuting_pairs(G)
    assert len(pairs) == 18
    assert len(diagonal_orbits(G, pairs)) == 8


@pytest.mark.parametrize("name", ALL_GROUPS)
def test_commuting_pairs_count(zoo, name):
    # |Omega| = |G| * #classes
    G = zoo.group(name)
    assert len(commuting_pairs(G)) == G.order * len(conjugacy_classes(G))


@pytest.mark.parametrize("name", ALL_GROUPS)
def test_orbit_stabilizer(zoo, name):
    G = zoo.group(name)
    for orb in diagonal_orbits(G, commuting_pairs(G)):
        assert len(orb.members) * len(orb.stabilizer) == G.order


def test_bad_tables():
    with pytest.raises(NoIdentity):
        FiniteGroup([[1, 0], [0, 0]])
    with pytest.raises(NoInverse):
        FiniteGroup([[0, 1, 2], [1, 1, 1], [2, 1, 2]])
    # a loop that is not associative: unique identity and inverses
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAssociative):
        FiniteGroup(table)


def test_central_element_checks():
    Z4 = cyclic_group(4)
    assert Z4.with_z(2).z == 2
    with pytest.raises(BadCentralElement):
        Z4.with_z(1)
    S3 = permutation_group(list(itertools.permutations(range(3))))
    with pytest.raises(BadCentralElement):
        S3.with_z(S3.generators[0])
    with pytest.raises(ZMissing):
        require_z(S3)
    assert S3.z_or_e == S3.identity


def test_direct_product_and_cyclic():
    G = direct_product(cyclic_group(2), cyclic_group(3))
    assert G.order == 6 and G.is_abelian
    assert G.exponent == 6
    assert len(conjugacy_classes(G)) == 6


def test_centralizer_subgroup(zoo):
    G = zoo.group("D4")
    for c in conjugacy_classes(G):
        C = G.centralizer(c.representative)
        assert len(C) * len(c) == G.order
        H, emb = G.subgroup(C)
        assert H.order == len(C)
