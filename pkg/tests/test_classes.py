import numpy as np
import pytest

from thetarep.classes import class_constant_tensor, class_constants, compute_classes
from thetarep.groups import (alternating_group, cyclic_group, dihedral_group, direct_product,
                             heisenberg, quaternion_group, symmetric_group, wreath_product)

import oracles

GROUPS = [symmetric_group(3), symmetric_group(4), alternating_group(4), dihedral_group(4),
          quaternion_group(), cyclic_group(12), heisenberg(3, 1), wreath_product(2, 2),
          direct_product(symmetric_group(3), cyclic_group(2))]


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
def test_classes_match_brute_force(G):
    D = compute_classes(G)
    brute = oracles.conjugacy_classes(G)
    assert D.class_count == len(brute)
    ours = {frozenset(int(x) for x in D.members(i)) for i in range(D.class_count)}
    assert ours == set(brute)
    assert D.sizes.sum() == G.order
    assert all(D.class_of[D.reps[i]] == i for i in range(D.class_count))
    assert D.sizes[D.class_of[0]] == 1 and D.class_of[0] == 0
    inv = D.inverse_class
    assert np.array_equal(inv[inv], np.arange(D.class_count))
    assert np.array_equal(inv[D.class_of], D.class_of[G.inv])
    # ordering: (size, minimal element)
    keys = [(int(s), int(r)) for s, r in zip(D.sizes, D.reps)]
    assert keys == sorted(keys)
    assert all(D.reps[i] == D.members(i).min() for i in range(D.class_count))


def test_class_examples():
    S3 = compute_classes(symmetric_group(3))
    assert sorted(S3.sizes.tolist()) == [1, 2, 3]
    C12 = compute_classes(cyclic_group(12))
    assert C12.class_count == 12 and (C12.sizes == 1).all()
    H = compute_classes(heisenberg(3, 1))
    assert H.class_count == 11
    assert sorted(H.sizes.tolist()) == [1] * 3 + [3] * 8


@pytest.mark.parametrize("G", GROUPS[:6], ids=lambda G: G.name)
def test_class_constants_brute(G):
    D = compute_classes(G)
    classes = [set(int(x) for x in D.members(i)) for i in range(D.class_count)]
    A = class_constant_tensor(D)
    for i in range(D.class_count):
        for j in range(D.class_count):
            row = class_constants(D, i, j)
            assert np.array_equal(row, A[i, j])
            for k in range(D.class_count):
                assert row[k] == oracles.class_constant(G, classes[i], classes[j], int(D.reps[k]))


@pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
def test_class_constant_identities(G):
    D = compute_classes(G)
    A = class_constant_tensor(D)
    r = D.class_count
    assert np.array_equal(A[0], np.eye(r, dtype=np.int64))
    lhs = A @ D.sizes
    assert np.array_equal(lhs, np.outer(D.sizes, D.sizes))
    if G.is_abelian:
        assert np.array_equal(A, A.transpose(1, 0, 2))


def test_s3_transposition_square():
    G = symmetric_group(3)
    D = compute_classes(G)
    t = D.class_of[G.index_of((1, 0, 2))]
    assert class_constants(D, t, t)[0] == 3
