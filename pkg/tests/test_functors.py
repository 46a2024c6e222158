import itertools

import pytest
from hypothesis import given, settings, strategies as st

from thetarep.chartable import (ClassFunction, NotACharacter, inner_product, register_groups,
                                regular_character, trivial_character)
from thetarep.functors import (combine, conjugate_by, decompose, decomposition_report, induce,
                               inflate, inner_tensor, outer_tensor, restrict)
from thetarep.groups import (alternating_group, center, cyclic_group, dihedral_group,
                             direct_product, heisenberg, quaternion_group, quotient, subgroup,
                             symmetric_group, trivial_subgroup, whole_group)

from thetarep.suite import normal_subgroups

import oracles


def _chains():
    S3, S4, D8, Q8 = symmetric_group(3), symmetric_group(4), dihedral_group(4), quaternion_group()
    A4, C12, HG = alternating_group(4), cyclic_group(12), heisenberg(3, 1)
    pairs = [
        subgroup(S3, [S3.index_of((1, 2, 0))]),
        subgroup(S3, [S3.index_of((1, 0, 2))]),
        trivial_subgroup(S3),
        whole_group(S3),
        subgroup(S4, [S4.index_of((1, 2, 0, 3)), S4.index_of((0, 2, 3, 1))]),   # A4
        subgroup(S4, [S4.index_of((1, 2, 3, 0)), S4.index_of((2, 1, 0, 3))]),   # D8
        subgroup(S4, [S4.index_of((1, 2, 0, 3)), S4.index_of((1, 0, 2, 3))]),   # S3
        subgroup(S4, [S4.index_of((1, 0, 3, 2)), S4.index_of((2, 3, 0, 1))]),   # V4
        subgroup(S4, [S4.index_of((1, 2, 3, 0))]),                             # C4
        subgroup(D8, [1]), center(D8), subgroup(D8, [D8.generators[-1]]),
        subgroup(Q8, [1]), center(Q8),
        subgroup(A4, [A4.index_of((1, 0, 3, 2)), A4.index_of((2, 3, 0, 1))]),
        subgroup(A4, [A4.index_of((1, 2, 0, 3))]),
        subgroup(C12, [2]), subgroup(C12, [3]),
        center(HG), subgroup(HG, [1, HG.index_of(((1, 0), 0))]),
    ]
    return pairs


CHAINS = _chains()
P = register_groups(*{id(H.parent): H.parent for H in CHAINS}.values())


def _label(H):
    return f"{H.parent.name}>{H.order}"


def test_chain_count():
    assert len(CHAINS) >= 10
    assert len({(H.parent.name, H.order) for H in CHAINS}) >= 10


@pytest.mark.parametrize("H", CHAINS, ids=_label)
def test_induce_matches_double_sum(H):
    G = H.parent
    for sigma in P.table(H.group):
        vals = oracles.per_element(sigma)
        brute = oracles.induce_values(lambda y: vals[H.pos[y]], H.members, G, P.p)
        ind = induce(sigma, H)
        assert oracles.per_element(ind) == brute
        assert ind.degree == H.index * sigma.degree


@pytest.mark.parametrize("H", CHAINS, ids=_label)
def test_frobenius_reciprocity(H):
    for sigma in P.table(H.group):
        ind = induce(sigma, H)
        for chi in P.table(H.parent):
            assert inner_product(ind, chi) == inner_product(sigma, restrict(chi, H))


@pytest.mark.parametrize("H", CHAINS, ids=_label)
def test_restrict_preserves_degree_and_values(H):
    for chi in P.table(H.parent):
        res = restrict(chi, H)
        assert res.degree == chi.degree
        vals = oracles.per_element(chi)
        assert oracles.per_element(res) == [vals[int(x)] for x in H.embedding]


def test_restrict_to_whole_group():
    S3 = symmetric_group(3)
    PS = register_groups(S3)
    W = whole_group(S3)
    for chi in PS.table(S3):
        assert list(restrict(chi, W).values) == list(chi.values)


def test_s3_a3_examples():
    S3 = symmetric_group(3)
    A3 = subgroup(S3, [S3.index_of((1, 2, 0))])
    PS = register_groups(S3)
    T, TA = PS.table(S3), PS.table(A3.group)
    sigma = T[2]
    assert sigma.degree == 2
    assert decompose(restrict(sigma, A3), TA) == [(1, 1), (2, 1)]
    assert decompose(induce(trivial_character(A3.group, PS.p), A3), T) == [(0, 1), (1, 1)]
    assert induce(TA[1], A3) == sigma
    one = trivial_subgroup(S3)
    reg = induce(trivial_character(one.group, PS.p), one)
    assert reg == regular_character(S3, PS.p)
    # omega conjugated by a transposition is omega-bar; inner elements fix it
    t = S3.index_of((1, 0, 2))
    assert conjugate_by(TA[1], A3, t) == TA[2]
    assert conjugate_by(TA[1], A3, S3.index_of((1, 2, 0))) == TA[1]


def test_induction_in_stages():
    S3 = symmetric_group(3)
    D8 = dihedral_group(4)
    PS = register_groups(S3, D8)
    A3 = subgroup(S3, [S3.index_of((1, 2, 0))])
    one3 = trivial_subgroup(S3)
    C4 = subgroup(D8, [1])
    Z = center(D8)
    one8 = trivial_subgroup(D8)
    for H, K in [(one3, A3), (Z, C4), (one8, Z), (one8, C4)]:
        inner = H.within(K)
        for sigma in PS.table(H.group):
            assert induce(induce(sigma, inner), K) == induce(sigma, H)


def test_conjugation_invariance_of_induction():
    for G in (symmetric_group(3), dihedral_group(4), alternating_group(4), heisenberg(3, 1)):
        PG = register_groups(G)
        for H in normal_subgroups(G):
            for sigma in PG.table(H.group):
                ind = induce(sigma, H)
                for g in range(G.order):
                    assert induce(conjugate_by(sigma, H, g), H) == ind


def test_conjugation_action_law():
    # sigma^g(h) = sigma(g h g^-1) gives (sigma^g)^g' = sigma^(g g')
    for G in (symmetric_group(3), dihedral_group(4), alternating_group(4)):
        PG = register_groups(G)
        for H in normal_subgroups(G):
            for sigma in PG.table(H.group):
                for g, h in itertools.product(range(G.order), repeat=2):
                    lhs = conjugate_by(conjugate_by(sigma, H, g), H, h)
                    assert lhs == conjugate_by(sigma, H, int(G.table[g, h]))


def test_outer_and_inner_tensor():
    S3 = symmetric_group(3)
    X = direct_product(S3, S3)
    PX = register_groups(X)
    T = PX.table(S3)
    for a, b in itertools.product(T, repeat=2):
        c = outer_tensor(a, b, X)
        assert inner_product(c, c) == 1
        assert c.degree == a.degree * b.degree
    # trivial x phi is the inflation of phi along the second projection
    for phi in T:
        c = outer_tensor(trivial_character(S3, PX.p), phi, X)
        assert oracles.per_element(c) == [phi.at(x % 6) for x in range(36)]
    sigma = T[2]
    assert decompose(inner_tensor(sigma, sigma), T) == [(0, 1), (1, 1), (2, 1)]
    assert inner_tensor(sigma, trivial_character(S3, PX.p)) == sigma


def test_linear_tensor_linear():
    G = dihedral_group(4)
    PG = register_groups(G)
    T = PG.table(G)
    for i, j in itertools.product(T.linear(), repeat=2):
        prod = inner_tensor(T[i], T[j])
        assert prod.degree == 1 and inner_product(prod, prod) == 1


def test_decompose_regular_and_errors():
    S4 = symmetric_group(4)
    PS = register_groups(S4)
    T = PS.table(S4)
    reg = regular_character(S4, PS.p)
    assert decompose(reg, T) == [(i, chi.degree) for i, chi in enumerate(T)]
    assert decomposition_report(reg, T)[-1] == {"irrep": "irr4", "degree": 3, "mult": 3}
    bogus = ClassFunction(S4, [1, 0, 0, 0, 0], PS.p)
    with pytest.raises(NotACharacter, match="not a character"):
        decompose(bogus, T)
    negative = ClassFunction(S4, T[0].values - T[1].values, PS.p)
    with pytest.raises(NotACharacter):
        decompose(negative, T)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=11, max_size=11))
def test_decompose_round_trip(coeffs):
    HG = heisenberg(3, 1)
    PH = register_groups(HG)
    T = PH.table(HG)
    if not any(coeffs):
        coeffs[0] = 1
    phi = combine(T, coeffs)
    assert decompose(phi, T) == [(i, c) for i, c in enumerate(coeffs) if c]
    assert phi.degree == sum(c * d for c, d in zip(coeffs, T.degrees))


def test_inflate_is_constant_on_cosets():
    D8 = dihedral_group(4)
    Z = center(D8)
    Q = quotient(D8, Z)
    PD = register_groups(D8)
    for chi in PD.table(Q.quotient):
        vals = oracles.per_element(inflate(chi, Q))
        assert all(vals[x] == chi.at(int(Q.project[x])) for x in range(D8.order))
