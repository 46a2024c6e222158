import pytest

from thetarep.chartable import CharacterError, register_groups, trivial_character
from thetarep.clifford import (clifford_decompose, eqeq_verify, inertia, irrep_orbit,
                               is_squarefree, is_strong_gelfand, mackey_correspondence,
                               rieffel_partition, squarefree_multfree, twist_finder)
from thetarep.functors import decompose, induce, outer_tensor, restrict
from thetarep.groups import (GroupError, alternating_group, center, cyclic_group,
                             dihedral_group, direct_product, heisenberg, heisenberg_center,
                             quaternion_group, quotient, subgroup, symmetric_group, whole_group,
                             wreath_product)
from thetarep.suite import normal_subgroups

import oracles

FIXTURE_GROUPS = [symmetric_group(3), symmetric_group(4), alternating_group(4),
                  dihedral_group(4), quaternion_group(), cyclic_group(12), heisenberg(3, 1),
                  wreath_product(2, 2), dihedral_group(6)]
P = register_groups(*FIXTURE_GROUPS)
PAIRS = [H for G in FIXTURE_GROUPS for H in normal_subgroups(G)]


def _s3_a3():
    G = FIXTURE_GROUPS[0]
    return G, subgroup(G, [G.index_of((1, 2, 0))])


def _brute_conjugate(sigma, H, g):
    G = H.parent
    vals = oracles.per_element(sigma)
    return [vals[H.pos[int(G.table[G.table[g, h], G.inv[g]])]] for h in H.embedding]


def test_pair_count():
    assert len(PAIRS) >= 30


@pytest.mark.parametrize("H", PAIRS, ids=lambda H: f"{H.parent.name}/{H.order}")
def test_orbit_and_inertia_brute(H):
    G = H.parent
    TH = P.table(H.group)
    rows = {tuple(oracles.per_element(s)): i for i, s in enumerate(TH)}
    for sigma in TH:
        brute_orbit = sorted({rows[tuple(_brute_conjugate(sigma, H, g))] for g in range(G.order)})
        assert irrep_orbit(H, sigma, P) == brute_orbit
        base = oracles.per_element(sigma)
        brute_I = [g for g in range(G.order) if _brute_conjugate(sigma, H, g) == base]
        I = inertia(H, sigma)
        assert list(I.members) == brute_I
        assert set(H.members) <= set(I.members)
        assert H.index % len(brute_orbit) == 0


@pytest.mark.parametrize("H", PAIRS, ids=lambda H: f"{H.parent.name}/{H.order}")
def test_clifford_accounting(H):
    TH = P.table(H.group)
    for pi in P.table(H.parent):
        C = clifford_decompose(H, pi, P)
        sigma = TH[C.orbit[0]]
        expected = sum((C.m * TH[i] for i in C.orbit), 0 * sigma)
        assert restrict(pi, H) == expected
        assert len(C.orbit) == H.parent.order // C.inertia.order
        assert pi.degree == C.m * len(C.orbit) * sigma.degree


@pytest.mark.parametrize("H", PAIRS, ids=lambda H: f"{H.parent.name}/{H.order}")
def test_inertia_bijection(H):
    for sigma in P.table(H.group):
        rows = mackey_correspondence(H, sigma, P)
        assert len({j for _, j, _ in rows}) == len(rows)


def test_orbit_examples():
    G, A3 = _s3_a3()
    TA = P.table(A3.group)
    assert irrep_orbit(A3, TA[1], P) == [1, 2]
    assert irrep_orbit(A3, TA[0], P) == [0]
    assert list(inertia(A3, TA[1]).members) == list(A3.members)
    D8 = FIXTURE_GROUPS[3]
    Z = center(D8)
    for sigma in P.table(Z.group):
        assert inertia(Z, sigma).order == 8
    with pytest.raises(CharacterError, match="not an irreducible"):
        irrep_orbit(A3, TA[1] + TA[2], P)
    T = subgroup(G, [G.index_of((1, 0, 2))])
    with pytest.raises(GroupError, match="normal"):
        irrep_orbit(T, P.table(T.group)[0], P)


def test_clifford_examples():
    G, A3 = _s3_a3()
    sigma2 = P.table(G)[2]
    C = clifford_decompose(A3, sigma2, P)
    assert (C.m, len(C.orbit), C.inertia.order) == (1, 2, 3)
    D8 = FIXTURE_GROUPS[3]
    Z = center(D8)
    C = clifford_decompose(Z, P.table(D8)[4], P)
    TZ = P.table(Z.group)
    assert C.m == 2 and C.inertia.order == 8 and len(C.orbit) == 1
    assert TZ[C.orbit[0]].values[1] == P.p - 1           # the faithful central character
    W = whole_group(G)
    for i, pi in enumerate(P.table(G)):
        C = clifford_decompose(W, pi, P)
        assert C.m == 1 and C.orbit == [i] and C.inertia.order == 6


def test_mackey_examples():
    G, A3 = _s3_a3()
    TA = P.table(A3.group)
    rows = mackey_correspondence(A3, TA[1], P)
    assert len(rows) == 1 and rows[0][1:] == (2, 1)
    assert P.table(inertia(A3, TA[1]).group)[rows[0][0]].degree == 1
    D8 = FIXTURE_GROUPS[3]
    Z = center(D8)
    faithful = next(s for s in P.table(Z.group) if s.values[1] != 1)
    rows = mackey_correspondence(Z, faithful, P)
    assert len(rows) == 1 and rows[0][2] == 2
    W = whole_group(G)
    assert [(i, j) for i, j, _ in mackey_correspondence(W, P.table(W.group)[1], P)] == [(1, 1)]


def test_rieffel_examples():
    C4 = cyclic_group(4)
    PC = register_groups(C4)
    R = rieffel_partition(subgroup(C4, [2]), PC)
    assert [len(c) for c in R.g_classes] == [2, 2]
    assert [len(c) for c in R.h_classes] == [1, 1]
    assert sorted(b for _, b in R.correspondence) == [0, 1]
    G, A3 = _s3_a3()
    R = rieffel_partition(A3, P)
    assert sorted(R.g_classes) == [[0, 1], [2]]
    assert sorted(R.h_classes) == [[0], [1, 2]]
    R = rieffel_partition(whole_group(G), P)
    assert R.g_classes == [[0], [1], [2]] and R.correspondence == [(0, 0), (1, 1), (2, 2)]


@pytest.mark.parametrize("H", PAIRS, ids=lambda H: f"{H.parent.name}/{H.order}")
def test_rieffel_brute(H):
    """Brute-force support sets and the class-level Ind/Res inverse property."""
    TG, TH = P.table(H.parent), P.table(H.group)
    res = [frozenset(i for i, _ in decompose(restrict(pi, H), TH)) for pi in TG]
    ind = [frozenset(i for i, _ in decompose(induce(s, H), TG)) for s in TH]
    R = rieffel_partition(H, P)
    for a, b in R.correspondence:
        gc, hc = set(R.g_classes[a]), set(R.h_classes[b])
        assert set().union(*(res[i] for i in gc)) == hc
        assert set().union(*(ind[s] for s in hc)) == gc
    for c in R.g_classes:
        assert len({res[i] for i in c}) == 1


def test_twist_finder():
    G, A3 = _s3_a3()
    T = P.table(G)
    assert twist_finder(A3, T[0], T[0], P) == trivial_character(G, P.p)
    assert twist_finder(A3, T[1], T[0], P) == T[1]
    assert twist_finder(A3, T[2], T[0], P) is None
    S4 = FIXTURE_GROUPS[1]
    V4 = next(H for H in normal_subgroups(S4) if H.order == 4)
    with pytest.raises(GroupError, match="abelian"):
        twist_finder(V4, P.table(S4)[0], P.table(S4)[0], P)


def test_eqeq_examples():
    D8 = FIXTURE_GROUPS[3]
    rec = eqeq_verify(center(D8), P.table(D8)[4], P)
    assert rec.applicable and (rec.e, rec.f) == (2, 1) and all(rec.checks.values())
    HG = FIXTURE_GROUPS[6]
    Z = heisenberg_center(HG)
    for pi in P.table(HG):
        rec = eqeq_verify(Z, pi, P)
        if pi.degree == 3:
            assert rec.applicable and (rec.e, rec.f) == (3, 1) and all(rec.checks.values())
        else:
            assert not rec.applicable
    G = FIXTURE_GROUPS[0]
    for pi in P.table(G):
        rec = eqeq_verify(whole_group(G), pi, P)
        assert (rec.e, rec.f) == (1, 1) and all(rec.checks.values())


@pytest.mark.parametrize("H", [H for H in PAIRS if quotient(H.parent, H).quotient.is_abelian],
                         ids=lambda H: f"{H.parent.name}/{H.order}")
def test_eqeq_on_abelian_quotients(H):
    for pi in P.table(H.parent):
        rec = eqeq_verify(H, pi, P)
        if rec.applicable:
            assert all(rec.checks.values()), rec.checks


def test_squarefree_examples():
    G, A3 = _s3_a3()
    r = squarefree_multfree(A3, P)
    assert r["corollary_applies"] and all(r["multiplicity_free"])
    HG = FIXTURE_GROUPS[6]
    Z = heisenberg_center(HG)
    r = squarefree_multfree(Z, P)
    assert not r["squarefree"] and not r["corollary_applies"]
    assert not all(r["multiplicity_free"])
    for pi in P.table(HG):
        if pi.degree == 3:
            assert [k for _, k in decompose(restrict(pi, Z), P.table(Z.group))] == [3]
    r = squarefree_multfree(whole_group(G), P)
    assert r["index"] == 1 and r["corollary_holds"] and all(r["multiplicity_free"])
    assert [n for n in range(1, 20) if is_squarefree(n)] == \
        [1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19]


@pytest.mark.parametrize("H", PAIRS, ids=lambda H: f"{H.parent.name}/{H.order}")
def test_squarefree_corollary_on_fixtures(H):
    r = squarefree_multfree(H, P)
    assert r["corollary_holds"]


def _brute_strong_gelfand(G):
    X = direct_product(G, G)
    PX = register_groups(X)
    diag = subgroup(X, [g * G.order + g for g in G.generators])
    T = PX.table(G)
    TD = PX.table(diag.group)
    return all(k <= 1 for a in T for b in T
               for _, k in decompose(restrict(outer_tensor(a, b, X), diag), TD))


@pytest.mark.parametrize("G", [cyclic_group(6), symmetric_group(3), dihedral_group(4),
                               quaternion_group(), alternating_group(4), heisenberg(3, 1)],
                         ids=lambda G: G.name)
def test_strong_gelfand(G):
    PG = register_groups(G)
    expected = {"C6": True, "S3": True, "D8": True, "Heis(3,1)": False}
    assert is_strong_gelfand(G, PG) == _brute_strong_gelfand(G)
    if G.name in expected:
        assert is_strong_gelfand(G, PG) == expected[G.name]
