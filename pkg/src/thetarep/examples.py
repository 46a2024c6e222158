"""Constructors for the standard product-group examples and their end-to-end reports.

* diagonal: Gamma = Delta G in G x G, rho a character of G.
* coset: the permutation module C[Ng] of N x N acting by n1 x n2^-1.
* heisenberg: Gamma ~ H(V) inside V x H(V), rho the Schroedinger character.
* wreath: S_m1 wr S_n and S_m2 wr S_n glued along the top group S_n.
"""

import numpy as np

from .chartable import CharacterError, ClassFunction, InternalInvariantError, dual, \
    inner_product, register_groups
from .functors import inflate, outer_tensor, pullback, restrict
from .groups import (GroupError, block_permutation, direct_product, heisenberg,
                     heisenberg_center, make_quotient_iso, quotient, trivial_subgroup,
                     vector_space, wreath_base, wreath_product)
from .theta import (classify, graph_setup, induction_side, multiplicity_matrix,
                    restriction_side, round_trip)


def projections(S):
    """Index arrays Gamma.group -> G1 and Gamma.group -> G2."""
    emb = S.Gamma.embedding
    n2 = S.G2.order
    return emb // n2, emb % n2


def on_gamma(chi, S, side=0):
    """Pull a character of G1 (side 0) or G2 (side 1) back to Gamma."""
    return pullback(chi, projections(S)[side], S.Gamma.group)


# diagonal -----------------------------------------------------------------

def diagonal_setup(G):
    one = trivial_subgroup(G)
    Q = quotient(G, one)
    gamma = make_quotient_iso(Q, Q, np.arange(G.order))
    return graph_setup(G, one, G, one, gamma)


# coset --------------------------------------------------------------------

def coset_character(N, g, X=None):
    """Permutation character of C[Ng] under N x N on X = N.group x N.group.

    Value at (n1, n2) is #{x in Ng : n1^-1 x n2 = x}.
    """
    G = N.parent
    if not N.is_normal:
        raise GroupError("N must be normal")
    Ng = np.unique(G.table[N.members, g])
    if X is None:
        X = direct_product(N.group, N.group)
    n = N.order
    reps = X.classes.reps
    n1 = N.embedding[reps // n]
    n2 = N.embedding[reps % n]
    moved = G.table[G.table[G.inv[n1][:, None], Ng[None, :]], n2[:, None]]
    counts = (moved == Ng[None, :]).sum(axis=1)
    return X, counts


# heisenberg ----------------------------------------------------------------

def heisenberg_setup(q, m=1):
    """V = F_q^{2m} with H1 = 0, G2 = H(V) with H2 = centre, gamma v -> (v, 0)."""
    V = vector_space(q, 2 * m)
    HG = heisenberg(q, m)
    Z = heisenberg_center(HG)
    zero = trivial_subgroup(V)
    Q1, Q2 = quotient(V, zero), quotient(HG, Z)
    # coset of (v, t) has minimal member (v, 0) at index q * v
    gamma = make_quotient_iso(Q1, Q2, np.arange(V.order))
    return graph_setup(V, zero, HG, Z, gamma)


def schrodinger_character(HG, psi_index, P, Z=None):
    """The degree q^m irreducible whose central restriction is q^m psi.

    ``psi_index`` indexes the character table of ``Z.group``.
    """
    q, m = HG.meta["q"], HG.meta["m"]
    Z = Z or heisenberg_center(HG)
    TZ = P.table(Z.group)
    if not 0 < psi_index < len(TZ):
        raise CharacterError("psi must be a nontrivial central character")
    psi = TZ[psi_index]
    if psi.degree == 1 and (psi.values == 1).all():
        raise CharacterError("psi must be a nontrivial central character")
    target = q ** m * psi
    hits = [chi for chi in P.table(HG) if chi.degree == q ** m and restrict(chi, Z) == target]
    if len(hits) != 1:
        raise InternalInvariantError(f"{len(hits)} irreducibles match the central character")
    return hits[0]


# wreath ----------------------------------------------------------------------

def wreath_diagonal_character(tau, W, P):
    """Character of tau wr 1: product over block cycles of tau(cycle product)."""
    B = W.meta["base"]
    if tau.group is not B:
        raise CharacterError("tau is not a character of the base group")
    if inner_product(tau, tau) != 1:
        raise CharacterError("tau must be irreducible")
    d, n = W.meta["block_size"], W.meta["blocks"]
    lookup = {tuple(int(v) for v in row): i for i, row in enumerate(B.perms)}
    vals = []
    for x in W.classes.reps:
        s = block_permutation(W, int(x))
        seen, value = set(), 1
        for i in range(n):
            if i in seen:
                continue
            cycle, j = [], i
            while j not in seen:
                seen.add(j)
                cycle.append(j)
                j = s[j]
            y = 0
            for _ in cycle:
                y = int(W.table[y, x])                     # x^len(cycle)
            back = tuple(int(v) - i * d for v in W.perms[y][i * d:(i + 1) * d])
            value = value * tau.at(lookup[back]) % tau.p
        vals.append(value)
    chi = ClassFunction(W, vals, tau.p, f"{tau.note} wr 1")
    if inner_product(chi, chi) != 1 or chi.degree != tau.degree ** n:
        raise InternalInvariantError("tau wr 1 is not an irreducible of degree deg(tau)^n")
    return chi


def wreath_setup(m1, m2, n):
    """G_i = S_mi wr S_n over the base groups, gamma matching block permutations."""
    W1, W2 = wreath_product(m1, n), wreath_product(m2, n)
    H1, H2 = wreath_base(W1), wreath_base(W2)
    Q1, Q2 = quotient(W1, H1), quotient(W2, H2)
    where = {block_permutation(W2, int(t)): k for k, t in enumerate(Q2.transversal)}
    forward = [where[block_permutation(W1, int(t))] for t in Q1.transversal]
    gamma = make_quotient_iso(Q1, Q2, forward)
    return graph_setup(W1, H1, W2, H2, gamma)


def wreath_rho(S, tau1, tau2, P):
    """(tau1 (x) tau2) wr 1 on Gamma, as the restriction of (tau1 wr 1) (x) (tau2 wr 1)."""
    c1 = wreath_diagonal_character(tau1, S.G1, P)
    c2 = wreath_diagonal_character(tau2, S.G2, P)
    return restrict(outer_tensor(c1, c2, S.X), S.Gamma), c1, c2


# reports -----------------------------------------------------------------

def _side(M):
    C = classify(M)
    round_trip(M)
    return M, C, {**M.to_dict(), **C.to_dict()}


def diagonal_example(G, chi_index=0, P=None):
    S = diagonal_setup(G)
    P = P or register_groups(S.X)
    chi = P.table(G)[chi_index]
    M, C, rep = _side(induction_side(on_gamma(chi, S), S, P))
    expected = chi.degree == 1
    return {"example": "diagonal", "group": G.name, "chi": chi_index,
            "chi_degree": chi.degree, "prime": P.p, "orders": S.orders,
            "ind": rep, "expected_theta": expected, "ok": C.theta == expected}


def coset_example(N, g, P=None):
    X, counts = coset_character(N, g)
    P = P or register_groups(X)
    Pi = ClassFunction(X, counts, P.p, "C[Ng]")
    M, C, rep = _side(multiplicity_matrix(Pi, P))
    return {"example": "coset", "group": N.parent.name, "N_order": N.order, "g": int(g),
            "prime": P.p, "orders": {"N": N.order, "NxN": X.order},
            "matrix": rep, "ok": C.theta}


def heisenberg_example(q=3, m=1, psi_index=1, P=None):
    S = heisenberg_setup(q, m)
    P = P or register_groups(S.X)
    HG = S.G2
    pi = schrodinger_character(HG, psi_index, P, Z=S.H2)
    rho = on_gamma(pi, S, side=1)
    res, rc, res_rep = _side(restriction_side(rho, S, P))
    ind, ic, ind_rep = _side(induction_side(rho, S, P))
    pi_col = P.table(HG).index(pi)
    qm = q ** m
    checks = {
        "res_single_entry_q^m": res.sparse() == [[0, psi_index, qm]],
        "res_bigraphic": rc.bigraphic,
        "res_not_multiplicity_free": not rc.multiplicity_free,
        "ind_rows_all_characters_of_V": ind.row_support == list(range(len(ind.T1))),
        "ind_single_column_pi_psi": ind.col_support == [pi_col],
        "ind_entries_one": bool((ind.entries[:, pi_col] == 1).all()),
        "ind_graphic1": ic.graphic1,
        "ind_not_graphic2": not ic.graphic2,
        "main_theorem": rc.theta == ic.theta,
    }
    return {"example": "heisenberg", "q": q, "m": m, "psi": psi_index, "prime": P.p,
            "orders": S.orders, "res": res_rep, "ind": ind_rep, "checks": checks,
            "ok": all(checks.values())}


def wreath_example(m1=2, m2=2, n=2, sigma1=None, sigma2=None, P=None):
    S = wreath_setup(m1, m2, n)
    P = P or register_groups(S.X)
    T1, T2 = P.table(S.G1.meta["base"]), P.table(S.G2.meta["base"])
    sigma1 = len(T1) - 1 if sigma1 is None else sigma1
    sigma2 = len(T2) - 1 if sigma2 is None else sigma2
    tau1, tau2 = T1[sigma1], T2[sigma2]
    rho, c1, c2 = wreath_rho(S, tau1, tau2, P)
    res, rc, res_rep = _side(restriction_side(rho, S, P))
    ind, ic, ind_rep = _side(induction_side(rho, S, P))

    # expected pairs: (tau1 wr pi, tau2 wr pi-check) for pi in Irr(S_n) = Irr(G1/H1)
    d = S.gamma.domain
    c = S.gamma.codomain
    back = np.argsort(S.gamma.forward)
    TG1, TG2 = ind.T1, ind.T2
    expected = set()
    top_degrees = []
    for pi in P.table(d.quotient):
        pi2 = pullback(pi, back, c.quotient)
        a = TG1.index(c1 * inflate(pi, d))
        b = TG2.index(c2 * inflate(dual(pi2), c))
        expected.add((a, b))
        top_degrees.append(pi.degree)
    pairs = sorted(ic.pairs or [])
    k1, k2 = tau1.degree ** n, tau2.degree ** n
    degree_match = all(TG1[a].degree % k1 == 0 and TG2[b].degree % k2 == 0
                       and TG1[a].degree // k1 == TG2[b].degree // k2 for a, b in pairs)
    checks = {
        "ind_theta": ic.theta,
        "pair_count": len(pairs) == len(P.table(d.quotient)),
        "pair_degrees": degree_match,
        "top_degrees": sorted(TG1[a].degree // k1 for a, _ in pairs) == sorted(top_degrees),
        "pairs_exact": set(pairs) == expected,
        "res_single_entry": len(res.sparse()) == 1 and res.sparse()[0][2] == 1,
        "main_theorem": rc.theta == ic.theta,
    }
    return {"example": "wreath", "m1": m1, "m2": m2, "n": n, "sigma1": sigma1,
            "sigma2": sigma2, "prime": P.p, "orders": S.orders, "res": res_rep,
            "ind": ind_rep, "theta_pairs": pairs, "checks": checks,
            "ok": all(checks.values())}

