"""Clifford theory at the level of multiplicities, Rieffel classes, abelian quotients.

Every function takes a normal :class:`~thetarep.groups.Subgroup` ``H`` of
``G = H.parent`` and the session prime ``P`` used to fetch character tables.
"""

from dataclasses import dataclass, field, asdict

import numpy as np

from .chartable import CharacterError, InternalInvariantError, inner_product
from .functors import conjugate_by, decompose, induce, inflate, restrict
from .groups import GroupError, Subgroup, quotient


def _require_normal(H):
    if not H.is_normal:
        raise GroupError("H must be normal in G")


def _support(phi, T):
    return frozenset(i for i, _ in decompose(phi, T))


def _irreducible_index(chi, T):
    try:
        return T.index(chi)
    except CharacterError:
        raise CharacterError("sigma is not an irreducible character") from None


def irrep_orbit(H, sigma, P):
    """Indices of the H-irreducibles conjugate to ``sigma`` under G."""
    _require_normal(H)
    TH = P.table(H.group)
    _irreducible_index(sigma, TH)
    Q = quotient(H.parent, H)
    return sorted({TH.index(conjugate_by(sigma, H, int(t))) for t in Q.transversal})


def inertia(H, sigma, P=None):
    """I_G(sigma): the union of cosets gH whose conjugation fixes sigma."""
    _require_normal(H)
    G = H.parent
    Q = quotient(G, H)
    fixed = [q for q, t in enumerate(Q.transversal) if conjugate_by(sigma, H, int(t)) == sigma]
    members = np.nonzero(np.isin(Q.project, fixed))[0]
    return Subgroup(G, members, name="I", check=False)


@dataclass(eq=False)
class CliffordDecomposition:
    pi: object
    H: object
    orbit: list
    m: int
    inertia: object

    def to_dict(self):
        return {"orbit": self.orbit, "m": self.m, "orbit_size": len(self.orbit),
                "inertia_order": self.inertia.order, "degree": self.pi.degree}


def clifford_decompose(H, pi, P):
    """Res_H pi = m * (sum over a G-orbit of H-irreducibles), verified exactly."""
    _require_normal(H)
    G = H.parent
    TG, TH = P.table(G), P.table(H.group)
    _irreducible_index(pi, TG)
    res = decompose(restrict(pi, H), TH)
    mults = {k for _, k in res}
    if len(mults) != 1:
        raise InternalInvariantError("restriction multiplicities are not uniform")
    m = mults.pop()
    first = TH[res[0][0]]
    orbit = irrep_orbit(H, first, P)
    I = inertia(H, first)
    if sorted(i for i, _ in res) != orbit:
        raise InternalInvariantError("restriction support is not a single G-orbit")
    if len(orbit) != G.order // I.order:
        raise InternalInvariantError("#orbit != [G : I_G(sigma)]")
    if pi.degree != m * len(orbit) * first.degree:
        raise InternalInvariantError("deg pi != m * #orbit * deg sigma")
    if inner_product(induce(first, H), pi) != m:
        raise InternalInvariantError("m_G(Ind sigma, pi) != m")
    return CliffordDecomposition(pi, H, orbit, m, I)


def mackey_correspondence(H, sigma, P):
    """Pairs (inertia irreducible, G irreducible, multiplicity) via Ind_I^G.

    Checks that induction from the inertia group is a bijection from the
    constituents of Ind_H^I sigma onto those of Ind_H^G sigma, with matching
    multiplicities.
    """
    _require_normal(H)
    G = H.parent
    TG = P.table(G)
    I = inertia(H, sigma)
    TI = P.table(I.group)
    H_in_I = H.within(I)
    TH = P.table(H.group)
    _irreducible_index(sigma, TH)
    ind_G = induce(sigma, H)
    target = dict(decompose(ind_G, TG))
    rows = []
    for i, _ in decompose(induce(sigma, H_in_I), TI):
        tilde = TI[i]
        pi = induce(tilde, I)
        if inner_product(pi, pi) != 1:
            raise InternalInvariantError("Ind_I^G of an inertia constituent is reducible")
        j = TG.index(pi)
        m_h = inner_product(restrict(tilde, H_in_I), sigma)
        if target.get(j) != m_h:
            raise InternalInvariantError("m_G(pi, Ind sigma) != m_H(res tilde-sigma, sigma)")
        rows.append((i, j, m_h))
    if sorted(j for _, j, _ in rows) != sorted(target):
        raise InternalInvariantError("inertia correspondence is not a bijection")
    return rows


@dataclass(eq=False)
class RieffelPartition:
    g_classes: list
    h_classes: list
    correspondence: list        # (index into g_classes, index into h_classes)

    def to_dict(self):
        return {"g_classes": self.g_classes, "h_classes": self.h_classes,
                "correspondence": self.correspondence}

    def g_class_of(self, i):
        return next(k for k, c in enumerate(self.g_classes) if i in c)

    def h_class_of(self, i):
        return next(k for k, c in enumerate(self.h_classes) if i in c)


def _group_by(keys):
    classes = {}
    for i, key in enumerate(keys):
        classes.setdefault(key, []).append(i)
    return sorted(classes.values())


def rieffel_partition(H, P):
    """Classes of equal H-support on G-irreducibles and of equal Ind-support on H-irreducibles."""
    _require_normal(H)
    TG, TH = P.table(H.parent), P.table(H.group)
    res_support = [_support(restrict(pi, H), TH) for pi in TG]
    ind_support = [_support(induce(s, H), TG) for s in TH]
    g_classes = _group_by(res_support)
    h_classes = _group_by(ind_support)
    h_of = {i: k for k, c in enumerate(h_classes) for i in c}
    g_of = {i: k for k, c in enumerate(g_classes) for i in c}
    corr = []
    for a, gc in enumerate(g_classes):
        hs = {h_of[s] for i in gc for s in res_support[i]}
        if len(hs) != 1:
            raise InternalInvariantError("restriction of a Rieffel class meets several classes")
        b = hs.pop()
        back = {g_of[i] for s in h_classes[b] for i in ind_support[s]}
        if back != {a}:
            raise InternalInvariantError("Ind and Res are not inverse on Rieffel classes")
        corr.append((a, b))
    if sorted(b for _, b in corr) != list(range(len(h_classes))):
        raise InternalInvariantError("Rieffel correspondence is not a bijection")
    return RieffelPartition(g_classes, h_classes, corr)


def _abelian_quotient(H):
    _require_normal(H)
    Q = quotient(H.parent, H)
    if not Q.quotient.is_abelian:
        raise GroupError("G/H must be abelian")
    return Q


def quotient_characters(H, P):
    """Characters of the abelian quotient G/H inflated to G, in table order."""
    Q = _abelian_quotient(H)
    return [inflate(chi, Q) for chi in P.table(Q.quotient)]


def twist_finder(H, pi1, pi2, P):
    """First chi in Irr(G/H) with pi2 (x) chi = pi1, or None."""
    for chi in quotient_characters(H, P):
        if pi2 * chi == pi1:
            return chi
    return None


@dataclass
class EqeqRecord:
    applicable: bool
    e: int = None
    f: int = None
    checks: dict = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)


def eqeq_verify(H, pi, P):
    """Index identities for pi invariant under every twist by Irr(G/H).

    With sigma in Res_H pi, I its inertia group, f = [G:I] and e the
    multiplicity of the (single) constituent of Ind_H^I sigma: checks
    [I:H] = e^2, [G:H] = e^2 f and Ind_H^I sigma = e * tilde-sigma.
    """
    chis = quotient_characters(H, P)
    if not all(pi * chi == pi for chi in chis):
        return EqeqRecord(False)
    G = H.parent
    TH = P.table(H.group)
    sigma = TH[decompose(restrict(pi, H), TH)[0][0]]
    I = inertia(H, sigma)
    TI = P.table(I.group)
    H_in_I = H.within(I)
    ind = induce(sigma, H_in_I)
    parts = decompose(ind, TI)
    e = parts[0][1]
    tilde = TI[parts[0][0]]
    f = G.order // I.order
    checks = {
        "single_constituent": len(parts) == 1,
        "inertia_index_is_e_squared": I.order // H.order == e * e,
        "index_is_e_squared_f": G.order // H.order == e * e * f,
        "ind_is_e_tilde": ind == e * tilde,
        "degree_is_e_f_deg_sigma": pi.degree == e * f * sigma.degree,
        "m_H_tilde_sigma_is_e": inner_product(restrict(tilde, H_in_I), sigma) == e,
    }
    return EqeqRecord(True, e, f, checks)


def is_squarefree(n):
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def squarefree_multfree(H, P):
    """Per-irreducible multiplicity-freeness of Res_H, against the squarefree-index corollary."""
    _require_normal(H)
    G = H.parent
    TG, TH = P.table(G), P.table(H.group)
    index = G.order // H.order
    Q = quotient(G, H)
    hypothesis = is_squarefree(index) and Q.quotient.is_abelian
    per_irrep = [all(k == 1 for _, k in decompose(restrict(pi, H), TH)) for pi in TG]
    return {
        "index": index,
        "squarefree": is_squarefree(index),
        "abelian_quotient": Q.quotient.is_abelian,
        "multiplicity_free": per_irrep,
        "corollary_applies": hypothesis,
        "corollary_holds": (not hypothesis) or all(per_irrep),
    }


def is_strong_gelfand(G, P):
    """(diagonal G, G x G) is a strong Gelfand pair iff every chi_i chi_j is multiplicity-free."""
    T = P.table(G)
    n = len(T)
    return all(k <= 1 for i in range(n) for j in range(i, n)
               for _, k in decompose(T[i] * T[j], T))
