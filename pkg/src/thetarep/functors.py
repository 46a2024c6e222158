"""Restriction, induction, tensor products, conjugation and decomposition."""

import numpy as np

from . import modp
from .chartable import ClassFunction, CharacterError, NotACharacter


def restrict(phi, H):
    """Res^G_H phi for a :class:`~thetarep.groups.Subgroup` H of phi's group."""
    if H.parent is not phi.group:
        raise CharacterError("H is not a subgroup of the character's group")
    Hg = H.group
    gclass = phi.group.classes.class_of[H.embedding[Hg.classes.reps]]
    return ClassFunction(Hg, phi.values[gclass], phi.p, f"res {phi.note}")


def pullback(phi, hom, source):
    """phi composed with a homomorphism ``source -> phi.group`` given as an index array."""
    hom = np.asarray(hom)
    cls = phi.group.classes.class_of[hom[source.classes.reps]]
    return ClassFunction(source, phi.values[cls], phi.p, f"pullback {phi.note}")


def inflate(phi, qdata):
    """Lift a class function of G/N to G."""
    if phi.group is not qdata.quotient:
        raise CharacterError("character is not on this quotient")
    return pullback(phi, qdata.project, qdata.source)


def induce(sigma, H):
    """Ind_H^G sigma by the class-sum form of the Frobenius formula.

    chi(g) = |C_G(g)|/|H| * sum of sigma over H-elements conjugate to g, which
    equals (1/|H|) sum_{x in G, x^-1 g x in H} sigma(x^-1 g x).
    """
    if sigma.group is not H.group:
        raise CharacterError("sigma is not a class function of H")
    G, p = H.parent, sigma.p
    D = G.classes
    Hg = H.group
    vals = sigma.values[Hg.classes.class_of]             # per H element
    buckets = np.zeros(D.class_count, dtype=np.int64)
    np.add.at(buckets, D.class_of[H.embedding], vals)
    buckets %= p
    scale = np.array([G.order * modp.inv(int(s) * H.order, p) % p for s in D.sizes],
                     dtype=np.int64)
    return ClassFunction(G, buckets * scale % p, p, f"ind {sigma.note}")


def outer_tensor(phi1, phi2, P):
    """phi1 (x) phi2 on the direct product P = phi1.group x phi2.group."""
    if P.factors is None or P.factors[0] is not phi1.group or P.factors[1] is not phi2.group:
        raise CharacterError("P is not the direct product of the two groups")
    if phi1.p != phi2.p:
        raise CharacterError("characters over different primes")
    nb = phi2.group.order
    reps = P.classes.reps
    a = phi1.values[phi1.group.classes.class_of[reps // nb]]
    b = phi2.values[phi2.group.classes.class_of[reps % nb]]
    return ClassFunction(P, a * b % phi1.p, phi1.p, f"{phi1.note} x {phi2.note}")


def inner_tensor(phi, psi):
    return phi * psi


def conjugate_by(sigma, H, g):
    """sigma^g(h) = sigma(g h g^-1) for H normal in G."""
    G = H.parent
    if not 0 <= g < G.order:
        raise CharacterError("g is not an element of G")
    Hg = H.group
    reps = H.embedding[Hg.classes.reps]
    moved = H.pos[G.conj(g, reps)]
    if (moved < 0).any():
        raise CharacterError("H is not normalized by g")
    vals = sigma.values[Hg.classes.class_of[moved]]
    return ClassFunction(Hg, vals, sigma.p, f"{sigma.note}^g")


def multiplicities(phi, T):
    """Raw lifted <phi, chi_i> for every irreducible (no genuineness check)."""
    D = T.classes
    p = T.p
    X = T.matrix[:, D.inverse_class]
    m = modp.matmul(X, (phi.values * (D.sizes % p) % p)[:, None], p)[:, 0]
    return m * modp.inv(T.group.order, p) % p


def decompose(phi, T):
    """Nonzero (irreducible index, multiplicity) pairs; raises NotACharacter."""
    if phi.group is not T.group or phi.p != T.p:
        raise CharacterError("class function and table disagree on group or prime")
    m = multiplicities(phi, T)
    if (m >= T.p / 2).any():
        raise NotACharacter("multiplicity lift out of range: not a character")
    recon = modp.matmul(m[None, :], T.matrix, T.p)[0]
    if not np.array_equal(recon, phi.values):
        raise NotACharacter("reconstruction mismatch: not a character")
    # mod p the reconstruction always holds; the integer degree identity does not
    if int(sum(int(k) * d for k, d in zip(m, T.degrees))) != phi.degree:
        raise NotACharacter("degree does not match the lifted multiplicities")
    return [(i, int(k)) for i, k in enumerate(m) if k]


def decomposition_report(phi, T):
    return [{"irrep": f"irr{i}", "degree": T[i].degree, "mult": k}
            for i, k in decompose(phi, T)]


def combine(T, coeffs):
    """sum_i coeffs[i] * T[i] for a dict or sequence of multiplicities."""
    items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
    vals = np.zeros(T.classes.class_count, dtype=np.int64)
    for i, c in items:
        if c:
            vals = (vals + int(c) * T[i].values) % T.p
    return ClassFunction(T.group, vals, T.p, "combination")
