"""Multiplicity matrices of representations of product groups and theta predicates.

A representation Pi of G1 x G2 is recorded as the integer matrix
entries[i, j] = m(Pi, pi_i (x) pi_j).  Every predicate (graphic, bigraphic,
theta) and both sides of the Res/Ind equivalence are read off that matrix.
"""

from dataclasses import dataclass, field

import numpy as np

from . import modp
from .chartable import CharacterError, InternalInvariantError, inner_product
from .clifford import rieffel_partition
from .functors import combine, decompose, induce, restrict
from .groups import GroupError, direct_product, graph_subgroup, product_subgroup, quotient


class ThetaError(ValueError):
    pass


class MultiplicityMatrix:
    """entries[i, j] = multiplicity of T1[i] (x) T2[j] in the source character."""

    def __init__(self, entries, T1, T2, source=None):
        self.entries = np.asarray(entries, dtype=np.int64)
        self.T1 = T1
        self.T2 = T2
        self.source = source
        self.row_support = [int(i) for i in np.nonzero(self.entries.any(axis=1))[0]]
        self.col_support = [int(j) for j in np.nonzero(self.entries.any(axis=0))[0]]

    @property
    def shape(self):
        return self.entries.shape

    @property
    def degree(self):
        d1 = np.array(self.T1.degrees, dtype=np.int64)
        d2 = np.array(self.T2.degrees, dtype=np.int64)
        return int(d1 @ self.entries @ d2)

    def sparse(self):
        return [[int(i), int(j), int(self.entries[i, j])] for i, j in zip(*np.nonzero(self.entries))]

    def to_dict(self):
        return {"shape": list(self.shape), "rows": self.row_support, "cols": self.col_support,
                "entries": self.sparse(), "degree": self.degree}


def multiplicity_matrix(Pi, P):
    """Decompose a character of a direct product against the outer-tensor table."""
    X = Pi.group
    if X.factors is None:
        raise ThetaError("character does not live on a direct product")
    A, B = X.factors
    T1, T2, T = P.table(A), P.table(B), P.table(X)
    entries = np.zeros((len(T1), len(T2)), dtype=np.int64)
    for k, m in decompose(Pi, T):
        entries[T.pairs[k]] = m
    M = MultiplicityMatrix(entries, T1, T2, Pi)
    if M.degree != Pi.degree:
        raise InternalInvariantError("sum of entries * deg * deg != deg Pi")
    return M


def big_theta(M, i):
    """Theta_{pi_i}: the G2-character sum_j entries[i, j] chi_j."""
    if i not in M.row_support:
        raise ThetaError("pi1 not in R_G1(Pi)")
    return combine(M.T2, M.entries[i])


@dataclass
class ThetaClassification:
    graphic1: bool
    graphic2: bool
    bigraphic: bool
    multiplicity_free: bool
    theta: bool
    empty: bool
    pairs: list = None
    conditions: dict = field(default_factory=dict)

    def to_dict(self):
        return {"flags": {"graphic1": self.graphic1, "graphic2": self.graphic2,
                          "bigraphic": self.bigraphic,
                          "multiplicity_free": self.multiplicity_free,
                          "theta": self.theta, "empty": self.empty},
                "conditions": self.conditions,
                "pairs": self.pairs}


def _matrix(M):
    return M.entries if isinstance(M, MultiplicityMatrix) else np.asarray(M, dtype=np.int64)


def classify(M):
    """Graphic / bigraphic / multiplicity-free / theta flags of a multiplicity matrix.

    Also evaluates three matrix forms of the equivalent conditions, computed
    independently of the flags: ``single_diagonal_support`` (the Hom-module
    of each side has only sigma-bar (x) sigma constituents),
    ``module_multiplicity_free`` (sum_s a_sj a_sk <= 1 for all j, k, both sides)
    and ``diagonal_multiplicity_le_1`` (sum_s a_sj^2 <= 1, both sides).
    """
    a = _matrix(M)
    rows = (a > 0).sum(axis=1)
    cols = (a > 0).sum(axis=0)
    graphic1 = bool((rows[rows > 0] == 1).all())
    graphic2 = bool((cols[cols > 0] == 1).all())
    bigraphic = graphic1 and graphic2
    mfree = bool((a <= 1).all())
    theta = bigraphic and mfree
    gram_cols = a.T @ a         # module of G1-side seen by G2 x G2
    gram_rows = a @ a.T
    conditions = {
        "single_diagonal_support": bool(
            not (gram_cols - np.diag(np.diag(gram_cols))).any()
            and not (gram_rows - np.diag(np.diag(gram_rows))).any()),
        "module_multiplicity_free": bool((gram_cols <= 1).all() and (gram_rows <= 1).all()),
        "diagonal_multiplicity_le_1": bool((np.diag(gram_cols) <= 1).all()
                                           and (np.diag(gram_rows) <= 1).all()),
    }
    pairs = None
    if bigraphic:
        pairs = [(int(i), int(np.nonzero(a[i])[0][0])) for i in np.nonzero(rows)[0]]
    return ThetaClassification(graphic1, graphic2, bigraphic, mfree, theta,
                               empty=not a.any(), pairs=pairs, conditions=conditions)


def theta_map(M):
    """The bijection row support <-> column support of a bigraphic matrix."""
    a = _matrix(M)
    for i, row in enumerate(a):
        k = int((row > 0).sum())
        if k > 1:
            raise ThetaError(f"not bigraphic: row {i} has {k} supported columns")
    for j, col in enumerate(a.T):
        k = int((col > 0).sum())
        if k > 1:
            raise ThetaError(f"not bigraphic: column {j} has {k} supported rows")
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(a))]


def round_trip(M):
    """Every supported row equals the decomposition of its Theta; returns True or raises."""
    for i in M.row_support:
        row = np.zeros(len(M.T2), dtype=np.int64)
        for j, m in decompose(big_theta(M, i), M.T2):
            row[j] = m
        if not np.array_equal(row, M.entries[i]):
            raise InternalInvariantError(f"row {i} does not round-trip through Theta")
    d1 = np.array(M.T1.degrees)
    thetas = sum(int(d1[i]) * big_theta(M, i).degree for i in M.row_support)
    if M.source is not None and thetas != M.source.degree:
        raise InternalInvariantError("sum deg(pi1) deg(Theta_pi1) != deg Pi")
    return True


# graph subgroups ----------------------------------------------------------

@dataclass(eq=False)
class GraphSetup:
    """G1 x G2 with normal H_i, the graph subgroup Gamma and H1 x H2 inside it."""
    G1: object
    H1: object
    G2: object
    H2: object
    gamma: object
    X: object            # G1 x G2
    Gamma: object        # Subgroup of X
    HH: object           # H1 x H2 as a Subgroup of Gamma.group, factored group

    @property
    def orders(self):
        return {"G1": self.G1.order, "H1": self.H1.order, "G2": self.G2.order,
                "H2": self.H2.order, "Gamma": self.Gamma.order}


def graph_setup(G1, H1, G2, H2, gamma, cap=None):
    kw = {} if cap is None else {"cap": cap}
    X = direct_product(G1, G2, **kw)
    Gamma = graph_subgroup(G1, H1, G2, H2, gamma, X)
    HH = product_subgroup(X, H1, H2).within(Gamma)
    return GraphSetup(G1, H1, G2, H2, gamma, X, Gamma, HH)


def restriction_side(rho, S, P):
    """Multiplicity matrix of Res_{H1 x H2}^Gamma rho."""
    if rho.group is not S.Gamma.group:
        raise CharacterError("rho is not a class function of Gamma")
    return multiplicity_matrix(restrict(rho, S.HH), P)


def induction_side(rho, S, P):
    """Multiplicity matrix of Ind_Gamma^{G1 x G2} rho."""
    return multiplicity_matrix(induce(rho, S.Gamma), P)


def verify_main_theorem(S, rho, P):
    """Res rho is theta on H1 x H2 iff Ind rho is theta on G1 x G2."""
    res, ind = restriction_side(rho, S, P), induction_side(rho, S, P)
    rc, ic = classify(res), classify(ind)
    return {"res": res.to_dict(), "ind": ind.to_dict(),
            "res_class": rc.to_dict(), "ind_class": ic.to_dict(),
            "equivalent": rc.theta == ic.theta}


def _require_irreducible(rho):
    if inner_product(rho, rho) != 1:
        raise CharacterError("rho must be an irreducible character of Gamma")


def _require_abelian(S):
    if not quotient(S.G1, S.H1).quotient.is_abelian:
        raise GroupError("G1/H1 must be abelian")


def prop_second_check(S, rho, P):
    """Res bigraphic and multiplicity-free Ind_{H1}^{G1} sigma  =>  Ind rho graphic1."""
    _require_abelian(S)
    _require_irreducible(rho)
    res, ind = restriction_side(rho, S, P), induction_side(rho, S, P)
    TG1, TH1 = P.table(S.G1), P.table(S.H1.group)
    h1 = classify(res).bigraphic
    h2 = all(k <= 1 for s in res.row_support
             for _, k in decompose(induce(TH1[s], S.H1), TG1))
    applicable = h1 and h2
    conclusion = classify(ind).graphic1 if applicable else None
    return {"hypotheses": {"res_bigraphic": h1, "ind_h1_multiplicity_free": h2},
            "applicable": applicable, "conclusion": conclusion,
            "finding": applicable and not conclusion}


def prop_third_check(S, rho, P):
    """Ind bigraphic and multiplicity-free Res_{H1} pi1  =>  Res rho graphic1."""
    _require_abelian(S)
    _require_irreducible(rho)
    res, ind = restriction_side(rho, S, P), induction_side(rho, S, P)
    TG1, TH1 = P.table(S.G1), P.table(S.H1.group)
    h1 = classify(ind).bigraphic
    h2 = all(k <= 1 for i in ind.row_support
             for _, k in decompose(restrict(TG1[i], S.H1), TH1))
    applicable = h1 and h2
    conclusion = classify(res).graphic1 if applicable else None
    return {"hypotheses": {"ind_bigraphic": h1, "res_g1_multiplicity_free": h2},
            "applicable": applicable, "conclusion": conclusion,
            "finding": applicable and not conclusion}


def _block_sum(a, row_classes, col_classes):
    out = np.zeros((len(row_classes), len(col_classes)), dtype=np.int64)
    for r, rc in enumerate(row_classes):
        for c, cc in enumerate(col_classes):
            out[r, c] = a[np.ix_(rc, cc)].sum()
    return out


def rieffel_bigraphic_classify(S, rho, P):
    """Bigraphic-ness of both sides after collapsing irreducibles to Rieffel classes."""
    R1, R2 = rieffel_partition(S.H1, P), rieffel_partition(S.H2, P)
    res, ind = restriction_side(rho, S, P), induction_side(rho, S, P)
    qres = _block_sum(res.entries, R1.h_classes, R2.h_classes)
    qind = _block_sum(ind.entries, R1.g_classes, R2.g_classes)
    rb, ib = classify(qres).bigraphic, classify(qind).bigraphic
    g_to_h1, g_to_h2 = dict(R1.correspondence), dict(R2.correspondence)
    mapped = {(g_to_h1[a], g_to_h2[b]) for a, b in zip(*np.nonzero(qind))}
    same = mapped == set(zip(*np.nonzero(qres)))
    return {"res_bigraphic": rb, "ind_bigraphic": ib, "iff_holds": rb == ib,
            "supports_correspond": bool(same),
            "res_quotient": qres.tolist(), "ind_quotient": qind.tolist()}


# strong Gelfand criterion ---------------------------------------------------

def tensor_coefficients(T):
    """N[i, k, e] = <conj(chi_i) chi_k, chi_e> as integers."""
    D = T.classes
    p = T.p
    X = T.matrix
    Xbar = X[:, D.inverse_class]
    w = (D.sizes % p) * modp.inv(T.group.order, p) % p
    left = (Xbar[:, None, :] * X[None, :, :]) % p                    # (i, k, C)
    left = left * w % p
    n = len(X)
    N = modp.matmul(left.reshape(n * n, -1), Xbar.T, p).reshape(n, n, n)
    if (N >= p // 2).any():
        raise InternalInvariantError("tensor coefficient lift out of range")
    return N


def _diagonal_multiplicities(a, N):
    # mult[e, j, l] = sum_{i, k} a[i, j] a[k, l] N[i, k, e]
    return np.einsum("ij,kl,ike->ejl", a, a, N, optimize=True)


def strong_gelfand_theta_check(Pi, P):
    """Multiplicity-freeness of conj(Pi) (x) Pi on Delta_G1 x (G2 x G2) and the mirror.

    (a) and (b) together force theta; with both (Delta_Gi, Gi x Gi) strong
    Gelfand, theta forces (a) and (b).  Never builds the fourfold product.
    """
    M = multiplicity_matrix(Pi, P)
    a = M.entries
    T1, T2 = M.T1, M.T2
    N1, N2 = tensor_coefficients(T1), tensor_coefficients(T2)
    hyp_a = bool((_diagonal_multiplicities(a, N1) <= 1).all())
    hyp_b = bool((_diagonal_multiplicities(a.T, N2) <= 1).all())
    sg = [bool((N <= 1).all()) for N in (N1, N2)]
    theta = classify(M).theta
    forward = (not (hyp_a and hyp_b)) or theta
    converse = (not (all(sg) and theta)) or (hyp_a and hyp_b)
    return {"hyp_delta_g1": hyp_a, "hyp_delta_g2": hyp_b, "strong_gelfand": sg,
            "theta": theta, "part1_holds": forward, "part2_holds": converse,
            "part2_applicable": all(sg)}
