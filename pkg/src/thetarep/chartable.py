"""Irreducible character tables over a session-wide prime field.

Character values live in F_p for a prime p = 1 mod the exponent of every
group in play, so all character values (sums of roots of unity) have exact
images.  p also exceeds twice the largest group order, which makes every
multiplicity computed here lift to the true integer.
"""

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from . import modp
from .classes import class_constant_tensor
from .groups import exponent


class CharacterError(ValueError):
    pass


class BoundExceeded(CharacterError):
    pass


class NotACharacter(CharacterError):
    pass


class InternalInvariantError(RuntimeError):
    pass


class ClassFunction:
    """A class function of ``group`` with values in F_p, one per class."""

    __hash__ = None

    def __init__(self, group, values, p, note=""):
        values = np.asarray(values, dtype=np.int64) % p
        if values.shape != (group.classes.class_count,):
            raise CharacterError("one value per conjugacy class expected")
        values.flags.writeable = False
        self.group = group
        self.values = values
        self.p = p
        self.note = note

    def __repr__(self):
        return f"<ClassFunction on {self.group.name} deg={self.degree} {self.note}>"

    @property
    def degree(self):
        return int(self.values[0])

    def _check(self, other):
        if other.group is not self.group or other.p != self.p:
            raise CharacterError("class functions live on different groups or fields")

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return other.group is self.group and other.p == self.p \
            and np.array_equal(self.values, other.values)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return ClassFunction(self.group, self.values + other.values, self.p, "sum")

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return ClassFunction(self.group, self.values * (int(other) % self.p), self.p,
                                 self.note)
        self._check(other)
        return ClassFunction(self.group, self.values * other.values % self.p, self.p,
                             "tensor")

    __rmul__ = __mul__

    def at(self, x):
        """Value at element index ``x``."""
        return int(self.values[self.group.classes.class_of[x]])


Character = ClassFunction


def trivial_character(G, p):
    return ClassFunction(G, np.ones(G.classes.class_count), p, "trivial")


def regular_character(G, p):
    vals = np.zeros(G.classes.class_count)
    vals[0] = G.order
    return ClassFunction(G, vals, p, "regular")


@dataclass(eq=False)
class SessionPrime:
    p: int
    e: int
    bound: int
    _tables: dict = field(default_factory=dict, repr=False)

    def admits(self, G):
        return self.e % exponent(G) == 0 and G.order <= self.bound

    def table(self, G):
        """Cached character table of ``G`` in this session."""
        hit = self._tables.get(id(G))
        if hit is None or hit[0] is not G:
            hit = (G, character_table(G, G.classes, self))
            self._tables[id(G)] = hit
        return hit[1]


def register_groups(*groups, limit=2**31):
    """Smallest prime p = 1 mod lcm(exponents) with p > 2 * max order."""
    e = reduce(math.lcm, (exponent(G) for G in groups), 1)
    bound = max(G.order for G in groups)
    p = modp.find_prime(e, 2 * bound, limit=limit)
    return SessionPrime(p, e, bound)


class CharacterTable:
    """Irreducible characters of a group ordered by (degree, lifted values)."""

    def __init__(self, group, classes, p, irreducibles, pairs=None):
        self.group = group
        self.classes = classes
        self.p = p
        self.irreducibles = irreducibles
        self.pairs = pairs          # for product groups: (i, j) factor indices per row

    def __len__(self):
        return len(self.irreducibles)

    def __getitem__(self, i):
        return self.irreducibles[i]

    def __iter__(self):
        return iter(self.irreducibles)

    @property
    def degrees(self):
        return [chi.degree for chi in self.irreducibles]

    @property
    def matrix(self):
        return np.array([chi.values for chi in self.irreducibles])

    def index(self, chi):
        for i, psi in enumerate(self.irreducibles):
            if psi == chi:
                return i
        raise CharacterError("not an irreducible of this table")

    def linear(self):
        return [i for i, chi in enumerate(self.irreducibles) if chi.degree == 1]


def character_table(G, D, P, method="auto"):
    """Character table of ``G`` over the session prime.

    Direct products are tabulated as outer tensors of their factors' tables
    unless ``method="dixon"`` forces the class-matrix eigenvector route.
    """
    if not P.admits(G):
        raise CharacterError(f"{G.name} is not covered by the session prime {P.p}")
    p = P.p
    if method == "auto" and G.factors is not None:
        return _product_table(G, D, P)
    rows = _dixon_rows(G, D, p)
    rows.sort(key=lambda r: (int(r[0]), tuple(int(v) for v in r)))
    irr = [ClassFunction(G, r, p, f"irr{i}") for i, r in enumerate(rows)]
    table = CharacterTable(G, D, p, irr)
    _check_table(table)
    return table


def _product_table(G, D, P):
    A, B = G.factors
    TA, TB = P.table(A), P.table(B)
    nb = B.order
    ca = A.classes.class_of[D.reps // nb]
    cb = B.classes.class_of[D.reps % nb]
    p = P.p
    rows = []
    for i, a in enumerate(TA):
        for j, b in enumerate(TB):
            rows.append((a.values[ca] * b.values[cb] % p, (i, j)))
    rows.sort(key=lambda r: (int(r[0][0]), tuple(int(v) for v in r[0])))
    irr = [ClassFunction(G, r, p, f"irr{k}") for k, (r, _) in enumerate(rows)]
    table = CharacterTable(G, D, p, irr, pairs=[ij for _, ij in rows])
    _check_table(table)
    return table


def _dixon_rows(G, D, p):
    r = D.class_count
    A = class_constant_tensor(D) % p            # A[j] is the matrix of class sum K_j
    spaces = [np.eye(r, dtype=np.int64)]
    pivots = [list(range(r))]
    for j in range(1, r):
        if all(B.shape[1] == 1 for B in spaces):
            break
        new_spaces, new_pivots = [], []
        for B, piv in zip(spaces, pivots):
            d = B.shape[1]
            if d == 1:
                new_spaces.append(B)
                new_pivots.append(piv)
                continue
            restricted = modp.matmul(A[j], B, p)[piv]
            eig = modp.roots(modp.charpoly(restricted, p), p)
            total = 0
            for lam in eig:
                shifted = (restricted - lam * np.eye(d, dtype=np.int64)) % p
                N = modp.nullspace(shifted, p)
                total += N.shape[1]
                sub, subpiv = modp.column_echelon(modp.matmul(B, N, p), p)
                new_spaces.append(sub)
                new_pivots.append(subpiv)
            if total != d:
                raise InternalInvariantError("class matrix not diagonalizable over F_p")
        spaces, pivots = new_spaces, new_pivots
    if any(B.shape[1] != 1 for B in spaces) or len(spaces) != r:
        raise InternalInvariantError("eigenspace splitting did not separate the characters")

    sizes = D.sizes % p
    size_inv = np.array([modp.inv(s, p) for s in sizes], dtype=np.int64)
    rows = []
    for B in spaces:
        w = B[:, 0] * modp.inv(B[0, 0], p) % p           # central character, w[1-class] = 1
        s = int((w * w[D.inverse_class] % p * size_inv % p).sum() % p)
        d2 = G.order * modp.inv(s, p) % p
        d = math.isqrt(d2)
        if d * d != d2 or G.order % d:
            raise InternalInvariantError("degree is not an integer divisor of |G|")
        rows.append(d * w % p * size_inv % p)
    return rows


def _check_table(T):
    G, D, p = T.group, T.classes, T.p
    X = T.matrix
    if len(X) != D.class_count:
        raise InternalInvariantError("#irreducibles != #classes")
    if sum(d * d for d in T.degrees) != G.order:
        raise InternalInvariantError("sum of squared degrees != |G|")
    Xbar = X[:, D.inverse_class]
    rows = modp.matmul(X * (D.sizes % p), Xbar.T, p)
    if not np.array_equal(rows, (G.order % p) * np.eye(len(X), dtype=np.int64)):
        raise InternalInvariantError("row orthogonality fails")
    cols = modp.matmul(X.T, Xbar, p)
    expect = np.diag([(G.order // s) % p for s in D.sizes])
    if not np.array_equal(cols, expect):
        raise InternalInvariantError("column orthogonality fails")


def inner_product(phi, psi):
    """Multiplicity pairing (1/|G|) sum_C |C| phi(C) psi(C^-1), lifted to an integer."""
    phi._check(psi)
    G, p = phi.group, phi.p
    D = G.classes
    total = int((phi.values * psi.values[D.inverse_class] % p * (D.sizes % p) % p).sum() % p)
    value = total * modp.inv(G.order, p) % p
    if value >= p / 2:
        raise BoundExceeded(f"lifted inner product {value} exceeds p/2 for p={p}")
    return value


def dual(chi):
    D = chi.group.classes
    return ClassFunction(chi.group, chi.values[D.inverse_class], chi.p, f"dual {chi.note}")
