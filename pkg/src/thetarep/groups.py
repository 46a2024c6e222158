"""Finite groups as dense Cayley tables over canonically indexed elements.

Every group used by the engine is a :class:`FiniteGroup`: elements are the
integers ``0..order-1``, ``0`` is the identity, and multiplication is a
precomputed table.  Groups coming from permutations keep the permutation of
each element in ``perms`` so they can be serialized and inspected.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import cached_property, reduce

import numpy as np

DEFAULT_CAP = 20000


class GroupError(ValueError):
    pass


class GroupTooLarge(GroupError):
    def __init__(self, count, cap):
        super().__init__(f"group too large: more than {cap} elements (stopped after {count})")
        self.count = count
        self.cap = cap


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[x, y]`` is the index of ``x*y``.  ``perms``, when present, holds a
    faithful permutation image of every element (row ``x`` is the image list
    of element ``x``), composed as ``(x*y)[i] = x[y[i]]``.
    """

    def __init__(self, table, generators=(), labels=None, perms=None,
                 factors=None, name=None, meta=None):
        table = np.ascontiguousarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError("multiplication table must be a non-empty square array")
        table.flags.writeable = False
        self.table = table
        self.order = table.shape[0]
        self.generators = list(dict.fromkeys(int(g) for g in generators if int(g) != 0))
        self.labels = list(labels) if labels is not None else list(range(self.order))
        if perms is not None:
            perms = np.ascontiguousarray(perms, dtype=np.int32)
            perms.flags.writeable = False
        self.perms = perms
        self.factors = factors
        self.name = name or f"G{self.order}"
        self.meta = dict(meta or {})

        rows, cols = np.nonzero(table == 0)
        if len(rows) != self.order or not np.array_equal(rows, np.arange(self.order)):
            raise GroupError("multiplication table is not a group table (inverses)")
        inv = np.empty(self.order, dtype=np.int32)
        inv[rows] = cols
        inv.flags.writeable = False
        self.inv = inv

    def __repr__(self):
        return f"<FiniteGroup {self.name} order={self.order}>"

    def mul(self, x, y):
        return int(self.table[x, y])

    def inverse(self, x):
        return int(self.inv[x])

    def conj(self, g, x):
        """g x g^-1 (vectorized over ``x``)."""
        return self.table[self.table[g, x], self.inv[g]]

    @cached_property
    def classes(self):
        from .classes import compute_classes
        return compute_classes(self)

    @cached_property
    def element_orders(self):
        ids = np.arange(self.order)
        orders = np.zeros(self.order, dtype=np.int64)
        orders[0] = 1
        cur = ids.copy()
        k = 1
        while (orders == 0).any():
            k += 1
            cur = self.table[cur, ids]
            orders[(cur == 0) & (orders == 0)] = k
        return orders

    @property
    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def index_of(self, label):
        """Element index from a permutation image list or a stored label."""
        if self.perms is not None and isinstance(label, (list, tuple)) \
                and len(label) == self.perms.shape[1] \
                and all(isinstance(v, (int, np.integer)) for v in label):
            hits = np.nonzero((self.perms == np.asarray(label)).all(axis=1))[0]
            if len(hits):
                return int(hits[0])
        for i, lab in enumerate(self.labels):
            if lab == label or (isinstance(lab, tuple) and list(lab) == label):
                return i
        raise GroupError(f"no element labelled {label!r} in {self.name}")


def exponent(G):
    return int(reduce(math.lcm, (int(o) for o in np.unique(G.element_orders)), 1))


def verify_axioms(G, full_limit=512, samples=10**4, seed=0):
    """Check identity, inverses and associativity.

    Up to ``full_limit`` elements associativity is proven with Light's test
    over the generators (which is exhaustive for the generated group);
    above it ``samples`` random triples are checked.
    """
    T = G.table
    ids = np.arange(G.order)
    if not (np.array_equal(T[0], ids) and np.array_equal(T[:, 0], ids)):
        return False
    if not (T[ids, G.inv] == 0).all():
        return False
    if G.order <= full_limit:
        # Light's test needs the generators to generate G
        if len(closure_in_table(T, G.generators)) != G.order:
            gens = range(G.order)
        else:
            gens = G.generators
        for g in gens:
            if not np.array_equal(T[T, g], T[:, T[:, g]]):
                return False
        return True
    rng = np.random.default_rng(seed)
    x, y, z = rng.integers(0, G.order, size=(3, samples))
    return bool((T[T[x, y], z] == T[x, T[y, z]]).all())


def closure_in_table(table, gens):
    """Sorted member array of the subgroup generated by ``gens``."""
    seen = np.zeros(table.shape[0], dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    gens = np.asarray(list(gens), dtype=np.int64)
    while len(frontier) and len(gens):
        nxt = table[frontier[:, None], gens[None, :]].ravel()
        nxt = np.unique(nxt[~seen[nxt]])
        seen[nxt] = True
        frontier = nxt
    return np.nonzero(seen)[0]


# permutation closure ------------------------------------------------------

def _perm_label(p):
    return tuple(int(v) for v in p)


def closure_from_generators(perms, cap=DEFAULT_CAP, degree=None, name=None, meta=None):
    """Breadth-first closure of a list of permutations.

    Element 0 is the identity; the remaining elements are numbered in the
    order they are discovered as ``x*g`` for generators ``g``.
    """
    gens = [np.asarray(p, dtype=np.int32) for p in perms]
    if degree is None:
        if not gens:
            raise GroupError("degree required for an empty generator list")
        degree = len(gens[0])
    for g in gens:
        if len(g) != degree or sorted(g.tolist()) != list(range(degree)):
            raise GroupError("generators must be permutations of the same point set")
    identity = np.arange(degree, dtype=np.int32)
    gens = [g for g in gens if not np.array_equal(g, identity)]

    elements = [identity]
    index = {identity.tobytes(): 0}
    right = [[] for _ in gens]   # right[k][x] = index of x*g_k
    i = 0
    while i < len(elements):
        x = elements[i]
        for k, g in enumerate(gens):
            y = x[g]
            key = y.tobytes()
            j = index.get(key)
            if j is None:
                if len(elements) >= cap:
                    raise GroupTooLarge(len(elements), cap)
                j = len(elements)
                index[key] = j
                elements.append(y)
            right[k].append(j)
        i += 1

    n = len(elements)
    right = [np.asarray(r, dtype=np.int32) for r in right]
    # column y of the table: x*y = (x*y')*g where y = y'*g was its discovery
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n)
    done = np.zeros(n, dtype=bool)
    done[0] = True
    for x in range(n):
        for k in range(len(gens)):
            y = right[k][x]
            if not done[y]:
                table[:, y] = right[k][table[:, x]]
                done[y] = True
    gen_idx = [index[g.tobytes()] for g in gens]
    perm_arr = np.asarray(elements, dtype=np.int32).reshape(n, degree)
    return FiniteGroup(table, gen_idx, labels=[_perm_label(p) for p in perm_arr],
                       perms=perm_arr, name=name, meta=meta)


def _cycle_perm(degree, *cycles):
    p = list(range(degree))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            p[a] = b
    return p


def symmetric_group(n, cap=DEFAULT_CAP):
    gens = []
    if n >= 2:
        gens = [_cycle_perm(n, (0, 1)), _cycle_perm(n, tuple(range(n)))]
    return closure_from_generators(gens, cap=cap, degree=n, name=f"S{n}")


def alternating_group(n, cap=DEFAULT_CAP):
    gens = [_cycle_perm(n, (i, i + 1, i + 2)) for i in range(n - 2)]
    return closure_from_generators(gens, cap=cap, degree=n, name=f"A{n}")


def cyclic_group(n, cap=DEFAULT_CAP):
    return closure_from_generators([_cycle_perm(n, tuple(range(n)))], cap=cap,
                                   degree=n, name=f"C{n}")


def dihedral_group(n, cap=DEFAULT_CAP):
    """Symmetries of the n-gon, order 2n."""
    refl = [(-i) % n for i in range(n)]
    return closure_from_generators([_cycle_perm(n, tuple(range(n))), refl],
                                   cap=cap, degree=n, name=f"D{2 * n}")


def quaternion_group():
    # regular action on {±1, ±i, ±j, ±k}; point 2*u + s encodes sign s on unit u
    mult = {  # unit product table with sign: (u, v) -> (sign, w), units 1,i,j,k
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def left(u):
        p = [0] * 8
        for v in range(4):
            for s in range(2):
                t, w = mult[(u, v)]
                p[2 * v + s] = 2 * w + (s ^ t)
        return p

    return closure_from_generators([left(1), left(2)], name="Q8")


# direct products and quotients ------------------------------------------

def direct_product(A, B, cap=DEFAULT_CAP):
    """A x B with (a, b) stored at index a*|B| + b."""
    n = A.order * B.order
    if n > cap:
        raise GroupTooLarge(n, cap)
    nb = B.order
    table = (A.table[:, None, :, None].astype(np.int64) * nb
             + B.table[None, :, None, :]).reshape(n, n)
    gens = [a * nb for a in A.generators] + list(B.generators)
    labels = [(la, lb) for la in A.labels for lb in B.labels]
    perms = None
    if A.perms is not None and B.perms is not None:
        da = A.perms.shape[1]
        perms = np.concatenate([np.repeat(A.perms, nb, axis=0),
                                np.tile(B.perms, (A.order, 1)) + da], axis=1)
    return FiniteGroup(table, gens, labels=labels, perms=perms, factors=(A, B),
                       name=f"{A.name}x{B.name}")


class Subgroup:
    """A subgroup of ``parent`` with its own :class:`FiniteGroup` structure.

    ``group`` is the subgroup as a group in its own right and ``embedding``
    maps its element indices to parent indices.  By default the subgroup's
    elements are the sorted ``members``; product subgroups substitute a
    direct-product group so their tables factor.
    """

    def __init__(self, parent, members, group=None, embedding=None, name=None, check=True):
        self.parent = parent
        members = np.unique(np.asarray(members, dtype=np.int64))
        if check:
            if len(members) == 0 or members[0] != 0:
                raise GroupError("subgroup must contain the identity")
            if members[-1] >= parent.order:
                raise GroupError("subgroup members outside the parent group")
            inside = np.zeros(parent.order, dtype=bool)
            inside[members] = True
            if not inside[parent.inv[members]].all() or \
                    not inside[parent.table[np.ix_(members, members)]].all():
                raise GroupError("members are not closed under multiplication")
        members.flags.writeable = False
        self.members = members
        self.order = len(members)
        self.name = name
        if group is not None:
            embedding = np.asarray(embedding, dtype=np.int64)
            if check and not np.array_equal(np.sort(embedding), members):
                raise GroupError("embedding does not cover the members")
            self._group = group
            self.embedding = embedding
        else:
            self._group = None
            self.embedding = members

    def __repr__(self):
        return f"<Subgroup {self.name or ''} order={self.order} of {self.parent.name}>"

    def __contains__(self, x):
        return bool(self.pos[x] >= 0)

    @property
    def index(self):
        return self.parent.order // self.order

    @cached_property
    def pos(self):
        """Parent index -> subgroup-group index, or -1."""
        pos = np.full(self.parent.order, -1, dtype=np.int64)
        pos[self.embedding] = np.arange(self.order)
        return pos

    @cached_property
    def group(self):
        if self._group is not None:
            return self._group
        m = self.members
        table = self.pos[self.parent.table[np.ix_(m, m)]]
        gens = _greedy_generators(table)
        labels = [self.parent.labels[int(x)] for x in m]
        perms = self.parent.perms[m] if self.parent.perms is not None else None
        name = self.name or f"{self.parent.name}[{self.order}]"
        return FiniteGroup(table, gens, labels=labels, perms=perms, name=name)

    @cached_property
    def is_normal(self):
        return is_normal(self.parent, self)

    def within(self, other):
        """This subgroup re-expressed inside ``other.group`` (requires self <= other).

        The result shares this subgroup's ``group`` object, so class functions
        of ``self.group`` can be induced into ``other.group`` directly.
        """
        emb = other.pos[self.embedding]
        if (emb < 0).any():
            raise GroupError("subgroup is not contained in the target subgroup")
        return Subgroup(other.group, emb, group=self.group, embedding=emb,
                        name=self.name, check=False)


def _greedy_generators(table):
    gens = []
    covered = np.zeros(table.shape[0], dtype=bool)
    covered[0] = True
    for x in range(table.shape[0]):
        if not covered[x]:
            gens.append(x)
            covered[:] = False
            covered[closure_in_table(table, gens)] = True
    return gens


def is_normal(G, S):
    inside = np.zeros(G.order, dtype=bool)
    inside[S.members] = True
    gens = G.generators if G.generators else range(G.order)
    return all(inside[G.conj(g, S.members)].all() for g in gens)


def subgroup(G, gens, name=None):
    """Subgroup generated by element indices ``gens``."""
    return Subgroup(G, closure_in_table(G.table, [int(g) for g in gens]), name=name, check=False)


def trivial_subgroup(G):
    return Subgroup(G, [0], name="1", check=False)


def whole_group(G):
    return Subgroup(G, np.arange(G.order), name=G.name, check=False)


def center(G):
    T = G.table
    central = (T == T.T).all(axis=1)
    return Subgroup(G, np.nonzero(central)[0], name=f"Z({G.name})", check=False)


def product_subgroup(P, S1, S2):
    """S1 x S2 inside P = direct_product(G1, G2), with a factored group structure."""
    if P.factors is None or P.factors[0] is not S1.parent or P.factors[1] is not S2.parent:
        raise GroupError("product_subgroup needs subgroups of the two factors of P")
    n2 = P.factors[1].order
    group = direct_product(S1.group, S2.group)
    emb = (S1.embedding[:, None] * n2 + S2.embedding[None, :]).ravel()
    return Subgroup(P, emb, group=group, embedding=emb,
                    name=f"{S1.name or 'H1'}x{S2.name or 'H2'}", check=False)


@dataclass(frozen=True, eq=False)
class QuotientData:
    source: FiniteGroup
    kernel: Subgroup
    quotient: FiniteGroup
    project: np.ndarray
    transversal: np.ndarray


def quotient(G, N):
    """G/N with cosets indexed in order of their minimal member."""
    if N.parent is not G:
        raise GroupError("kernel is not a subgroup of this group")
    if not N.is_normal:
        raise GroupError("subgroup is not normal")
    coset_min = G.table[:, N.members].min(axis=1)
    transversal = np.unique(coset_min)
    lookup = np.full(G.order, -1, dtype=np.int64)
    lookup[transversal] = np.arange(len(transversal))
    project = lookup[coset_min]
    table = project[G.table[np.ix_(transversal, transversal)]]
    gens = sorted({int(project[g]) for g in G.generators} - {0})
    labels = [G.labels[int(t)] for t in transversal]
    Q = FiniteGroup(table, gens, labels=labels, name=f"{G.name}/{N.name or N.order}")
    project.flags.writeable = False
    return QuotientData(G, N, Q, project, transversal)


@dataclass(frozen=True, eq=False)
class QuotientIso:
    domain: QuotientData
    codomain: QuotientData
    forward: np.ndarray


def quotient_iso(domain, codomain, pairs):
    """Isomorphism of quotients from ``(g1, g2)`` source-element pairs.

    The pairs need only cover a generating set of ``domain``'s quotient; the
    map is extended multiplicatively and rejected unless it is a well-defined
    bijective homomorphism.
    """
    Q1, Q2 = domain.quotient, codomain.quotient
    if Q1.order != Q2.order:
        raise GroupError("gamma not a homomorphism: quotients have different orders")
    images = {}
    for g1, g2 in pairs:
        a, b = int(domain.project[g1]), int(codomain.project[g2])
        if images.setdefault(a, b) != b:
            raise GroupError("gamma not a homomorphism: inconsistent coset images")
    fwd = np.full(Q1.order, -1, dtype=np.int64)
    fwd[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for q in frontier:
            for a, b in images.items():
                x, y = Q1.table[q, a], Q2.table[fwd[q], b]
                if fwd[x] < 0:
                    fwd[x] = y
                    nxt.append(int(x))
                elif fwd[x] != y:
                    raise GroupError("gamma not a homomorphism")
        frontier = nxt
    if (fwd < 0).any():
        raise GroupError("gamma pairs do not generate the quotient")
    return make_quotient_iso(domain, codomain, fwd)


def make_quotient_iso(domain, codomain, forward):
    Q1, Q2 = domain.quotient, codomain.quotient
    fwd = np.asarray(forward, dtype=np.int64)
    if len(fwd) != Q1.order or Q1.order != Q2.order or \
            not np.array_equal(np.sort(fwd), np.arange(Q2.order)):
        raise GroupError("gamma not a homomorphism: not a bijection")
    if not np.array_equal(fwd[Q1.table], Q2.table[np.ix_(fwd, fwd)]):
        raise GroupError("gamma not a homomorphism")
    fwd.flags.writeable = False
    return QuotientIso(domain, codomain, fwd)


def graph_subgroup(G1, H1, G2, H2, gamma, P=None):
    """Preimage in G1 x G2 of the graph of ``gamma``: {(g1, g2) : gamma(g1 H1) = g2 H2}."""
    d, c = gamma.domain, gamma.codomain
    if d.source is not G1 or c.source is not G2 or d.kernel is not H1 or c.kernel is not H2:
        raise GroupError("gamma is not defined on G1/H1 -> G2/H2")
    # re-validate: QuotientIso may have been built by hand
    make_quotient_iso(d, c, gamma.forward)
    if P is None:
        P = direct_product(G1, G2)
    target = gamma.forward[d.project]                       # per g1
    ok = target[:, None] == c.project[None, :]              # |G1| x |G2|
    a, b = np.nonzero(ok)
    members = a * G2.order + b
    return Subgroup(P, members, name="Gamma", check=False)


# builders -----------------------------------------------------------------

def wreath_of_group(B, n, cap=DEFAULT_CAP):
    """B wr S_n acting imprimitively on n blocks of deg(B) points."""
    if B.perms is None:
        raise GroupError("wreath_of_group needs a permutation group")
    d = B.perms.shape[1]
    size = B.order ** n * math.factorial(n)
    if size > cap:
        raise GroupTooLarge(size, cap)
    N = d * n
    gens = []
    for g in B.generators:
        p = list(range(N))
        p[:d] = [int(v) for v in B.perms[g]]
        gens.append(p)
    tops = []
    if n >= 2:
        tops.append(_cycle_perm(n, (0, 1)))
    if n >= 3:
        tops.append(_cycle_perm(n, tuple(range(n))))
    for s in tops:
        gens.append([s[i // d] * d + i % d for i in range(N)])
    W = closure_from_generators(gens, cap=cap, degree=N,
                                name=f"({B.name})wrS{n}", meta={"blocks": n, "block_size": d})
    W.meta["base"] = B
    return W


def wreath_product(m, n, cap=DEFAULT_CAP):
    """S_m wr S_n."""
    return wreath_of_group(symmetric_group(m), n, cap=cap)


def block_permutation(W, x):
    """The top-group permutation of blocks induced by element ``x``."""
    d, n = W.meta["block_size"], W.meta["blocks"]
    return tuple(int(W.perms[x][i * d]) // d for i in range(n))


def wreath_base(W):
    """The base subgroup B^n (elements fixing every block)."""
    d, n = W.meta["block_size"], W.meta["blocks"]
    blocks = W.perms[:, ::d] // d
    members = np.nonzero((blocks == np.arange(n)).all(axis=1))[0]
    return Subgroup(W, members, name="base", check=False)


class _Field:
    """GF(q) by lookup tables; elements 0..q-1 are base-p digit vectors."""

    def __init__(self, q):
        p = _smallest_prime_factor(q)
        k = round(math.log(q, p))
        if p ** k != q:
            raise GroupError(f"q={q} is not a prime power")
        self.q, self.p, self.k = q, p, k
        digits = np.array([[(a // p ** i) % p for i in range(k)] for a in range(q)])
        weights = p ** np.arange(k)
        self.add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.neg = ((-digits) % p) @ weights
        modulus = _irreducible(p, k)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                prod = [0] * (2 * k - 1)
                for i in range(k):
                    for j in range(k):
                        prod[i + j] += digits[a][i] * digits[b][j]
                for top in range(2 * k - 2, k - 1, -1):   # reduce by monic modulus
                    c = prod[top] % p
                    if c:
                        for i in range(k + 1):
                            prod[top - k + i] -= c * modulus[i]
                mul[a, b] = sum((prod[i] % p) * p ** i for i in range(k))
        self.mul = mul
        self.add.flags.writeable = self.mul.flags.writeable = False


def _smallest_prime_factor(n):
    if n < 2:
        raise GroupError(f"q={n} is not a prime power")
    for f in range(2, math.isqrt(n) + 1):
        if n % f == 0:
            return f
    return n


def _irreducible(p, k):
    """Monic irreducible polynomial of degree k over F_p (low coefficient first)."""
    if k == 1:
        return [0, 1]
    for coeffs in itertools.product(range(p), repeat=k):
        poly = list(coeffs) + [1]
        # degree <= 3 here: irreducible iff no root; higher degrees checked by trial division
        if k <= 3 and all(sum(c * x ** i for i, c in enumerate(poly)) % p for x in range(p)):
            return poly
    raise GroupError(f"GF({p}^{k}) not supported")


def vector_space(q, dim, cap=DEFAULT_CAP):
    """Additive group of F_q^dim; index = sum of coordinate * q^i."""
    F = _Field(q)
    n = q ** dim
    if n > cap:
        raise GroupTooLarge(n, cap)
    coords = _digits(np.arange(n), q, dim)
    summed = F.add[coords[:, None, :], coords[None, :, :]]
    table = summed @ (q ** np.arange(dim))
    gens = [int(q ** (i // F.k) * (F.p ** (i % F.k))) for i in range(dim * F.k)]
    labels = [tuple(int(c) for c in row) for row in coords]
    return FiniteGroup(table, gens, labels=labels, name=f"F{q}^{dim}",
                       meta={"field": F, "dim": dim})


def _digits(idx, q, k):
    return np.stack([(idx // q ** i) % q for i in range(k)], axis=1)


def heisenberg(q, m, cap=DEFAULT_CAP):
    """Heisenberg group of F_q^{2m} with (v,t)(w,s) = (v+w, t+s+<v,w>/2)."""
    if q % 2 == 0:
        raise GroupError("q must be odd")
    F = _Field(q)
    dim = 2 * m
    n = q ** (dim + 1)
    if n > cap:
        raise GroupTooLarge(n, cap)
    idx = np.arange(n)
    t = idx % q
    v = _digits(idx // q, q, dim)
    half = int(np.nonzero(F.mul[2 % F.p] == 1)[0][0])   # 2 lies in the prime field
    vsum = F.add[v[:, None, :], v[None, :, :]] @ (q ** np.arange(dim))
    form = np.zeros((n, n), dtype=np.int64)
    for i in range(m):
        a = F.mul[v[:, None, i], v[None, :, m + i]]
        b = F.mul[v[:, None, m + i], v[None, :, i]]
        form = F.add[form, F.add[a, F.neg[b]]]
    tsum = F.add[F.add[t[:, None], t[None, :]], F.mul[half, form]]
    table = tsum + q * vsum
    basis = [F.p ** j for j in range(F.k)]
    gens = [int(q * b * q ** i) for i in range(dim) for b in basis] + basis
    labels = [(tuple(int(c) for c in row), int(s)) for row, s in zip(v, t)]
    return FiniteGroup(table, gens, labels=labels, name=f"Heis({q},{m})",
                       meta={"field": F, "q": q, "m": m})


def heisenberg_center(HG):
    q = HG.meta["q"]
    return Subgroup(HG, np.arange(q), name="Z", check=False)


# serialization ------------------------------------------------------------

def group_to_json(G):
    """JSON document {"order", "generators", "labels"}.

    Groups without a permutation image are written through their left
    regular representation and flagged ``"regular": true``.
    """
    if G.perms is not None:
        gens = [G.perms[g].tolist() for g in G.generators]
        regular = False
    else:
        gens = [G.table[g].tolist() for g in G.generators]
        regular = True
    labels = [_jsonable(lab) for lab in G.labels]
    return json.dumps({"order": G.order, "generators": gens, "labels": labels,
                       "regular": regular, "name": G.name}, sort_keys=True)


def _jsonable(lab):
    if isinstance(lab, tuple):
        return [_jsonable(x) for x in lab]
    return lab


def _tupled(lab):
    if isinstance(lab, list):
        return tuple(_tupled(x) for x in lab)
    return lab


def group_from_json(text, cap=DEFAULT_CAP):
    doc = json.loads(text)
    gens = doc["generators"]
    degree = len(gens[0]) if gens else (doc["order"] if doc.get("regular") else 1)
    G = closure_from_generators(gens, cap=cap, degree=degree, name=doc.get("name"))
    if G.order != doc["order"]:
        raise GroupError(f"generators give order {G.order}, document says {doc['order']}")
    if doc.get("regular"):
        # left-regular perms: element x sends point 0 to x
        order = np.argsort(G.perms[:, 0])
        rank = np.empty_like(order)
        rank[order] = np.arange(G.order)
        table = rank[G.table[np.ix_(order, order)]]
        G = FiniteGroup(table, [int(rank[g]) for g in G.generators], name=doc.get("name"))
    labels = [_tupled(lab) for lab in doc.get("labels", range(G.order))]
    if G.perms is not None:
        return FiniteGroup(G.table, G.generators, labels=labels, perms=G.perms, name=G.name)
    return FiniteGroup(G.table, G.generators, labels=labels, name=G.name)
