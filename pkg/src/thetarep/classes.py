"""Conjugacy classes and class-algebra structure constants."""

from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


@dataclass(frozen=True, eq=False)
class ConjugacyData:
    group: object
    class_count: int
    reps: np.ndarray
    sizes: np.ndarray
    class_of: np.ndarray
    inverse_class: np.ndarray

    def members(self, i):
        return np.nonzero(self.class_of == i)[0]


def compute_classes(G):
    """Conjugation-orbit partition, ordered by (size, minimal element)."""
    n = G.order
    gens = G.generators or list(range(n))
    ids = np.arange(n)
    src = np.concatenate([ids] * len(gens))
    dst = np.concatenate([G.conj(g, ids) for g in gens])
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    count, labels = connected_components(graph, directed=True, connection="weak")

    sizes = np.bincount(labels, minlength=count)
    mins = np.full(count, n, dtype=np.int64)
    np.minimum.at(mins, labels, ids)
    order = np.lexsort((mins, sizes))
    rank = np.empty(count, dtype=np.int64)
    rank[order] = np.arange(count)

    class_of = rank[labels]
    reps = mins[order]
    sizes = sizes[order]
    inverse_class = class_of[G.inv[reps]]
    for arr in (class_of, reps, sizes, inverse_class):
        arr.flags.writeable = False
    return ConjugacyData(G, int(count), reps, sizes, class_of, inverse_class)


def class_constants(D, i, j):
    """a_ijk = #{(x, y) in C_i x C_j : xy = reps[k]} for every k."""
    G = D.group
    ys = D.members(j)
    xs = G.table[D.reps[:, None], G.inv[ys][None, :]]      # x = z y^-1
    return (D.class_of[xs] == i).sum(axis=1)


def class_constant_tensor(D):
    """All structure constants as A[i, j, k]."""
    G = D.group
    r = D.class_count
    A = np.zeros((r, r, r), dtype=np.int64)
    for j in range(r):
        ys = D.members(j)
        cls = D.class_of[G.table[D.reps[:, None], G.inv[ys][None, :]]]   # (k, |C_j|)
        flat = cls + r * np.arange(r)[:, None]
        A[:, j, :] = np.bincount(flat.ravel(), minlength=r * r).reshape(r, r).T
    return A
