"""Exact linear algebra over a prime field F_p with int64 numpy arrays.

All routines expect entries already reduced to ``[0, p)`` and ``p < 2**31``
so a single product fits in int64.
"""

import random

import numpy as np


def is_prime(n):
    if n < 2:
        return False
    for f in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % f == 0:
            return n == f
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):   # deterministic below 3.4e14
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def find_prime(modulus, above, limit=2**31):
    """Smallest prime p = 1 (mod ``modulus``) with p > ``above``."""
    p = ((above - 1) // modulus + 1) * modulus + 1
    while p < limit:
        if is_prime(p):
            return p
        p += modulus
    raise OverflowError(f"no prime = 1 mod {modulus} above {above} below {limit}")


def inv(a, p):
    return pow(int(a), -1, p)


def matmul(A, B, p):
    """(A @ B) mod p without int64 overflow."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    inner = A.shape[-1]
    step = max(1, (2**62) // max(1, (p - 1) ** 2))
    if inner <= step:
        return (A @ B) % p
    out = np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
    for s in range(0, inner, step):
        out = (out + A[..., s:s + step] @ B[s:s + step]) % p
    return out


def rref(A, p):
    """Reduced row echelon form; returns (R, pivot columns)."""
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = R[r] * inv(R[r, c], p) % p
        col = R[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if len(hit):
            R[hit] = (R[hit] - col[hit, None] * R[r]) % p
        pivots.append(c)
        r += 1
    return R, pivots


def nullspace(A, p):
    """Basis of {x : A x = 0} as columns of an (ncols x d) array."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    R, pivots = rref(A, p)
    free = [c for c in range(n) if c not in set(pivots)]
    N = np.zeros((n, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        N[f, j] = 1
        for i, c in enumerate(pivots):
            N[c, j] = (-R[i, f]) % p
    return N


def column_echelon(B, p):
    """Basis of the column space of B with an identity block on pivot rows."""
    R, pivots = rref(np.asarray(B).T, p)
    return R[:len(pivots)].T.copy(), pivots


def charpoly(A, p):
    """Characteristic polynomial of A, coefficients highest degree first.

    Reduction to upper Hessenberg form followed by the standard
    determinant recurrence; O(n^3) field operations.
    """
    H = np.array(A, dtype=np.int64) % p
    n = H.shape[0]
    for m in range(1, n - 1):
        nz = np.nonzero(H[m:, m - 1])[0]
        if len(nz) == 0:
            continue
        i = m + nz[0]
        if i != m:
            H[[i, m]] = H[[m, i]]
            H[:, [i, m]] = H[:, [m, i]]
        t = inv(H[m, m - 1], p)
        below = np.arange(m + 1, n)
        u = H[below, m - 1] * t % p
        act = below[u != 0]
        u = u[u != 0]
        if len(act):
            H[act] = (H[act] - u[:, None] * H[m]) % p
            H[:, m] = (H[:, m] + matmul(H[:, act], u[:, None], p)[:, 0]) % p
    # polys stored lowest degree first while building
    polys = [np.array([1], dtype=np.int64)]
    for m in range(n):
        nxt = np.zeros(m + 2, dtype=np.int64)
        nxt[1:] = polys[m]
        nxt[:m + 1] = (nxt[:m + 1] - H[m, m] * polys[m]) % p
        t = 1
        for i in range(1, m + 1):
            t = t * int(H[m - i + 1, m - i]) % p
            if t == 0:
                break
            c = t * int(H[m - i, m]) % p
            if c:
                prev = polys[m - i]
                nxt[:len(prev)] = (nxt[:len(prev)] - c * prev) % p
        polys.append(nxt)
    return polys[n][::-1].copy()


# polynomials as Python int lists, lowest degree first -----------------------

def _trim(f):
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _pmod(f, g, p):
    f = list(f)
    ginv = inv(g[-1], p)
    dg = len(g) - 1
    while len(f) - 1 >= dg and any(f):
        c = f[-1] * ginv % p
        shift = len(f) - 1 - dg
        if c:
            for i, gc in enumerate(g):
                f[shift + i] = (f[shift + i] - c * gc) % p
        f.pop()
    return _trim(f or [0])


def _pmul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return out


def _pgcd(f, g, p):
    f, g = _trim(list(f)), _trim(list(g))
    while g != [0]:
        f, g = g, _pmod(f, g, p)
    c = inv(f[-1], p)
    return [a * c % p for a in f]


def _ppow_mod(base, e, mod, p):
    result = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def roots(coeffs, p, seed=0):
    """Distinct roots in F_p of a polynomial (coefficients highest first)."""
    f = _trim([int(c) % p for c in reversed(list(coeffs))])
    if len(f) == 1:
        return []
    if len(f) - 1 <= 64 and p <= 200_000 or p <= 4096:
        xs = np.arange(p, dtype=np.int64)
        acc = np.zeros(p, dtype=np.int64)
        for c in reversed(f):
            acc = (acc * xs + c) % p
        return [int(r) for r in np.nonzero(acc == 0)[0]]
    # split off the linear part: gcd(f, x^p - x), then equal-degree splitting
    xp = _ppow_mod([0, 1], p, f, p) + [0, 0]
    xp[1] = (xp[1] - 1) % p
    g = _pgcd(f, _trim(xp), p)
    rng = random.Random(seed)
    found = []
    stack = [g]
    while stack:
        h = stack.pop()
        d = len(h) - 1
        if d == 0:
            continue
        if d == 1:
            found.append((-h[0]) * inv(h[1], p) % p)
            continue
        while True:
            a = rng.randrange(p)
            w = _ppow_mod([a, 1], (p - 1) // 2, h, p)
            w = _trim([(w[0] - 1) % p] + w[1:]) if w else [p - 1]
            s = _pgcd(h, w, p)
            if 0 < len(s) - 1 < d:
                break
        stack.append(s)
        # exact division h / s
        quo = [0] * (len(h) - len(s) + 1)
        rem = list(h)
        sinv = inv(s[-1], p)
        for k in range(len(quo) - 1, -1, -1):
            c = rem[k + len(s) - 1] * sinv % p
            quo[k] = c
            for i, sc in enumerate(s):
                rem[k + i] = (rem[k + i] - c * sc) % p
        stack.append(_trim(quo))
    return sorted(found)
