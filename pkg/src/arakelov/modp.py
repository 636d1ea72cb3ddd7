"""Small linear algebra over prime fields F_p (p < 2**31), on int64 numpy arrays."""
from __future__ import annotations

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


def primes_congruent_one(n: int, above: int):
    """Primes p = 1 (mod n) with p > above, in increasing order."""
    p = (above // n + 1) * n + 1
    while True:
        if is_prime(p):
            yield p
        p += n


def primitive_root(p: int) -> int:
    factors = _factor(p - 1)
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in factors):
        g += 1
    return g


def root_of_unity(n: int, p: int) -> int:
    """The primitive n-th root of unity g^((p-1)/n), g the least primitive root mod p."""
    if (p - 1) % n:
        raise ValueError(f"{p} is not 1 mod {n}")
    return pow(primitive_root(p), (p - 1) // n, p)


def _factor(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p (zero rows dropped) and pivot columns."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {x : M x = 0} over F_p."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    R, piv = rref(M, p)
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(piv):
            basis[k, pc] = (-R[i, f]) % p
    return basis


def hessenberg(A: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Upper Hessenberg H and T with A T = T H mod p (T invertible)."""
    H = np.array(A, dtype=np.int64) % p
    n = H.shape[0]
    T = np.eye(n, dtype=np.int64)
    for m in range(1, n - 1):
        nz = np.nonzero(H[m:, m - 1])[0]
        if len(nz) == 0:
            continue
        i = m + nz[0]
        if i != m:
            H[[m, i]] = H[[i, m]]
            H[:, [m, i]] = H[:, [i, m]]
            T[:, [m, i]] = T[:, [i, m]]
        u = H[m + 1:, m - 1] * pow(int(H[m, m - 1]), -1, p) % p
        if u.any():
            # H <- E H E^-1 with E = I - u e_m^T on rows below m
            H[m + 1:] = (H[m + 1:] - np.outer(u, H[m])) % p
            H[:, m] = (H[:, m] + _dot_mod(H[:, m + 1:], u, p)) % p
            T[:, m] = (T[:, m] + _dot_mod(T[:, m + 1:], u, p)) % p
    return H, T


def _dot_mod(M: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    if M.shape[-1] * (p - 1) ** 2 < 2 ** 62:
        return (M @ v) % p
    return np.array((M.astype(object) @ v.astype(object)) % p, dtype=np.int64)


def charpoly_hessenberg(H: np.ndarray, p: int) -> list[int]:
    """det(x - H) for upper Hessenberg H, lowest degree first."""
    n = H.shape[0]
    P = np.zeros((n + 1, n + 1), dtype=object)  # P[m] = charpoly of the leading m x m block
    P[0, 0] = 1
    for m in range(n):
        new = np.zeros(n + 1, dtype=object)
        new[1:] = P[m, :-1]
        new = new - int(H[m, m]) * P[m]
        t = 1
        for i in range(m - 1, -1, -1):
            t = t * int(H[i + 1, i]) % p
            if t == 0:
                break
            coef = int(H[i, m]) * t % p
            if coef:
                new = new - coef * P[i]
        P[m + 1] = new % p
    return [int(c) for c in P[n]]


def charpoly(A: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial det(x - A) mod p, lowest degree first."""
    return charpoly_hessenberg(hessenberg(A, p)[0], p)


def hessenberg_eigenvectors(H: np.ndarray, T: np.ndarray, lams: list[int], p: int) -> np.ndarray | None:
    """Columns v with A v = lam v for each lam, for unreduced H; None if H is reduced."""
    n = H.shape[0]
    sub = np.array([H[i, i - 1] for i in range(1, n)], dtype=np.int64)
    if n > 1 and not sub.all():
        return None
    L = np.array(lams, dtype=np.int64)
    X = np.zeros((n, len(L)), dtype=np.int64)
    X[n - 1] = 1
    for i in range(n - 1, 0, -1):
        # row i of (H - lam) x = 0 determines x_{i-1}
        acc = _dot_mod(H[i, i:][None, :], X[i:], p)[0]
        acc = (acc - L * X[i]) % p
        X[i - 1] = (-acc) * pow(int(sub[i - 1]), -1, p) % p
    resid = (_dot_mod(H[0][None, :], X, p)[0] - L * X[0]) % p
    if resid.any():
        raise ArithmeticError("eigenvalue is not a root of the characteristic polynomial")
    return _dot_mod(T, X, p)


def roots(poly: list[int], p: int) -> list[int]:
    """Distinct roots in F_p, by evaluation at every point (p is small here)."""
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(poly):
        acc = (acc * xs + c) % p
    return np.nonzero(acc == 0)[0].tolist()


def root_multiplicities(poly: list[int], rts: list[int], p: int) -> list[int]:
    """Multiplicity of each root, by repeated synthetic division."""
    out = []
    for r in rts:
        q, m = list(poly), 0
        while len(q) > 1:
            # divide by (x - r), highest degree first
            acc, quot = 0, []
            for c in reversed(q):
                acc = (acc * r + c) % p
                quot.append(acc)
            if quot[-1] != 0:
                break
            q = list(reversed(quot[:-1]))
            m += 1
        out.append(m)
    return out
