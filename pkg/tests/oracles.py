"""Independent reference computations used only by the tests.

Nothing here calls the code under test except for plumbing (group construction,
cyclotomic containers).
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from arakelov.cyclotomic import Cyclotomic
from arakelov.groups import PermGroup


# -- classical character tables ------------------------------------------------

def _root(e: int, k: int, n: int) -> Cyclotomic:
    """zeta_n^k inside Z[zeta_e]."""
    return Cyclotomic.root(e, (k * (e // n)) % e)


def _const(e: int, a: int) -> Cyclotomic:
    return Cyclotomic.from_int(e, a)


def _cycle_type(images) -> tuple[int, ...]:
    seen, out = set(), []
    for i in range(len(images)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = images[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def classical_table(family: str, n: int, G: PermGroup):
    """Rows (degree, fs, values per conjugacy class of G) from textbook formulas."""
    e = G.exponent
    reps = [G.element(r).images for r in G.conjugacy.class_reps]
    rows = []
    if family == "cyclic":
        for j in range(n):
            vals = [_root(e, j * p[0], n) for p in reps]
            rows.append((1, 1 if (2 * j) % n == 0 else 0, vals))
    elif family == "dihedral":
        def parts(p):
            k = p[0]
            return k, p[1] != (k + 1) % n  # reflections reverse the orientation
        signs = [(1, 1), (1, -1)] + ([(-1, 1), (-1, -1)] if n % 2 == 0 else [])
        for er, es in signs:
            vals = []
            for p in reps:
                k, refl = parts(p)
                vals.append(_const(e, er ** k * (es if refl else 1)))
            rows.append((1, 1, vals))
        for j in range(1, (n + 1) // 2):
            vals = []
            for p in reps:
                k, refl = parts(p)
                vals.append(_const(e, 0) if refl else _root(e, j * k, n) + _root(e, -j * k, n))
            rows.append((2, 1, vals))
    elif family == "symmetric":
        tables = {
            3: {(1, 1, 1): (1, 1, 2), (2, 1): (1, -1, 0), (3,): (1, 1, -1)},
            4: {(1, 1, 1, 1): (1, 1, 2, 3, 3), (2, 1, 1): (1, -1, 0, 1, -1), (2, 2): (1, 1, 2, -1, -1),
                (3, 1): (1, 1, -1, 0, 0), (4,): (1, -1, 0, -1, 1)},
        }[n]
        types = [_cycle_type(p) for p in reps]
        for i in range(len(next(iter(tables.values())))):
            vals = [_const(e, tables[t][i]) for t in types]
            rows.append((vals[types.index(tuple([1] * n))].as_int(), 1, vals))
    elif family == "quaternion8":
        orders = G.conjugacy.class_orders()
        four = [c for c, o in enumerate(orders) if o == 4]
        patterns = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
        for pat in patterns:
            vals = [_const(e, 1)] * len(reps)
            for c, s in zip(four, pat):
                vals[c] = _const(e, s)
            rows.append((1, 1, vals))
        rows.append((2, -1, [_const(e, {1: 2, 2: -2, 4: 0}[o]) for o in orders]))
    elif family == "frobenius21":
        # C7 x| C3 with h acting by x -> x^2; h-exponent read on points 7..9
        def parts(p):
            return (p[7] - 7) % 3, p[0]
        for t in range(3):
            rows.append((1, 1 if t == 0 else 0, [_root(e, t * parts(p)[0], 3) for p in reps]))
        for coset in ((1, 2, 4), (3, 5, 6)):
            vals = []
            for p in reps:
                eh, b = parts(p)
                if eh:
                    vals.append(_const(e, 0))
                else:
                    acc = _const(e, 0)
                    for s in coset:
                        acc = acc + _root(e, b * s, 7)
                    vals.append(acc)
            rows.append((3, 0, vals))
    else:
        raise ValueError(family)
    return rows


def table_rows(table):
    return sorted((ch.degree, ch.fs_indicator, tuple(v.coeffs for v in ch.values)) for ch in table)


def expected_rows(rows):
    return sorted((d, fs, tuple(v.coeffs for v in vals)) for d, fs, vals in rows)


# -- exact orthogonality via every embedding into F_p -----------------------------

def _primitive_root_of_unity(n: int, p: int) -> int:
    for g in range(2, p):
        z = pow(g, (p - 1) // n, p)
        if all(pow(z, n // q, p) != 1 for q in _primes(n)):
            return z
    raise ValueError


def _primes(n):
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


def _is_prime(p):
    return p > 1 and all(p % d for d in range(2, math.isqrt(p) + 1))


def orthogonality_defects(table) -> tuple[int, int]:
    """Count of nonzero row/column orthogonality defects, exact.

    Each defect x lies in Z[zeta_n] with all conjugates bounded by #G^2 + #G < p.
    Testing x = 0 under all phi(n) embeddings into F_p shows p divides x, and the
    norm bound then forces x = 0.
    """
    G = table.group
    n, order = table.n, G.order
    p = order * order + order + 1
    while not (_is_prime(p) and (p - 1) % n == 0):
        p += 1
    z0 = _primitive_root_of_unity(n, p)
    zs = [pow(z0, t, p) for t in range(1, n + 1) if math.gcd(t, n) == 1]
    coeffs = np.array([[v.coeffs for v in ch.values] for ch in table], dtype=np.int64)  # k x k x phi
    phi = coeffs.shape[2]
    powers = np.array([[pow(z, j, p) for z in zs] for j in range(phi)], dtype=np.int64)  # phi x E
    X = np.einsum("abj,je->eab", coeffs % p, powers) % p  # E x k x k
    inv = list(G.conjugacy.inverse_class)
    sizes = np.array(G.conjugacy.class_sizes, dtype=np.int64)
    k = len(table)
    rows_bad = cols_bad = 0
    for Xe in X:
        Xbar = Xe[:, inv]
        gram = (Xe * sizes) % p @ Xbar.T % p
        rows_bad += int(np.count_nonzero((gram - order * np.eye(k, dtype=np.int64)) % p))
        col = Xe.T @ Xbar % p
        target = np.diag([order // s for s in sizes]) % p
        cols_bad += int(np.count_nonzero((col - target) % p))
    return rows_bad, cols_bad


def square_roots_of_one(G: PermGroup) -> int:
    E = G.elements
    sq = np.take_along_axis(E, E, axis=1)
    return int(np.count_nonzero((sq == np.arange(G.degree)).all(axis=1)))


# -- abelian p-groups --------------------------------------------------------------

def brute_aut_count(lam, p: int) -> int:
    """Automorphisms of Z/p^l1 x ... by enumerating images of the standard generators."""
    mods = [p ** a for a in lam]
    elems = list(itertools.product(*[range(m) for m in mods]))
    order = math.prod(mods)

    def elem_order_divides(x, m):
        return all((m * xi) % mi == 0 for xi, mi in zip(x, mods))

    choices = [[x for x in elems if elem_order_divides(x, m)] for m in mods]
    count = 0
    for imgs in itertools.product(*choices):
        span = {tuple(0 for _ in mods)}
        for g in imgs:
            new = set()
            for s in span:
                x = s
                for _ in range(max(mods)):
                    new.add(x)
                    x = tuple((a + b) % m for a, b, m in zip(x, g, mods))
            span = new
        if len(span) == order:
            count += 1
    return count


def hillar_rhea_aut(lam, p: int) -> int:
    """#Aut via the Hillar-Rhea formula (independent of the conjugate-partition form)."""
    e = sorted(lam)
    r = len(e)
    if r == 0:
        return 1
    d = [max(l for l in range(1, r + 1) if e[l - 1] == e[k]) for k in range(r)]
    c = [min(l for l in range(1, r + 1) if e[l - 1] == e[k]) for k in range(r)]
    a = math.prod(p ** d[k] - p ** k for k in range(r))
    b = math.prod((p ** e[j]) ** (r - d[j]) for j in range(r))
    cc = math.prod((p ** (e[i] - 1)) ** (r - c[i] + 1) for i in range(r))
    return a * b * cc


def brute_surjections(lam, mu, p: int) -> int:
    """#Surj(Z/p^lam, Z/p^mu) by enumerating all homomorphisms."""
    src = [p ** a for a in lam]
    tgt = [p ** b for b in mu]
    telems = list(itertools.product(*[range(m) for m in tgt]))
    order = math.prod(tgt)
    choices = [[y for y in telems if all((m * yi) % ti == 0 for yi, ti in zip(y, tgt))] for m in src]
    count = 0
    for imgs in itertools.product(*choices):
        span = {tuple(0 for _ in tgt)}
        for g in imgs:
            new = set()
            for s in span:
                x = s
                for _ in range(max(tgt, default=1)):
                    new.add(x)
                    x = tuple((a + b) % m for a, b, m in zip(x, g, tgt))
            span = new
        if len(span) == order:
            count += 1
    return count


def partitions_upto(total: int):
    """All partitions with sum <= total, generated by brute filtering of tuples."""
    out = []
    for s in range(total + 1):
        for k in range(s + 1):
            for t in itertools.product(range(1, s + 1), repeat=k):
                if sum(t) == s and list(t) == sorted(t, reverse=True):
                    out.append(t)
    return out


def brute_expectation(p: int, X: int, f) -> Fraction:
    """sum f(A)/#Aut(A) / sum 1/#Aut(A) over abelian p-groups A with #A < X."""
    top = 0
    while p ** (top + 1) < X:
        top += 1
    num = den = Fraction(0)
    for lam in partitions_upto(top):
        w = Fraction(1, hillar_rhea_aut(lam, p))
        num += w * f(lam)
        den += w
    return num / den


# -- permutation characters from the coset action ---------------------------------

def coset_perm_multiplicities(G: PermGroup, H, table) -> tuple[int, ...]:
    """<Q[G/H], chi> = (1/#G) sum_c |C_c| pi(c) conj(chi(c)), pi counted on cosets."""
    H = sorted(H)
    allx = np.arange(G.order)
    # coset label of every element: the minimal index in xH
    prods = G.mul(allx[:, None], np.array(H)[None, :])
    label = prods.min(axis=1)
    cd = G.conjugacy
    pis = []
    for r in cd.class_reps:
        moved = label[G.mul(np.full(G.order, r), allx)]
        pis.append(int(np.count_nonzero(moved == label)) // len(H))
    out = []
    for ch in table:
        acc = Cyclotomic.from_int(table.n, 0)
        for c, (s, pi) in enumerate(zip(cd.class_sizes, pis)):
            if pi:
                acc = acc + ch.values[c].conj() * (s * pi)
        val = acc.as_int()
        assert val % G.order == 0
        out.append(val // G.order)
    return tuple(out)
