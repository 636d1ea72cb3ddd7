"""Exact irreducible character tables by the Dixon-Schneider method.

Central characters are simultaneous eigenvectors of the class-multiplication
matrices over F_l with l = 1 (mod exp G). Values are lifted to Z[zeta_n] from
eigenvalue multiplicities, so every entry is exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import modp
from .cyclotomic import Cyclotomic
from .fields import AbelianField, units
from .groups import PermGroup


class CharacterTableError(ArithmeticError):
    """Internal consistency failure; always a bug, never a data problem."""


@dataclass(frozen=True)
class Character:
    degree: int
    values: tuple[Cyclotomic, ...]
    fs_indicator: int

    def key(self):
        return (self.degree, tuple(v.coeffs for v in self.values))

    def twist(self, t: int, conj) -> "Character":
        """Galois twist zeta -> zeta^t, read off the power map (exact for characters)."""
        return Character(self.degree, tuple(self.values[conj.power_map(c, t)] for c in range(len(self.values))),
                         self.fs_indicator)

    def is_rational(self) -> bool:
        return all(v.is_rational() for v in self.values)


@dataclass(frozen=True)
class GaloisOrbit:
    members: tuple[int, ...]
    representative: int
    stabilizer: frozenset[int]
    field: AbelianField

    @property
    def size(self) -> int:
        return len(self.members)


def class_coefficients(G: PermGroup) -> np.ndarray:
    """a[i, j, k] = #{x in C_i : x^-1 z_k in C_j} for class representatives z_k."""
    cd = G.conjugacy
    k = cd.num_classes
    a = np.zeros((k, k, k), dtype=np.int64)
    allx = np.arange(G.order)
    ci = cd.class_of
    inv = G.inverses
    for kk, z in enumerate(cd.class_reps):
        y = G.mul(inv, np.full(G.order, z))
        np.add.at(a, (ci[allx], ci[y], kk), 1)
    return a


def dixon_prime(G: PermGroup, skip: int = 0) -> int:
    n = G.exponent
    bound = 2 * math.isqrt(G.order) * G.order
    gen = modp.primes_congruent_one(n, bound)
    for _ in range(skip):
        next(gen)
    return next(gen)


def _distinct_eigenvectors(C: np.ndarray, lams: list[int], ell: int, rng) -> np.ndarray | None:
    """Left eigenvectors (rows) of C when its eigenvalues ``lams`` are distinct.

    The Hessenberg reduction starts from a random vector w (via P = I + (w - e_1) e_1^T)
    so that it is unreduced with high probability; None after a few failures.
    """
    B = C.T % ell
    r = B.shape[0]
    for _ in range(3):
        u = rng.integers(0, ell, r)
        u[0] = 0
        # P^-1 B P with P = I + u e_1^T, P^-1 = I - u e_1^T
        Bp = B.copy()
        Bp[:, 0] = (Bp[:, 0] + B @ u) % ell
        Bp = (Bp - np.outer(u, Bp[0])) % ell
        H, T = modp.hessenberg(Bp, ell)
        V = modp.hessenberg_eigenvectors(H, T, lams, ell)
        if V is not None:
            V = (V + np.outer(u, V[0])) % ell
            return V.T
    return None


def _central_characters(a: np.ndarray, ell: int) -> list[np.ndarray]:
    """Simultaneous eigenvectors of the class matrices, normalized so entry 0 is 1.

    Row vectors v with v N_i = omega_i v, N_i[k][j] = a[i, j, k], since
    omega_i omega_j = sum_k a_ijk omega_k. Each subspace is split by a seeded
    random combination of class matrices, then by single class matrices.
    """
    k = a.shape[0]
    rng = np.random.default_rng(20240607)
    N = np.transpose(a, (0, 2, 1)) % ell
    eye = np.eye(k, dtype=np.int64)
    pending = [(eye, list(range(k)))]
    done = []

    def push(basis):
        sub, sp = (basis, []) if basis.shape[0] == 1 else modp.rref(basis, ell)
        pending.append((sub, sp))
        return sub.shape[0]

    while pending:
        R, piv = pending.pop()
        r = R.shape[0]
        if r == 1:
            done.append(R[0])
            continue
        candidates = [np.tensordot(rng.integers(0, ell, k), N, axes=1) % ell for _ in range(2)]
        candidates += [N[i] for i in range(1, k)]
        for M in candidates:
            C = (R @ M % ell)[:, piv]
            cp = modp.charpoly(C, ell)
            lams = modp.roots(cp, ell)
            if len(lams) > 1:
                break
        else:
            raise CharacterTableError(f"eigenspace of dimension {r} does not split over F_{ell}")
        mult = modp.root_multiplicities(cp, lams, ell)
        if sum(mult) != r:
            raise CharacterTableError(f"characteristic polynomial does not split over F_{ell}")
        simple = [lam for lam, m in zip(lams, mult) if m == 1]
        repeated = [lam for lam, m in zip(lams, mult) if m > 1]
        Ir = eye[:r, :r]
        if repeated and simple:
            # row space of g(C) is the sum of the simple eigenspaces, its left kernel the rest
            g = Ir.copy()
            for lam in repeated:
                g = g @ ((C - lam * Ir) % ell) % ell
            Rs, ps = modp.rref(g, ell)
            Cs = (Rs @ C % ell)[:, ps]
            V = _distinct_eigenvectors(Cs, simple, ell, rng)
            if V is not None:
                done.extend(V @ Rs @ R % ell)
            else:
                push(Rs @ R % ell)
            kept = Rs.shape[0] + push(modp.nullspace(g.T, ell) @ R % ell)
        elif not repeated:
            V = _distinct_eigenvectors(C, simple, ell, rng)
            if V is not None:
                done.extend(V @ R % ell)
                continue
            kept = sum(push(modp.nullspace(((C - lam * Ir) % ell).T, ell) @ R % ell) for lam in lams)
        else:
            kept = sum(push(modp.nullspace(((C - lam * Ir) % ell).T, ell) @ R % ell) for lam in lams)
        if kept != r:
            raise CharacterTableError("class matrices are not simultaneously diagonalizable")
    out = []
    for v in done:
        if v[0] == 0:
            raise CharacterTableError("central character vanishes at the identity")
        out.append(v * pow(int(v[0]), -1, ell) % ell)
    return out


def _lift_table(vals: np.ndarray, degrees: list[int], G: PermGroup, ell: int, z: int) -> list[tuple[Cyclotomic, ...]]:
    """Lift a table of values mod l to Z[zeta_n] via eigenvalue multiplicities.

    For g of order o, m_a = (1/o) sum_i chi(g^i) zeta_o^(-ia) is the multiplicity of
    zeta_o^a as an eigenvalue of g; it must land in [0, chi(1)].
    """
    cd = G.conjugacy
    n = G.exponent
    rows, k = vals.shape
    dft: dict[int, np.ndarray] = {}
    cache: dict[tuple, Cyclotomic] = {}
    out = [[None] * k for _ in range(rows)]
    deg = np.array(degrees, dtype=np.int64)
    for c in range(k):
        o = len(cd.rep_powers[c])
        if o not in dft:
            zinv = pow(z, (n // o) * (o - 1), ell)
            e = np.outer(np.arange(o), np.arange(o)) % o
            table = np.array([pow(zinv, j, ell) for j in range(o)], dtype=np.int64)
            dft[o] = table[e]
        P = vals[:, list(cd.rep_powers[c])]
        M = _matmul_mod(P, dft[o], ell) * pow(o, -1, ell) % ell
        if (M > deg[:, None]).any():
            raise CharacterTableError("eigenvalue multiplicity exceeds the degree")
        step = n // o
        for r in range(rows):
            key = (step, M[r].tobytes())
            v = cache.get(key)
            if v is None:
                vec = [0] * n
                for a in np.nonzero(M[r])[0]:
                    vec[int(a) * step] = int(M[r, a])
                v = cache[key] = Cyclotomic.from_exponents(n, vec)
            out[r][c] = v
    return [tuple(r) for r in out]


def _matmul_mod(A: np.ndarray, B: np.ndarray, m: int) -> np.ndarray:
    if A.shape[1] * (m - 1) ** 2 < 2 ** 62:
        return (A @ B) % m
    return ((A.astype(object) @ B.astype(object)) % m).astype(np.int64)


def _fs_batch(rows: list[tuple[Cyclotomic, ...]], G: PermGroup) -> list[int]:
    """Frobenius-Schur indicators (1/#G) sum_c |C_c| chi(c^2), exactly, for all rows."""
    cd = G.conjugacy
    sq = [cd.power_map(c, 2) for c in range(cd.num_classes)]
    coeffs = np.array([[v.coeffs for v in row] for row in rows], dtype=object)
    sizes = np.array(cd.class_sizes, dtype=object)
    total = np.tensordot(sizes, coeffs[:, sq, :], axes=([0], [1]))  # rows x phi
    out = []
    for t in total:
        if any(t[1:]) or t[0] % G.order:
            raise CharacterTableError(f"Frobenius-Schur sum {list(t)} is not a multiple of {G.order}")
        nu = int(t[0]) // G.order
        if nu not in (-1, 0, 1):
            raise CharacterTableError(f"Frobenius-Schur indicator {nu}")
        out.append(nu)
    return out


def _fs(values, G: PermGroup) -> int:
    return _fs_batch([values], G)[0]


class CharacterTable:
    """Irreducible characters of ``G``, rows sorted by (degree, values)."""

    def __init__(self, G: PermGroup, characters: list[Character], ell: int):
        self.group = G
        self.n = G.exponent
        self.characters = characters
        self.ell = ell

    def __len__(self):
        return len(self.characters)

    def __getitem__(self, i) -> Character:
        return self.characters[i]

    def __iter__(self):
        return iter(self.characters)

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return self.group.conjugacy.class_sizes

    @cached_property
    def _index(self) -> dict:
        return {ch.key(): i for i, ch in enumerate(self.characters)}

    def index(self, ch: Character) -> int:
        return self._index[ch.key()]

    @cached_property
    def _ids(self) -> np.ndarray:
        ids: dict = {}
        return np.array([[ids.setdefault(v.coeffs, len(ids)) for v in ch.values] for ch in self.characters],
                        dtype=np.int64)

    @cached_property
    def _row_lookup(self) -> dict:
        return {r.tobytes(): i for i, r in enumerate(self._ids)}

    def _power_perm(self, t: int) -> np.ndarray:
        cd = self.group.conjugacy
        return np.array([cd.power_map(c, t) for c in range(cd.num_classes)], dtype=np.int64)

    def twist_index(self, i: int, t: int) -> int:
        """Row of the twist zeta -> zeta^t of row i; KeyError if the table is not Galois-stable."""
        return self._row_lookup[np.ascontiguousarray(self._ids[i, self._power_perm(t)]).tobytes()]

    def twist_permutation(self, t: int) -> list[int]:
        twisted = np.ascontiguousarray(self._ids[:, self._power_perm(t)])
        return [self._row_lookup[r.tobytes()] for r in twisted]

    @cached_property
    def conjugate_index(self) -> tuple[int, ...]:
        return tuple(self.twist_permutation(-1))

    @cached_property
    def _all_twists(self) -> list[list[int]]:
        return [self.twist_permutation(t) for t in units(self.n)]

    def values_mod(self, p: int, z: int) -> np.ndarray:
        """Table embedded in F_p via zeta_n -> z."""
        phi = len(self.characters[0].values[0].coeffs)
        C = np.array([[v.coeffs for v in ch.values] for ch in self.characters], dtype=object)
        powers = np.array([pow(z, j, p) for j in range(phi)], dtype=object)
        return (C @ powers) % p

    def degrees(self) -> list[int]:
        return [ch.degree for ch in self.characters]

    @cached_property
    def stabilizers(self) -> tuple[frozenset[int], ...]:
        stab: list[set[int]] = [set() for _ in self.characters]
        for t in units(self.n):
            fixed = (self._ids[:, self._power_perm(t)] == self._ids).all(axis=1)
            for i in np.nonzero(fixed)[0]:
                stab[i].add(t)
        return tuple(frozenset(s) for s in stab)

    def field(self, i: int) -> AbelianField:
        return AbelianField(self.n, self.stabilizers[i]).canonical()

    def orbits(self, *, include_linear: bool = False) -> list[GaloisOrbit]:
        seen: set[int] = set()
        out = []
        perms = self._all_twists
        for i, ch in enumerate(self.characters):
            if i in seen or (ch.degree == 1 and not include_linear):
                continue
            members = tuple(sorted({perm[i] for perm in perms}))
            seen.update(members)
            out.append(GaloisOrbit(members, i, self.stabilizers[i], self.field(i)))
        return out

    def to_json(self) -> dict:
        G = self.group
        cd = G.conjugacy
        return {
            "group": {"name": G.name, "order": G.order, "degree": G.degree, "exponent": self.n,
                      "metadata": G.metadata},
            "dixon_prime": self.ell,
            "classes": [{"representative": str(G.element(r)), "size": s, "order": o}
                        for r, s, o in zip(cd.class_reps, cd.class_sizes, cd.class_orders())],
            "characters": [{"degree": ch.degree, "fs_indicator": ch.fs_indicator,
                            "values": [v.to_json() for v in ch.values]} for ch in self.characters],
            "orbits": [{"members": list(o.members), "representative": o.representative,
                        "field": o.field.describe()} for o in self.orbits(include_linear=True)],
        }


def character_table(G: PermGroup, *, prime_skip: int = 0, check: bool = True) -> CharacterTable:
    """Irreducible characters of ``G`` with exact values in Z[zeta_n], n = exp(G).

    ``prime_skip`` selects a later Dixon prime; the output does not depend on it.
    """
    cd = G.conjugacy
    k = cd.num_classes
    n = G.exponent
    ell = dixon_prime(G, prime_skip)
    z = modp.root_of_unity(n, ell)
    a = class_coefficients(G)
    sizes = cd.class_sizes
    inv_sizes = [pow(s, -1, ell) for s in sizes]
    degrees, rows = [], []
    for w in _central_characters(a, ell):
        s = sum(int(w[c]) * int(w[cd.inverse_class[c]]) * inv_sizes[c] for c in range(k)) % ell
        d2 = G.order * pow(s, -1, ell) % ell
        d = math.isqrt(d2)
        if d * d != d2 or d == 0 or G.order % d:
            raise CharacterTableError(f"degree recovery failed mod {ell}")
        degrees.append(d)
        rows.append([d * int(w[c]) * inv_sizes[c] % ell for c in range(k)])
    lifted = _lift_table(np.array(rows, dtype=np.int64), degrees, G, ell, z)
    fs = _fs_batch(lifted, G)
    chars = [Character(d, values, nu) for d, values, nu in zip(degrees, lifted, fs)]
    chars.sort(key=Character.key)
    if len(chars) != k:
        raise CharacterTableError(f"found {len(chars)} characters for {k} classes")
    table = CharacterTable(G, chars, ell)
    if check:
        verify_orthogonality(table)
    return table


def verify_orthogonality(table: CharacterTable) -> None:
    """Exact row and column orthogonality.

    The check runs in F_p for a prime p = 1 (mod n) with p > #G^2 + #G. Each
    defect is an algebraic integer whose conjugates are defects of the same
    Galois-stable table, so vanishing mod one prime above p forces it to be 0.
    """
    G = table.group
    k = len(table)
    table._all_twists  # KeyError if the table is not Galois-stable
    p = next(modp.primes_congruent_one(table.n, G.order * G.order + G.order))
    z = modp.root_of_unity(table.n, p)
    X = table.values_mod(p, z)
    if k * p * p * G.order < 2 ** 62:
        X = X.astype(np.int64)
    Xbar = X[:, list(G.conjugacy.inverse_class)]
    sizes = np.array(table.class_sizes, dtype=X.dtype)
    gram = (X * sizes) @ Xbar.T % p
    if not np.array_equal(gram, G.order * np.eye(k, dtype=X.dtype) % p):
        raise CharacterTableError("row orthogonality fails")
    col = (X.T @ Xbar) % p
    expected = np.diag([G.order // s for s in table.class_sizes]).astype(X.dtype) % p
    if not np.array_equal(col, expected):
        raise CharacterTableError("column orthogonality fails")


def frobenius_schur(ch: Character, G: PermGroup) -> int:
    return _fs(ch.values, G)


def galois_orbits(table: CharacterTable, *, include_linear: bool = False) -> list[GaloisOrbit]:
    return table.orbits(include_linear=include_linear)


def character_field(table: CharacterTable, i: int) -> AbelianField:
    return table.field(i)
