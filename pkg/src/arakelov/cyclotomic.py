"""Exact arithmetic in Z[zeta_n], canonical in the power basis modulo Phi_n."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]  # den is monic
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "inexact polynomial division"
    return out


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of zeta_n^k for 0 <= k < n."""
    phi = euler_phi(n)
    poly = cyclotomic_poly(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by zeta: shift, then replace zeta^phi by -sum poly[i] zeta^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, poly[:phi])]
    return tuple(rows)


def reduce_exponents(n: int, vec) -> tuple[int, ...]:
    """Reduce sum_k vec[k] zeta_n^k (k mod n) to the power basis."""
    rows = _reduction_rows(n)
    phi = len(rows[0])
    out = [0] * phi
    for k, c in enumerate(vec):
        if c:
            row = rows[k % n]
            for i in range(phi):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out)


@dataclass(frozen=True)
class Cyclotomic:
    """An element of Z[zeta_n]; ``coeffs`` are power-basis coordinates of length phi(n)."""

    n: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_int(cls, n: int, a: int) -> "Cyclotomic":
        return cls(n, (a,) + (0,) * (euler_phi(n) - 1))

    @classmethod
    def root(cls, n: int, k: int = 1) -> "Cyclotomic":
        return cls(n, _reduction_rows(n)[k % n])

    @classmethod
    def from_exponents(cls, n: int, vec) -> "Cyclotomic":
        return cls(n, reduce_exponents(n, vec))

    def __add__(self, other):
        if isinstance(other, int):
            other = Cyclotomic.from_int(self.n, other)
        self._check(other)
        return Cyclotomic(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic(self.n, tuple(other * a for a in self.coeffs))
        self._check(other)
        prod = [0] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic.from_exponents(self.n, prod)

    __rmul__ = __mul__

    def _check(self, other):
        if other.n != self.n:
            raise ValueError(f"mixing Z[zeta_{self.n}] and Z[zeta_{other.n}]")

    def galois(self, t: int) -> "Cyclotomic":
        """Image under the automorphism zeta -> zeta^t (t coprime to n)."""
        if math.gcd(t, self.n) != 1:
            raise ValueError(f"{t} is not a unit mod {self.n}")
        vec = [0] * self.n
        for k, c in enumerate(self.coeffs):
            vec[(k * t) % self.n] += c
        return Cyclotomic.from_exponents(self.n, vec)

    def conj(self) -> "Cyclotomic":
        return self.galois(-1)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def trace(self) -> int:
        """Trace to Q, via Ramanujan sums c_n(k) = sum of primitive n-th roots to the k."""
        return sum(c * _ramanujan(self.n, k) for k, c in enumerate(self.coeffs) if c)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.n)
        return sum(c * z ** k for k, c in enumerate(self.coeffs))

    def embed_mod(self, p: int, z: int) -> int:
        """Image in F_p under zeta -> z (z a primitive n-th root of unity mod p)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * z + c) % p
        return acc

    def lift(self, m: int) -> "Cyclotomic":
        """The same number viewed in Z[zeta_m] for a multiple m of n."""
        if m % self.n:
            raise ValueError(f"{m} is not a multiple of {self.n}")
        step = m // self.n
        vec = [0] * m
        for k, c in enumerate(self.coeffs):
            vec[k * step] += c
        return Cyclotomic.from_exponents(m, vec)

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": list(self.coeffs)}

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*z{self.n}^{k}")
        return " + ".join(terms) or "0"


def _ramanujan(n: int, k: int) -> int:
    g = math.gcd(n, k)
    m = n // g
    return _mobius(m) * euler_phi(n) // euler_phi(m)


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def cyclotomic_sum(n: int, values) -> Cyclotomic:
    total = Cyclotomic.from_int(n, 0)
    for v in values:
        total = total + v
    return total
