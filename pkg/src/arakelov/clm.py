"""Automorphism-weighted expectations over finite modules of p-adic group-ring components.

A component is a matrix ring M_m(W) over an unramified DVR W with residue field
of size q. By Morita equivalence a finite module is N^m for a finite W-module
N = sum_i W / pi^{lambda_i}, so it is recorded by the partition lambda.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .cyclotomic import euler_phi, reduce_exponents

Partition = tuple[int, ...]
ModuleType = tuple[Partition, ...]


@dataclass(frozen=True)
class ComponentSpec:
    q: int
    m: int = 1
    label: str = ""

    def __post_init__(self):
        if self.q < 2 or len(_prime_factors(self.q)) != 1:
            raise ValueError(f"q = {self.q} is not a prime power")
        if self.m < 1:
            raise ValueError("m must be at least 1")

    @property
    def p(self) -> int:
        return _prime_factors(self.q)[0]


def _prime_factors(n: int) -> list[int]:
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


def partitions(n: int, largest: int | None = None):
    """Partitions of n as non-increasing tuples."""
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0])) if lam else ()


def module_size(M: ModuleType, spec: Sequence[ComponentSpec]) -> int:
    return math.prod(c.q ** (c.m * sum(lam)) for c, lam in zip(spec, M))


def _check(M: ModuleType, spec):
    if len(M) != len(spec):
        raise ValueError(f"module type has {len(M)} components, spec has {len(spec)}")
    for lam in M:
        if any(x < 1 for x in lam) or list(lam) != sorted(lam, reverse=True):
            raise ValueError(f"{lam} is not a partition")


class Cutoff:
    """Either a bound on the total size or one bound per component (a box)."""

    def __init__(self, total: int | None = None, box: Sequence[int] | None = None):
        if (total is None) == (box is None):
            raise ValueError("give exactly one of total or box")
        self.total = total
        self.box = tuple(box) if box is not None else None

    def admits(self, sizes: Sequence[int]) -> bool:
        if self.box is not None:
            return all(s < x for s, x in zip(sizes, self.box))
        return math.prod(sizes) < self.total

    def to_json(self):
        return {"total": self.total} if self.box is None else {"box": list(self.box)}


def _as_cutoff(X) -> Cutoff:
    if isinstance(X, Cutoff):
        return X
    if isinstance(X, int):
        return Cutoff(total=X)
    return Cutoff(box=X)


def enumerate_modules(spec: Sequence[ComponentSpec], X) -> list[ModuleType]:
    """All module types with size < X (or inside the box), ordered by (size, lex)."""
    cut = _as_cutoff(X)
    per = []
    for i, c in enumerate(spec):
        bound = cut.box[i] if cut.box is not None else cut.total
        opts = []
        n = 0
        while c.q ** (c.m * n) < bound:
            opts.extend(partitions(n))
            n += 1
        per.append(opts)
    out = []
    for M in itertools.product(*per):
        sizes = [c.q ** (c.m * sum(lam)) for c, lam in zip(spec, M)]
        if cut.admits(sizes):
            out.append(M)
    out.sort(key=lambda M: (module_size(M, spec), M))
    return out


def aut_count_partition(lam: Partition, q: int) -> int:
    """|Aut| of sum_i W / pi^{lambda_i} with residue field of size q."""
    if not lam:
        return 1
    lc = conjugate(lam)
    mult = [lam.count(v) for v in set(lam)]
    e = sum(x * x for x in lc) - sum(k * (k + 1) // 2 for k in mult)
    return q ** e * math.prod(q ** j - 1 for k in mult for j in range(1, k + 1))


def aut_count(M: ModuleType, spec: Sequence[ComponentSpec]) -> int:
    _check(M, spec)
    return math.prod(aut_count_partition(lam, c.q) for c, lam in zip(spec, M))


def automorphism_index(L: ModuleType, M: ModuleType, spec) -> Fraction:
    return Fraction(aut_count(M, spec), aut_count(L, spec))


def surjection_count_partition(lam: Partition, mu: Partition, q: int) -> int:
    """#Surj(N_lambda, N_mu) for finite W-modules."""
    r = len(mu)
    hom_exp = sum(min(a, b) for a in lam for b in mu)
    dims = sorted(sum(1 for b in mu if b <= a) for a in lam)
    fiber_exp = hom_exp - sum(dims)
    # dp[s] = tuples so far spanning an s-dimensional subspace of the residue space
    dp = {0: 1}
    for d in dims:
        nxt: dict[int, int] = {}
        for s, ways in dp.items():
            nxt[s] = nxt.get(s, 0) + ways * q ** s
            if s < d:
                nxt[s + 1] = nxt.get(s + 1, 0) + ways * (q ** d - q ** s)
        dp = nxt
    return q ** fiber_exp * dp.get(r, 0)


def surjection_count(L: ModuleType, T: ModuleType, spec) -> int:
    return math.prod(surjection_count_partition(a, b, c.q) for c, a, b in zip(spec, L, T))


# -- functionals and filters ---------------------------------------------------

@dataclass(frozen=True)
class CycloValue:
    """Element of Q(zeta_k) with rational power-basis coordinates."""

    k: int
    coeffs: tuple[Fraction, ...]

    def to_json(self):
        return {"n": self.k, "coeffs": [str(c) for c in self.coeffs]}


@dataclass(frozen=True)
class Functional:
    name: str
    params: tuple = ()

    def __call__(self, M: ModuleType, spec):
        if self.name == "indicator":
            (T,) = self.params
            return int(all(t is None or t == lam for t, lam in zip(T, M)))
        if self.name == "surjection_count_onto":
            (T,) = self.params
            return surjection_count(M, T, spec)
        if self.name == "size_power":
            (s,) = self.params
            return Fraction(module_size(M, spec)) ** s
        if self.name == "char_of_order_k":
            (k,) = self.params
            return sum(1 for _ in _omega_factors(module_size(M, spec))) % k
        raise ValueError(f"unknown functional {self.name!r}")

    @property
    def cyclotomic_order(self) -> int | None:
        return self.params[0] if self.name == "char_of_order_k" else None

    def describe(self) -> str:
        return f"{self.name}({', '.join(map(str, self.params))})"


def _omega_factors(n: int):
    d = 2
    while d * d <= n:
        while n % d == 0:
            yield d
            n //= d
        d += 1
    if n > 1:
        yield n


def indicator(T: Sequence[Partition | None]) -> Functional:
    return Functional("indicator", (tuple(T),))


def surjection_count_onto(T: ModuleType) -> Functional:
    return Functional("surjection_count_onto", (tuple(T),))


def size_power(s: int) -> Functional:
    return Functional("size_power", (s,))


def char_of_order_k(k: int) -> Functional:
    if k < 1:
        raise ValueError("k must be positive")
    return Functional("char_of_order_k", (k,))


Filter = Callable[[ModuleType], bool]


def make_filter(text: str | None) -> Filter | None:
    """``none``, ``nonzero_on:<i>`` or ``zero_on:<i>`` (component indices from 0)."""
    if text in (None, "", "none"):
        return None
    kind, _, idx = text.partition(":")
    try:
        i = int(idx)
    except ValueError:
        raise ValueError(f"bad filter {text!r}") from None
    if kind == "nonzero_on":
        return lambda M: bool(M[i])
    if kind == "zero_on":
        return lambda M: not M[i]
    raise ValueError(f"unknown filter {text!r}")


@dataclass(frozen=True)
class WeightedExpectation:
    cutoff: dict
    numerator: Fraction | CycloValue
    denominator: Fraction
    support: int

    @property
    def empty(self) -> bool:
        return self.support == 0

    @property
    def value(self):
        if self.empty:
            return None
        if isinstance(self.numerator, CycloValue):
            return CycloValue(self.numerator.k, tuple(c / self.denominator for c in self.numerator.coeffs))
        return self.numerator / self.denominator

    def to_json(self) -> dict:
        def enc(x):
            return x.to_json() if isinstance(x, CycloValue) else (None if x is None else str(x))
        return {"cutoff": self.cutoff, "support": self.support, "empty_support": self.empty,
                "numerator": enc(self.numerator), "denominator": str(self.denominator), "value": enc(self.value)}


def expectation(spec: Sequence[ComponentSpec], X, f: Functional, filt: Filter | None = None,
                reference: ModuleType | None = None) -> WeightedExpectation:
    """Weighted average of f with weights ia(L, reference) = #Aut(reference) / #Aut(L)."""
    cut = _as_cutoff(X)
    ref_aut = aut_count(reference, spec) if reference is not None else 1
    mods = [M for M in enumerate_modules(spec, cut) if filt is None or filt(M)]
    den = Fraction(0)
    k = f.cyclotomic_order
    num: Fraction | list = [Fraction(0)] * k if k else Fraction(0)
    for M in mods:
        w = Fraction(ref_aut, aut_count(M, spec))
        den += w
        if k:
            num[f(M, spec)] += w
        else:
            num += w * f(M, spec)
    if k:
        num = _cyclo_from_exponents(k, num)
    return WeightedExpectation(cut.to_json(), num, den, len(mods))


def _cyclo_from_exponents(k: int, vec: list[Fraction]) -> CycloValue:
    D = math.lcm(*(x.denominator for x in vec))
    ints = reduce_exponents(k, [int(x * D) for x in vec])
    assert len(ints) == euler_phi(k)
    return CycloValue(k, tuple(Fraction(c, D) for c in ints))


# -- Monte Carlo ------------------------------------------------------------------

@dataclass(frozen=True)
class MonteCarloResult:
    p: int
    n: int
    precision: int
    samples: int
    seed: int
    shards: int
    counts: dict  # partition -> count

    def frequency(self, lam: Partition) -> float:
        return self.counts.get(tuple(lam), 0) / self.samples

    def to_json(self, X: int | None = None) -> dict:
        rows = []
        other = 0
        for lam, c in sorted(self.counts.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            if X is not None and self.p ** sum(lam) >= X:
                other += c
                continue
            rows.append({"type": list(lam), "count": c, "frequency": c / self.samples})
        out = {"p": self.p, "n": self.n, "precision": self.precision, "samples": self.samples,
               "seed": self.seed, "shards": self.shards, "types": rows}
        if X is not None:
            out["cutoff"] = X
            out["beyond_cutoff"] = other
        return out


def cokernel_valuations(A: np.ndarray, p: int, N: int) -> np.ndarray:
    """Valuations of the elementary divisors of a batch of square matrices over Z/p^N (N = zero)."""
    A = A.copy() % p ** N
    B, n, _ = A.shape
    mod = p ** N
    val = np.full(mod, N, dtype=np.int64)
    for x in range(1, mod):
        v, y = 0, x
        while y % p == 0:
            y //= p
            v += 1
        val[x] = v
    inv = np.zeros(mod, dtype=np.int64)
    for x in range(1, mod):
        if x % p:
            inv[x] = pow(x, -1, mod)
    bi = np.arange(B)
    out = np.empty((B, n), dtype=np.int64)
    for k in range(n):
        sub = A[:, k:, k:]
        flat = val[sub].reshape(B, -1)
        arg = flat.argmin(axis=1)
        r, c = k + arg // (n - k), k + arg % (n - k)
        A[bi, k], A[bi, r] = A[bi, r].copy(), A[bi, k].copy()
        colk, colc = A[bi, :, k].copy(), A[bi, :, c].copy()
        A[bi, :, k], A[bi, :, c] = colc, colk
        piv = A[bi, k, k]
        v = val[piv]
        out[:, k] = v
        live = v < N
        unit = np.where(live, piv // p ** np.minimum(v, N - 1), 1)
        uinv = inv[unit % mod]
        below = A[:, k + 1:, k]
        factor = (below // (p ** np.minimum(v, N - 1))[:, None]) * uinv[:, None] % mod
        factor[~live] = 0
        A[:, k + 1:, :] = (A[:, k + 1:, :] - factor[:, :, None] * A[:, k, None, :]) % mod
    return out


def cokernel_montecarlo(p: int, n: int, samples: int, seed: int, *, precision: int | None = None,
                        shards: int = 1, batch: int = 100_000) -> MonteCarloResult:
    """Cokernel types of uniform n x n matrices over Z/p^precision (default precision n).

    Shard s draws from SeedSequence([seed, s]); shard sizes differ by at most one.
    """
    if n < 1 or samples < 1:
        raise ValueError("n and samples must be positive")
    N = n if precision is None else precision
    counts: dict[Partition, int] = {}
    for s in range(shards):
        todo = samples // shards + (1 if s < samples % shards else 0)
        rng = np.random.default_rng(np.random.SeedSequence([seed, s]))
        while todo:
            b = min(batch, todo)
            A = rng.integers(0, p ** N, size=(b, n, n), dtype=np.int64)
            vals = -np.sort(-cokernel_valuations(A, p, N), axis=1)
            keys, cnt = np.unique(vals, axis=0, return_counts=True)
            for key, c in zip(keys, cnt):
                lam = tuple(int(x) for x in key if x)
                counts[lam] = counts.get(lam, 0) + int(c)
            todo -= b
    return MonteCarloResult(p, n, N, samples, seed, shards, counts)
