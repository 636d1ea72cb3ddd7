"""Abelian number fields as subfields of cyclotomic fields.

A field is described by a conductor f and a subgroup H of (Z/f)^x: it is the
fixed field of H inside Q(zeta_f). Class numbers of real fields and narrow
class groups are not computed here; they are ingested from a class-data file
and cross-checked against the analytic relative class number where possible.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable

from .cyclotomic import Cyclotomic, euler_phi
from .snf import quotient_invariants


class ClassDataError(ValueError):
    """A class-data file failed validation."""


class UnitIndexUndetermined(ValueError):
    """The Hasse unit index Q could not be decided from the descriptor alone."""


def units(f: int) -> list[int]:
    return [a for a in range(f) if math.gcd(a, f) == 1]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _mobius(n: int) -> int:
    ps = prime_factors(n)
    m = math.prod(ps)
    return 0 if m != n else (-1) ** len(ps)


def _is_prime_power(n: int) -> bool:
    return n > 1 and len(prime_factors(n)) == 1


def _generated(f: int, gens: Iterable[int]) -> frozenset[int]:
    one = 1 % f
    elems = {one}
    frontier = [one]
    gens = [g % f for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g % f
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


@dataclass(frozen=True)
class AbelianField:
    """Fixed field of ``H`` (a set of residues mod ``conductor``) in Q(zeta_conductor).

    Instances built through :meth:`make` are canonical: the conductor is minimal,
    so equal fields compare equal. The raw constructor accepts non-minimal data.
    """

    conductor: int
    H: frozenset[int]

    def __post_init__(self):
        f = self.conductor
        if f < 1:
            raise ValueError("conductor must be positive")
        H = frozenset(h % f for h in self.H)
        object.__setattr__(self, "H", H)
        if not H or any(math.gcd(h, f) != 1 for h in H) or _generated(f, H) != H:
            raise ValueError(f"H is not a subgroup of (Z/{f})^x")

    @classmethod
    def make(cls, conductor: int, gens: Iterable[int] = ()) -> "AbelianField":
        """Canonical descriptor for the fixed field of <gens> in Q(zeta_conductor)."""
        return cls(conductor, _generated(conductor, gens)).canonical()

    @classmethod
    def rationals(cls) -> "AbelianField":
        return cls(1, frozenset({0}))

    def canonical(self) -> "AbelianField":
        f, H = self.conductor, self.H
        for d in divisors(f):
            # kernel of (Z/f)^x -> (Z/d)^x must lie in H
            if all(a in H for a in units(f) if a % d == 1 % d):
                return AbelianField(d, frozenset(h % d for h in H))
        raise AssertionError("unreachable")

    def is_canonical(self) -> bool:
        return self.canonical().conductor == self.conductor

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Canonical generating set: greedy over H in increasing order."""
        gens: list[int] = []
        cur = frozenset({1 % self.conductor})
        for h in sorted(self.H):
            if h not in cur:
                gens.append(h)
                cur = _generated(self.conductor, gens)
        return tuple(gens)

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.conductor, self.generators)

    @property
    def degree(self) -> int:
        return euler_phi(self.conductor) // len(self.H)

    @property
    def is_totally_real(self) -> bool:
        return (-1) % self.conductor in self.H

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def real_subfield(self) -> "AbelianField":
        f = self.conductor
        return AbelianField(f, _generated(f, list(self.H) + [-1])).canonical()

    def _image_size(self, d: int) -> int:
        return len({h % d for h in self.H})

    def subfield_degree(self, d: int) -> int:
        """Degree of the intersection with Q(zeta_d), for d dividing the conductor."""
        return euler_phi(d) // self._image_size(d)

    def contains_cyclotomic(self, d: int) -> bool:
        return all(h % d == 1 % d for h in self.H)

    @property
    def roots_of_unity(self) -> int:
        """Order w of the group of roots of unity."""
        m = math.lcm(*[d for d in divisors(self.conductor) if self.contains_cyclotomic(d)])
        return math.lcm(2, m)

    def describe(self) -> dict:
        return {"conductor": self.conductor, "H_generators": list(self.generators),
                "degree": self.degree, "totally_real": self.is_totally_real}

    def __str__(self):
        return f"Q(zeta_{self.conductor})^<{','.join(map(str, self.generators))}>"


# -- invariants -------------------------------------------------------------

@dataclass(frozen=True)
class FieldInvariants:
    degree: int
    signature: tuple[int, int]
    discriminant: int


def conductor_counts(K: AbelianField) -> dict[int, int]:
    """Number of characters of (Z/f)^x / H with each exact conductor d | f."""
    f = K.conductor
    N = {d: K.subfield_degree(d) for d in divisors(f)}
    counts = {}
    for d in divisors(f):
        c = sum(_mobius(d // e) * N[e] for e in divisors(d))
        if c:
            counts[d] = c
    return counts


def field_invariants(K: AbelianField) -> FieldInvariants:
    n = K.degree
    sig = (n, 0) if K.is_totally_real else (0, n // 2)
    disc = math.prod(d ** c for d, c in conductor_counts(K).items())
    return FieldInvariants(n, sig, (-1) ** sig[1] * disc)


@dataclass(frozen=True)
class Splitting:
    p: int
    e: int
    f: int
    g: int

    @property
    def ramified(self) -> bool:
        return self.e > 1


def frobenius_class(K: AbelianField, p: int) -> Splitting:
    f = K.conductor
    fp = f
    while fp % p == 0:
        fp //= p
    # inertia at p is the kernel of reduction to (Z/f')^x
    inertia_in_H = sum(1 for h in K.H if h % fp == 1 % fp)
    inertia = euler_phi(f) // euler_phi(fp)
    e = inertia // inertia_in_H
    Hp = {h % fp for h in K.H}
    r, x = 1, p % fp
    while x not in Hp:
        x = x * p % fp
        r += 1
    return Splitting(p, e, r, K.degree // (e * r))


# -- Dirichlet characters and h^- --------------------------------------------

class _CharacterGroup:
    """Dirichlet characters mod f, as exponent vectors on a cyclic decomposition of (Z/f)^x."""

    def __init__(self, f: int):
        self.f = f
        gens, orders = [], []
        for p in prime_factors(f):
            k = 0
            m = f
            while m % p == 0:
                m //= p
                k += 1
            q = p ** k
            local = []
            if p == 2:
                if k >= 2:
                    local.append((q - 1, 2))
                if k >= 3:
                    local.append((5, q // 4))
            else:
                g = next(g for g in range(2, q) if math.gcd(g, p) == 1 and
                         all(pow(g, euler_phi(q) // r, q) != 1 for r in prime_factors(euler_phi(q))))
                local.append((g, euler_phi(q)))
            for g, o in local:
                # lift to a unit mod f that is 1 away from the p-part
                gens.append(_crt(g, q, 1, m))
                orders.append(o)
        self.gens = gens
        self.orders = orders
        self.exponent = math.lcm(*orders) if orders else 1
        self.dlog: dict[int, tuple[int, ...]] = {1 % f: tuple(0 for _ in gens)}
        frontier = [1 % f]
        while frontier:
            nxt = []
            for x in frontier:
                ex = self.dlog[x]
                for i, g in enumerate(gens):
                    y = x * g % f
                    if y not in self.dlog:
                        e2 = list(ex)
                        e2[i] = (e2[i] + 1) % orders[i]
                        self.dlog[y] = tuple(e2)
                        nxt.append(y)
            frontier = nxt
        assert len(self.dlog) == euler_phi(f)

    def characters(self):
        def rec(i, acc):
            if i == len(self.orders):
                yield tuple(acc)
                return
            for e in range(self.orders[i]):
                yield from rec(i + 1, acc + [e])
        yield from rec(0, [])

    def value_exponent(self, chi: tuple[int, ...], a: int) -> int:
        """chi(a) = zeta_M^k for M = self.exponent; returns k."""
        d = self.dlog[a % self.f]
        M = self.exponent
        return sum(c * x * (M // o) for c, x, o in zip(chi, d, self.orders)) % M


def _crt(a: int, m: int, b: int, n: int) -> int:
    if n == 1:
        return a % m
    t = ((b - a) * pow(m, -1, n)) % n
    return (a + m * t) % (m * n)


def _odd_characters(K: AbelianField):
    """Odd Dirichlet characters of conductor dividing f, trivial on H, with their conductors."""
    f = K.conductor
    grp = _CharacterGroup(f)
    M = grp.exponent
    Hgens = K.generators
    out = []
    for chi in grp.characters():
        if any(grp.value_exponent(chi, h) for h in Hgens):
            continue
        if grp.value_exponent(chi, f - 1) != M // 2 if f > 2 else True:
            continue
        cond = next(d for d in divisors(f)
                    if all(grp.value_exponent(chi, a) == 0 for a in units(f) if a % d == 1 % d))
        out.append((chi, cond))
    return grp, out


def unit_index(K: AbelianField) -> int:
    """Hasse unit index Q = [E : W E^+] of an imaginary abelian field.

    Decided by: Q = 1 for imaginary quadratic fields and prime-power conductor;
    Q = 2 for full cyclotomic fields of composite conductor; Q = 1 when
    w = 2 mod 4 and K/K^+ ramifies at an odd prime; Q = 2 when a norm of a
    cyclotomic unit has eps/conj(eps) a non-square root of unity.
    """
    if K.is_totally_real:
        raise ValueError(f"{K} is totally real")
    f = K.conductor
    if K.degree == 2 or _is_prime_power(f):
        return 1
    if len(K.H) == 1:
        return 2
    w = K.roots_of_unity
    if w % 4 == 2:
        Kp = K.real_subfield()
        for p in prime_factors(f):
            if p != 2 and frobenius_class(K, p).e != frobenius_class(Kp, p).e:
                return 1
    if _cyclotomic_unit_certificate(K, w):
        return 2
    raise UnitIndexUndetermined(f"unit index of {K} not decided by the available criteria")


def _cyclotomic_unit_certificate(K: AbelianField, w: int) -> bool:
    f = K.conductor
    n = math.lcm(f, w)
    step = n // f
    Hlist = sorted(K.H)
    for b in range(1, f):
        if _is_prime_power(f // math.gcd(f, b)) or f // math.gcd(f, b) == 1:
            continue
        eps = Cyclotomic.from_int(n, 1)
        for h in Hlist:
            eps = eps * (Cyclotomic.from_int(n, 1) - Cyclotomic.root(n, step * b * h))
        bar = eps.conj()
        for j in range(1, w, 2):
            if eps == Cyclotomic.root(n, (n // w) * j) * bar:
                return True
    return False


def h_minus(K: AbelianField, *, unit_index_value: int | None = None) -> int:
    """Relative class number h^- of an imaginary abelian field, exactly.

    h^- = Q w prod_{chi odd} (-B_{1,chi} / 2), B_{1,chi} = (1/f_chi) sum_{a=1}^{f_chi} a chi(a),
    with every character taken primitive.
    """
    if K.is_totally_real:
        raise ValueError(f"{K} is not imaginary")
    Q = unit_index(K) if unit_index_value is None else unit_index_value
    w = K.roots_of_unity
    grp, odd = _odd_characters(K)
    M = grp.exponent
    f = K.conductor
    prod = Cyclotomic.from_int(M, 1)
    denom = 1
    for chi, fc in odd:
        vec = [0] * M
        for a in range(1, fc + 1):
            if math.gcd(a, fc) != 1:
                continue
            lift = a
            while math.gcd(lift, f) != 1:
                lift += fc
            vec[grp.value_exponent(chi, lift)] -= a
        prod = prod * Cyclotomic.from_exponents(M, vec)
        denom *= 2 * fc
    if not prod.is_rational():
        raise ArithmeticError(f"product of Bernoulli numbers for {K} is not rational")
    h = Fraction(Q * w * prod.as_int(), denom)
    if h.denominator != 1 or h <= 0:
        raise ArithmeticError(f"h^- of {K} came out as {h}")
    return int(h)


# -- class data ---------------------------------------------------------------

@dataclass(frozen=True)
class ClassData:
    """Ingested class-group data for one field.

    ``cl_structure`` is the narrow class group; ``prime_classes`` maps (p, index)
    to a vector in that basis. ``narrow_kernel`` generates the kernel of the map
    onto the ordinary class group.
    """

    field: AbelianField
    h: int
    h_narrow: int
    cl_structure: tuple[int, ...]
    narrow_kernel: tuple[tuple[int, ...], ...] = ()
    prime_classes: dict = field(default_factory=dict, hash=False, compare=False)
    unit_index: int | None = None
    provenance: str = ""

    def primes_covered(self, p: int, count: int) -> bool:
        return all((p, i) in self.prime_classes for i in range(count))


class ClassTable:
    """A validated class-data file, keyed by canonical (conductor, H generators)."""

    def __init__(self, entries: dict, source: str = ""):
        self.entries = entries
        self.source = source

    def get(self, K: AbelianField) -> ClassData | None:
        return self.entries.get(K.canonical().key)

    def __len__(self):
        return len(self.entries)

    @classmethod
    def empty(cls) -> "ClassTable":
        return cls({}, "")

    @classmethod
    def from_file(cls, path) -> "ClassTable":
        path = Path(path)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise ClassDataError(f"{path}: unreadable class-data file: {exc}") from exc
        return cls.from_json(raw, source=str(path))

    @classmethod
    def from_json(cls, raw, source: str = "") -> "ClassTable":
        if isinstance(raw, dict) and "entries" in raw:
            raw = raw["entries"]
        if not isinstance(raw, list):
            raise ClassDataError(f"{source}: expected a list of entries")
        entries = {}
        for i, item in enumerate(raw):
            try:
                data = _parse_entry(item)
            except ClassDataError as exc:
                raise ClassDataError(f"{source}: entry {i}: {exc}") from None
            if data.field.key in entries:
                raise ClassDataError(f"{source}: entry {i}: duplicate key {data.field.key}")
            entries[data.field.key] = data
        return cls(entries, source)


def _int_list(item, name, *, positive=False):
    v = item.get(name, [])
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise ClassDataError(f"{name} must be a list of integers")
    if positive and any(x < 1 for x in v):
        raise ClassDataError(f"{name} must be positive")
    return v


def _parse_entry(item) -> ClassData:
    if not isinstance(item, dict):
        raise ClassDataError("entry is not an object")
    for key in ("conductor", "H_generators", "h", "h_narrow", "cl_structure"):
        if key not in item:
            raise ClassDataError(f"missing field {key!r}")
    f = item["conductor"]
    if not isinstance(f, int) or f < 1:
        raise ClassDataError("conductor must be a positive integer")
    gens = _int_list(item, "H_generators")
    if any(math.gcd(g, f) != 1 for g in gens):
        raise ClassDataError(f"H generator not a unit mod {f}")
    K = AbelianField.make(f, gens)
    if K.conductor != f or sorted(K.generators) != sorted(g % f for g in gens if g % f != 1 % f):
        raise ClassDataError(f"descriptor ({f}, {gens}) is not canonical; expected {K.key}")
    h, hn = item["h"], item["h_narrow"]
    if not all(isinstance(x, int) and x >= 1 for x in (h, hn)):
        raise ClassDataError("h and h_narrow must be positive integers")
    cyc = _int_list(item, "cl_structure", positive=True)
    if any(b % a for a, b in zip(cyc, cyc[1:])):
        raise ClassDataError(f"cl_structure {cyc} is not in invariant-factor form")
    if math.prod(cyc) != hn:
        raise ClassDataError(f"cl_structure {cyc} has order {math.prod(cyc)}, h_narrow is {hn}")
    if hn % h:
        raise ClassDataError(f"h = {h} does not divide h_narrow = {hn}")
    if K.is_totally_real:
        if (h * 2 ** (K.degree - 1)) % hn:
            raise ClassDataError(f"h_narrow = {hn} does not divide h * 2^(n-1) for a totally real field")
    elif hn != h:
        raise ClassDataError("h_narrow must equal h for a field with a complex place")
    kernel = item.get("narrow_kernel", [])
    if not isinstance(kernel, list):
        raise ClassDataError("narrow_kernel must be a list of vectors")
    kernel = [tuple(_int_list({"v": v}, "v")) for v in kernel]
    for v in kernel:
        if len(v) != len(cyc):
            raise ClassDataError(f"narrow_kernel vector {list(v)} does not match cl_structure")
    if math.prod(quotient_invariants(cyc, [list(v) for v in kernel])) != h:
        raise ClassDataError(f"narrow class group modulo narrow_kernel does not have order h = {h}")
    primes = {}
    for pc in item.get("prime_classes", []):
        if not isinstance(pc, dict) or not all(k in pc for k in ("p", "index", "vector")):
            raise ClassDataError("prime_classes entries need p, index, vector")
        p, idx = pc["p"], pc["index"]
        vec = _int_list(pc, "vector")
        if len(vec) != len(cyc):
            raise ClassDataError(f"prime class vector for p={p} has wrong length")
        if not isinstance(p, int) or len(prime_factors(p)) != 1 or prime_factors(p)[0] != p:
            raise ClassDataError(f"{p} is not a prime")
        g = frobenius_class(K, p).g
        if not isinstance(idx, int) or not 0 <= idx < g:
            raise ClassDataError(f"prime index {idx} out of range: {g} primes above {p}")
        if (p, idx) in primes:
            raise ClassDataError(f"duplicate prime class ({p}, {idx})")
        primes[(p, idx)] = tuple(x % c for x, c in zip(vec, cyc))
    q = item.get("unit_index")
    if q is not None and q not in (1, 2):
        raise ClassDataError("unit_index must be 1 or 2")
    if not K.is_totally_real and K.degree > 1:
        try:
            hm = h_minus(K, unit_index_value=q)
        except UnitIndexUndetermined:
            # Q in {1, 2}: h^- with Q = 1 must still divide h
            hm = h_minus(K, unit_index_value=1)
        if h % hm:
            raise ClassDataError(f"h = {h} is not divisible by the computed relative class number {hm}")
    return ClassData(K, h, hn, tuple(cyc), tuple(kernel), primes, q, str(item.get("provenance", "")))


def load_class_data(K: AbelianField, table: ClassTable) -> ClassData | None:
    """Entry for ``K`` (validated on load), or None when the table has no entry.

    Q itself is built in: h = h^+ = 1 with trivial structure.
    """
    K = K.canonical()
    data = table.get(K)
    if data is None and K.is_rational:
        return ClassData(K, 1, 1, (), (), {}, None, "trivial: rational field")
    return data


# -- obstruction ----------------------------------------------------------------

@dataclass(frozen=True)
class ObstructionReport:
    field: AbelianField
    symplectic: bool
    quotient_invariants: tuple[int, ...]
    mode: str  # certified-by-h1 | certified-by-table | inconclusive
    class_number: int | None = None
    note: str = ""

    @property
    def trivial(self) -> bool:
        return self.mode != "inconclusive" and not self.quotient_invariants

    def to_json(self) -> dict:
        return {"field": self.field.describe(), "symplectic": self.symplectic,
                "relevant_class_number": self.class_number,
                "quotient_invariants": list(self.quotient_invariants), "mode": self.mode, "note": self.note}


def obstruction_group(K: AbelianField, symplectic: bool, bad_primes: Iterable[int],
                      data: ClassData | None) -> ObstructionReport:
    """Class group (narrow if symplectic) modulo the classes of primes above ``bad_primes``."""
    K = K.canonical()
    bad = sorted(set(bad_primes))
    if K.is_rational:
        return ObstructionReport(K, symplectic, (), "certified-by-h1", 1, "class group of Q is trivial")
    if data is None:
        return ObstructionReport(K, symplectic, (), "inconclusive", None, "no class data for this field")
    relevant = data.h_narrow if symplectic else data.h
    if relevant == 1:
        return ObstructionReport(K, symplectic, (), "certified-by-h1", relevant)
    relations = [] if symplectic else [list(v) for v in data.narrow_kernel]
    for p in bad:
        g = frobenius_class(K, p).g
        if not data.primes_covered(p, g):
            return ObstructionReport(K, symplectic, (), "inconclusive", relevant,
                                     f"class data lacks the primes above {p}")
        relations += [list(data.prime_classes[(p, i)]) for i in range(g)]
    inv = quotient_invariants(list(data.cl_structure), relations)
    return ObstructionReport(K, symplectic, tuple(inv), "certified-by-table", relevant)
