"""Finite permutation groups by full element enumeration.

Elements are stored as rows of an integer array; products follow the
convention that ``a * b`` applies ``a`` first, so ``(a * b)[i] == b[a[i]]``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

DEFAULT_ORDER_BOUND = 10_000


class GroupError(ValueError):
    """Invalid permutation, bad family specification, or order bound exceeded."""


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise GroupError(f"not a permutation of 0..{len(self.images) - 1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        """Parse 0-based cycle notation such as ``(0 1 2)(3 4)``; ``()`` is the identity."""
        images = list(range(degree))
        text = text.strip()
        if not re.fullmatch(r"(\([\d\s,]*\)\s*)*", text):
            raise GroupError(f"malformed cycle notation: {text!r}")
        for body in re.findall(r"\(([^()]*)\)", text):
            pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if len(set(pts)) != len(pts):
                raise GroupError(f"repeated point in cycle ({body})")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                if not 0 <= a < degree:
                    raise GroupError(f"point {a} outside 0..{degree - 1}")
                images[a] = b
        return cls(tuple(images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


@dataclass(frozen=True)
class ConjugacyData:
    class_reps: tuple[int, ...]
    class_sizes: tuple[int, ...]
    class_of: np.ndarray
    inverse_class: tuple[int, ...]
    rep_powers: tuple[tuple[int, ...], ...]  # rep_powers[c][k] = class of rep_c**k, 0 <= k < order

    @property
    def num_classes(self) -> int:
        return len(self.class_reps)

    def power_map(self, c: int, k: int) -> int:
        powers = self.rep_powers[c]
        return powers[k % len(powers)]

    def class_orders(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.rep_powers)


class PermGroup:
    """A finite permutation group with an enumerated element table.

    Element 0 is always the identity. ``elements`` is an ``(order, degree)`` array in
    breadth-first order from the identity, generators taken in input order.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], *,
                 order_bound: int = DEFAULT_ORDER_BOUND, name: str = "", metadata: dict | None = None):
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(tuple(g))
            if g.degree != degree:
                raise GroupError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in generators)
        self.name = name
        self.metadata = dict(metadata or {})
        self._order_bound = order_bound
        self._enumerate()

    # -- element table ---------------------------------------------------

    def _keys(self, rows: np.ndarray):
        """Injective keys for group elements, read off a base of points."""
        if self._radix_ok:
            return rows[:, self._base].astype(np.int64) @ self._radix
        return [r.tobytes() for r in rows[:, self._base]]

    def _enumerate(self):
        deg = self.degree
        ident = np.arange(deg, dtype=np.int32)[None, :]
        gens = np.array([g.images for g in self.generators], dtype=np.int32).reshape(-1, deg)
        # until the base is known, key on full rows
        table = {ident[0].tobytes(): 0}
        chunks = [ident]
        frontier = ident
        count = 1
        while len(frontier) and len(gens):
            # candidates ordered by (frontier position, generator index)
            cand = gens[None, :, :].repeat(len(frontier), 0)
            cand = np.take_along_axis(cand, frontier[:, None, :].repeat(len(gens), 1), axis=2)
            cand = cand.reshape(-1, deg)
            new = []
            for row in cand:
                key = row.tobytes()
                if key not in table:
                    table[key] = count
                    count += 1
                    new.append(row)
                    if count > self._order_bound:
                        raise GroupError(f"group order exceeds bound {self._order_bound}")
            frontier = np.array(new, dtype=np.int32).reshape(-1, deg)
            chunks.append(frontier)
        self.elements = np.concatenate(chunks, axis=0)
        self.order = len(self.elements)
        self._choose_base()
        keys = self._keys(self.elements)
        if self._radix_ok:
            self._sort = np.argsort(keys, kind="stable")
            self._sorted_keys = keys[self._sort]
        else:
            self._lookup = {k: i for i, k in enumerate(keys)}

    def _choose_base(self):
        base: list[int] = []
        distinct = 1
        for p in range(self.degree):
            if distinct == self.order:
                break
            d = len(np.unique(self.elements[:, base + [p]], axis=0))
            if d > distinct:
                base.append(p)
                distinct = d
        self._base = base
        self._radix_ok = self.degree ** max(len(base), 1) < 2 ** 62
        self._radix = np.array([self.degree ** i for i in range(len(base))], dtype=np.int64)

    def index_of(self, rows: np.ndarray) -> np.ndarray:
        """Indices of the given permutation rows (which must lie in the group)."""
        rows = np.asarray(rows, dtype=np.int32).reshape(-1, self.degree)
        if not self._base:
            return np.zeros(len(rows), dtype=np.int64)
        keys = self._keys(rows)
        if self._radix_ok:
            pos = np.searchsorted(self._sorted_keys, keys)
            pos = np.minimum(pos, len(self._sorted_keys) - 1)
            if not np.array_equal(self._sorted_keys[pos], keys):
                raise GroupError("permutation is not an element of the group")
            idx = self._sort[pos]
        else:
            idx = np.array([self._lookup[k] for k in keys], dtype=np.int64)
        if not np.array_equal(self.elements[idx], rows):
            raise GroupError("permutation is not an element of the group")
        return idx

    def contains(self, perm: Permutation) -> bool:
        try:
            self.index_of(np.array(perm.images))
        except GroupError:
            return False
        return True

    def element(self, i: int) -> Permutation:
        return Permutation(tuple(int(x) for x in self.elements[i]))

    def mul(self, a, b) -> np.ndarray:
        """Vectorized product of element indices (broadcasting)."""
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        rows = np.take_along_axis(self.elements[b.ravel()], self.elements[a.ravel()], axis=1)
        return self.index_of(rows).reshape(a.shape)

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.empty_like(self.elements)
        np.put_along_axis(inv, self.elements, np.arange(self.degree, dtype=np.int32)[None, :].repeat(self.order, 0), axis=1)
        return self.index_of(inv)

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        return tuple(int(i) for i in self.index_of(np.array([g.images for g in self.generators], dtype=np.int32))) \
            if self.generators else ()

    def power(self, i: int, k: int) -> int:
        result, base = 0, int(i)
        k = k % self.element_orders[i]
        while k:
            if k & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            k >>= 1
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.ones(self.order, dtype=np.int64)
        cur = np.arange(self.order)
        alive = cur != 0
        k = 1
        while alive.any():
            k += 1
            cur = np.where(alive, self.mul(cur, np.arange(self.order)), cur)
            done = alive & (cur == 0)
            orders[done] = k
            alive &= ~done
        return orders

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(int(o) for o in np.unique(self.element_orders)))

    def is_abelian(self) -> bool:
        g = self.generator_indices
        return all(int(self.mul(a, b)) == int(self.mul(b, a)) for a in g for b in g)

    # -- subgroups -------------------------------------------------------

    def subgroup(self, gens: Iterable[int]) -> frozenset[int]:
        """Element indices of the subgroup generated by the given element indices."""
        gens = sorted({int(g) for g in gens} - {0})
        members = {0}
        frontier = np.array([0])
        while len(frontier) and gens:
            prod = self.mul(frontier[:, None], np.array(gens)[None, :]).ravel()
            fresh = [int(x) for x in dict.fromkeys(prod.tolist()) if x not in members]
            members.update(fresh)
            frontier = np.array(fresh, dtype=np.int64)
        return frozenset(members)

    def subgroup_from_perms(self, perms: Iterable[Permutation]) -> frozenset[int]:
        rows = [p.images for p in perms]
        if not rows:
            return frozenset({0})
        return self.subgroup(self.index_of(np.array(rows)).tolist())

    def is_subgroup(self, elems: Iterable[int]) -> bool:
        s = np.array(sorted(set(elems)), dtype=np.int64)
        if 0 not in s or self.order % len(s):
            return False
        prods = self.mul(s[:, None], s[None, :])
        return set(np.unique(prods).tolist()) <= set(s.tolist())

    def conjugate_subgroup(self, elems: frozenset[int], g: int) -> frozenset[int]:
        s = np.array(sorted(elems))
        return frozenset(self.mul(self.mul(int(self.inverses[g]), s), g).tolist())

    def normal_closure(self, elems: Iterable[int]) -> frozenset[int]:
        sub = self.subgroup(elems)
        while True:
            conj = set(sub)
            for g in self.generator_indices:
                conj |= self.conjugate_subgroup(sub, g)
            if conj <= sub:
                return sub
            sub = self.subgroup(conj)

    # -- conjugacy -------------------------------------------------------

    @cached_property
    def conjugacy(self) -> ConjugacyData:
        return conjugacy_classes(self)

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} order={self.order} degree={self.degree}>"


def group_from_generators(degree: int, gens: Sequence[Permutation | Sequence[int]], *,
                          order_bound: int = DEFAULT_ORDER_BOUND, name: str = "", metadata: dict | None = None) -> PermGroup:
    gens = [g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in gens]
    return PermGroup(degree, gens, order_bound=order_bound, name=name, metadata=metadata)


def conjugacy_classes(G: PermGroup) -> ConjugacyData:
    n = G.order
    src, dst = [np.arange(n)], [np.arange(n)]
    for g in G.generator_indices:
        src.append(np.arange(n))
        dst.append(G.mul(G.mul(int(G.inverses[g]), np.arange(n)), g))
    src, dst = np.concatenate(src), np.concatenate(dst)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    ncomp, labels = connected_components(graph, directed=False)
    sizes = np.bincount(labels, minlength=ncomp)
    first = np.full(ncomp, n, dtype=np.int64)
    np.minimum.at(first, labels, np.arange(n))
    order = sorted(range(ncomp), key=lambda c: (int(sizes[c]), int(first[c])))
    relabel = np.empty(ncomp, dtype=np.int64)
    relabel[order] = np.arange(ncomp)
    class_of = relabel[labels]
    reps = tuple(int(first[c]) for c in order)
    class_sizes = tuple(int(sizes[c]) for c in order)
    inverse_class = tuple(int(class_of[G.inverses[r]]) for r in reps)
    rarr = np.array(reps, dtype=np.int64)
    orders = G.element_orders[rarr]
    table = np.zeros((len(reps), int(orders.max())), dtype=np.int64)
    cur = rarr.copy()
    for i in range(1, table.shape[1]):
        table[:, i] = cur
        cur = G.mul(cur, rarr)
    rep_powers = [tuple(int(class_of[x]) for x in table[c, :orders[c]]) for c in range(len(reps))]
    class_of.setflags(write=False)
    return ConjugacyData(reps, class_sizes, class_of, inverse_class, tuple(rep_powers))


def derived_subgroup(G: PermGroup) -> frozenset[int]:
    """Element indices of the commutator subgroup G'."""
    gens = G.generator_indices
    comms = []
    for a in gens:
        for b in gens:
            ab = int(G.mul(a, b))
            ba = int(G.mul(b, a))
            comms.append(int(G.mul(int(G.inverses[ba]), ab)))
    return G.normal_closure(comms)


def abelian_invariants(G: PermGroup, normal: frozenset[int] | None = None) -> list[int]:
    """Invariant factors of G/N for N normal with abelian quotient (default N = G')."""
    N = derived_subgroup(G) if normal is None else normal
    q = G.order // len(N)
    in_N = np.zeros(G.order, dtype=bool)
    in_N[list(N)] = True
    elementary: list[int] = []
    for p in _prime_factors(q):
        # #{x in G/N : x^(p^k) = 1} = p^(sum_i min(k, e_i))
        counts = [0]
        k = 1
        while True:
            e = p ** k
            pw = _power_all(G, e)
            c = int(in_N[pw].sum()) // len(N)
            counts.append(round(math.log(c, p)))
            if c == p ** _valuation(q, p):
                break
            k += 1
        # number of cyclic factors of order >= p^k is counts[k] - counts[k-1]
        ge = [counts[k] - counts[k - 1] for k in range(1, len(counts))] + [0]
        for k in range(1, len(ge)):
            elementary += [p ** k] * (ge[k - 1] - ge[k])
    return _invariant_factors(elementary)


def _power_all(G: PermGroup, e: int) -> np.ndarray:
    result = np.zeros(G.order, dtype=np.int64)
    base = np.arange(G.order)
    while e:
        if e & 1:
            result = G.mul(result, base)
        base = G.mul(base, base)
        e >>= 1
    return result


def _invariant_factors(elementary: list[int]) -> list[int]:
    by_prime: dict[int, list[int]] = {}
    for q in elementary:
        by_prime.setdefault(_prime_factors(q)[0], []).append(q)
    for v in by_prime.values():
        v.sort(reverse=True)
    length = max((len(v) for v in by_prime.values()), default=0)
    out = []
    for i in range(length):
        out.append(math.prod(v[i] for v in by_prime.values() if i < len(v)))
    return sorted(out)


def _prime_factors(n: int) -> list[int]:
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


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def cyclic_subgroup_classes(G: PermGroup) -> list[frozenset[int]]:
    """Representatives of the conjugacy classes of cyclic subgroups, sorted by (order, min element list)."""
    seen: set[frozenset[int]] = set()
    reps = []
    for g in range(G.order):
        c = G.subgroup([g])
        if c in seen:
            continue
        orbit = {c}
        frontier = [c]
        while frontier:
            h = frontier.pop()
            for s in G.generator_indices:
                k = G.conjugate_subgroup(h, s)
                if k not in orbit:
                    orbit.add(k)
                    frontier.append(k)
        seen |= orbit
        reps.append(min(orbit, key=lambda s: sorted(s)))
    reps.sort(key=lambda s: (len(s), sorted(s)))
    return reps


# -- named families ---------------------------------------------------------

def _cyc(points: Sequence[int]) -> str:
    return "(" + " ".join(map(str, points)) + ")"


def _crt_exponent(n: int, action) -> int:
    """Combine a per-factor action (list of (modulus, exponent)) into one exponent mod n."""
    if isinstance(action, int):
        return action % n
    a, mod = 0, 1
    for m, e in action:
        # solve x = a mod mod, x = e mod m
        t = ((e - a) * pow(mod, -1, m)) % m
        a, mod = a + mod * t, mod * m
    if mod != n:
        raise GroupError(f"action moduli multiply to {mod}, expected {n}")
    return a % n


def semidirect_cyclic(n: int, m: int, action) -> PermGroup:
    """C_n x| C_m with the generator of C_m acting by x -> x^a.

    Realized on n + m points: the regular action of C_n on 0..n-1, the generator h
    acting there as i -> a*i and as an m-cycle on n..n+m-1.
    """
    a = _crt_exponent(n, action)
    if math.gcd(a, n) != 1 or pow(a, m, n) != 1 % n:
        raise GroupError(f"x -> x^{a} does not define an action of C_{m} on C_{n}")
    deg = n + m
    x = list(range(deg))
    for i in range(n):
        x[i] = (i + 1) % n
    h = list(range(deg))
    for i in range(n):
        h[i] = (a * i) % n
    for j in range(m):
        h[n + j] = n + (j + 1) % m
    gens = [Permutation(tuple(x)), Permutation(tuple(h))]
    return group_from_generators(deg, gens, name=f"C{n}:C{m}[{a}]",
                                 metadata={"family": "semidirect_cyclic", "n": n, "m": m, "exponent": a,
                                           "degree": deg, "realization": f"regular C{n} on 0..{n - 1}, C{m} on {n}..{deg - 1}"})


def make_family(spec: str) -> PermGroup:
    """Build a group from a family name such as ``dihedral(5)`` or ``order112(A)``.

    Families: cyclic(n), dihedral(n) (order 2n), quaternion8, dicyclic(n) (order 4n),
    symmetric(n<=5), alternating(n<=5), semidirect_cyclic(n,m,a),
    abelian(n1,n2,...), order112(A|B).
    """
    m = re.fullmatch(r"\s*([a-z0-9_]+)\s*(?:\((.*)\))?\s*", spec)
    if not m:
        raise GroupError(f"bad family spec {spec!r}")
    name, argstr = m.group(1), (m.group(2) or "").strip()
    args = [a.strip() for a in argstr.split(",")] if argstr else []

    def ints():
        try:
            return [int(a) for a in args]
        except ValueError:
            raise GroupError(f"integer arguments expected in {spec!r}") from None

    if name == "cyclic":
        (n,) = ints()
        if n < 1:
            raise GroupError("cyclic(n) needs n >= 1")
        gens = [Permutation.from_cycles(_cyc(range(n)), n)] if n > 1 else []
        return group_from_generators(n, gens, name=f"C{n}", metadata={"family": "cyclic", "n": n, "degree": n})
    if name == "abelian":
        ns = ints()
        deg = sum(ns)
        gens, off = [], 0
        for k in ns:
            if k > 1:
                gens.append(Permutation.from_cycles(_cyc(range(off, off + k)), deg))
            off += k
        return group_from_generators(deg, gens, name="x".join(f"C{k}" for k in ns),
                                     metadata={"family": "abelian", "factors": ns, "degree": deg})
    if name == "dihedral":
        (n,) = ints()
        if n < 3:
            g = semidirect_cyclic(n, 2, -1)
            g.name = f"D{n}"
            return g
        r = Permutation.from_cycles(_cyc(range(n)), n)
        s = Permutation(tuple((-i) % n for i in range(n)))
        return group_from_generators(n, [r, s], name=f"D{n}", metadata={"family": "dihedral", "n": n, "degree": n})
    if name == "quaternion8":
        g = make_family("dicyclic(2)")
        g.name = "Q8"
        g.metadata["family"] = "quaternion8"
        return g
    if name == "dicyclic":
        (n,) = ints()
        # elements a^k x^e (0 <= k < 2n, e in {0,1}) numbered k + 2n*e, right-regular action
        N = 2 * n

        def mul(u, v):
            k1, e1 = u % N, u // N
            k2, e2 = v % N, v // N
            if e1 == 0:
                return (k1 + k2) % N + N * e2
            # x a^k2 = a^-k2 x ; x x = a^n
            k = (k1 - k2) % N
            if e2:
                return (k + n) % N
            return k + N
        deg = 2 * N
        a_idx, x_idx = 1, N
        gens = [Permutation(tuple(mul(p, a_idx) for p in range(deg))),
                Permutation(tuple(mul(p, x_idx) for p in range(deg)))]
        return group_from_generators(deg, gens, name=f"Dic{n}", metadata={"family": "dicyclic", "n": n, "degree": deg})
    if name in ("symmetric", "alternating"):
        (n,) = ints()
        if not 1 <= n <= 5:
            raise GroupError(f"{name}(n) supported for n <= 5")
        if name == "symmetric":
            gens = [] if n == 1 else ([Permutation.from_cycles("(0 1)", n)] if n == 2 else
                                      [Permutation.from_cycles("(0 1)", n), Permutation.from_cycles(_cyc(range(n)), n)])
            return group_from_generators(n, gens, name=f"S{n}", metadata={"family": "symmetric", "n": n, "degree": n})
        gens = [Permutation.from_cycles(f"(0 1 {k})", n) for k in range(2, n)]
        return group_from_generators(n, gens, name=f"A{n}", metadata={"family": "alternating", "n": n, "degree": n})
    if name == "semidirect_cyclic":
        if len(args) < 3:
            raise GroupError("semidirect_cyclic(n, m, a) needs three arguments")
        n, mm = int(args[0]), int(args[1])
        rest = ",".join(args[2:]).strip()
        if ":" in rest:
            action = [tuple(int(t) for t in pair.split(":")) for pair in rest.strip("[]").split(",")]
        else:
            action = int(rest)
        return semidirect_cyclic(n, mm, action)
    if name == "order112":
        if args not in (["A"], ["B"]):
            raise GroupError("order112 variant must be A or B")
        y_exp = 5 if args[0] == "A" else 3
        g = semidirect_cyclic(56, 2, [(7, -1), (8, y_exp)])
        g.name = f"order112({args[0]})"
        g.metadata.update({"family": "order112", "variant": args[0],
                           "action": f"x -> x^-1 (x of order 7), y -> y^{y_exp} (y of order 8)"})
        return g
    raise GroupError(f"unknown family {name!r}")


def direct_product(*groups: PermGroup) -> PermGroup:
    """Direct product acting on the disjoint union of the point sets."""
    deg = sum(G.degree for G in groups)
    gens, off = [], 0
    for G in groups:
        for g in G.generators:
            images = list(range(deg))
            images[off:off + G.degree] = [x + off for x in g.images]
            gens.append(Permutation(tuple(images)))
        off += G.degree
    name = "x".join(G.name or "?" for G in groups)
    return group_from_generators(deg, gens, name=name,
                                 metadata={"family": "direct_product", "factors": [G.name for G in groups], "degree": deg})


# -- group files ------------------------------------------------------------

def parse_group_text(text: str, *, name: str = "", order_bound: int = DEFAULT_ORDER_BOUND) -> PermGroup:
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "degree":
            if degree is not None:
                raise GroupError(f"line {lineno}: duplicate degree line")
            try:
                degree = int(rest)
            except ValueError:
                raise GroupError(f"line {lineno}: bad degree {rest!r}") from None
            if degree < 1:
                raise GroupError(f"line {lineno}: degree must be positive")
        elif head == "gen":
            if degree is None:
                raise GroupError(f"line {lineno}: gen before degree")
            gens.append(Permutation.from_cycles(rest, degree))
        else:
            raise GroupError(f"line {lineno}: unrecognized line {line!r}")
    if degree is None:
        raise GroupError("missing degree line")
    return group_from_generators(degree, gens, name=name, order_bound=order_bound)


def read_group_file(path, *, order_bound: int = DEFAULT_ORDER_BOUND) -> PermGroup:
    path = Path(path)
    return parse_group_text(path.read_text(encoding="utf-8"), name=path.stem, order_bound=order_bound)


def format_group(G: PermGroup, comment: str = "") -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"degree {G.degree}")
    lines += [f"gen {g}" for g in G.generators]
    return "\n".join(lines) + "\n"
