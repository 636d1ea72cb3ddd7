"""Virtual characters in G_0(Q[G]): permutation classes, duality, archimedean classes.

Everything is an integer vector indexed by the rows of a character table.
Identities are checked only after tensoring with Q; torsion information lives
in the obstruction pipeline.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .characters import CharacterTable
from .cyclotomic import Cyclotomic
from .groups import PermGroup, cyclic_subgroup_classes


class LedgerError(ValueError):
    pass


@dataclass(frozen=True)
class VirtualClass:
    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, k: int) -> "VirtualClass":
        return cls((0,) * k)

    @classmethod
    def basis(cls, k: int, i: int) -> "VirtualClass":
        return cls(tuple(int(j == i) for j in range(k)))

    def __add__(self, other: "VirtualClass") -> "VirtualClass":
        _same_length(self, other)
        return VirtualClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "VirtualClass") -> "VirtualClass":
        _same_length(self, other)
        return VirtualClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return VirtualClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, n: int) -> "VirtualClass":
        return VirtualClass(tuple(n * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.coeffs) if c}


def _same_length(a: VirtualClass, b: VirtualClass):
    if len(a.coeffs) != len(b.coeffs):
        raise LedgerError("virtual classes over different tables")


@dataclass(frozen=True)
class Orbit:
    stabilizer: frozenset[int]
    multiplicity: int = 1
    kind: str = ""  # "real" or "complex" for places at infinity; empty for a bare G-set


@dataclass(frozen=True)
class GSetSpec:
    orbits: tuple[Orbit, ...] = field(default_factory=tuple)

    def __add__(self, other: "GSetSpec") -> "GSetSpec":
        return GSetSpec(self.orbits + other.orbits)

    @property
    def base_degree(self) -> int:
        """d = [K:Q] for the set of infinite places of F/K."""
        if any(o.kind not in ("real", "complex") for o in self.orbits):
            raise LedgerError("spec has orbits that are not archimedean places")
        return sum(o.multiplicity * (2 if o.kind == "complex" else 1) for o in self.orbits)

    @classmethod
    def transitive(cls, stabilizer, multiplicity: int = 1) -> "GSetSpec":
        return cls((Orbit(frozenset(stabilizer), multiplicity),))

    @classmethod
    def infinite_places(cls, G: PermGroup, real_split: int = 0, real_inert: int = 0, complex_: int = 0,
                        involution: int | None = None) -> "GSetSpec":
        """S_infinity of F/K with Gal(F/K) = G from the signature of K and its splitting.

        Inert real places get inertia <involution>, by default the first element of order 2.
        """
        if min(real_split, real_inert, complex_) < 0:
            raise LedgerError("place counts must be non-negative")
        trivial = frozenset({0})
        orbits = []
        if real_split:
            orbits.append(Orbit(trivial, real_split, "real"))
        if real_inert:
            if involution is None:
                twos = [i for i, o in enumerate(G.element_orders) if o == 2]
                if not twos:
                    raise LedgerError(f"{G!r} has no element of order 2 to serve as inertia")
                involution = twos[0]
            if G.element_orders[involution] != 2:
                raise LedgerError(f"element {involution} does not have order 2")
            orbits.append(Orbit(frozenset({0, int(involution)}), real_inert, "real"))
        if complex_:
            orbits.append(Orbit(trivial, complex_, "complex"))
        return cls(tuple(orbits))


def _class_counts(G: PermGroup, elems) -> dict[int, int]:
    counts: dict[int, int] = {}
    for e in elems:
        c = int(G.conjugacy.class_of[e])
        counts[c] = counts.get(c, 0) + 1
    return counts


def _restricted_mult(table: CharacterTable, counts: dict[int, int], order: int, i: int) -> int:
    n = table.n
    s = Cyclotomic.from_int(n, 0)
    for c, m in counts.items():
        s = s + table[i].values[c] * m
    if not s.is_rational() or s.as_int() % order:
        raise LedgerError("restriction inner product is not an integer")
    return s.as_int() // order


def perm_class(spec: GSetSpec, table: CharacterTable) -> VirtualClass:
    """Class of Q[X] for the G-set X described by ``spec``."""
    G = table.group
    total = VirtualClass.zero(len(table))
    for orb in spec.orbits:
        if orb.multiplicity < 1:
            raise LedgerError("orbit multiplicities must be positive")
        if not G.is_subgroup(orb.stabilizer):
            raise LedgerError("stabilizer is not a subgroup of G")
        counts = _class_counts(G, orb.stabilizer)
        v = VirtualClass(tuple(_restricted_mult(table, counts, len(orb.stabilizer), i) for i in range(len(table))))
        total = total + orb.multiplicity * v
    return total


def regular_class(table: CharacterTable) -> VirtualClass:
    return VirtualClass(tuple(table.degrees()))


def trivial_class(table: CharacterTable) -> VirtualClass:
    return VirtualClass.basis(len(table), trivial_index(table))


def trivial_index(table: CharacterTable) -> int:
    return next(i for i, ch in enumerate(table) if all(v.is_rational() and v.as_int() == 1 for v in ch.values))


def sigma_dual(v: VirtualClass, table: CharacterTable) -> VirtualClass:
    """Duality involution: chi -> complex conjugate of chi."""
    out = [0] * len(table)
    for i, c in enumerate(v.coeffs):
        out[table.conjugate_index[i]] += c
    return VirtualClass(tuple(out))


def _induced_sign(table: CharacterTable, inv_class: int) -> VirtualClass:
    # <chi|_I, sign> = (chi(1) - chi(c)) / 2 for I = {1, c}
    out = []
    for ch in table:
        x = ch.values[inv_class]
        if not x.is_rational() or (ch.degree - x.as_int()) % 2:
            raise LedgerError("character value at an involution is not a congruent integer")
        out.append((ch.degree - x.as_int()) // 2)
    return VirtualClass(tuple(out))


def tau_classes(spec: GSetSpec, table: CharacterTable) -> list[VirtualClass]:
    """Q tensor Ind tau_v, place by place: 0 (split real), Ind sign (inert real), regular (complex)."""
    G = table.group
    out = []
    for orb in spec.orbits:
        I = orb.stabilizer
        if len(I) > 2:
            raise LedgerError(f"inertia group of order {len(I)} at an archimedean place")
        if orb.kind == "complex":
            if len(I) != 1:
                raise LedgerError("complex places have trivial inertia")
            v = regular_class(table)
        elif orb.kind == "real":
            if len(I) == 1:
                v = VirtualClass.zero(len(table))
            else:
                c = next(x for x in I if x != 0)
                v = _induced_sign(table, int(G.conjugacy.class_of[c]))
        else:
            raise LedgerError("orbit is not tagged as a real or complex place")
        out.append(orb.multiplicity * v)
    return out


def archimedean_class(spec: GSetSpec, table: CharacterTable, *, self_check: bool = True) -> VirtualClass:
    """sum_v (delta_v [Q[G]] - [Q[G/I_v]]), i.e. d * regular - perm(S_infinity)."""
    reg = regular_class(table)
    total = VirtualClass.zero(len(table))
    for orb in spec.orbits:
        if len(orb.stabilizer) > 2:
            raise LedgerError(f"inertia group of order {len(orb.stabilizer)} at an archimedean place")
        delta = 2 if orb.kind == "complex" else 1
        total = total + orb.multiplicity * (delta * reg) - perm_class(GSetSpec((Orbit(orb.stabilizer, orb.multiplicity),)), table)
    if self_check:
        taus = VirtualClass.zero(len(table))
        for t in tau_classes(spec, table):
            taus = taus + t
        if taus != total:
            raise LedgerError(f"tau_v identity fails: {taus.coeffs} != {total.coeffs}")
    return total


@dataclass(frozen=True)
class ArithmeticInputs:
    d: int
    gset: GSetSpec
    unit_class: VirtualClass | None = None
    mu_class: VirtualClass | None = None


@dataclass
class IdentityCheck:
    name: str
    passed: bool
    lhs: VirtualClass
    rhs: VirtualClass

    @property
    def witness(self) -> dict[int, int]:
        return (self.lhs - self.rhs).support()

    def to_json(self) -> dict:
        out = {"identity": self.name, "passed": self.passed, "lhs": list(self.lhs.coeffs), "rhs": list(self.rhs.coeffs)}
        if not self.passed:
            out["witness"] = {str(i): c for i, c in self.witness.items()}
        return out


def verify_conjecture_rational(inputs: ArithmeticInputs, table: CharacterTable) -> list[IdentityCheck]:
    """Image under Q tensor of both conjectured equalities and of their difference.

    The unit class defaults to the Dirichlet value perm(S_inf) - triv; the class
    of mu_F must vanish rationally since mu_F is finite.
    """
    k = len(table)
    if inputs.d < 1:
        raise LedgerError("d must be at least 1")
    reg, triv = regular_class(table), trivial_class(table)
    perm = perm_class(inputs.gset, table)
    units_ = inputs.unit_class if inputs.unit_class is not None else perm - triv
    mu = inputs.mu_class if inputs.mu_class is not None else VirtualClass.zero(k)
    for v in (units_, mu):
        if len(v.coeffs) != k:
            raise LedgerError(f"class vector has length {len(v.coeffs)}, table has {k} characters")
    checks = []
    try:
        d_places = inputs.gset.base_degree
    except LedgerError:
        d_places = None
    if d_places is not None:
        checks.append(IdentityCheck("signature: d = r1(K) + 2 r2(K)", d_places == inputs.d,
                                    VirtualClass((d_places,)), VirtualClass((inputs.d,))))
    checks.append(IdentityCheck("mu_F is finite: [Q (x) mu_F] = 0", mu.is_zero(), mu, VirtualClass.zero(k)))
    ar = units_  # Q (x) Ar_F = Q (x) O_F^x; the class group is finite
    checks.append(IdentityCheck("(b) [Ar_F] = [Z[S_inf]] - [Z] - sigma[mu_F]",
                                ar == perm - triv - sigma_dual(mu, table), ar, perm - triv - sigma_dual(mu, table)))
    ara = ar + inputs.d * reg - perm + sigma_dual(mu, table)
    checks.append(IdentityCheck("(a) [Ara_F] = d[Z[G]] - [Z]", ara == inputs.d * reg - triv, ara, inputs.d * reg - triv))
    diff = ara - ar
    rhs = inputs.d * reg - perm + sigma_dual(mu, table)
    checks.append(IdentityCheck("(a)-(b) = d[Z[G]] - [Z[S_inf]] + sigma[mu_F]", diff == rhs, diff, rhs))
    if d_places == inputs.d:
        arch = archimedean_class(inputs.gset, table)
        checks.append(IdentityCheck("archimedean class = d[Z[G]] - [Z[S_inf]]",
                                    arch == inputs.d * reg - perm, arch, inputs.d * reg - perm))
    return checks


def artin_reconstruct(v: VirtualClass, table: CharacterTable) -> GSetSpec | None:
    """Write ``v`` as a non-negative integer sum of perm(G/C), C cyclic; None if impossible."""
    G = table.group
    cyc = cyclic_subgroup_classes(G)
    cols = [perm_class(GSetSpec.transitive(C), table).coeffs for C in cyc]
    sol = _solve_rational([list(r) for r in zip(*cols)], list(v.coeffs))
    if sol is None or any(x.denominator != 1 or x < 0 for x in sol):
        return None
    return GSetSpec(tuple(Orbit(C, int(x)) for C, x in zip(cyc, sol) if x))


def _solve_rational(A: list[list[int]], b: list[int]) -> list[Fraction] | None:
    """Unique solution of A x = b over Q for A of full column rank, or None if inconsistent."""
    rows, cols = len(A), len(A[0]) if A else 0
    M = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
    if len(piv_cols) != cols:
        raise LedgerError("permutation characters of cyclic stabilizers are not independent")
    if any(M[i][cols] for i in range(r, rows)):
        return None
    return [M[i][cols] for i in range(cols)]


def same_gsets(a: GSetSpec, b: GSetSpec, G: PermGroup) -> bool:
    """Equality as multisets of orbits, stabilizers up to conjugacy."""
    def canon(spec):
        out = {}
        for o in spec.orbits:
            key = min(tuple(sorted(G.conjugate_subgroup(o.stabilizer, g))) for g in range(G.order))
            out[key] = out.get(key, 0) + o.multiplicity
        return out
    return canon(a) == canon(b)
