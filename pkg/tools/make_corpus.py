"""Write the bundled group corpus (orders below 112) and the two order-112 groups.

Usage: python tools/make_corpus.py [outdir]   (default: src/arakelov/data)
"""
from __future__ import annotations

import itertools
import math
import sys
from pathlib import Path

from arakelov.groups import (Permutation, direct_product, format_group, group_from_generators, make_family)

LIMIT = 112


def abelian_types(n: int):
    """Invariant-factor lists (d1 | d2 | ...) with product n and at least two factors."""
    def rec(rem, smallest_multiple_of, acc):
        if rem == 1:
            if len(acc) >= 2:
                yield list(acc)
            return
        for d in range(2, rem + 1):
            if rem % d == 0 and d % smallest_multiple_of == 0:
                # the remaining cofactor must be built from multiples of d
                yield from rec(rem // d, d, acc + [d])
    yield from rec(n, 1, [])


def action_reps(n: int, m: int):
    """One exponent a per subgroup <a> of (Z/n)^x with a^m = 1, a != 1."""
    seen = set()
    for a in range(2, n):
        if math.gcd(a, n) != 1 or pow(a, m, n) != 1:
            continue
        sub = frozenset(pow(a, k, n) for k in range(m))
        if sub in seen:
            continue
        seen.add(sub)
        yield a


def sl23():
    pts = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    idx = {p: i for i, p in enumerate(pts)}

    def perm(M):
        return Permutation(tuple(idx[((M[0][0] * x + M[0][1] * y) % 3, (M[1][0] * x + M[1][1] * y) % 3)]
                                 for x, y in pts))
    G = group_from_generators(8, [perm(((1, 1), (0, 1))), perm(((0, 2), (1, 0)))], name="SL(2,3)",
                              metadata={"family": "SL(2,3)", "degree": 8})
    return G


def corpus():
    out = {}

    def add(key, G):
        if G.order < LIMIT and key not in out:
            out[key] = G

    for n in range(1, LIMIT):
        add(f"cyclic_{n:03d}", make_family(f"cyclic({n})"))
    for n in range(4, LIMIT):
        for t in abelian_types(n):
            add("abelian_" + "x".join(f"{d:03d}" for d in t), make_family("abelian(" + ",".join(map(str, t)) + ")"))
    for n in range(3, LIMIT // 2 + 1):
        add(f"dihedral_{n:03d}", make_family(f"dihedral({n})"))
    for n in range(2, LIMIT // 4 + 1):
        add(f"dicyclic_{n:03d}", make_family(f"dicyclic({n})"))
    for n, m in itertools.product(range(3, LIMIT), range(2, LIMIT)):
        if n * m >= LIMIT:
            continue
        for a in action_reps(n, m):
            if m == 2 and a == n - 1:
                continue  # dihedral
            add(f"semidirect_{n:03d}_{m:03d}_{a:03d}", make_family(f"semidirect_cyclic({n},{m},{a})"))
    for name in ("symmetric(4)", "alternating(4)", "alternating(5)"):
        add(name.replace("(", "_").rstrip(")"), make_family(name))
    S = sl23()
    add("sl_2_3", S)
    small = {"S3": make_family("symmetric(3)"), "A4": make_family("alternating(4)"), "S4": make_family("symmetric(4)"),
             "Q8": make_family("quaternion8"), "D4": make_family("dihedral(4)"), "SL23": S,
             "D5": make_family("dihedral(5)"), "C7:C3": make_family("semidirect_cyclic(7,3,2)")}
    for a, b in [("S3", "S3"), ("S3", "D4"), ("S3", "Q8"), ("A4", "S3"), ("D4", "D4"), ("Q8", "D4"), ("Q8", "Q8"),
                 ("S3", "D5"), ("S3", "C7:C3")]:
        add(f"product_{a}_{b}".replace(":", "-").lower(), direct_product(small[a], small[b]))
    for base in ("S3", "A4", "S4", "Q8", "D4", "SL23", "D5", "C7:C3"):
        for k in range(2, LIMIT):
            if small[base].order * k < LIMIT:
                add(f"product_{base}_c{k:03d}".replace(":", "-").lower(), direct_product(small[base], make_family(f"cyclic({k})")))
    return out


def main(outdir: str = "src/arakelov/data") -> None:
    root = Path(outdir)
    cdir = root / "corpus"
    cdir.mkdir(parents=True, exist_ok=True)
    for old in cdir.glob("*.group"):
        old.unlink()
    groups = corpus()
    for key, G in sorted(groups.items()):
        (cdir / f"{key}.group").write_text(format_group(G, f"{G.name}, order {G.order}"), encoding="utf-8")
    odir = root / "order112"
    odir.mkdir(exist_ok=True)
    for v in "AB":
        G = make_family(f"order112({v})")
        (odir / f"order112_{v}.group").write_text(
            format_group(G, f"{G.name}: C56 : C2, {G.metadata['action']}"), encoding="utf-8")
    print(f"{len(groups)} groups of order < {LIMIT} written to {cdir}", file=sys.stderr)


if __name__ == "__main__":
    main(*sys.argv[1:])
