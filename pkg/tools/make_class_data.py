"""Build the bundled class-data file and the PARI oracle fixtures for the tests.

Needs cypari2 (a development dependency only; the package never imports it).

Usage: python tools/make_class_data.py
Writes src/arakelov/data/class_data.json and tests/data/pari_oracle.json.
"""
from __future__ import annotations

import datetime
import json
import random
import sys
from pathlib import Path

import cypari2

from arakelov.characters import character_table
from arakelov.fields import AbelianField, prime_factors
from arakelov.groups import read_group_file

pari = cypari2.Pari()
pari.allocatemem(2 * 10**9, silent=True)

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "src" / "arakelov" / "data"
CERTIFY_MAX_DEGREE = 8
# full cyclotomic fields whose relative class numbers are pinned by the tests
EXTRA_ORACLE_FIELDS = [(4, ()), (5, ()), (7, ()), (23, ()), (39, ()), (56, ())]


def collect_fields():
    """Non-rational character fields of every bundled group, with their bad primes."""
    files = sorted((DATA / "corpus").glob("*.group")) + sorted((DATA / "order112").glob("*.group"))
    need: dict[tuple, set[int]] = {}
    for f in files:
        G = read_group_file(f)
        for orb in character_table(G).orbits():
            K = orb.field
            if not K.is_rational:
                need.setdefault(K.key, set()).update(prime_factors(2 * G.order))
    return need


def defining_polynomial(K: AbelianField):
    if not K.generators:
        return pari.polcyclo(K.conductor)
    H = [pari.Mod(g, K.conductor) for g in K.generators]
    return pari.polredbest(pari.galoissubcyclo(K.conductor, H))


def narrow_kernel(nf, bnr, r1: int):
    """Narrow classes of principal ideals (a), for a with sign vectors spanning F_2^r1."""
    if r1 == 0:
        return []
    rng = random.Random(1)
    n = int(pari.poldegree(nf.nf_get_pol()))
    basis, vecs = [], []
    while len(basis) < r1:
        a = pari.nfbasistoalg(nf, pari([rng.randint(-3, 3) for _ in range(n)]).Col())
        if a == 0:
            continue
        s = [int(x) for x in pari.nfeltsign(nf, a)]
        bits = [1 if x < 0 else 0 for x in s]
        # reduce against the echelon basis over F_2
        v = bits[:]
        for piv, row in basis:
            if v[piv]:
                v = [x ^ y for x, y in zip(v, row)]
        if any(v):
            basis.append((v.index(1), v))
            vecs.append([int(x) for x in pari.bnrisprincipal(bnr, a, 0)])
    return vecs


def oracle_record(K: AbelianField, pol, h: int, r1: int) -> dict:
    rec = {"conductor": K.conductor, "H_generators": list(K.generators), "degree": K.degree,
           "polynomial": str(pol), "discriminant": str(int(pari.nfdisc(pol))), "r1": r1, "h": h}
    nf = pari.nfinit(pol)
    split = {}
    for p in (2, 3, 5, 7, 11, 13):
        dec = pari.idealprimedec(nf, p)
        split[str(p)] = [int(pari("(P)->P.e")(dec[0])), int(pari("(P)->P.f")(dec[0])), len(dec)]
    rec["splitting"] = split
    if not K.is_totally_real:
        Kp = K.real_subfield().canonical()
        hp = 1 if Kp.is_rational else int(pari.bnfinit(defining_polynomial(Kp), 1).bnf_get_no())
        rec["h_plus"] = hp
        rec["h_minus"] = h // hp
    return rec


def entry(K: AbelianField, bad: set[int]):
    pol = defining_polynomial(K)
    bnf = pari.bnfinit(pol, 1)
    nf = pari("(b)->b.nf")(bnf)
    r1 = int(nf.nf_get_sign()[0])
    bnr = pari.bnrinit(bnf, pari([1, [1] * r1]))
    # PARI lists invariants largest first; store d1 | d2 | ...
    cyc = [int(c) for c in pari("(b)->b.cyc")(bnr)][::-1]
    h = int(bnf.bnf_get_no())
    hn = 1
    for c in cyc:
        hn *= c
    kernel = [v[::-1] for v in narrow_kernel(nf, bnr, r1)]
    primes = []
    for p in sorted(bad):
        for i, pr in enumerate(pari.idealprimedec(nf, p)):
            v = [int(x) for x in pari.bnrisprincipal(bnr, pr, 0)][::-1]
            primes.append({"p": p, "index": i, "vector": v})
    certified = False
    if K.degree <= CERTIFY_MAX_DEGREE:
        certified = int(pari.bnfcertify(bnf)) == 1
    prov = (f"PARI/GP {'.'.join(map(str, pari.version()[:3]))} via cypari2, bnfinit + bnrinit(bnf,[1,[1,..]]), "
            f"{datetime.date.today().isoformat()}; "
            + ("unconditional (bnfcertify)" if certified else "conditional on GRH"))
    rec = {"conductor": K.conductor, "H_generators": list(K.generators), "h": h, "h_narrow": hn,
           "cl_structure": cyc, "narrow_kernel": kernel, "prime_classes": primes, "provenance": prov}
    return rec, oracle_record(K, pol, h, r1)


def main() -> None:
    need = collect_fields()
    entries, oracles = [], []
    for key in sorted(need, key=lambda k: (AbelianField.make(*k).degree, k)):
        K = AbelianField.make(*key)
        rec, orc = entry(K, need[key])
        entries.append(rec)
        oracles.append(orc)
        print(key, K.degree, rec["h"], rec["h_narrow"], rec["cl_structure"], file=sys.stderr)
    (DATA / "class_data.json").write_text(json.dumps({"format": 1, "entries": entries}, indent=1) + "\n")
    for key in EXTRA_ORACLE_FIELDS:
        K = AbelianField.make(*key).canonical()
        if K.key in need:
            continue
        pol = defining_polynomial(K)
        bnf = pari.bnfinit(pol, 1)
        oracles.append(oracle_record(K, pol, int(bnf.bnf_get_no()), 0))
    out = ROOT / "tests" / "data"
    out.mkdir(parents=True, exist_ok=True)
    meta = {"source": f"PARI/GP {'.'.join(map(str, pari.version()[:3]))} via cypari2 (nfdisc, bnfinit); "
                      "class numbers conditional on GRH", "generated": datetime.date.today().isoformat()}
    (out / "pari_oracle.json").write_text(json.dumps({"provenance": meta, "fields": oracles}, indent=1) + "\n")


if __name__ == "__main__":
    main()
