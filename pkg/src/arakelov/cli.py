"""Command-line entry point. JSON goes to stdout, logs to stderr."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources
from pathlib import Path

from . import clm
from .characters import character_table
from .fields import ClassDataError, ClassTable
from .groups import GroupError, PermGroup, make_family, read_group_file
from .ledger import ArithmeticInputs, GSetSpec, LedgerError, VirtualClass, verify_conjecture_rational
from .pipeline import audit, scan, scan_exit_code

log = logging.getLogger("arakelov")


def bundled_class_data() -> Path:
    return Path(str(resources.files("arakelov") / "data" / "class_data.json"))


def load_group(arg: str) -> PermGroup:
    """A group file path, or ``family:<spec>`` such as ``family:order112(A)``."""
    if arg.startswith("family:"):
        return make_family(arg[len("family:"):])
    return read_group_file(arg)


def load_classes(arg: str | None) -> ClassTable:
    if arg is None:
        return ClassTable.empty()
    return ClassTable.from_file(bundled_class_data() if arg == "bundled" else arg)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def cmd_chartab(args) -> int:
    G = load_group(args.group)
    _emit(character_table(G, prime_skip=args.prime_skip).to_json())
    return 0


def cmd_audit(args) -> int:
    rep = audit(load_group(args.group), load_classes(args.class_data))
    _emit(rep.to_json())
    return rep.exit_code


def cmd_scan(args) -> int:
    path = None
    if args.class_data:
        path = bundled_class_data() if args.class_data == "bundled" else Path(args.class_data)
    summary = scan(args.corpus, path, jobs=args.jobs)
    _emit(summary)
    return scan_exit_code(summary)


def _read_json_arg(text: str):
    p = Path(text)
    if p.is_file():
        return json.loads(p.read_text(encoding="utf-8"))
    return json.loads(text)


def cmd_verify(args) -> int:
    G = load_group(args.group)
    sig = _read_json_arg(args.signature)
    table = character_table(G)
    gset = GSetSpec.infinite_places(G, sig.get("real_split", 0), sig.get("real_inert", 0), sig.get("complex", 0),
                                    sig.get("involution"))
    d = sig.get("d", gset.base_degree)
    unit = VirtualClass(tuple(sig["unit_class"])) if "unit_class" in sig else None
    checks = verify_conjecture_rational(ArithmeticInputs(d, gset, unit), table)
    ok = all(c.passed for c in checks)
    _emit({"group": {"name": G.name, "order": G.order}, "signature": sig, "characters": len(table),
           "checks": [c.to_json() for c in checks], "all_passed": ok})
    return 0 if ok else 1


def _kv(text: str) -> dict[str, int]:
    out = {}
    for part in text.split(","):
        k, _, v = part.partition("=")
        if not v:
            raise ValueError(f"expected key=value in {text!r}")
        out[k.strip()] = int(v)
    return out


def _partition(text: str):
    text = text.strip()
    if text == "*":
        return None
    if text in ("0", ""):
        return ()
    return tuple(sorted((int(x) for x in text.split(".")), reverse=True))


def _module(text: str, ncomp: int):
    parts = [_partition(t) for t in text.split("/")]
    if len(parts) != ncomp:
        raise ValueError(f"module {text!r} has {len(parts)} components, expected {ncomp}")
    return tuple(parts)


def parse_functional(text: str, ncomp: int) -> clm.Functional:
    name, _, arg = text.partition(":")
    if name == "indicator":
        return clm.indicator(_module(arg, ncomp))
    if name == "surjection_count_onto":
        T = _module(arg, ncomp)
        if any(t is None for t in T):
            raise ValueError("wildcards are only allowed in indicator")
        return clm.surjection_count_onto(T)
    if name == "size_power":
        return clm.size_power(int(arg))
    if name == "char_of_order_k":
        return clm.char_of_order_k(int(arg))
    raise ValueError(f"unknown functional {name!r}")


def cmd_clm(args) -> int:
    spec = []
    for c in args.component or []:
        kv = _kv(c)
        spec.append(clm.ComponentSpec(kv["q"], kv.get("m", 1), f"c{len(spec)}"))
    out = {}
    if spec:
        if args.cutoff.startswith("box:"):
            cut = clm.Cutoff(box=[int(x) for x in args.cutoff[4:].split(",")])
        else:
            cut = clm.Cutoff(total=int(args.cutoff))
        f = parse_functional(args.functional, len(spec))
        ref = _module(args.reference, len(spec)) if args.reference else None
        e = clm.expectation(spec, cut, f, clm.make_filter(args.filter), reference=ref)
        out["components"] = [{"q": c.q, "m": c.m} for c in spec]
        out["functional"] = f.describe()
        out["filter"] = args.filter or "none"
        out["expectation"] = e.to_json()
    if args.mc:
        kv = _kv(args.mc)
        if len(spec) > 1 or (spec and spec[0].q != spec[0].p):
            raise ValueError("Monte-Carlo needs a single component with q prime")
        p = spec[0].p if spec else kv.get("p", 3)
        seed = args.seed if args.seed is not None else kv.get("seed", 0)
        res = clm.cokernel_montecarlo(p, kv["n"], kv["samples"], seed, precision=kv.get("precision"),
                                      shards=kv.get("shards", 1))
        X = int(args.cutoff) if args.cutoff and not args.cutoff.startswith("box:") else None
        out["montecarlo"] = res.to_json(X)
    if not out:
        raise ValueError("nothing to do: give --component and/or --mc")
    _emit(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arakelov", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartab", help="character table as JSON")
    p.add_argument("group", help="group file or family:<spec>")
    p.add_argument("--prime-skip", type=int, default=0, help="use a later Dixon prime")
    p.set_defaults(func=cmd_chartab)

    p = sub.add_parser("audit", help="certify the class-group criterion for one group")
    p.add_argument("group")
    p.add_argument("--class-data", help="class-data JSON file, or 'bundled'")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("scan", help="audit every *.group file in a directory")
    p.add_argument("corpus")
    p.add_argument("--class-data")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-identities", help="rational Grothendieck-group identities")
    p.add_argument("group")
    p.add_argument("--signature", required=True, help="JSON text or file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("clm-expect", help="automorphism-weighted expectations")
    p.add_argument("--component", action="append", help="q=<prime power>,m=<int>")
    p.add_argument("--cutoff", default="", help="X or box:X1,X2,...")
    p.add_argument("--functional", default="size_power:0")
    p.add_argument("--filter", default="none")
    p.add_argument("--reference", help="reference module for ia weights")
    p.add_argument("--mc", help="n=<int>,samples=<int>,seed=<int>[,shards=<int>]")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_clm)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ClassDataError as exc:
        log.error("class data rejected: %s", exc)
        return 4
    except (GroupError, LedgerError, ValueError, OSError) as exc:
        log.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
