import copy
import json

import pytest

from arakelov.fields import (AbelianField, ClassDataError, ClassTable, UnitIndexUndetermined, field_invariants,
                             frobenius_class, h_minus, load_class_data, obstruction_group)


def _field(rec):
    return AbelianField.make(rec["conductor"], rec["H_generators"])


def test_canonical_descriptors():
    # Q(zeta_8)^<7> = Q(sqrt 2) keeps conductor 8; Q(zeta_12)^<7> = Q(sqrt -3) drops to 3
    assert AbelianField.make(8, [7]).canonical().key == (8, (7,))
    assert AbelianField.make(12, [7]).canonical().key == (3, ())
    assert AbelianField.make(12, [5]).canonical().key == (4, ())
    assert AbelianField.make(10, []).canonical().key == (5, ())
    assert AbelianField.make(7, [2, 4]).canonical().is_rational is False


def test_invariants_match_oracle(oracle):
    for rec in oracle.values():
        K = _field(rec)
        inv = field_invariants(K)
        assert inv.degree == rec["degree"]
        assert inv.signature[0] == rec["r1"]
        assert str(inv.discriminant) == rec["discriminant"], K


def test_splitting_matches_oracle(oracle):
    for rec in oracle.values():
        K = _field(rec)
        for p, (e, f, g) in rec["splitting"].items():
            s = frobenius_class(K, int(p))
            assert (s.e, s.f, s.g) == (e, f, g), (K, p)


def test_h_minus_matches_oracle(oracle):
    undecided = 0
    for rec in oracle.values():
        if "h_minus" not in rec:
            continue
        K = _field(rec)
        try:
            assert h_minus(K) == rec["h_minus"], K
        except UnitIndexUndetermined:
            undecided += 1
            assert rec["h_minus"] in {h_minus(K, unit_index_value=q) for q in (1, 2)}
    assert undecided <= 6


def test_h_minus_rejects_real_fields():
    with pytest.raises(ValueError):
        h_minus(AbelianField.make(5, [4]))


def test_bundled_class_data_agrees_with_oracle(class_data_path, oracle):
    table = ClassTable.from_file(class_data_path)
    assert len(table) >= 100
    for key, data in table.entries.items():
        assert data.h == oracle[key]["h"]
        assert data.provenance.startswith("PARI/GP")


def test_obstruction_for_conductor_56(class_data_path):
    table = ClassTable.from_file(class_data_path)
    for a in (13, 27):
        K = AbelianField.make(56, [a])
        data = load_class_data(K, table)
        assert data.cl_structure == (4,)
        rep = obstruction_group(K, False, [2, 7], data)
        assert rep.quotient_invariants == (2,)
        assert rep.mode == "certified-by-table"
        # the prime above 7 is principal; the one above 2 has order 2
        assert obstruction_group(K, False, [7], data).quotient_invariants == (4,)


def test_narrow_class_group_used_for_symplectic(class_data_path):
    table = ClassTable.from_file(class_data_path)
    K = AbelianField.make(12, [11])  # Q(sqrt 3): h = 1, narrow C2
    data = load_class_data(K, table)
    assert obstruction_group(K, False, [2, 3], data).mode == "certified-by-h1"
    narrow = obstruction_group(K, True, [2, 3], data)
    assert narrow.mode == "certified-by-table"
    # (1 + sqrt 3) and (sqrt 3) have negative norm and the fundamental unit has norm +1,
    # so both primes above 2 and 3 are the non-trivial narrow class
    assert narrow.quotient_invariants == ()
    assert data.prime_classes[(2, 0)] == (1,) and data.prime_classes[(3, 0)] == (1,)
    assert obstruction_group(K, True, [], data).quotient_invariants == (2,)


def test_missing_entry_is_inconclusive():
    K = AbelianField.make(56, [13])
    rep = obstruction_group(K, False, [2, 7], load_class_data(K, ClassTable.empty()))
    assert rep.mode == "inconclusive" and not rep.trivial


def test_rationals_are_built_in():
    rep = obstruction_group(AbelianField.rationals(), True, [2], load_class_data(AbelianField.rationals(), ClassTable.empty()))
    assert rep.trivial


GOOD = {"conductor": 56, "H_generators": [13], "h": 4, "h_narrow": 4, "cl_structure": [4],
        "prime_classes": [{"p": 2, "index": 0, "vector": [2]}, {"p": 7, "index": 0, "vector": [0]}]}


def _with(**kw):
    e = copy.deepcopy(GOOD)
    e.update(kw)
    return e


@pytest.mark.parametrize("entry,msg", [
    (_with(h=3, h_narrow=3, cl_structure=[3]), "not divisible by the computed relative class number"),
    (_with(cl_structure=[2]), "has order 2"),
    (_with(h_narrow=8, cl_structure=[8]), "h_narrow must equal h"),
    (_with(cl_structure=[4, 2], h_narrow=8, h=8), "not divisible|invariant-factor"),
    ({"conductor": 8, "H_generators": [5], "h": 1, "h_narrow": 1, "cl_structure": []}, "not canonical"),
    (_with(H_generators=[14]), "not a unit"),
    (_with(conductor=-1), "positive integer"),
    (_with(prime_classes=[{"p": 4, "index": 0, "vector": [0]}]), "not a prime"),
    (_with(prime_classes=[{"p": 2, "index": 5, "vector": [0]}]), "out of range"),
    (_with(prime_classes=[{"p": 2, "index": 0, "vector": [0, 1]}]), "wrong length"),
    (_with(h="4"), "positive integers"),
    ({"conductor": 56}, "missing field"),
])
def test_corrupt_entries_rejected(entry, msg):
    with pytest.raises(ClassDataError, match=msg):
        ClassTable.from_json([entry], source="t")


def test_good_entry_accepted():
    assert len(ClassTable.from_json({"entries": [GOOD]})) == 1


def test_duplicate_entries_rejected():
    with pytest.raises(ClassDataError, match="duplicate"):
        ClassTable.from_json([GOOD, GOOD])


def test_unreadable_file(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(ClassDataError, match="unreadable"):
        ClassTable.from_file(p)
    p.write_text(json.dumps({"entries": 5}))
    with pytest.raises(ClassDataError, match="list"):
        ClassTable.from_file(p)
