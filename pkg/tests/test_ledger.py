import random

import pytest

from arakelov.characters import character_table
from arakelov.groups import cyclic_subgroup_classes, make_family
from arakelov.ledger import (ArithmeticInputs, GSetSpec, LedgerError, Orbit, VirtualClass, archimedean_class,
                             artin_reconstruct, perm_class, regular_class, same_gsets, sigma_dual, tau_classes,
                             trivial_class, verify_conjecture_rational)

from oracles import coset_perm_multiplicities


@pytest.fixture(scope="module")
def s4():
    G = make_family("symmetric(4)")
    return G, character_table(G)


def test_perm_class_matches_coset_action(s4):
    G, T = s4
    for C in cyclic_subgroup_classes(G):
        assert perm_class(GSetSpec.transitive(C), T).coeffs == coset_perm_multiplicities(G, C, T)


def test_regular_and_trivial(s4):
    G, T = s4
    assert perm_class(GSetSpec.transitive({0}), T) == regular_class(T)
    assert perm_class(GSetSpec.transitive(range(G.order)), T) == trivial_class(T)


def test_sigma_dual_on_cyclic_group():
    T = character_table(make_family("cyclic(5)"))
    v = VirtualClass.basis(5, 1)
    w = sigma_dual(v, T)
    assert w != v
    assert sigma_dual(w, T) == v
    assert sigma_dual(trivial_class(T), T) == trivial_class(T)


def test_tau_for_quadratic_extension():
    # F/K quadratic with one real place of K becoming complex: tau = Ind sign = the sign character
    G = make_family("cyclic(2)")
    T = character_table(G)
    spec = GSetSpec.infinite_places(G, real_inert=1)
    sign = VirtualClass.basis(2, 1 - [i for i, ch in enumerate(T) if ch.values[1].as_int() == 1][0])
    assert tau_classes(spec, T) == [sign]
    assert archimedean_class(spec, T) == sign


def test_signature_mismatch_fails(s4):
    G, T = s4
    spec = GSetSpec.infinite_places(G, real_split=1, complex_=1)
    checks = verify_conjecture_rational(ArithmeticInputs(2, spec), T)
    assert not checks[0].passed
    assert all(c.passed for c in checks[1:])


def test_unit_perturbation_gives_localized_witness(s4):
    G, T = s4
    spec = GSetSpec.infinite_places(G, real_inert=2)
    ok = verify_conjecture_rational(ArithmeticInputs(2, spec), T)
    assert all(c.passed for c in ok)
    units = perm_class(spec, T) - trivial_class(T) + VirtualClass.basis(len(T), 3)
    bad = {c.name: c for c in verify_conjecture_rational(ArithmeticInputs(2, spec, units), T)}
    b = next(c for n, c in bad.items() if n.startswith("(b)"))
    a = next(c for n, c in bad.items() if n.startswith("(a) "))
    assert not b.passed and b.witness == {3: 1}
    assert not a.passed and a.witness == {3: 1}


def test_mu_must_vanish_rationally(s4):
    G, T = s4
    spec = GSetSpec.infinite_places(G, complex_=1)
    checks = verify_conjecture_rational(ArithmeticInputs(2, spec, mu_class=VirtualClass.basis(len(T), 0)), T)
    assert not checks[1].passed


def test_bad_specs_rejected(s4):
    G, T = s4
    with pytest.raises(LedgerError):
        GSetSpec.infinite_places(G, real_inert=-1)
    three = next(i for i, o in enumerate(G.element_orders) if o == 3)
    with pytest.raises(LedgerError, match="not a subgroup"):
        perm_class(GSetSpec.transitive({0, three}), T)
    with pytest.raises(LedgerError):
        GSetSpec.infinite_places(make_family("cyclic(3)"), real_inert=1)
    with pytest.raises(LedgerError):
        verify_conjecture_rational(ArithmeticInputs(0, GSetSpec.infinite_places(G, complex_=1)), T)


def test_artin_reconstruct_sums(s4):
    G, T = s4
    cyc = cyclic_subgroup_classes(G)
    rng = random.Random(7)
    for _ in range(10):
        spec = GSetSpec(tuple(Orbit(C, rng.randint(1, 3)) for C in rng.sample(cyc, 2)))
        got = artin_reconstruct(perm_class(spec, T), T)
        assert got is not None and same_gsets(got, spec, G)


def test_artin_reconstruct_rejects_non_permutation(s4):
    G, T = s4
    # the sign character is not a non-negative combination of cyclic permutation characters
    sign = next(i for i, ch in enumerate(T) if ch.degree == 1 and not all(v.as_int() == 1 for v in ch.values))
    assert artin_reconstruct(VirtualClass.basis(len(T), sign), T) is None
