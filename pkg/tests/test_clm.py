import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from arakelov import clm
from arakelov.clm import ComponentSpec, Cutoff
from arakelov.snf import smith_diagonal

from oracles import brute_aut_count, brute_expectation, brute_surjections, hillar_rhea_aut, partitions_upto

S3 = [ComponentSpec(3)]


def test_enumeration_examples():
    assert clm.enumerate_modules(S3, 10) == [((),), ((1,),), ((1, 1),), ((2,),)]
    assert clm.enumerate_modules(S3, 1) == []
    two = clm.enumerate_modules([ComponentSpec(3), ComponentSpec(5)], 16)
    assert sorted(clm.module_size(M, [ComponentSpec(3), ComponentSpec(5)]) for M in two) == [1, 3, 5, 9, 9, 15]


def test_matrix_ring_sizes():
    spec = [ComponentSpec(4, m=2)]
    assert clm.module_size(((1,),), spec) == 16
    assert clm.enumerate_modules(spec, 17) == [((),), ((1,),)]


def test_aut_examples():
    assert clm.aut_count(((1,),), S3) == 2
    assert clm.aut_count(((1, 1),), S3) == 48
    assert clm.aut_count_partition((2, 1), 2) == 8 == brute_aut_count((2, 1), 2)
    assert clm.automorphism_index(((2,),), ((1, 1),), S3) == 8


@pytest.mark.parametrize("p,maxexp", [(2, 4), (3, 3), (5, 2)])
def test_aut_count_exhaustive(p, maxexp):
    for lam in partitions_upto(maxexp):
        assert clm.aut_count_partition(lam, p) == brute_aut_count(lam, p), lam


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(1, 5), max_size=6))
def test_aut_count_matches_hillar_rhea(p, parts):
    lam = tuple(sorted(parts, reverse=True))
    assert clm.aut_count_partition(lam, p) == hillar_rhea_aut(lam, p)


def test_prime_power_residue_field():
    # residue field F_4: lambda = (1,1) gives GL_2(F_4)
    assert clm.aut_count_partition((1, 1), 4) == (16 - 1) * (16 - 4)


def test_surjection_counts():
    for lam in partitions_upto(3):
        for mu in partitions_upto(2):
            assert clm.surjection_count_partition(lam, mu, 3) == brute_surjections(lam, mu, 3), (lam, mu)


def test_expectation_examples():
    X = 3 ** 4
    e = clm.expectation(S3, X, clm.indicator([()]))
    assert e.value == brute_expectation(3, X, lambda lam: int(lam == ()))
    assert e.support == len(partitions_upto(3))
    big = clm.expectation(S3, 3 ** 6, clm.surjection_count_onto(((1,),)))
    assert abs(float(big.value) - 1) < 0.01


def test_reference_independence():
    for ref in [((),), ((2, 1),), ((1, 1, 1),)]:
        e = clm.expectation(S3, 3 ** 4, clm.size_power(-1), reference=ref)
        assert e.value == clm.expectation(S3, 3 ** 4, clm.size_power(-1)).value


def test_empty_support():
    e = clm.expectation(S3, 1, clm.size_power(1))
    assert e.empty and e.value is None
    assert e.to_json()["empty_support"]


def test_factorization_across_components():
    spec = [ComponentSpec(3), ComponentSpec(5)]
    box = Cutoff(box=[3 ** 3, 5 ** 2])
    f = clm.indicator([None, (1,)])
    joint = clm.expectation(spec, box, f, clm.make_filter("nonzero_on:0"))
    single = clm.expectation([ComponentSpec(5)], 5 ** 2, clm.indicator([(1,)]))
    assert joint.value == single.value


def test_char_of_order_k_is_cyclotomic():
    e = clm.expectation(S3, 3 ** 3, clm.char_of_order_k(3))
    # Omega(#A) mod 3 is |lambda| mod 3
    ws = {n: sum(Fraction(1, hillar_rhea_aut(l, 3)) for l in partitions_upto(2) if sum(l) == n) for n in range(3)}
    den = sum(ws.values())
    # 1 + w1 z + w2 z^2 with z^2 = -1 - z
    expected = ((ws[0] - ws[2]) / den, (ws[1] - ws[2]) / den)
    assert e.value.coeffs == expected


def test_bad_inputs():
    with pytest.raises(ValueError):
        ComponentSpec(6)
    with pytest.raises(ValueError):
        clm.aut_count(((1, 2),), S3)
    with pytest.raises(ValueError):
        clm.make_filter("sometimes:1")
    with pytest.raises(ValueError):
        Cutoff()


def test_cokernel_valuations_against_smith_form():
    rng = np.random.default_rng(5)
    A = rng.integers(0, 27, size=(50, 3, 3))
    got = clm.cokernel_valuations(A, 3, 3)
    for M, v in zip(A, got):
        # Z^3 modulo the rows of M and 27 Z^3 is the cokernel over Z/27
        rows = [[int(x) for x in r] for r in M] + [[27 * (i == j) for j in range(3)] for i in range(3)]
        expect = [next(k for k in range(4) if d % 3 ** (k + 1) or k == 3) for d in smith_diagonal(rows, 3)]
        assert sorted(v) == sorted(expect)


def test_montecarlo_small_and_deterministic():
    r = clm.cokernel_montecarlo(3, 1, 30_000, seed=4)
    assert abs(r.frequency(()) - 2 / 3) < 0.01
    again = clm.cokernel_montecarlo(3, 1, 30_000, seed=4)
    assert json.dumps(r.to_json()) == json.dumps(again.to_json())
    sharded = clm.cokernel_montecarlo(3, 4, 20_000, seed=1, shards=3)
    assert sum(sharded.counts.values()) == 20_000
    assert sharded.counts == clm.cokernel_montecarlo(3, 4, 20_000, seed=1, shards=3, batch=777).counts


def _finite_n_probability(lam, p, n):
    """P(coker = A) for a Haar-random n x n matrix over Z_p, r = rank of A/pA."""
    r = len(lam)
    prob = 1.0 / hillar_rhea_aut(lam, p)
    for i in range(1, n + 1):
        prob *= 1 - p ** -i
    for i in range(n - r + 1, n + 1):
        prob *= 1 - p ** -i
    return prob


def test_montecarlo_counts_within_poisson_band():
    # counts for every type of order <= 27 lie within 4 sigma of the exact finite-n law
    samples = 10 ** 6
    r = clm.cokernel_montecarlo(3, 6, samples, seed=0)
    for lam in partitions_upto(3):
        expected = samples * _finite_n_probability(lam, 3, 6)
        assert abs(r.counts.get(lam, 0) - expected) <= 4 * expected ** 0.5, (lam, r.counts.get(lam), expected)
