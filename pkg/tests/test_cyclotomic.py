import cmath
import math

from hypothesis import given, strategies as st

from arakelov.cyclotomic import Cyclotomic, cyclotomic_poly, euler_phi
from arakelov.snf import quotient_invariants, smith_diagonal

ns = st.sampled_from([1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15, 21, 28, 56])


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    for n in range(1, 60):
        assert len(cyclotomic_poly(n)) - 1 == euler_phi(n)


@given(ns, st.lists(st.integers(-5, 5), min_size=1, max_size=8), st.lists(st.integers(-5, 5), min_size=1, max_size=8))
def test_ring_operations_match_complex_embedding(n, a, b):
    x = Cyclotomic.from_exponents(n, a)
    y = Cyclotomic.from_exponents(n, b)
    assert cmath.isclose((x * y).to_complex(), x.to_complex() * y.to_complex(), abs_tol=1e-6)
    assert cmath.isclose((x + y).to_complex(), x.to_complex() + y.to_complex(), abs_tol=1e-9)


@given(ns, st.lists(st.integers(-5, 5), min_size=1, max_size=8))
def test_galois_and_trace(n, a):
    x = Cyclotomic.from_exponents(n, a)
    conjs = [x.galois(t) for t in range(1, n + 1) if math.gcd(t, n) == 1]
    assert abs(sum(c.to_complex() for c in conjs) - x.trace()) < 1e-6
    assert x.conj().conj() == x


def test_lift_preserves_value():
    x = Cyclotomic.root(3) + 2
    y = x.lift(12)
    assert cmath.isclose(x.to_complex(), y.to_complex())


def test_sum_of_primitive_roots_is_mobius():
    assert sum((Cyclotomic.root(12, k) for k in (1, 5, 7, 11)), Cyclotomic.from_int(12, 0)).as_int() == 0
    assert sum((Cyclotomic.root(7, k) for k in range(1, 7)), Cyclotomic.from_int(7, 0)).as_int() == -1


def test_smith_normal_form():
    assert smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], 3) == [2, 6, 12]
    assert quotient_invariants([4], [[2]]) == [2]
    assert quotient_invariants([2, 2], [[1, 1]]) == [2]
    assert quotient_invariants([4], [[0]]) == [4]
    assert quotient_invariants([6], [[3]]) == [3]
