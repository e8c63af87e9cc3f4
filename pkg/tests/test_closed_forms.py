from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sqfmult.closed_forms import (
    binomial,
    count_U,
    cycle_params,
    e0_cycle,
    e0_cycle_power,
    e0_power_formula,
    enumerate_U,
    enumerate_V,
    enumerate_W,
    w_weighted_sum,
)
from sqfmult.errors import InputError


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(1, 2) == 0
    assert binomial(4, -1) == 0
    assert binomial(200, 100) == 90548514656103281165404177077484163874504589675413336841320


class TestPowerFormula:
    @given(st.integers(1, 30), st.data())
    def test_s1_is_mu(self, n, data):
        d = data.draw(st.integers(0, n - 1))
        mu = data.draw(st.integers(1, 50))
        assert e0_power_formula(n, d, mu, 1) == mu

    def test_univariate(self):
        assert [e0_power_formula(1, 0, 1, s) for s in range(1, 6)] == [1, 2, 3, 4, 5]

    def test_triangle_square(self):
        # 3 * C(3 - 1 + 2 - 1, 1)
        assert e0_power_formula(3, 1, 3, 2) == 9

    @pytest.mark.parametrize("args", [(3, 3, 1, 1), (3, -1, 1, 1), (3, 1, 0, 1), (3, 1, 1, 0)])
    def test_preconditions(self, args):
        with pytest.raises(InputError):
            e0_power_formula(*args)


class TestCycle:
    @pytest.mark.parametrize("n, d, k, r", [(5, 2, 2, 1), (6, 3, 1, 3), (7, 3, 2, 1), (3, 2, 1, 1)])
    def test_params(self, n, d, k, r):
        p = cycle_params(n, d)
        assert (p.k, p.r) == (k, r)

    @given(st.integers(2, 40), st.integers(1, 60))
    def test_params_decomposition(self, d, extra):
        n = d + extra
        p = cycle_params(n, d)
        assert p.k * d + p.r == n and p.k >= 1 and 1 <= p.r <= d
        assert p.k + 1 == -(-n // d)

    @pytest.mark.parametrize("n, d", [(2, 2), (3, 3), (5, 1)])
    def test_params_reject(self, n, d):
        with pytest.raises(InputError):
            cycle_params(n, d)

    @pytest.mark.parametrize("n, d, e0", [(3, 2, 3), (5, 2, 5), (4, 2, 2), (6, 3, 3)])
    def test_e0_cycle(self, n, d, e0):
        assert e0_cycle(n, d) == e0

    def test_e0_cycle_power(self):
        assert e0_cycle_power(3, 2, 2) == 9
        assert e0_cycle_power(5, 2, 2) == 20
        for n in range(3, 12):
            for d in range(2, n):
                assert e0_cycle_power(n, d, 1) == e0_cycle(n, d)

    def test_large_values_exact(self):
        k, d, r = 60, 60, 1
        v = e0_cycle(k * d + r, d)
        assert v > 2**64
        assert v == sum(j * binomial(k - 1 - r + j, k - 1) for j in range(r, d + 1))


def brute_U(k, d):
    return [c for c in product(range(d + 1), repeat=k + 1) if sum(c) == k * d]


class TestCountingSets:
    def test_U_examples(self):
        assert enumerate_U(1, 1) == [(0, 1), (1, 0)]
        assert len(enumerate_U(2, 2)) == 6
        assert enumerate_U(3, 0) == [(0, 0, 0, 0)]
        assert count_U(5, 0) == 1

    @pytest.mark.parametrize("k", range(0, 5))
    @pytest.mark.parametrize("d", range(0, 5))
    def test_U_against_product(self, k, d):
        assert enumerate_U(k, d) == brute_U(k, d)

    def test_U_counts(self):
        for k in range(1, 9):
            for d in range(1, 9):
                assert len(enumerate_U(k, d)) == count_U(k, d)

    def test_W_examples(self):
        assert enumerate_W(2, 2, 1, 0) == [(1, 2), (2, 1)]
        assert enumerate_W(2, 2, 1, 1) == [(2, 2)]
        assert enumerate_W(1, 3, 1, 0) == [(1,)]

    def test_W_bijection(self):
        for k in range(1, 7):
            for d in range(1, 7):
                for r in range(1, d + 1):
                    for s in range(d - r + 1):
                        W = enumerate_W(k, d, r, s)
                        shifted = sorted(tuple(b - r - s for b in w) for w in W)
                        assert shifted == enumerate_U(k - 1, d - r - s)
                        assert len(W) == count_U(k - 1, d - r - s)

    def test_W_rejects(self):
        with pytest.raises(InputError):
            enumerate_W(2, 2, 1, 2)

    def test_V_examples(self):
        assert enumerate_V(2, 2, 1) == [(1, 1, 2), (1, 2, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)]
        assert len(enumerate_V(1, 2, 1)) == 3
        assert len(enumerate_V(1, 2, 2)) == 2

    def test_V_matches_W_sum_and_formula(self):
        for k in range(1, 7):
            for d in range(2, 7):
                for r in range(1, d + 1):
                    v = len(enumerate_V(k, d, r))
                    assert v == w_weighted_sum(k, d, r) == e0_cycle(k * d + r, d)


@given(st.integers(1, 30), st.integers(0, 30))
def test_hockey_stick(k, m):
    assert sum(binomial(k - 1 + l, k - 1) for l in range(m + 1)) == binomial(k + m, k)


@given(st.integers(1, 30), st.integers(2, 30), st.data())
def test_binomial_chain(k, d, data):
    # the three expressions the cycle count passes through
    r = data.draw(st.integers(1, d))
    first = sum((d - s) * binomial(d + k - r - s - 1, k - 1) for s in range(d - r + 1))
    second = sum(j * binomial(k - 1 - r + j, k - 1) for j in range(r, d + 1))
    third = r * binomial(k + d - r, k) + (d - r) * binomial(k + d - r, k) - binomial(k + d - r, k + 1)
    assert first == second == third == e0_cycle(k * d + r, d)


def test_V_tuples_are_the_top_primes():
    from itertools import accumulate

    from sqfmult.path_cycles import cycle_path_ideal
    from sqfmult.primes_dim import minimal_primes

    for k in range(1, 4):
        for d in range(2, 5):
            for r in range(1, d + 1):
                n = k * d + r
                from_v = sorted(tuple(accumulate(v)) for v in enumerate_V(k, d, r))
                top = [P.vars for P in minimal_primes(cycle_path_ideal(n, d)) if len(P.vars) == k + 1]
                assert from_v == top, (k, d, r)
