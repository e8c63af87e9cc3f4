from itertools import combinations

import pytest

from sqfmult.closed_forms import e0_cycle
from sqfmult.errors import InputError
from sqfmult.hilbert_engine import series_profile
from sqfmult.monomial_core import PrimeSupport, colon, support
from sqfmult.path_cycles import (
    colon_witness,
    cycle_path_ideal,
    dim_cycle,
    enumerate_assoc_primes_cycle,
    is_assoc_prime_cycle,
)
from sqfmult.primes_dim import dim_profile, minimal_primes


def test_generators():
    assert cycle_path_ideal(3, 2).gens == ((1, 1, 0), (1, 0, 1), (0, 1, 1))
    I = cycle_path_ideal(5, 3)
    assert len(I) == 5
    assert {tuple(sorted(support(g))) for g in I.gens} == {
        (1, 2, 3), (2, 3, 4), (3, 4, 5), (1, 4, 5), (1, 2, 5)
    }
    for n in range(3, 12):
        for d in range(2, n):
            I = cycle_path_ideal(n, d)
            assert len(I) == n and all(sum(g) == d and max(g) == 1 for g in I.gens)


@pytest.mark.parametrize("n, d", [(3, 3), (2, 2), (5, 1)])
def test_rejects_degenerate(n, d):
    with pytest.raises(InputError):
        cycle_path_ideal(n, d)


@pytest.mark.parametrize(
    "n, d, a, expected",
    [
        (5, 2, (1, 3, 5), True),
        (5, 2, (1, 2, 4), True),
        (6, 2, (1, 2, 3, 5), False),
        (6, 3, (1, 4), True),
        (5, 2, (1,), False),
        (5, 2, (1, 2, 3, 4, 5), False),
    ],
)
def test_criterion_examples(n, d, a, expected):
    assert is_assoc_prime_cycle(n, d, a) is expected


def test_criterion_rejects_bad_tuple():
    with pytest.raises(InputError):
        is_assoc_prime_cycle(5, 2, (3, 1))


def test_criterion_is_vertex_cover_minimality():
    # Independent of the enumerator: test every subset against cover + minimality.
    for n in range(3, 10):
        for d in range(2, n):
            edges = [support(g) for g in cycle_path_ideal(n, d).gens]
            for k in range(1, n + 1):
                for a in combinations(range(1, n + 1), k):
                    cover = set(a)
                    is_cover = all(e & cover for e in edges)
                    minimal = is_cover and all(
                        not all(e & (cover - {v}) for e in edges) for v in cover
                    )
                    assert is_assoc_prime_cycle(n, d, a) == minimal, (n, d, a)


def test_enumeration_examples():
    assert [P.vars for P in enumerate_assoc_primes_cycle(3, 2)] == [(1, 2), (1, 3), (2, 3)]
    c5 = enumerate_assoc_primes_cycle(5, 2)
    assert len(c5) == 5 and all(len(P.vars) == 3 for P in c5)
    six = [P.vars for P in enumerate_assoc_primes_cycle(6, 3)]
    assert (1, 4) in six and (2, 5) in six and (3, 6) in six


def test_enumeration_matches_minimal_primes():
    for n in range(3, 15):
        for d in range(2, n):
            assert enumerate_assoc_primes_cycle(n, d) == minimal_primes(cycle_path_ideal(n, d)), (n, d)


def test_enumeration_limit():
    with pytest.raises(InputError):
        enumerate_assoc_primes_cycle(30, 2)


@pytest.mark.parametrize("n, d, dim", [(5, 2, 2), (6, 3, 4), (7, 2, 3)])
def test_dim_examples(n, d, dim):
    assert dim_cycle(n, d) == dim
    assert series_profile(cycle_path_ideal(n, d)).d == dim


def test_min_size_mu_and_witness_tuple():
    for n in range(3, 15):
        for d in range(2, n):
            primes = enumerate_assoc_primes_cycle(n, d)
            smallest = min(len(P.vars) for P in primes)
            assert smallest == -(-n // d)
            witness = tuple(1 + i * d for i in range(smallest))
            assert is_assoc_prime_cycle(n, d, witness)
            mu = sum(1 for P in primes if len(P.vars) == smallest)
            assert mu == e0_cycle(n, d) == dim_profile(cycle_path_ideal(n, d)).mu
            assert dim_cycle(n, d) == n - smallest


def test_colon_certificate():
    for n in range(3, 11):
        for d in range(2, n):
            I = cycle_path_ideal(n, d)
            for P in enumerate_assoc_primes_cycle(n, d):
                assert colon(I, colon_witness(n, d, P.vars)) == P.as_ideal(), (n, d, P)
    assert colon_witness(5, 2, (1, 3, 5)) == (0, 1, 0, 1, 0)
    assert PrimeSupport(5, (1, 3, 5)).as_ideal() == colon(cycle_path_ideal(5, 2), (0, 1, 0, 1, 0))
