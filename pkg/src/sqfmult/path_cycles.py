"""d-path ideals of n-cycles and their associated primes."""

from __future__ import annotations

from typing import Sequence

from sqfmult.errors import InputError
from sqfmult.monomial_core import MonomialIdeal, PrimeSupport, minimalize, variables_monomial

MAX_ENUMERATION_N = 25


def _check(n: int, d: int) -> None:
    if d < 2 or n <= d:
        raise InputError(f"cycle path ideals need n > d >= 2, got n={n}, d={d}")


def cycle_path_ideal(n: int, d: int) -> MonomialIdeal:
    """``I_{n,d}``, generated by the n products of d cyclically consecutive variables."""
    _check(n, d)
    gens = [variables_monomial([(j - 1) % n + 1 for j in range(i, i + d)], n) for i in range(1, n + 1)]
    return minimalize(gens, n)


def is_assoc_prime_cycle(n: int, d: int, a: Sequence[int]) -> bool:
    """Whether ``(x_{a_1}, ..., x_{a_s})`` is an associated prime of ``S/I_{n,d}``.

    With ``a_{s+1} = a_1 + n`` and ``a_{s+2} = a_2 + n`` the test is, for every
    ``i = 1..s``: ``a_{i+1} - a_i <= d`` and ``a_{i+2} - a_i > d``.
    """
    _check(n, d)
    a = list(a)
    if not a or any(y <= x for x, y in zip(a, a[1:])) or a[0] < 1 or a[-1] > n:
        raise InputError(f"index tuple {tuple(a)} must be strictly increasing within 1..{n}")
    ext = a + [a[0] + n]
    ext.append(ext[1] + n)
    s = len(a)
    return all(ext[i + 1] - ext[i] <= d and ext[i + 2] - ext[i] > d for i in range(s))


def enumerate_assoc_primes_cycle(
    n: int, d: int, max_n: int = MAX_ENUMERATION_N
) -> list[PrimeSupport]:
    """Every index tuple passing :func:`is_assoc_prime_cycle`, by size then lexicographically."""
    _check(n, d)
    if n > max_n:
        raise InputError(f"n={n} exceeds the enumeration limit {max_n}")
    found: list[tuple[int, ...]] = []

    # Consecutive gaps are at most d, so a_1 <= d and each step is 1..d.
    def extend(prefix: list[int]) -> None:
        if is_assoc_prime_cycle(n, d, prefix):
            found.append(tuple(prefix))
        last = prefix[-1]
        for nxt in range(last + 1, min(last + d, n) + 1):
            prefix.append(nxt)
            extend(prefix)
            prefix.pop()

    for a1 in range(1, min(d, n) + 1):
        extend([a1])
    found.sort(key=lambda t: (len(t), t))
    return [PrimeSupport(n, t) for t in found]


def dim_cycle(n: int, d: int) -> int:
    """``dim S/I_{n,d} = n - ceil(n/d)``."""
    _check(n, d)
    return n - -(-n // d)


def colon_witness(n: int, d: int, a: Sequence[int]):
    """The monomial ``prod_{i not in a} x_i`` whose colon with ``I_{n,d}`` is ``P_a``."""
    rest = [i for i in range(1, n + 1) if i not in set(a)]
    return variables_monomial(rest, n)
