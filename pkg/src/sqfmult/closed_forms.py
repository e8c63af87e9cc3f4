"""Closed multiplicity formulas and the counting sets behind the cycle formula.

All values are Python ints, so nothing overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from sqfmult.errors import InputError


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, with ``C(a, b) = 0`` when ``b < 0`` or ``b > a``."""
    if a < 0:
        raise InputError(f"binomial top must be non-negative, got {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def e0_power_formula(n: int, d: int, mu: int, s: int) -> int:
    """Multiplicity of ``S/I^s`` for a squarefree ``I`` with ``dim S/I = d`` and
    ``mu`` top-dimensional primes: ``mu * C(n - d + s - 1, s - 1)``."""
    if not 0 <= d < n:
        raise InputError(f"need 0 <= d < n, got n={n}, d={d}")
    if mu < 1:
        raise InputError(f"need mu >= 1, got {mu}")
    if s < 1:
        raise InputError(f"need s >= 1, got {s}")
    return mu * binomial(n - d + s - 1, s - 1)


@dataclass(frozen=True)
class CycleParams:
    n: int
    d: int
    k: int
    r: int


def cycle_params(n: int, d: int) -> CycleParams:
    """Write ``n = k*d + r`` with ``k >= 1`` and ``1 <= r <= d``."""
    if d < 2 or n <= d:
        raise InputError(f"need n > d >= 2, got n={n}, d={d}")
    k, r = divmod(n, d)
    if r == 0:
        k, r = k - 1, d
    return CycleParams(n, d, k, r)


def e0_cycle(n: int, d: int) -> int:
    """Multiplicity of ``S/I_{n,d}``, the d-path ideal of the n-cycle."""
    p = cycle_params(n, d)
    m = p.k + d - p.r
    return d * binomial(m, p.k) - binomial(m, p.k + 1)


def e0_cycle_power(n: int, d: int, s: int) -> int:
    """Multiplicity of ``S/I_{n,d}^s``."""
    if s < 1:
        raise InputError(f"need s >= 1, got {s}")
    p = cycle_params(n, d)
    return e0_cycle(n, d) * binomial(p.k + s, s - 1)


# --- counting sets ------------------------------------------------------------


def bounded_compositions(parts: int, total: int, lo: int, hi: int):
    """Yield every ``parts``-tuple with entries in ``lo..hi`` summing to ``total``, lexicographically."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(max(lo, total - (parts - 1) * hi), min(hi, total - (parts - 1) * lo) + 1):
        for rest in bounded_compositions(parts - 1, total - first, lo, hi):
            yield (first, *rest)


def count_U(k: int, d: int) -> int:
    return binomial(d + k, d)


def enumerate_U(k: int, d: int) -> list[tuple[int, ...]]:
    """Tuples ``(c_1..c_{k+1})`` with ``0 <= c_i <= d`` summing to ``k*d``."""
    if k < 0 or d < 0:
        raise InputError(f"need k, d >= 0, got k={k}, d={d}")
    return list(bounded_compositions(k + 1, k * d, 0, d))


def enumerate_W(k: int, d: int, r: int, s: int) -> list[tuple[int, ...]]:
    """Tuples ``(b_1..b_k)`` with ``b_i <= d`` summing to ``(k-1)*d + r + s``."""
    if k < 1 or not 1 <= r <= d or not 0 <= s <= d - r:
        raise InputError(f"need k >= 1, 1 <= r <= d, 0 <= s <= d - r; got k={k}, d={d}, r={r}, s={s}")
    target = (k - 1) * d + r + s
    return list(bounded_compositions(k, target, 0, d))


def w_weighted_sum(k: int, d: int, r: int) -> int:
    """``sum_{s=0}^{d-r} (d - s) * |W_{k,d,r,s}|``."""
    return sum((d - s) * len(enumerate_W(k, d, r, s)) for s in range(d - r + 1))


def enumerate_V(k: int, d: int, r: int) -> list[tuple[int, ...]]:
    """Tuples ``(a_1, b_1..b_k)`` encoding the top-dimensional primes of ``I_{kd+r,d}``.

    Here ``1 <= b_i <= d`` (the indices ``a_j`` strictly increase),
    ``sum b >= (k-1)*d + r`` and ``a_1 + sum b <= k*d + r``.
    """
    if k < 1 or not 1 <= r <= d:
        raise InputError(f"need k >= 1 and 1 <= r <= d, got k={k}, d={d}, r={r}")
    n = k * d + r
    out = []
    for total in range((k - 1) * d + r, k * d + 1):
        for b in bounded_compositions(k, total, 1, d):
            for a1 in range(1, n - total + 1):
                out.append((a1, *b))
    return sorted(out)
