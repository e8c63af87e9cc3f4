"""Exact arithmetic on monomials and monomial ideals.

A monomial in ``n`` variables is a plain tuple of ``n`` non-negative
exponents; ``(2, 0, 1)`` is ``x1^2*x3``. Ideals are stored by their minimal
generating set in canonical order: by degree, then lexicographically with
``x1 > x2 > ... > xn`` (so ``x1^2, x1*x2, x2^2``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from sqfmult.errors import InputError, ResourceError

Monomial = tuple[int, ...]

DEFAULT_GENERATOR_CAP = int(os.environ.get("SQFMULT_GENERATOR_CAP", 200_000))


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / gcd(a, b)``."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def support(m: Monomial) -> frozenset[int]:
    """1-based indices of the variables dividing ``m``."""
    return frozenset(i + 1 for i, e in enumerate(m) if e)


def is_squarefree_monomial(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def variables_monomial(indices: Iterable[int], n: int) -> Monomial:
    """Squarefree monomial ``prod x_i`` over 1-based ``indices``."""
    exps = [0] * n
    for i in indices:
        if not 1 <= i <= n:
            raise InputError(f"variable index {i} outside 1..{n}")
        exps[i - 1] = 1
    return tuple(exps)


def canonical_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in m))


def render_monomial(m: Monomial) -> str:
    factors = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal of ``k[x1..xn]`` held by its minimal generators.

    Build instances with :func:`minimalize`; the constructor trusts its input.
    An empty ``gens`` is the zero ideal, ``((0,)*n,)`` the unit ideal.
    """

    n: int
    gens: tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree_monomial(g) for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return "0"
        return ", ".join(render_monomial(g) for g in self.gens)

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, ((0,) * n,))

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]], n: int) -> MonomialIdeal:
        """Squarefree ideal generated by ``prod_{i in S} x_i`` for each support ``S``."""
        return minimalize((variables_monomial(s, n) for s in supports), n)


@dataclass(frozen=True, order=True)
class PrimeSupport:
    """Monomial prime ``(x_{a1}, ..., x_{as})``, 1-based strictly increasing ``vars``."""

    n: int
    vars: tuple[int, ...]

    def __post_init__(self):
        if not self.vars:
            raise InputError("a prime support must be nonempty")
        if any(b <= a for a, b in zip(self.vars, self.vars[1:])):
            raise InputError(f"prime support {self.vars} is not strictly increasing")
        if self.vars[0] < 1 or self.vars[-1] > self.n:
            raise InputError(f"prime support {self.vars} outside 1..{self.n}")

    @property
    def height(self) -> int:
        return len(self.vars)

    def as_ideal(self) -> MonomialIdeal:
        return minimalize((variables_monomial([i], self.n) for i in self.vars), self.n)

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i}" for i in self.vars) + ")"


def _check_length(monos: Sequence[Monomial], n: int) -> None:
    for m in monos:
        if len(m) != n:
            raise InputError(f"monomial {m} has length {len(m)}, expected {n}")
        if any(e < 0 for e in m):
            raise InputError(f"monomial {m} has a negative exponent")


def _antichain(monos: Iterable[Monomial]) -> list[Monomial]:
    # Sorting by degree means a divisor is always seen before its multiples.
    kept: list[Monomial] = []
    for m in sorted(set(monos), key=canonical_key):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return kept


def minimalize(raw: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Ideal generated by ``raw``, reduced to its minimal generating set."""
    monos = [tuple(m) for m in raw]
    _check_length(monos, n)
    return MonomialIdeal(n, tuple(_antichain(monos)))


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise InputError(f"ideals live in different rings (n={I.n} vs n={J.n})")


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    _check_length([m], I.n)
    return any(divides(g, m) for g in I.gens)


def colon(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """``I : f``, generated by ``g / gcd(g, f)``."""
    _check_length([f], I.n)
    return minimalize((mono_quotient(g, f) for g in I.gens), I.n)


def _guarded(count: int, cap: int | None, what: str) -> None:
    limit = DEFAULT_GENERATOR_CAP if cap is None else cap
    if count > limit:
        raise ResourceError(f"{what}: {count} candidate generators exceed cap {limit}")


def multiply(I: MonomialIdeal, J: MonomialIdeal, cap: int | None = None) -> MonomialIdeal:
    _same_ring(I, J)
    products = {mono_mul(g, h) for g in I.gens for h in J.gens}
    _guarded(len(products), cap, "multiply")
    return MonomialIdeal(I.n, tuple(_antichain(products)))


def power(I: MonomialIdeal, s: int, cap: int | None = None) -> MonomialIdeal:
    """``I^s`` by repeated multiplication; ``s = 0`` gives the unit ideal."""
    if s < 0:
        raise InputError(f"power exponent must be non-negative, got {s}")
    result = MonomialIdeal.unit(I.n)
    for _ in range(s):
        result = multiply(result, I, cap)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal, cap: int | None = None) -> MonomialIdeal:
    _same_ring(I, J)
    lcms = {mono_lcm(g, h) for g in I.gens for h in J.gens}
    _guarded(len(lcms), cap, "intersect")
    return MonomialIdeal(I.n, tuple(_antichain(lcms)))


def prime_power(P: PrimeSupport, s: int) -> MonomialIdeal:
    """``P^s``: every degree-``s`` monomial supported on ``P.vars``."""
    if s < 1:
        raise InputError(f"prime power exponent must be >= 1, got {s}")
    gens = []
    for combo in combinations_with_replacement(P.vars, s):
        exps = [0] * P.n
        for i in combo:
            exps[i - 1] += 1
        gens.append(tuple(exps))
    return MonomialIdeal(P.n, tuple(sorted(gens, key=canonical_key)))


def symbolic_power(
    I: MonomialIdeal, s: int, primes: Sequence[PrimeSupport], cap: int | None = None
) -> MonomialIdeal:
    """``I^(s) = P_1^s ∩ ... ∩ P_m^s`` for the minimal primes ``P_i`` of a radical ``I``."""
    if not primes:
        raise InputError("symbolic_power needs at least one minimal prime")
    if not I.is_squarefree:
        raise InputError("symbolic_power is defined here for squarefree ideals only")
    if any(P.n != I.n for P in primes):
        raise InputError("prime supports and ideal live in different rings")
    result = prime_power(primes[0], s)
    for P in primes[1:]:
        result = intersect(result, prime_power(P, s), cap)
    return result
