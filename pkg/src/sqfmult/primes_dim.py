"""Minimal primes, dimension and unmixed part of squarefree monomial ideals.

For a squarefree ideal every associated prime is minimal and generated by
variables, so the primes are exactly the minimal vertex covers
(transversals) of the hypergraph of generator supports.
"""

from __future__ import annotations

from dataclasses import dataclass

from sqfmult.errors import InputError
from sqfmult.monomial_core import MonomialIdeal, PrimeSupport, intersect

MAX_VARS = 64


@dataclass(frozen=True)
class DimProfile:
    d: int
    mu: int
    height: int


def _check_squarefree(I: MonomialIdeal, max_vars: int) -> None:
    if I.is_zero:
        raise InputError("the zero ideal has no minimal primes")
    if I.is_unit:
        raise InputError("the unit ideal has no minimal primes")
    if not I.is_squarefree:
        raise InputError("expected a squarefree monomial ideal")
    if I.n > max_vars:
        raise InputError(f"n={I.n} exceeds the variable cap {max_vars}")


def _mask(g) -> int:
    m = 0
    for i, e in enumerate(g):
        if e:
            m |= 1 << i
    return m


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i + 1)
        mask >>= 1
        i += 1
    return tuple(out)


def minimal_transversals(edges: list[int]) -> list[int]:
    """All inclusion-minimal bitmasks meeting every mask in ``edges``.

    Branches on the first uncovered edge. A partial cover is abandoned once
    some chosen vertex has no private edge (an edge meeting the cover only
    in that vertex): growing the cover can never give it one back.
    """
    found: set[int] = set()

    def has_private_edges(cover: int) -> bool:
        w = cover
        while w:
            u = w & -w
            w ^= u
            rest = cover ^ u
            if not any(e & u and not e & rest for e in edges):
                return False
        return True

    def grow(cover: int) -> None:
        for e in edges:
            if not e & cover:
                break
        else:
            found.add(cover)
            return
        bit = e
        while bit:
            v = bit & -bit
            bit ^= v
            new = cover | v
            if has_private_edges(new):
                grow(new)

    grow(0)
    return list(found)


def _canonical(supports: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return sorted(supports, key=lambda a: (len(a), a))


def minimal_primes(I: MonomialIdeal, max_vars: int = MAX_VARS) -> list[PrimeSupport]:
    """Minimal primes of ``S/I``, ordered by height then lexicographically."""
    _check_squarefree(I, max_vars)
    edges = sorted({_mask(g) for g in I.gens}, key=lambda m: bin(m).count("1"))
    covers = [_bits(c) for c in minimal_transversals(edges)]
    return [PrimeSupport(I.n, a) for a in _canonical(covers)]


def dim_profile(I: MonomialIdeal, max_vars: int = MAX_VARS) -> DimProfile:
    """Krull dimension ``d`` of ``S/I`` and the number ``mu`` of ``d``-dimensional primes."""
    primes = minimal_primes(I, max_vars)
    h = min(P.height for P in primes)
    mu = sum(1 for P in primes if P.height == h)
    return DimProfile(d=I.n - h, mu=mu, height=h)


def unmixed_part(I: MonomialIdeal, max_vars: int = MAX_VARS) -> MonomialIdeal:
    """Intersection of the minimal primes of minimum height."""
    primes = minimal_primes(I, max_vars)
    h = primes[0].height
    top = [P for P in primes if P.height == h]
    result = top[0].as_ideal()
    for P in top[1:]:
        result = intersect(result, P.as_ideal())
    return result
