"""Exact Hilbert series of ``S/I`` for monomial ideals ``I``.

The series is kept as ``K(t) / (1 - t)^n`` with an integer numerator ``K``
(the K-polynomial). ``K`` is computed by pivot recursion::

    K(I) = K(I + (p)) + t^deg(p) * K(I : p)

ending at ideals whose generators are pairwise coprime, where
``K = prod(1 - t^deg g)``. Dimension and multiplicity come from dividing
out the factor ``(1 - t)^c``: ``d = n - c`` and ``e0`` is the quotient
evaluated at ``t = 1``. For ``d = 0`` this is the length of ``S/I``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Callable, Iterable, Sequence

from sqfmult.errors import InputError, ResourceError
from sqfmult.monomial_core import (
    Monomial,
    MonomialIdeal,
    _antichain,
    contains,
    divides,
    mono_gcd,
)

DEFAULT_NODE_CAP = int(os.environ.get("SQFMULT_NODE_CAP", 10_000_000))
DEFAULT_ENUM_CAP = 10**8


class KPolynomial:
    """Univariate polynomial in ``t`` with exact integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def one(cls) -> KPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> KPolynomial:
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, KPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"KPolynomial({list(self.coeffs)})"

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: KPolynomial) -> KPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return KPolynomial(out)

    def __neg__(self) -> KPolynomial:
        return KPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: KPolynomial) -> KPolynomial:
        return self + (-other)

    def __mul__(self, other: KPolynomial) -> KPolynomial:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return KPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return KPolynomial(out)

    def shift(self, k: int) -> KPolynomial:
        """Multiply by ``t^k``."""
        if not self.coeffs:
            return self
        return KPolynomial((0,) * k + self.coeffs)

    def __call__(self, t: int) -> int:
        acc = 0
        for x in reversed(self.coeffs):
            acc = acc * t + x
        return acc

    def divmod_one_minus_t(self) -> tuple[KPolynomial, int]:
        """Quotient and remainder of division by ``(1 - t)``; the remainder is ``self(1)``."""
        # Q(t) = (1 - t) R(t) + Q(1), with R_j = -(sum_{i>j} Q_i).
        c = self.coeffs
        if not c:
            return KPolynomial(), 0
        r = [0] * (len(c) - 1)
        tail = 0
        for j in range(len(c) - 1, 0, -1):
            tail += c[j]
            r[j - 1] = -tail
        return KPolynomial(r), tail + c[0]


@dataclass(frozen=True)
class SeriesProfile:
    n: int
    numerator: KPolynomial
    vanishing_order: int
    d: int
    e0: int
    deflated: KPolynomial


# --- pivot strategies -------------------------------------------------------
# Each returns a pivot monomial p with p not in I and p != 1, for an antichain
# ``gens`` that is not pairwise coprime.

PivotRule = Callable[[Sequence[Monomial], int], Monomial]


def _var(i: int, n: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(n))


def pivot_max_support(gens: Sequence[Monomial], n: int) -> Monomial:
    """The variable dividing the most generators."""
    counts = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    best = max(range(n), key=lambda i: (counts[i], -i))
    return _var(best, n)


def pivot_min_index(gens: Sequence[Monomial], n: int) -> Monomial:
    """The lowest-index variable shared by at least two generators."""
    counts = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    for i in range(n):
        if counts[i] >= 2:
            return _var(i, n)
    raise AssertionError("pivot requested on pairwise coprime generators")


def pivot_gcd_pair(gens: Sequence[Monomial], n: int) -> Monomial:
    """``gcd`` of the first pair of generators that share a variable."""
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            g = mono_gcd(gens[a], gens[b])
            if any(g):
                return g
    raise AssertionError("pivot requested on pairwise coprime generators")


PIVOT_RULES: dict[str, PivotRule] = {
    "max_support": pivot_max_support,
    "min_index": pivot_min_index,
    "gcd_pair": pivot_gcd_pair,
}


def _masks(gens: Sequence[Monomial]) -> list[int]:
    out = []
    for g in gens:
        m = 0
        for i, e in enumerate(g):
            if e:
                m |= 1 << i
        out.append(m)
    return out


def _pairwise_coprime(gens: Sequence[Monomial]) -> bool:
    seen = 0
    for m in _masks(gens):
        if seen & m:
            return False
        seen |= m
    return True


def _add_generator(gens: Sequence[Monomial], p: Monomial) -> list[Monomial]:
    # p is never divisible by a generator (pivots are chosen outside I).
    return [g for g in gens if not divides(p, g)] + [p]


def _colon(gens: Sequence[Monomial], p: Monomial) -> list[Monomial]:
    lowered: list[Monomial] = []
    untouched: list[Monomial] = []
    for g in gens:
        q = tuple(x - y if x > y else 0 for x, y in zip(g, p))
        if q == g:
            untouched.append(g)
        else:
            lowered.append(q)
    # An untouched generator never divides a lowered one (it would divide
    # the original). For a single-variable pivot the lowered generators also
    # stay an antichain; a general pivot can collapse them, e.g. x1x3 and
    # x2x3 both become x3 under p = x1x2.
    if sum(p) > 1:
        lowered = _antichain(lowered)
    survivors = [h for h in untouched if not any(divides(q, h) for q in lowered)]
    return lowered + survivors


_ONE_MINUS_T = KPolynomial((1, -1))


def k_polynomial(
    I: MonomialIdeal,
    pivot: str | PivotRule = "max_support",
    node_cap: int | None = None,
) -> KPolynomial:
    """Numerator of ``Hilb_{S/I}(t)`` over ``(1 - t)^n``."""
    if I.is_unit:
        return KPolynomial()
    rule = PIVOT_RULES[pivot] if isinstance(pivot, str) else pivot
    cap = DEFAULT_NODE_CAP if node_cap is None else node_cap
    n = I.n
    nodes = 0

    def rec(gens: list[Monomial]) -> KPolynomial:
        nonlocal nodes
        nodes += 1
        if nodes > cap:
            raise ResourceError(f"Hilbert series recursion exceeded {cap} nodes")
        if len(gens) <= 1 or _pairwise_coprime(gens):
            out = KPolynomial.one()
            for g in gens:
                out = out * (KPolynomial.one() - KPolynomial.monomial(sum(g)))
            return out
        p = rule(gens, n)
        return rec(_add_generator(gens, p)) + rec(_colon(gens, p)).shift(sum(p))

    return rec(list(I.gens))


def series_profile(
    I: MonomialIdeal, pivot: str | PivotRule = "max_support", node_cap: int | None = None
) -> SeriesProfile:
    """Dimension and multiplicity of ``S/I`` from its K-polynomial."""
    if I.is_unit:
        raise InputError("S/I is zero for the unit ideal")
    num = k_polynomial(I, pivot, node_cap)
    q = num
    c = 0
    while True:
        quotient, rem = q.divmod_one_minus_t()
        if rem != 0:
            break
        q = quotient
        c += 1
    check = q
    for _ in range(c):
        check = check * _ONE_MINUS_T
    if check != num:
        raise AssertionError("deflation of the Hilbert numerator was not exact")
    e0 = q(1)
    if e0 <= 0:
        raise AssertionError(f"non-positive multiplicity {e0} for {I}")
    return SeriesProfile(n=I.n, numerator=num, vanishing_order=c, d=I.n - c, e0=e0, deflated=q)


def hilbert_function(
    I: MonomialIdeal, a: int, numerator: KPolynomial | None = None
) -> int:
    """``dim_k (S/I)_a`` read off the series ``K(t) / (1 - t)^n``."""
    if a < 0:
        return 0
    K = k_polynomial(I) if numerator is None else numerator
    n = I.n
    return sum(K[j] * comb(a - j + n - 1, n - 1) for j in range(min(a, K.degree) + 1))


def _monomials_of_degree(n: int, a: int):
    for combo in combinations_with_replacement(range(n), a):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        yield tuple(exps)


def brute_force_hilbert_function(
    I: MonomialIdeal, a: int, enum_cap: int = DEFAULT_ENUM_CAP
) -> int:
    """Count degree-``a`` monomials outside ``I`` one by one."""
    if I.is_unit:
        raise InputError("brute-force Hilbert function is not defined for the unit ideal")
    if a < 0:
        return 0
    size = comb(I.n + a - 1, a)
    if size > enum_cap:
        raise ResourceError(f"{size} monomials of degree {a} exceed enumeration cap {enum_cap}")
    return sum(1 for m in _monomials_of_degree(I.n, a) if not contains(I, m))


def hilbert_polynomial_window(I: MonomialIdeal, a_lo: int, a_hi: int) -> list[int]:
    """Hilbert function values ``H(a_lo), ..., H(a_hi)``.

    The window must hold at least ``dim(S/I) + 2`` points so the order
    ``dim - 1`` differences can be seen to be constant.
    """
    prof = series_profile(I)
    if a_lo < 0 or a_hi - a_lo < prof.d + 2:
        raise InputError(
            f"window [{a_lo}, {a_hi}] too small for dim {prof.d}: need a_hi - a_lo >= {prof.d + 2}"
        )
    return [hilbert_function(I, a, prof.numerator) for a in range(a_lo, a_hi + 1)]


def finite_differences(values: Sequence[int], order: int) -> list[int]:
    vals = list(values)
    for _ in range(order):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return vals


def hilbert_series_terms(I: MonomialIdeal, upto: int) -> list[int]:
    K = k_polynomial(I)
    return [hilbert_function(I, a, K) for a in range(upto + 1)]
