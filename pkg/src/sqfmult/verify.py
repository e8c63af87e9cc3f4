"""Verification sweeps: closed formulas against the Hilbert engine and brute force.

Each ``check_*`` function runs one family of cases and returns a
:class:`CriterionResult`. ``run_all`` strings them together for the CLI.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from sqfmult.closed_forms import (
    binomial,
    count_U,
    e0_cycle,
    e0_cycle_power,
    e0_power_formula,
    enumerate_U,
    enumerate_V,
    enumerate_W,
    w_weighted_sum,
)
from sqfmult.errors import ResourceError
from sqfmult.hilbert_engine import (
    PIVOT_RULES,
    brute_force_hilbert_function,
    hilbert_function,
    k_polynomial,
    series_profile,
)
from sqfmult.monomial_core import (
    MonomialIdeal,
    PrimeSupport,
    power,
    prime_power,
    symbolic_power,
)
from sqfmult.path_cycles import cycle_path_ideal, dim_cycle, enumerate_assoc_primes_cycle
from sqfmult.primes_dim import dim_profile, minimal_primes, unmixed_part


@dataclass
class CriterionResult:
    number: int
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    seconds: float = 0.0
    min_completion: float = 1.0

    @property
    def passed(self) -> bool:
        if self.failures:
            return False
        total = self.cases + len(self.skipped)
        return total == 0 or self.cases / total >= self.min_completion

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", {len(self.skipped)} skipped" if self.skipped else ""
        return (
            f"[{status}] {self.number}. {self.name}: {self.cases} cases, "
            f"{len(self.failures)} failures{extra} ({self.seconds:.2f}s)"
        )

    def as_dict(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "skipped": self.skipped,
            "seconds": round(self.seconds, 3),
        }


def _timed(fn: Callable[..., CriterionResult]) -> Callable[..., CriterionResult]:
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def random_squarefree_ideals(samples: int, max_n: int = 6, seed: int = 0) -> list[MonomialIdeal]:
    """Deterministic sample of nonzero proper squarefree ideals with ``1 <= n <= max_n``."""
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        n = rng.randint(1, max_n) if rng.random() < 0.1 else rng.randint(min(2, max_n), max_n)
        # Mostly degree 2-3 generators: large supports get absorbed by small ones.
        weights = [0.3 if size == 1 else 6 if size in (2, 3) else 1 for size in range(1, n + 1)]
        m = rng.randint(1, 2 * n) if n < 3 else rng.randint(2, 2 * n)
        supports = [
            rng.sample(range(1, n + 1), rng.choices(range(1, n + 1), weights)[0]) for _ in range(m)
        ]
        out.append(MonomialIdeal.from_supports(supports, n))
    return out


@_timed
def check_power_formula(ideals: list[MonomialIdeal], max_s: int = 3) -> CriterionResult:
    """Engine e0(S/I^s) against mu * C(n - d + s - 1, s - 1)."""
    res = CriterionResult(1, "power formula for squarefree ideals")
    for I in ideals:
        prof = dim_profile(I)
        for s in range(1, max_s + 1):
            res.cases += 1
            try:
                got = series_profile(power(I, s)).e0
            except ResourceError as exc:
                res.cases -= 1
                res.skipped.append(f"{I} s={s}: {exc}")
                continue
            want = e0_power_formula(I.n, prof.d, prof.mu, s)
            if got != want:
                res.failures.append(f"{I} (n={I.n}) s={s}: engine {got} != formula {want}")
    return res


@_timed
def check_symbolic_power(ideals: list[MonomialIdeal], max_s: int = 3) -> CriterionResult:
    """e0(S/I^(s)) equals e0(S/I^s)."""
    res = CriterionResult(2, "symbolic powers have the same multiplicity")
    for I in ideals:
        primes = minimal_primes(I)
        for s in range(1, max_s + 1):
            res.cases += 1
            try:
                sym = series_profile(symbolic_power(I, s, primes)).e0
                ordinary = series_profile(power(I, s)).e0
            except ResourceError as exc:
                res.cases -= 1
                res.skipped.append(f"{I} s={s}: {exc}")
                continue
            if sym != ordinary:
                res.failures.append(f"{I} s={s}: symbolic {sym} != ordinary {ordinary}")
    return res


@_timed
def check_unmixed_part(ideals: list[MonomialIdeal]) -> CriterionResult:
    """e0(S/I) equals e0(S/I^un)."""
    res = CriterionResult(3, "unmixed part keeps the multiplicity")
    for I in ideals:
        res.cases += 1
        a = series_profile(I).e0
        b = series_profile(unmixed_part(I)).e0
        if a != b:
            res.failures.append(f"{I}: e0(I)={a} != e0(I^un)={b}")
    return res


@_timed
def check_variable_prime_powers(max_c: int = 5, max_s: int = 6) -> CriterionResult:
    """e0(S/(x1..xc)^s) = C(c + s - 1, s - 1)."""
    res = CriterionResult(4, "powers of variable primes")
    for c in range(1, max_c + 1):
        P = PrimeSupport(c, tuple(range(1, c + 1)))
        for s in range(1, max_s + 1):
            res.cases += 1
            got = series_profile(prime_power(P, s)).e0
            want = binomial(c + s - 1, s - 1)
            if got != want:
                res.failures.append(f"c={c} s={s}: engine {got} != {want}")
    return res


@_timed
def check_cycles(max_n: int = 12, max_d: int | None = None) -> CriterionResult:
    """Dimension, multiplicity and associated primes of I_{n,d}."""
    res = CriterionResult(5, "path ideals of cycles: dim, e0, primes")
    for n in range(3, max_n + 1):
        for d in range(2, n if max_d is None else min(n, max_d + 1)):
            res.cases += 1
            I = cycle_path_ideal(n, d)
            prof = series_profile(I)
            want_dim = n - -(-n // d)
            if not dim_cycle(n, d) == prof.d == want_dim:
                res.failures.append(f"n={n} d={d}: dim_cycle={dim_cycle(n, d)} engine={prof.d}")
            if e0_cycle(n, d) != prof.e0:
                res.failures.append(f"n={n} d={d}: e0_cycle={e0_cycle(n, d)} engine={prof.e0}")
            if enumerate_assoc_primes_cycle(n, d) != minimal_primes(I):
                res.failures.append(f"n={n} d={d}: criterion primes differ from minimal transversals")
    return res


@_timed
def check_cycle_powers(
    max_n: int = 8, max_s: int = 3, max_d: int | None = None, generator_cap: int | None = None
) -> CriterionResult:
    """Engine e0(S/I_{n,d}^s) against the closed form."""
    res = CriterionResult(6, "powers of cycle path ideals", min_completion=0.9)
    for n in range(3, max_n + 1):
        for d in range(2, n if max_d is None else min(n, max_d + 1)):
            I = cycle_path_ideal(n, d)
            for s in range(1, max_s + 1):
                try:
                    got = series_profile(power(I, s, generator_cap)).e0
                except ResourceError as exc:
                    res.skipped.append(f"n={n} d={d} s={s}: {exc}")
                    continue
                res.cases += 1
                want = e0_cycle_power(n, d, s)
                if got != want:
                    res.failures.append(f"n={n} d={d} s={s}: engine {got} != formula {want}")
    return res


@_timed
def check_counting_lemmas(max_u: int = 8, max_v: int = 6) -> CriterionResult:
    """Sizes of U, W, V against their binomial counts."""
    res = CriterionResult(7, "counting lemmas U, W, V")
    for k in range(1, max_u + 1):
        for d in range(1, max_u + 1):
            res.cases += 1
            if len(enumerate_U(k, d)) != count_U(k, d):
                res.failures.append(f"|U({k},{d})| != C({d + k},{d})")
    for k in range(1, max_v + 1):
        for d in range(2, max_v + 1):
            for r in range(1, d + 1):
                for s in range(0, d - r + 1):
                    res.cases += 1
                    if len(enumerate_W(k, d, r, s)) != count_U(k - 1, d - r - s):
                        res.failures.append(f"|W({k},{d},{r},{s})| != |U({k - 1},{d - r - s})|")
                res.cases += 1
                v = len(enumerate_V(k, d, r))
                w = w_weighted_sum(k, d, r)
                e = e0_cycle(k * d + r, d)
                if not v == w == e:
                    res.failures.append(f"k={k} d={d} r={r}: |V|={v}, W-sum={w}, e0_cycle={e}")
    return res


@_timed
def check_oracle_independence(
    ideals: list[MonomialIdeal], max_a: int = 12, strategies: tuple[str, ...] = tuple(PIVOT_RULES)
) -> CriterionResult:
    """Series coefficients against brute-force counts; K-polynomial across pivot rules."""
    res = CriterionResult(8, "Hilbert engine vs brute force and across pivots")
    for I in ideals:
        for J in (I, power(I, 2)):
            polys = {name: k_polynomial(J, name) for name in strategies}
            base = polys[strategies[0]]
            res.cases += 1
            for name, K in polys.items():
                if K != base:
                    res.failures.append(f"{J}: pivot {name} gives {K}, {strategies[0]} gives {base}")
            for a in range(max_a + 1):
                res.cases += 1
                h = hilbert_function(J, a, base)
                b = brute_force_hilbert_function(J, a)
                if h != b:
                    res.failures.append(f"{J} a={a}: series {h} != brute force {b}")
    return res


# (label, ideal builder, s, expected (d, mu, e0 of S/I), expected e0 of S/I^s)
SPOT_VALUES = [
    ("triangle", lambda: cycle_path_ideal(3, 2), 2, (1, 3, 3), 9),
    ("C5 edge ideal", lambda: cycle_path_ideal(5, 2), 2, (2, 5, 5), 20),
]


@_timed
def check_spot_values() -> CriterionResult:
    """Fixed small examples worked out by hand and by enumeration."""
    res = CriterionResult(9, "spot values")
    for label, build, s, (d, mu, e0), e0_s in SPOT_VALUES:
        I = build()
        prof = dim_profile(I)
        sp = series_profile(I)
        res.cases += 1
        if (prof.d, prof.mu, sp.e0) != (d, mu, e0) or sp.d != d:
            res.failures.append(f"{label}: got (d,mu,e0)=({prof.d},{prof.mu},{sp.e0}), want {(d, mu, e0)}")
        res.cases += 1
        got = series_profile(power(I, s)).e0
        if got != e0_s:
            res.failures.append(f"{label}: e0(I^{s})={got}, want {e0_s}")
    I = MonomialIdeal.from_supports([[1, 2], [2, 3]], 3)
    sp = series_profile(I)
    res.cases += 1
    if list(sp.numerator.coeffs) != [1, 0, -2, 1] or sp.d != 2 or sp.e0 != 1:
        res.failures.append(f"(x1x2,x2x3): numerator {list(sp.numerator.coeffs)}, d={sp.d}, e0={sp.e0}")
    return res


def run_all(
    max_n: int = 6,
    max_s: int = 3,
    samples: int = 200,
    seed: int = 0,
    max_d: int | None = None,
    cycle_max_n: int = 12,
    cycle_power_max_n: int = 8,
) -> list[CriterionResult]:
    ideals = random_squarefree_ideals(samples, max_n, seed)
    return [
        check_power_formula(ideals, max_s),
        check_symbolic_power(ideals, max_s),
        check_unmixed_part(ideals),
        check_variable_prime_powers(),
        check_cycles(cycle_max_n, max_d),
        check_cycle_powers(cycle_power_max_n, max_s, max_d),
        check_counting_lemmas(),
        check_oracle_independence(ideals),
        check_spot_values(),
    ]
