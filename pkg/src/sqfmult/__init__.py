"""Multiplicities of powers of squarefree monomial ideals."""

from sqfmult.errors import InputError, ResourceError
from sqfmult.monomial_core import (
    MonomialIdeal,
    PrimeSupport,
    colon,
    contains,
    intersect,
    minimalize,
    multiply,
    power,
    prime_power,
    symbolic_power,
)
from sqfmult.primes_dim import DimProfile, dim_profile, minimal_primes, unmixed_part
from sqfmult.hilbert_engine import (
    KPolynomial,
    SeriesProfile,
    brute_force_hilbert_function,
    hilbert_function,
    hilbert_polynomial_window,
    k_polynomial,
    series_profile,
)
from sqfmult.closed_forms import (
    binomial,
    cycle_params,
    e0_cycle,
    e0_cycle_power,
    e0_power_formula,
)
from sqfmult.path_cycles import (
    cycle_path_ideal,
    dim_cycle,
    enumerate_assoc_primes_cycle,
    is_assoc_prime_cycle,
)

__version__ = "0.1.0"
