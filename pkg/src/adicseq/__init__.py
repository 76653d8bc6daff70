"""Interleaved period-4p binary sequences with optimal autocorrelation
magnitude, and their exact 2-adic complexity."""

from .complexity import (
    AdicReport,
    Check,
    VerificationReport,
    evaluate_T_inv2,
    evaluate_U2,
    linear_complexity,
    two_adic_complexity,
    verify_prime,
)
from .correlation import AutocorrSpectrum, autocorrelation, expected_spectrum_u2, resolve_params, resolve_y_sign, spectrum
from .numtheory import ConstructionParams, admissible_primes, build_params, is_admissible_prime, legendre
from .seqcore import BVector, BinarySequence, complement, construct_u, interleave, shift, support

__version__ = "0.1.0"
