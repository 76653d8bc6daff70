"""Periodic autocorrelation spectra, optimality classes, and the predicted
spectrum of the b = 0000 sequence used to pin down the sign of y."""

import csv
import io
from dataclasses import dataclass

import numpy as np

from . import _accel
from .numtheory import ConstructionParams
from .seqcore import BVector, BinarySequence, construct_u

IDEAL = "ideal"
TYPE2 = "type2"
TYPE3 = "type3"
PERFECT = "perfect"
OPTIMAL_VALUE = "optimal-value"
OPTIMAL_MAGNITUDE = "optimal-magnitude"
NONE = "none"

CLASSIFICATIONS = (IDEAL, TYPE2, TYPE3, PERFECT, OPTIMAL_VALUE, OPTIMAL_MAGNITUDE, NONE)


def autocorrelation(s: BinarySequence, tau: int) -> int:
    v = 1 - 2 * s.bits.astype(np.int64)
    return int(np.dot(v, np.roll(v, -(tau % s.period))))


def classify(values) -> str:
    """Optimality class of a spectrum whose entry 0 is the in-phase value."""
    n = len(values)
    off = {int(c) for c in values[1:]}
    r = n % 4
    if r == 3:
        return IDEAL if off <= {-1} else NONE
    if r == 1:
        return TYPE2 if off <= {1, -3} else NONE
    if r == 2:
        return TYPE3 if off <= {2, -2} else NONE
    if n in off or -n in off:
        # an out-of-phase peak of +-N means a shorter period up to complement
        return NONE
    if off <= {0}:
        return PERFECT
    if off <= {0, -4} or off <= {0, 4}:
        return OPTIMAL_VALUE
    if off <= {0, 4, -4}:
        return OPTIMAL_MAGNITUDE
    return NONE


@dataclass(frozen=True)
class AutocorrSpectrum:
    period: int
    values: np.ndarray
    classification: str

    @property
    def has_optimal_magnitude(self) -> bool:
        """True when every out-of-phase value lies in {0, +-4}."""
        return self.period % 4 == 0 and self.classification in (PERFECT, OPTIMAL_VALUE, OPTIMAL_MAGNITUDE)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["tau", "C"])
        for tau, c in enumerate(self.values):
            w.writerow([tau, int(c)])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "period": self.period,
            "classification": self.classification,
            "values": [int(c) for c in self.values],
        }


def spectrum(s: BinarySequence) -> AutocorrSpectrum:
    values = _accel.autocorr_spectrum(s.bits)
    values.setflags(write=False)
    return AutocorrSpectrum(s.period, values, classify(values))


# Case labels of the nine-way table for the b = 0000 sequence, tau = t1 + 4*t2.
CASES = (
    "t1=0",
    "t1=1,zero",
    "t1=1,residue",
    "t1=1,nonresidue",
    "t1=2,zero",
    "t1=2,nonzero",
    "t1=3,zero",
    "t1=3,residue",
    "t1=3,nonresidue",
)


def expected_cases(params: ConstructionParams) -> np.ndarray:
    """Case index into CASES for every tau in [1, 4p); entry 0 is -1."""
    p, d = params.p, params.d
    qr = params.quadratic_residues
    out = np.full(4 * p, -1, dtype=np.int64)
    for tau in range(1, 4 * p):
        t1, t2 = tau % 4, tau // 4
        if t1 == 0:
            out[tau] = 0
            continue
        t = (t2 + t1 * d) % p
        if t1 == 2:
            out[tau] = 4 if t == 0 else 5
        else:
            base = 1 if t1 == 1 else 6
            out[tau] = base if t == 0 else base + (1 if t in qr else 2)
    return out


def expected_spectrum_u2(params: ConstructionParams, y: int, printed: bool = False) -> np.ndarray:
    """Predicted autocorrelation of the b = 0000 sequence; entry 0 is 4p.

    The t1 = 3 rows carry the same sign as the t1 = 1 rows, as forced by
    C(tau) = C(4p - tau) and (-1/p) = 1. ``printed=True`` gives the table
    as it appears in the literature, with those two rows negated; no
    sequence can satisfy it.
    """
    if y not in (1, -1):
        raise ValueError("y must be +1 or -1")
    t3 = -y if printed else y
    case_value = np.array([-4, 4, 4 * y, -4 * y, 4, 0, 4, 4 * t3, -4 * t3], dtype=np.int64)
    cases = expected_cases(params)
    out = np.empty(4 * params.p, dtype=np.int64)
    out[0] = 4 * params.p
    out[1:] = case_value[cases[1:]]
    return out


class SignResolutionError(RuntimeError):
    pass


def matching_y_signs(params: ConstructionParams) -> list[int]:
    actual = spectrum(construct_u(params, BVector(0, 0, 0, 0))).values
    return [y for y in (1, -1) if np.array_equal(expected_spectrum_u2(params, y), actual)]


def resolve_y_sign(params: ConstructionParams) -> int:
    """The unique y in {+1, -1} for which the predicted b = 0000 spectrum is exact."""
    hits = matching_y_signs(params)
    if len(hits) != 1:
        raise SignResolutionError(f"p={params.p}: {len(hits)} sign(s) of y reproduce the spectrum")
    return hits[0]


def resolve_params(params: ConstructionParams) -> ConstructionParams:
    return params.with_y(resolve_y_sign(params))
