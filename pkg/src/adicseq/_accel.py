"""Hot inner loops: periodic autocorrelation and GF(2) Berlekamp-Massey.

Each kernel exists twice, a numba ``@njit`` version and a pure-numpy one.
The numba path is used when numba imports cleanly and ``ADICSEQ_NO_NUMBA``
is unset (or ``0``). Both paths are always importable so they can be
compared against each other.
"""

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

_DISABLED = os.environ.get("ADICSEQ_NO_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")
USE_NUMBA = HAVE_NUMBA and not _DISABLED


# -- numpy reference path ----------------------------------------------------

def autocorr_spectrum_numpy(bits):
    """All periodic autocorrelations of a 0/1 vector, as int64."""
    v = 1 - 2 * np.asarray(bits, dtype=np.int64)
    n = v.shape[0]
    out = np.empty(n, dtype=np.int64)
    for tau in range(n):
        out[tau] = np.dot(v, np.roll(v, -tau))
    return out


def berlekamp_massey_numpy(bits):
    """Length of the shortest binary LFSR producing ``bits``."""
    s = np.asarray(bits, dtype=np.uint8) & 1
    n = s.shape[0]
    c = np.zeros(n + 1, dtype=np.uint8)
    b = np.zeros(n + 1, dtype=np.uint8)
    c[0] = b[0] = 1
    L, m = 0, -1
    for k in range(n):
        # discrepancy = s_k + sum_{i=1..L} c_i s_{k-i}
        d = int(s[k]) ^ (int(np.dot(c[1:L + 1], s[k - L:k][::-1])) & 1) if L else int(s[k])
        if d:
            t = c.copy()
            shift = k - m
            c[shift:] ^= b[: n + 1 - shift]
            if 2 * L <= k:
                L = k + 1 - L
                m = k
                b = t
    return L


# -- numba path --------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def autocorr_spectrum_numba(bits):
        n = bits.shape[0]
        v = np.empty(n, dtype=np.int64)
        for i in range(n):
            v[i] = 1 - 2 * (bits[i] & 1)
        out = np.empty(n, dtype=np.int64)
        for tau in range(n):
            acc = 0
            j = tau
            for i in range(n):
                acc += v[i] * v[j]
                j += 1
                if j == n:
                    j = 0
            out[tau] = acc
        return out

    @njit(cache=True)
    def berlekamp_massey_numba(bits):
        n = bits.shape[0]
        c = np.zeros(n + 1, dtype=np.uint8)
        b = np.zeros(n + 1, dtype=np.uint8)
        t = np.zeros(n + 1, dtype=np.uint8)
        c[0] = 1
        b[0] = 1
        L = 0
        m = -1
        for k in range(n):
            d = bits[k] & 1
            for i in range(1, L + 1):
                d ^= c[i] & bits[k - i]
            if d:
                for i in range(n + 1):
                    t[i] = c[i]
                shift = k - m
                for i in range(shift, n + 1):
                    c[i] ^= b[i - shift]
                if 2 * L <= k:
                    L = k + 1 - L
                    m = k
                    for i in range(n + 1):
                        b[i] = t[i]
        return L

else:  # pragma: no cover
    autocorr_spectrum_numba = autocorr_spectrum_numpy
    berlekamp_massey_numba = berlekamp_massey_numpy


def autocorr_spectrum(bits):
    bits = np.ascontiguousarray(bits, dtype=np.uint8)
    if USE_NUMBA:
        return autocorr_spectrum_numba(bits)
    return autocorr_spectrum_numpy(bits)


def berlekamp_massey(bits):
    bits = np.ascontiguousarray(bits, dtype=np.uint8)
    if USE_NUMBA:
        return int(berlekamp_massey_numba(bits))
    return int(berlekamp_massey_numpy(bits))


def backend():
    return "numba" if USE_NUMBA else "numpy"
