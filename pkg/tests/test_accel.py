import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from adicseq import _accel
from oracles import brute_autocorr, lfsr_length_by_search

needs_numba = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")

bitarrays = st.lists(st.integers(0, 1), min_size=1, max_size=80).map(lambda b: np.array(b, dtype=np.uint8))


@given(bitarrays)
def test_numpy_autocorr(bits):
    assert list(_accel.autocorr_spectrum_numpy(bits)) == brute_autocorr([int(b) for b in bits])


@given(st.lists(st.integers(0, 1), min_size=1, max_size=12))
def test_numpy_bm(bits):
    assert _accel.berlekamp_massey_numpy(np.array(bits * 2, dtype=np.uint8)) == lfsr_length_by_search(bits)


@needs_numba
@settings(deadline=None)
@given(bitarrays)
def test_backends_agree(bits):
    assert np.array_equal(_accel.autocorr_spectrum_numba(bits), _accel.autocorr_spectrum_numpy(bits))
    assert _accel.berlekamp_massey_numba(bits) == _accel.berlekamp_massey_numpy(bits)


@needs_numba
def test_backends_agree_long():
    rng = np.random.default_rng(7)
    bits = rng.integers(0, 2, 1500).astype(np.uint8)
    assert np.array_equal(_accel.autocorr_spectrum_numba(bits), _accel.autocorr_spectrum_numpy(bits))
    assert _accel.berlekamp_massey_numba(bits) == _accel.berlekamp_massey_numpy(bits)


@pytest.mark.parametrize("flag, expected", [("1", "numpy"), ("0", "numba" if _accel.HAVE_NUMBA else "numpy")])
def test_env_flag_selects_backend(flag, expected):
    env = dict(os.environ, ADICSEQ_NO_NUMBA=flag)
    out = subprocess.run(
        [sys.executable, "-c", "from adicseq import _accel; print(_accel.backend())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == expected


def test_fallback_path_end_to_end():
    env = dict(os.environ, ADICSEQ_NO_NUMBA="1")
    code = (
        "from adicseq import *\n"
        "P = resolve_params(build_params(13))\n"
        "u = construct_u(P, BVector(0, 0, 0, 0))\n"
        "print(spectrum(u).classification, two_adic_complexity(u).gcd_total, linear_complexity(u), P.y)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    from adicseq import BVector, build_params, construct_u, linear_complexity, resolve_params

    P = resolve_params(build_params(13))
    lc = linear_complexity(construct_u(P, BVector(0, 0, 0, 0)))
    assert out.stdout.split() == ["optimal-magnitude", "15", str(lc), str(P.y)]
