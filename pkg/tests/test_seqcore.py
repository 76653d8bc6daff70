import numpy as np
import pytest
from hypothesis import given, strategies as st

from adicseq.complexity import evaluate_U2
from adicseq.numtheory import admissible_primes, build_params
from adicseq.seqcore import (
    ADMISSIBLE_B,
    BVector,
    BinarySequence,
    SequenceFormatError,
    complement,
    construct_columns,
    construct_u,
    deinterleave,
    dhl_sequences,
    dumps,
    interleave,
    loads,
    read_sequence,
    shift,
    support,
    write_sequence,
)
from oracles import brute_u, column_supports

bitlists = st.lists(st.integers(0, 1), min_size=1, max_size=64)


def test_sequence_validation():
    with pytest.raises(ValueError):
        BinarySequence([0, 2])
    with pytest.raises(ValueError):
        BinarySequence([])
    s = BinarySequence([1, 0, 1])
    with pytest.raises(ValueError):
        s.bits[0] = 0


def test_dhl_at_5():
    s1, s2, s3 = dhl_sequences(build_params(5))
    assert str(s2) == "01010"
    assert str(s3) == "00101"
    assert support(s1) == {1, 2}
    assert support(s3) == {2, 4}


@pytest.mark.parametrize("p", admissible_primes(500))
def test_dhl_weights(p):
    for s in dhl_sequences(build_params(p)):
        assert s.weight == (p - 1) // 2


def test_shift_examples():
    _, s2, _ = dhl_sequences(build_params(5))
    assert shift(s2, 0) == s2
    assert shift(s2, 5) == s2
    assert support(shift(s2, 4)) == {2, 4}
    assert support(complement(shift(s2, 4))) == {0, 1, 3}


@given(bitlists, st.integers(-200, 200), st.integers(-200, 200))
def test_shift_composes(bits, a, b):
    s = BinarySequence(bits)
    n = len(bits)
    assert shift(shift(s, a), b) == shift(s, (a + b) % n)
    assert support(shift(s, a)) == {(t - a) % n for t in support(s)}


@given(bitlists)
def test_complement_involution(bits):
    s = BinarySequence(bits)
    assert complement(complement(s)) == s
    assert complement(s).weight == len(bits) - s.weight


def test_complement_all_zero():
    assert str(complement(BinarySequence([0] * 6))) == "111111"


def test_interleave_small():
    s = BinarySequence([1, 0, 1])
    assert interleave([s]) == s
    assert str(interleave([BinarySequence([0, 0]), BinarySequence([1, 1])])) == "0101"
    with pytest.raises(ValueError):
        interleave([BinarySequence([0, 0]), BinarySequence([1, 1, 1])])


@given(st.integers(1, 6), st.integers(1, 12), st.data())
def test_interleave_roundtrip(m, n, data):
    cols = [BinarySequence(data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))) for _ in range(m)]
    u = interleave(cols)
    assert u.period == m * n
    for i in range(n):
        for j in range(m):
            assert u[i * m + j] == cols[j][i]
    assert deinterleave(u, m) == cols


def test_bvector():
    assert str(BVector.parse("0101")) == "0101"
    assert BVector.parse("0101").complement() == BVector.parse("1010")
    for bad in ("0110", "0001", "010", "01a1"):
        with pytest.raises(ValueError):
            BVector.parse(bad)


@pytest.mark.parametrize(
    "b, supports",
    [("0101", [{2, 4}, {0, 1, 3}, {3, 4}, {1, 2, 3}]), ("0000", [{2, 4}, {2, 4}, {3, 4}, {0, 4}])],
)
def test_columns_at_5(b, supports):
    cols = construct_columns(build_params(5), BVector.parse(b))
    assert [support(c) for c in cols] == supports


def test_weights_at_5():
    P = build_params(5)
    assert construct_u(P, BVector.parse("0101")).weight == 10
    assert construct_u(P, BVector.parse("0000")).weight == 8


@pytest.mark.parametrize("p", admissible_primes(500))
def test_construct_matches_set_oracle(p):
    P = build_params(p)
    for b in ADMISSIBLE_B:
        u = construct_u(P, b)
        assert u.period == 4 * p
        assert list(u.bits) == brute_u(p, P.g, b.as_tuple())
        assert u.weight == sum(len(c) for c in column_supports(p, P.g, b.as_tuple()))
        assert construct_u(P, b.complement()) == complement(u)
        m = 2 ** (4 * p) - 1
        # bit complement negates U(2) modulo 2^N - 1, so the gcd is unchanged
        assert (evaluate_U2(complement(u)) + evaluate_U2(u)) % m == 0


def test_construct_rejects_bad_b():
    with pytest.raises(ValueError):
        construct_u(build_params(5), (0, 1, 1, 0))


@given(bitlists)
def test_text_format_roundtrip(bits):
    s = BinarySequence(bits)
    assert loads(dumps(s)) == s


def test_text_format_exact(tmp_path):
    s = BinarySequence([1, 0, 0, 1])
    assert dumps(s) == "N=4\n1001\n"
    path = tmp_path / "s.txt"
    write_sequence(s, path)
    assert path.read_bytes() == b"N=4\n1001\n"
    assert read_sequence(path) == s


@pytest.mark.parametrize(
    "text",
    ["N=4\n1001", "N=4\n101\n", "N=4\n1021\n", "n=4\n1001\n", "N=4\n1001\n\n", "N=0\n\n", "N=4 \n1001\n", "N=x\n1\n"],
)
def test_text_format_rejects(text):
    with pytest.raises(SequenceFormatError):
        loads(text)


def test_bits_are_dense_uint8():
    u = construct_u(build_params(13), BVector.parse("0101"))
    assert u.bits.dtype == np.uint8 and u.bits.shape == (52,)
