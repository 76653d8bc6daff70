"""Periodic binary sequences and the interleaved period-4p construction."""

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .numtheory import ConstructionParams


class SequenceFormatError(ValueError):
    pass


class BinarySequence:
    """One period of a binary sequence, stored as a read-only uint8 vector."""

    __slots__ = ("_bits",)

    def __init__(self, bits):
        arr = np.array(bits, dtype=np.int64).ravel()
        if arr.size == 0:
            raise ValueError("a sequence needs period >= 1")
        if np.any((arr != 0) & (arr != 1)):
            raise ValueError("bits must be 0 or 1")
        arr = arr.astype(np.uint8)
        arr.setflags(write=False)
        self._bits = arr

    @classmethod
    def from_support(cls, period: int, support) -> "BinarySequence":
        arr = np.zeros(period, dtype=np.uint8)
        for t in support:
            arr[t % period] = 1
        return cls(arr)

    @classmethod
    def from_string(cls, s: str) -> "BinarySequence":
        return cls([int(c) for c in s])

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @property
    def period(self) -> int:
        return int(self._bits.shape[0])

    @property
    def weight(self) -> int:
        return int(self._bits.sum())

    def __len__(self):
        return self.period

    def __getitem__(self, i):
        return int(self._bits[i % self.period])

    def __eq__(self, other):
        if not isinstance(other, BinarySequence):
            return NotImplemented
        return self.period == other.period and bool(np.array_equal(self._bits, other._bits))

    def __hash__(self):
        return hash(self._bits.tobytes())

    def __str__(self):
        return "".join("1" if b else "0" for b in self._bits)

    def __repr__(self):
        s = str(self)
        if len(s) > 40:
            s = s[:37] + "..."
        return f"BinarySequence(N={self.period}, {s})"


def support(s: BinarySequence) -> set[int]:
    return {int(t) for t in np.flatnonzero(s.bits)}


def shift(s: BinarySequence, e: int) -> BinarySequence:
    """Cyclic left shift: result_i = s_{i+e}."""
    return BinarySequence(np.roll(s.bits, -(e % s.period)))


def complement(s: BinarySequence) -> BinarySequence:
    return BinarySequence(1 - s.bits)


def add_bit(s: BinarySequence, bit: int) -> BinarySequence:
    return complement(s) if bit & 1 else s


def interleave(columns) -> BinarySequence:
    """Row-major read of the N x M matrix whose columns are ``columns``."""
    columns = list(columns)
    if not columns:
        raise ValueError("need at least one column")
    n = columns[0].period
    if any(c.period != n for c in columns):
        raise ValueError("all columns must share one period, got " + str([c.period for c in columns]))
    return BinarySequence(np.stack([c.bits for c in columns], axis=1).ravel())


def deinterleave(s: BinarySequence, m: int) -> list[BinarySequence]:
    if m < 1 or s.period % m:
        raise ValueError(f"period {s.period} is not a multiple of {m}")
    mat = s.bits.reshape(s.period // m, m)
    return [BinarySequence(mat[:, j]) for j in range(m)]


@dataclass(frozen=True)
class BVector:
    """Column offsets (b0, b1, b2, b3); the construction needs b0 == b2 and b1 == b3."""

    b0: int
    b1: int
    b2: int
    b3: int

    def __post_init__(self):
        bits = self.as_tuple()
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"b entries must be bits, got {bits}")
        if self.b0 != self.b2:
            raise ValueError(f"b={self} violates b0 == b2")
        if self.b1 != self.b3:
            raise ValueError(f"b={self} violates b1 == b3")

    @classmethod
    def parse(cls, text: str) -> "BVector":
        text = text.strip()
        if len(text) != 4 or any(c not in "01" for c in text):
            raise ValueError(f"b must be 4 characters from {{0,1}}, got {text!r}")
        return cls(*(int(c) for c in text))

    def as_tuple(self):
        return (self.b0, self.b1, self.b2, self.b3)

    def complement(self) -> "BVector":
        return BVector(*(1 - b for b in self.as_tuple()))

    def __str__(self):
        return "".join(str(b) for b in self.as_tuple())


ADMISSIBLE_B = tuple(BVector.parse(t) for t in ("0101", "1010", "0000", "1111"))


def dhl_sequences(params: ConstructionParams):
    """Ding-Helleseth-Lam sequences (s1, s2, s3) with supports D0|D1, D0|D3, D1|D2."""
    D = params.classes
    p = params.p
    return (
        BinarySequence.from_support(p, D[0] | D[1]),
        BinarySequence.from_support(p, D[0] | D[3]),
        BinarySequence.from_support(p, D[1] | D[2]),
    )


def construct_columns(params: ConstructionParams, b: BVector) -> list[BinarySequence]:
    s1, s2, s3 = dhl_sequences(params)
    p, d = params.p, params.d
    return [
        add_bit(s3, b.b0),
        add_bit(shift(s2, d % p), b.b1),
        add_bit(shift(s1, 2 * d % p), b.b2),
        add_bit(shift(s1, 3 * d % p), b.b3),
    ]


def construct_u(params: ConstructionParams, b: BVector) -> BinarySequence:
    """The period-4p interleaved sequence with optimal autocorrelation magnitude."""
    if not isinstance(b, BVector):
        b = BVector(*b)
    return interleave(construct_columns(params, b))


# -- text format: "N=<period>\n<bits>\n" --------------------------------------

def dumps(s: BinarySequence) -> str:
    return f"N={s.period}\n{s}\n"


def loads(text: str) -> BinarySequence:
    lines = text.split("\n")
    if len(lines) != 3 or lines[2] != "":
        raise SequenceFormatError("expected exactly two newline-terminated lines")
    head, body = lines[0], lines[1]
    if not head.startswith("N=") or not (head[2:].isascii() and head[2:].isdigit()):
        raise SequenceFormatError(f"bad header line {head!r}")
    n = int(head[2:])
    if n < 1:
        raise SequenceFormatError("period must be positive")
    if len(body) != n:
        raise SequenceFormatError(f"header says N={n} but {len(body)} bits follow")
    if any(c not in "01" for c in body):
        raise SequenceFormatError("bit line may only contain '0' and '1'")
    return BinarySequence.from_string(body)


def write_sequence(s: BinarySequence, path) -> None:
    Path(path).write_text(dumps(s), encoding="ascii")


def read_sequence(path) -> BinarySequence:
    try:
        text = Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise SequenceFormatError("sequence file is not ASCII") from exc
    return loads(text)
