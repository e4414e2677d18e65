"""Core value and bitstream types for unary computing.

A data word with bit-width ``m`` is encoded as a stream of ``2**m`` bits
containing exactly ``value`` ones.  Streams are stored in *emission order*:
``bits[0]`` is the bit produced in clock cycle 1.  A right-aligned stream
emits all of its ones first; written as a binary word (most recent bit
first, see :func:`written_str`) it reads ``0...01...1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

MAX_WIDTH = 32


class StreamAlignment(Enum):
    """Where the ones sit in an aligned stream, in emission order.

    RIGHT_ALIGNED streams emit their ones first; this is the only alignment
    the generators in this package produce.  LEFT_ALIGNED (ones emitted
    last) is kept to describe the conventional counter-based generator's
    output, which arrives in the opposite order.
    """

    RIGHT_ALIGNED = "right"
    LEFT_ALIGNED = "left"


@dataclass(frozen=True)
class BinaryValue:
    """An unsigned data word: ``0 <= value <= 2**width - 1``, 1 <= width <= 32."""

    value: int
    width: int

    def __post_init__(self):
        if not 1 <= self.width <= MAX_WIDTH:
            raise ValueError(f"width must be in 1..{MAX_WIDTH}, got {self.width}")
        if not 0 <= self.value < (1 << self.width):
            raise ValueError(
                f"value {self.value} not representable in {self.width} bits"
            )

    @property
    def fraction(self) -> float:
        """The word interpreted as a fraction of full scale (value / 2**width)."""
        return self.value / (1 << self.width)


@dataclass(frozen=True)
class UnaryStream:
    """A bit sequence in emission order (cycle 1 first)."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("stream bits must be 0 or 1")

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    @property
    def popcount(self) -> int:
        return sum(self.bits)


def stream_length(width: int) -> int:
    """Stream length for a data width: 2**width."""
    return 1 << width


def encode_right_aligned(value: int, width: int) -> UnaryStream:
    """Reference encoding: exactly ``value`` ones followed by zeros.

    This is the oracle every generator in the package is tested against.
    """
    v = BinaryValue(value, width)
    length = stream_length(width)
    return UnaryStream((1,) * v.value + (0,) * (length - v.value))


def decode(stream: UnaryStream) -> BinaryValue:
    """Recover the encoded word: popcount of the stream, width = log2(length).

    Rejects streams whose length is not a power of two (>= 2) and streams
    whose popcount is not representable (an all-ones stream encodes nothing).
    """
    length = len(stream)
    if length < 2 or length & (length - 1):
        raise ValueError(f"stream length {length} is not a power of two >= 2")
    width = length.bit_length() - 1
    count = stream.popcount
    if count >= length:
        raise ValueError(f"value {count} not representable in {width} bits")
    return BinaryValue(count, width)


def is_right_aligned(stream: UnaryStream) -> bool:
    """True iff no 1 follows a 0 in emission order."""
    seen_zero = False
    for b in stream:
        if b == 0:
            seen_zero = True
        elif seen_zero:
            return False
    return True


def alignment_of(stream: UnaryStream) -> StreamAlignment | None:
    """Classify an aligned stream; None if its ones are not contiguous.

    Constant streams (all zeros or all ones) classify as RIGHT_ALIGNED.
    """
    if is_right_aligned(stream):
        return StreamAlignment.RIGHT_ALIGNED
    if is_right_aligned(UnaryStream(stream.bits[::-1])):
        return StreamAlignment.LEFT_ALIGNED
    return None


def emission_str(stream: UnaryStream) -> str:
    """The stream as a 0/1 string in emission order (cycle 1 leftmost)."""
    return "".join(str(b) for b in stream)


def written_str(stream: UnaryStream) -> str:
    """The stream as a 0/1 string in written order (most recent bit first).

    A right-aligned stream reads ``0...01...1`` in this form.
    """
    return "".join(str(b) for b in reversed(stream.bits))
