"""Structural hardware-cost model for the three sorter architectures.

The model counts blocks visible in the architectures and weights them with
coarse gate-equivalent factors.  It is deliberately transparent: the counts
are listed per architecture below, and only *orderings* between scores are
meaningful.  Absolute synthesis results (area in um^2, power) depend on the
cell library and tool flow and are out of scope.

Counting conventions, per architecture with N inputs of width M:

* Common to both iterative sorters: N M-bit value registers (the FSM design
  decrements them in place, the comparator design holds them for compare
  and readout), N detection flip-flops, N*M output memory bits, one M-bit
  cycle counter (generation counter vs shared down counter), an N-input
  detection adder, an N-input priority encoder, and pointer/controller
  bits.
* Min sorter (FSM generators): per input an M-bit conditional-decrement
  ripple (counted as comparator-class cells; a borrow chain and a compare
  chain are the same granularity) and an M-input OR-reduction tree; plus
  one shared M-bit adder that rebuilds the detected value from the cycle
  counter.  No value multiplexer: values come from the adder.
* Max sorter (comparator generators): per input an M-bit magnitude
  comparator (comparator cells plus its M-input combine chain, mirrored as
  OR inputs) and, because values are read out of the input registers, an
  N-to-1 M-bit-wide value multiplexer.
* Batcher network: the CAS blocks plus the 2N stream endpoints it cannot
  work without: N comparator-based generators feeding the lanes, one
  shared counter, and N output counters plus output registers to convert
  the sorted streams back to binary.

The structural gap between the iterative sorters is therefore the N*M-input
value mux (max sorter only) against one M-bit adder (min sorter only);
everything else pairs off.  That gap, not the weight choices, drives the
ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .batcher import cas_count
from .bitstream import MAX_WIDTH


class Architecture(Enum):
    MIN_SORTER = "min"      # FSM-generator, ascending
    MAX_SORTER = "max"      # comparator-generator, descending
    BATCHER = "batcher"     # unary CAS network


@dataclass(frozen=True)
class ResourceCount:
    """Block counts derived deterministically from (architecture, N, M)."""

    registers_bits: int = 0
    adder_bits: int = 0
    comparator_bits: int = 0
    or_inputs: int = 0
    encoder_inputs: int = 0
    mux_inputs: int = 0
    cas_blocks: int = 0

    def __post_init__(self):
        for name, count in vars(self).items():
            if count < 0:
                raise ValueError(f"{name} must be >= 0, got {count}")


@dataclass(frozen=True)
class WeightSet:
    """Gate-equivalent weight per resource category, all > 0.

    Defaults are typical NAND2-equivalent folklore values; only the
    ordering of weighted scores carries meaning.
    """

    register_bit: float = 4.0
    adder_bit: float = 5.0
    comparator_bit: float = 3.0
    or_input: float = 1.0
    encoder_input: float = 2.0
    mux_input: float = 1.0
    cas_block: float = 2.0

    def __post_init__(self):
        for name, w in vars(self).items():
            if w <= 0:
                raise ValueError(f"{name} must be > 0, got {w}")

    def scaled(self, factor: float) -> "WeightSet":
        return replace(
            self, **{name: w * factor for name, w in vars(self).items()}
        )


DEFAULT_WEIGHTS = WeightSet()


def _validate_config(n: int, m: int) -> None:
    if n < 2:
        raise ValueError(f"input count must be >= 2, got {n}")
    if not 1 <= m <= MAX_WIDTH:
        raise ValueError(f"width must be in 1..{MAX_WIDTH}, got {m}")


def _sorter_common(n: int, m: int) -> ResourceCount:
    pointer_bits = math.ceil(math.log2(n)) + 1
    return ResourceCount(
        registers_bits=(
            n * m        # value registers
            + n          # detection flip-flops
            + n * m      # output memory
            + m          # cycle counter
            + pointer_bits
            + 1          # controller state
        ),
        adder_bits=n + m,  # detection adder tree, cycle-counter increment
        encoder_inputs=n,
    )


def resources(arch: Architecture, n: int, m: int) -> ResourceCount:
    """Block counts for one architecture at configuration (N, M)."""
    _validate_config(n, m)
    if arch is Architecture.MIN_SORTER:
        base = _sorter_common(n, m)
        return replace(
            base,
            comparator_bits=n * m,          # conditional-decrement ripples
            or_inputs=n * m,                # per-unit OR-reduction trees
            adder_bits=base.adder_bits + m,  # value-retrieval adder
        )
    if arch is Architecture.MAX_SORTER:
        base = _sorter_common(n, m)
        return replace(
            base,
            comparator_bits=n * m,  # magnitude comparators
            or_inputs=n * m,        # their combine chains
            mux_inputs=n * m,       # value readout mux
        )
    if arch is Architecture.BATCHER:
        if n & (n - 1):
            raise ValueError(f"Batcher input count must be a power of two, got {n}")
        return ResourceCount(
            registers_bits=(
                n * m      # generator value registers
                + m        # shared down counter
                + n * m    # output counters
                + n * m    # output registers
            ),
            adder_bits=m + n * m,   # counter increment, output counters
            comparator_bits=n * m,  # generator comparators
            or_inputs=n * m,        # comparator combine chains
            cas_blocks=cas_count(n),
        )
    raise ValueError(f"unknown architecture: {arch!r}")


def gate_equiv(rc: ResourceCount, weights: WeightSet = DEFAULT_WEIGHTS) -> float:
    """Weighted block count; compare scores only against each other."""
    return (
        rc.registers_bits * weights.register_bit
        + rc.adder_bits * weights.adder_bit
        + rc.comparator_bits * weights.comparator_bit
        + rc.or_inputs * weights.or_input
        + rc.encoder_inputs * weights.encoder_input
        + rc.mux_inputs * weights.mux_input
        + rc.cas_blocks * weights.cas_block
    )


def score(arch: Architecture, n: int, m: int,
          weights: WeightSet = DEFAULT_WEIGHTS) -> float:
    return gate_equiv(resources(arch, n, m), weights)


TABLE_N = (8, 16, 32, 64, 128, 256)
TABLE_M = (8, 16, 32)


def cost_table(
    ns: tuple[int, ...] = TABLE_N,
    ms: tuple[int, ...] = TABLE_M,
    weights: WeightSet = DEFAULT_WEIGHTS,
) -> list[dict]:
    """Model scores per architecture over an (N, M) grid, with ordering verdicts."""
    rows = []
    for n in ns:
        for m in ms:
            s_min = score(Architecture.MIN_SORTER, n, m, weights)
            s_max = score(Architecture.MAX_SORTER, n, m, weights)
            s_bat = score(Architecture.BATCHER, n, m, weights)
            rows.append(
                {
                    "n": n,
                    "m": m,
                    "min_sorter": s_min,
                    "max_sorter": s_max,
                    "batcher": s_bat,
                    "cas_blocks": cas_count(n),
                    "ordering_ok": s_min < s_max < s_bat,
                }
            )
    return rows
