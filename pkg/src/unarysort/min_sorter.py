"""Ascending-order comparison-free sorting engine.

A bank of :class:`~unarysort.generators.FsmGenerator` units plays out the
inputs as right-aligned unary streams in lockstep.  The smallest input is
the first stream to emit a 0; a detection flip-flop latches per input, a
popcount of the newly latched bits gives the detection count, and a
priority encoder picks the write order among ties.  The detected value is
reconstructed from the generation-cycle counter (the unit's remainder is
already zero), so detecting at generation cycle ``c`` retrieves ``c - 1``.

While results drain to the output memory the generators stall, one write
per cycle; ties therefore cost one extra cycle each but never lose the
frozen cycle counter.  A full sort of N inputs takes ``max(values) + 1``
generation cycles plus N write cycles.
"""

from __future__ import annotations

from collections.abc import Sequence

from .bitstream import BinaryValue
from .generators import FsmGenerator
from .trace import CycleTrace, Phase, TraceEvent


def detection_signal(new_zero_bits: Sequence[int]) -> int:
    """Count of inputs newly detected this cycle (popcount of the latch inputs)."""
    return sum(1 for b in new_zero_bits if b)


def priority_encode(detected: Sequence[int]) -> int:
    """Lowest set index among the detected bits; ties resolve low-index-first."""
    for i, b in enumerate(detected):
        if b:
            return i
    raise ValueError("no detection: priority encoder input is all zeros")


def retrieve_value(elapsed_cycle: int, width: int) -> int:
    """Reconstruct a detected value from the generation-cycle count.

    The detected unit's register holds 0, so the value is the number of
    ones it emitted: ``elapsed_cycle - 1``.
    """
    if elapsed_cycle < 1:
        raise ValueError("detection cannot happen before the first cycle")
    value = elapsed_cycle - 1
    if value >= (1 << width):
        raise RuntimeError(
            f"retrieved value {value} exceeds {width}-bit range; simulation bug"
        )
    return value


class MinSortEngine:
    """Cycle-accurate model of the ascending-order sorter.

    Parameters
    ----------
    values : sequence of int
        Unsorted input words, at least two.
    width : int
        Data width in bits.

    Call :meth:`tick` to advance one clock, or :meth:`run` to completion.
    State mirrors the hardware: generator bank, detection flip-flops,
    output masks, a two-phase controller, and the output memory.  Engines
    share nothing and may run side by side; tick a given engine from one
    caller at a time.
    """

    arch = "min"

    def __init__(self, values: Sequence[int], width: int):
        if len(values) < 2:
            raise ValueError("need at least two inputs to sort")
        for v in values:
            BinaryValue(v, width)
        self.width = width
        self.n = len(values)
        self.units = [FsmGenerator(v, width) for v in values]
        self.detected = [False] * self.n   # detection flip-flops
        self.masked = [False] * self.n     # written to output; out of play
        self.pending: list[int] = []       # detected, awaiting their write cycle
        self.phase = Phase.SEARCH
        self.elapsed = 0                   # generation cycles; frozen in DRAIN
        self.cycle = 0                     # global clock
        self.out_ptr = 0
        self.outputs: list[int | None] = [None] * self.n
        self.trace = CycleTrace(arch=self.arch, n_inputs=self.n)

    @property
    def done(self) -> bool:
        return self.out_ptr == self.n

    def tick(self) -> None:
        """Advance one clock cycle."""
        if self.done:
            # post-completion ticks are no-ops, flagged in the trace; the
            # clock itself keeps counting
            self.cycle += 1
            self.trace.append(
                TraceEvent(self.cycle, Phase.IDLE, self.elapsed, 0, (), ())
            )
            return
        if self.phase is Phase.SEARCH:
            self._search_cycle()
        else:
            self._drain_cycle()

    def _search_cycle(self) -> None:
        self.cycle += 1
        self.elapsed += 1
        new_zero = [0] * self.n
        for i, unit in enumerate(self.units):
            if self.masked[i]:
                continue
            bit = unit.step()
            if bit == 0 and not self.detected[i]:
                self.detected[i] = True
                new_zero[i] = 1
        ds = detection_signal(new_zero)
        newly = tuple(i for i, b in enumerate(new_zero) if b)
        if ds:
            self.pending = list(newly)
            self.phase = Phase.DRAIN
        self.trace.append(
            TraceEvent(self.cycle, Phase.SEARCH, self.elapsed, ds, newly, ())
        )

    def _drain_cycle(self) -> None:
        self.cycle += 1
        onehot = [0] * self.n
        for i in self.pending:
            onehot[i] = 1
        index = priority_encode(onehot)
        self.pending.remove(index)
        value = retrieve_value(self.elapsed, self.width)
        address = self.out_ptr
        self.outputs[address] = value
        self.out_ptr += 1
        self.masked[index] = True
        if not self.pending:
            self.phase = Phase.SEARCH
        self.trace.append(
            TraceEvent(
                self.cycle, Phase.DRAIN, self.elapsed, 0, (), ((address, value),)
            )
        )

    def run(self) -> list[int]:
        """Tick until every input has been written; returns the sorted outputs."""
        while not self.done:
            self.tick()
        return list(self.outputs)


def sort_ascending(
    values: Sequence[int], width: int
) -> tuple[list[int], CycleTrace]:
    """Sort by iteratively detecting the minimum; returns (outputs, trace)."""
    engine = MinSortEngine(values, width)
    outputs = engine.run()
    return outputs, engine.trace
