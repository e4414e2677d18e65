"""Run all three sorter architectures on shared inputs and compare.

The min engine sorts ascending, the max engine descending, and the Batcher
CAS network ascending; on any input the three must agree up to reversal.
The engines also report their cycle costs, which follow closed forms.
"""

import random

from unarysort import batcher_sort, build_bitonic_network, sort_ascending, sort_descending

WIDTH = 8


def compare(values):
    ascending, min_trace = sort_ascending(values, WIDTH)
    descending, max_trace = sort_descending(values, WIDTH)
    network = batcher_sort(values, WIDTH)
    assert ascending == list(reversed(descending)) == network == sorted(values)
    return ascending, min_trace.total_cycles(), max_trace.total_cycles()


def main():
    rng = random.Random(99)
    print("input vector                     sorted                          min-cyc max-cyc")
    for _ in range(5):
        values = [rng.randrange(256) for _ in range(8)]
        outputs, min_cycles, max_cycles = compare(values)
        print(f"{str(values):32s} {str(outputs):32s} {min_cycles:6d} {max_cycles:7d}")

    print()
    print("min engine total = (max value + 1) + N: cheap for small values")
    print("max engine total = (2^m - min value) + N: cheap for large values")
    print()
    network = build_bitonic_network(8)
    print(f"The Batcher alternative spends no cycles searching but wires")
    print(f"{network.cas_blocks} CAS blocks over {len(network.stages)} stages:")
    print(network.describe())


if __name__ == "__main__":
    main()
