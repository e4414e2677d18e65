"""Structural cost trends across input counts and data widths.

The model counts registers, ripple arithmetic, OR trees, encoder and mux
inputs, and CAS blocks, then weights them with coarse gate equivalents.
Only the ordering between architectures is meaningful; the decisive
structural gap is the max sorter's N-lane value-readout mux against the
min sorter's single value-rebuild adder.
"""

from unarysort.cost import Architecture, cost_table, resources

rows = cost_table()
print("n     m    min-sorter  max-sorter  batcher    cas   min<max<batcher")
for row in rows:
    print(
        f"{row['n']:<5d} {row['m']:<4d} {row['min_sorter']:10.0f}  "
        f"{row['max_sorter']:10.0f}  {row['batcher']:8.0f} {row['cas_blocks']:6d}"
        f"   {row['ordering_ok']}"
    )

print()
print("Block counts behind one cell (N=8, M=32):")
for arch in Architecture:
    print(f"  {arch.value:8s} {resources(arch, 8, 32)}")
