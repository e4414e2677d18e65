import itertools

import pytest

from unarysort.cost import (
    Architecture,
    DEFAULT_WEIGHTS,
    ResourceCount,
    TABLE_M,
    TABLE_N,
    WeightSet,
    cost_table,
    gate_equiv,
    resources,
    score,
)

GRID = [(n, m) for n in TABLE_N for m in TABLE_M]


def _perturbed_corners(radius):
    names = list(vars(DEFAULT_WEIGHTS))
    for factors in itertools.product((1 - radius, 1 + radius), repeat=len(names)):
        yield WeightSet(
            **{n: getattr(DEFAULT_WEIGHTS, n) * f for n, f in zip(names, factors)}
        )


class TestResourceCount:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ResourceCount(registers_bits=-1)

    def test_batcher_cas_blocks(self):
        assert resources(Architecture.BATCHER, 8, 8).cas_blocks == 24

    def test_degenerate_config_rejected(self):
        with pytest.raises(ValueError):
            resources(Architecture.MIN_SORTER, 1, 8)
        with pytest.raises(ValueError):
            resources(Architecture.MIN_SORTER, 8, 0)
        with pytest.raises(ValueError):
            resources(Architecture.BATCHER, 6, 8)

    def test_min_sorter_has_no_value_mux(self):
        rc = resources(Architecture.MIN_SORTER, 8, 8)
        assert rc.mux_inputs == 0
        assert resources(Architecture.MAX_SORTER, 8, 8).mux_inputs == 64


class TestWeightSet:
    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            WeightSet(register_bit=0)

    def test_gate_equiv_zero(self):
        assert gate_equiv(ResourceCount()) == 0

    def test_linearity(self):
        rc = resources(Architecture.MIN_SORTER, 8, 16)
        assert gate_equiv(rc, DEFAULT_WEIGHTS.scaled(2.0)) == pytest.approx(
            2 * gate_equiv(rc)
        )


class TestOrdering:
    def test_min_below_max_at_wide_words(self):
        assert score(Architecture.MIN_SORTER, 8, 32) < score(
            Architecture.MAX_SORTER, 8, 32
        )

    def test_grid_sweep_default_weights(self):
        for n, m in GRID:
            s_min = score(Architecture.MIN_SORTER, n, m)
            s_max = score(Architecture.MAX_SORTER, n, m)
            s_bat = score(Architecture.BATCHER, n, m)
            assert s_min < s_max < s_bat, (n, m)

    def test_cost_table_shape_and_verdicts(self):
        rows = cost_table()
        assert len(rows) == 18
        assert all(row["ordering_ok"] for row in rows)

    def test_stability_under_half_weight_perturbation(self):
        # the mux-vs-adder structural gap carries any +/-50% weight swing
        # once the input count reaches 16
        for weights in _perturbed_corners(0.5):
            for n, m in GRID:
                if n < 16:
                    continue
                assert score(Architecture.MIN_SORTER, n, m, weights) < score(
                    Architecture.MAX_SORTER, n, m, weights
                ), (n, m)

    def test_stability_at_eight_inputs(self):
        # at N=8 the margin is one adder vs an 8-lane mux; +/-20% holds
        for weights in _perturbed_corners(0.2):
            for m in TABLE_M:
                assert score(Architecture.MIN_SORTER, 8, m, weights) < score(
                    Architecture.MAX_SORTER, 8, m, weights
                )


class TestMonotonicity:
    @pytest.mark.parametrize("arch", list(Architecture))
    def test_non_decreasing_in_n_and_m(self, arch):
        for m in TABLE_M:
            values = [score(arch, n, m) for n in TABLE_N]
            assert values == sorted(values)
        for n in TABLE_N:
            values = [score(arch, n, m) for m in TABLE_M]
            assert values == sorted(values)
