import itertools
import math

import numpy as np
import pytest
from scipy.special import expit

from core.exceptions import ConfigurationError
from simulation_app.dynamics import (
    ModelParams,
    apply_updates,
    draw_updates,
    local_field,
    run_simulation,
    sweep,
    update_probability,
)
from simulation_app.lattice import InitMode, SiteIndex, SpinLattice, new_lattice


def reference_updates(grid, params, sites, uniforms):
    """
    Naive heat-bath updates: recounts the magnetization every step.
    """
    spins = np.array(grid, dtype=np.int64)
    side = spins.shape[0]
    for site, u in zip(sites, uniforms):
        row, col = divmod(int(site), side)
        neighbor_sum = (
            spins[(row - 1) % side, col] + spins[(row + 1) % side, col]
            + spins[row, (col - 1) % side] + spins[row, (col + 1) % side]
        )
        m = spins.sum() / spins.size
        h = params.coupling * neighbor_sum - params.alpha * spins[row, col] * abs(m)
        spins[row, col] = 1 if u < expit(2.0 * params.beta * h) else -1
    return spins


class TestModelParams:
    """
    Test suite for ModelParams validation.
    """

    def test_defaults_match_reference_run(self):
        """
        Test the default parameters.

        Expects:
        - alpha=10, beta=1.7, J=1, L=32, 10^6 sweeps, 10^5 warm-up, delta_t=100
        """
        params = ModelParams()

        assert (params.alpha, params.beta, params.coupling) == (10.0, 1.7, 1.0)
        assert (params.side_length, params.sweeps, params.warmup, params.delta_t) == (
            32, 1_000_000, 100_000, 100)

    @pytest.mark.parametrize('overrides', [
        {'sweeps': 100, 'warmup': 100},
        {'sweeps': 50, 'warmup': 100},
        {'delta_t': 0},
        {'beta': -1.0},
        {'alpha': -0.5},
        {'side_length': 1},
        {'beta': float('nan')},
    ])
    def test_invalid_params_rejected(self, overrides):
        """
        Test invalid parameter combinations.

        Expects:
        - ConfigurationError at construction
        """
        values = {'sweeps': 200, 'warmup': 10, 'delta_t': 5, 'side_length': 4}
        values.update(overrides)

        with pytest.raises(ConfigurationError):
            ModelParams(**values)

    def test_return_window_check(self):
        """
        Test the minimum recorded length for returns.

        Expects:
        - ConfigurationError when sweeps - warmup < 2 * delta_t
        """
        params = ModelParams(side_length=4, sweeps=110, warmup=100, delta_t=10)

        with pytest.raises(ConfigurationError):
            params.check_return_window()


class TestLocalField:
    """
    Test suite for the Bornholdt local field.
    """

    def test_all_up_with_frustration(self, all_up_lattice):
        """
        Test the field on an all-up lattice with alpha=10.

        Expects:
        - h = 4 - 10 = -6
        """
        h = local_field(all_up_lattice, SiteIndex(1, 2), alpha=10.0, coupling=1.0, m=1.0)

        assert h == -6.0

    def test_no_frustration(self, all_up_lattice):
        """
        Test the field with alpha=0.

        Expects:
        - h = 4
        """
        assert local_field(all_up_lattice, SiteIndex(0, 0), 0.0, 1.0, 1.0) == 4.0

    def test_minority_site(self):
        """
        Test a down spin surrounded by up spins at m = 0.5.

        Expects:
        - h = 4 - 10 * (-1) * 0.5 = 9
        """
        lattice = SpinLattice.from_grid([
            [1, 1, 1, 1],
            [1, -1, 1, 1],
            [1, 1, 1, 1],
            [1, 1, 1, 1],
        ])

        h = local_field(lattice, SiteIndex(1, 1), alpha=10.0, coupling=1.0, m=0.5)

        assert h == 9.0

    def test_uses_absolute_magnetization(self):
        """
        Test that the sign of m does not enter the frustration term.

        Expects:
        - Same h for m = 0.5 and m = -0.5
        """
        lattice = SpinLattice.from_grid([[1, -1], [-1, -1]])
        site = SiteIndex(0, 0)

        assert local_field(lattice, site, 10.0, 1.0, 0.5) == local_field(
            lattice, site, 10.0, 1.0, -0.5)


class TestUpdateProbability:
    """
    Test suite for the heat-bath probability.
    """

    def test_zero_field(self):
        """
        Test h = 0.

        Expects:
        - p = 0.5
        """
        assert update_probability(0.0, 1.7) == 0.5

    def test_infinite_temperature(self):
        """
        Test beta = 0.

        Expects:
        - p = 0.5 for any field
        """
        for h in (-8.0, -1.0, 3.0, 100.0):
            assert update_probability(h, 0.0) == 0.5

    def test_reference_value(self):
        """
        Test beta = 1.7, h = 1.

        Expects:
        - p = 1 / (1 + e^-3.4) ~ 0.967705
        """
        assert update_probability(1.0, 1.7) == pytest.approx(0.967705, abs=1e-6)

    def test_saturates_without_overflow(self):
        """
        Test very large |beta * h|.

        Expects:
        - p = 1 and p = 0 without overflow errors
        """
        assert update_probability(1e6, 50.0) == 1.0
        assert update_probability(-1e6, 50.0) == 0.0

    def test_complementary_and_monotone(self):
        """
        Test p(h) + p(-h) = 1 and monotonicity in h.

        Expects:
        - Complement to floating-point precision
        - Non-decreasing sequence over increasing h
        """
        fields = np.linspace(-20, 20, 401)
        values = [update_probability(h, 0.8) for h in fields]

        for h, p in zip(fields, values):
            assert p + update_probability(-h, 0.8) == pytest.approx(1.0, abs=1e-15)
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_non_finite_rejected(self):
        """
        Test non-finite input.

        Expects:
        - ValueError
        """
        with pytest.raises(ValueError):
            update_probability(float('inf'), 1.0)


class TestSweep:
    """
    Test suite for single sweeps and the compiled kernel.
    """

    def test_ordered_lattice_stays_ordered(self, rng):
        """
        Test beta = 50, alpha = 0 from all up.

        Expects:
        - Lattice unchanged after many sweeps
        """
        params = ModelParams(beta=50.0, alpha=0.0, side_length=4, sweeps=20, warmup=0, delta_t=1)
        lattice = new_lattice(4, InitMode.ALL_UP)

        sweep(lattice, params, rng, count=20)

        assert lattice.up_count == 16
        assert (lattice.spins == 1).all()

    def test_same_seed_same_state(self, small_params):
        """
        Test determinism of sweeps.

        Expects:
        - Identical spins after k sweeps for the same seed
        """
        states = []
        for _ in range(2):
            generator = np.random.default_rng(99)
            lattice = new_lattice(8, InitMode.RANDOM, generator)
            sweep(lattice, small_params, generator, count=25)
            states.append(lattice.spins.copy())

        assert np.array_equal(states[0], states[1])

    def test_lattice_stays_valid(self, small_params, rng):
        """
        Test the lattice invariants after sweeps with frustration.

        Expects:
        - Spins in {+1, -1} and up_count equal to a recount
        """
        lattice = new_lattice(8, InitMode.RANDOM, rng)

        for _ in range(10):
            sweep(lattice, small_params, rng)
            assert set(np.unique(lattice.spins)) <= {1, -1}
            assert lattice.up_count == lattice.recount()

    def test_mismatched_lattice_rejected(self, small_params, rng):
        """
        Test a lattice whose size differs from the params.

        Expects:
        - ConfigurationError
        """
        with pytest.raises(ConfigurationError):
            sweep(new_lattice(4), small_params, rng)

    def test_infinite_temperature_is_coin_flip(self, rng):
        """
        Test beta = 0 over 10^5 single updates.

        Expects:
        - Fraction of +1 outcomes within 3 sigma of 0.5
        """
        params = ModelParams(beta=0.0, alpha=10.0, side_length=10, sweeps=1000, warmup=0, delta_t=1)
        lattice = new_lattice(10, InitMode.RANDOM, rng)
        sites, uniforms = draw_updates(rng, lattice.size, 1000)

        ups = 0
        for k in range(sites.size):
            apply_updates(lattice, params, sites[k:k + 1], uniforms[k:k + 1])
            ups += lattice.spins[sites[k]] == 1

        n = sites.size
        assert abs(ups / n - 0.5) <= 3 * math.sqrt(0.25 / n)

    @pytest.mark.parametrize('alpha, beta', [(10.0, 1.7), (0.0, 0.4), (4.0, 0.9)])
    def test_kernel_matches_naive_reference(self, rng, alpha, beta):
        """
        Test the compiled kernel against a naive 4 x 4 implementation fed
        the same random draws.

        Expects:
        - Identical spin grids after 200 sweeps
        """
        params = ModelParams(beta=beta, alpha=alpha, side_length=4, sweeps=200, warmup=0, delta_t=1)
        lattice = new_lattice(4, InitMode.RANDOM, rng)
        start = lattice.grid().copy()
        sites, uniforms = draw_updates(rng, lattice.size, 200)

        apply_updates(lattice, params, sites, uniforms)
        expected = reference_updates(start, params, sites, uniforms)

        assert np.array_equal(lattice.grid(), expected)
        assert lattice.up_count == lattice.recount()

    def test_small_lattice_matches_boltzmann_distribution(self):
        """
        Test the stationary distribution on a 2 x 2 lattice with alpha = 0,
        beta = 0.5 against exact enumeration of all 16 states.

        Samples are taken every 1000 single updates over 4 * 10^6 updates,
        far apart compared with the chain's switching time.

        Expects:
        - Each state's count within 3 sigma (+1 count) of the exact
          multinomial expectation
        """
        beta = 0.5
        params = ModelParams(beta=beta, alpha=0.0, side_length=2, sweeps=10, warmup=0, delta_t=1)

        weights = []
        states = list(itertools.product((1, -1), repeat=4))
        for state in states:
            lattice = SpinLattice.from_grid(np.reshape(state, (2, 2)))
            energy_term = sum(
                lattice.spin(SiteIndex.from_flat(i, 2))
                * local_field(lattice, SiteIndex.from_flat(i, 2), 0.0, 1.0, 0.0)
                for i in range(4)
            )
            weights.append(math.exp(beta * energy_term / 2.0))
        exact = np.array(weights) / sum(weights)

        generator = np.random.default_rng(2024)
        lattice = new_lattice(2, InitMode.RANDOM, generator)
        index = {state: i for i, state in enumerate(states)}
        counts = np.zeros(16)
        samples = 4000
        for _ in range(samples):
            sweep(lattice, params, generator, count=250)
            counts[index[tuple(int(s) for s in lattice.spins)]] += 1

        expected = samples * exact
        sigma = np.sqrt(samples * exact * (1 - exact))
        assert (np.abs(counts - expected) <= 3 * sigma + 1).all()


class TestRunSimulation:
    """
    Test suite for the full simulation loop.
    """

    def test_series_length_and_range(self, small_params):
        """
        Test the recorded series.

        Expects:
        - Length sweeps - warmup
        - Every value in [-1, 1]
        - Sweep numbers warmup+1 .. sweeps
        """
        result = run_simulation(small_params)
        series = result.series

        assert len(series) == 500
        assert np.all(np.abs(series.values) <= 1.0)
        assert series.sweep_numbers[0] == 101
        assert series.sweep_numbers[-1] == 600

    def test_single_recorded_sweep(self):
        """
        Test sweeps = warmup + 1.

        Expects:
        - Series of length 1
        """
        params = ModelParams(side_length=4, sweeps=51, warmup=50, delta_t=1, seed=1)

        assert len(run_simulation(params).series) == 1

    def test_deterministic(self, small_params):
        """
        Test that (params, seed) determine every recorded value.

        Expects:
        - Identical series for two runs
        - Different series for a different seed
        """
        first = run_simulation(small_params).series.values
        second = run_simulation(small_params).series.values
        other = run_simulation(
            ModelParams(**{**small_params.as_dict(), 'seed': 8})).series.values

        assert np.array_equal(first, second)
        assert not np.array_equal(first, other)

    def test_block_size_and_schedule_do_not_change_trajectory(self, small_params):
        """
        Test that snapshots split blocks without touching the random stream.

        Expects:
        - Same series with and without a snapshot schedule
        """
        plain = run_simulation(small_params, block_sweeps=64).series.values
        with_snapshots = run_simulation(
            small_params, [0, 1, 63, 64, 65, 300, 600], block_sweeps=64)

        assert np.array_equal(plain, with_snapshots.series.values)
        assert sorted(with_snapshots.snapshots) == [0, 1, 63, 64, 65, 300, 600]

    def test_snapshots_match_trajectory(self, small_params):
        """
        Test snapshot contents.

        Expects:
        - Sweep 0 is the seeded initial lattice
        - The final snapshot's magnetization equals the last recorded value
        """
        result = run_simulation(small_params, [0, 600])
        initial = new_lattice(8, InitMode.RANDOM, np.random.default_rng(small_params.seed))

        assert np.array_equal(result.snapshots[0].spins, initial.spins)
        assert result.snapshots[600].magnetization() == result.series.values[-1]

    def test_schedule_outside_run_rejected(self, small_params):
        """
        Test a snapshot index beyond the run.

        Expects:
        - ConfigurationError before any work
        """
        with pytest.raises(ConfigurationError):
            run_simulation(small_params, [601])

    def test_series_is_immutable(self, small_params):
        """
        Test that the produced series cannot be modified.

        Expects:
        - ValueError on assignment
        """
        series = run_simulation(small_params).series

        with pytest.raises(ValueError):
            series.values[0] = 0.0

    def test_pure_ising_orders_below_critical_temperature(self):
        """
        Test alpha = 0, beta = 1.7 on a 16 x 16 lattice started all up.

        Expects:
        - Mean |m| over recorded sweeps > 0.9
        """
        params = ModelParams(
            beta=1.7, alpha=0.0, side_length=16, sweeps=5000, warmup=4000,
            delta_t=100, seed=1,
        )

        values = run_simulation(params, init=InitMode.ALL_UP).series.values

        assert np.mean(np.abs(values)) > 0.9

    @pytest.mark.slow
    def test_reference_run_length(self):
        """
        Test the full default-parameter run.

        Expects:
        - 900,000 recorded values, all in [-1, 1]
        """
        series = run_simulation(ModelParams(seed=3)).series

        assert len(series) == 900_000
        assert np.all(np.abs(series.values) <= 1.0)
