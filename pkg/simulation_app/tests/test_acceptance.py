"""
Full-size runs with the reference parameters. Each seed takes minutes, so
these are marked slow and only run with `pytest -m slow`.
"""
import numpy as np
import pytest

from simulation_app.config import build_experiment_config
from simulation_app.experiments import compute_experiment


SEEDS = range(1, 11)

pytestmark = pytest.mark.slow


@pytest.fixture(scope='module')
def outcomes():
    """
    Fixture running the reference model once per seed.
    """
    results = []
    for seed in SEEDS:
        config = build_experiment_config({
            'beta': 1.7, 'alpha': 10.0, 'coupling': 1.0, 'size': 32,
            'sweeps': 1_000_000, 'warmup': 100_000, 'delta_t': 100,
            'max_lag': 150, 'fit_window': '1,150', 'mapping': 'm-diff', 'seed': seed,
        })
        results.append(compute_experiment(config, regime_window=1000))
    return results


class TestReferenceRuns:
    """
    Test suite for the stylized facts of the reference model.
    """

    def test_volatility_decay_exponent(self, outcomes):
        """
        Test the power-law decay of the absolute-return ACF.

        Expects:
        - eta in [0.15, 0.45] for at least 8 of 10 seeds
        """
        etas = [o.report.powerlaw.eta for o in outcomes]

        assert sum(0.15 <= eta <= 0.45 for eta in etas) >= 8, etas

    def test_leptokurtic_and_not_normal(self, outcomes):
        """
        Test the return distribution.

        Expects:
        - kurtosis_raw > 3 and JB p < 0.05 for at least 9 of 10 seeds
        - Nonzero skewness in every report
        """
        passing = sum(
            o.report.kurtosis > 3 and o.report.jb_pvalue < 0.05 for o in outcomes)

        assert passing >= 9
        assert all(abs(o.report.skewness) > 0 for o in outcomes)

    def test_raw_returns_uncorrelated(self, outcomes):
        """
        Test the raw-return ACF for lags 5 .. 150.

        Expects:
        - Mean |rho| below 0.1
        - At least 80% of lags inside +-2 / sqrt(n)
        """
        for outcome in outcomes:
            curve = outcome.report.acf_returns
            rho = curve.rho[5:151]
            band = 2 / np.sqrt(curve.n)

            assert np.mean(np.abs(rho)) < 0.1
            assert np.mean(np.abs(rho) <= band) >= 0.8

    def test_regime_switching(self, outcomes):
        """
        Test the spread of per-1000-sweep volatility of m(t).

        Expects:
        - Most volatile window at least 5x the quietest
        """
        for outcome in outcomes:
            regimes = outcome.report.regimes
            assert regimes['contrast'] is None or regimes['contrast'] >= 5
