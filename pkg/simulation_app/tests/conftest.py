"""
Shared fixtures for simulation_app tests.
"""
import numpy as np
import pytest

from simulation_app.dynamics import ModelParams
from simulation_app.lattice import InitMode, new_lattice


@pytest.fixture
def small_params():
    """
    Fixture providing quick-running parameters on an 8 x 8 lattice.
    """
    return ModelParams(
        beta=1.7, alpha=10.0, coupling=1.0, side_length=8,
        sweeps=600, warmup=100, delta_t=5, seed=7,
    )


@pytest.fixture
def rng():
    """
    Fixture providing a seeded generator.
    """
    return np.random.default_rng(12345)


@pytest.fixture
def all_up_lattice():
    """
    Fixture providing a 4 x 4 lattice with every spin +1.
    """
    return new_lattice(4, InitMode.ALL_UP)


@pytest.fixture
def simulate_options(tmp_path):
    """
    Fixture providing call_command keyword arguments for a small run.
    """
    return {
        'size': 8,
        'sweeps': 1200,
        'warmup': 200,
        'delta_t': 2,
        'seed': 11,
        'max_lag': 40,
        'fit_window': '1,40',
        'out': str(tmp_path / 'run'),
    }
