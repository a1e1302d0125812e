"""
Shared fixtures for stylized_facts_app tests.
"""
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from simulation_app.mapping import ReturnSeries, ReturnSource


FIXTURES = Path(__file__).parent / 'fixtures'


def write_prices(path, log_returns, start='2000-01-03', first_price=100.0):
    """
    Write a business-day price CSV whose log returns are `log_returns`.
    """
    prices = first_price * np.exp(np.concatenate([[0.0], np.cumsum(log_returns)]))
    frame = pd.DataFrame({
        'Date': pd.bdate_range(start, periods=prices.size).strftime('%Y-%m-%d'),
        'Open': prices,
        'Adj Close': prices,
    })
    frame.to_csv(path, index=False, float_format='%.17g')
    return path


@pytest.fixture
def synthetic_csv():
    """
    Fixture providing the shipped 100-row synthetic price file.
    """
    return FIXTURES / 'synthetic_prices.csv'


@pytest.fixture
def gaussian_prices_csv(tmp_path):
    """
    Fixture providing 2001 prices from seeded Gaussian log returns.
    """
    rng = np.random.default_rng(20)
    return write_prices(tmp_path / 'gaussian.csv', rng.normal(0.0, 0.01, 2000))


@pytest.fixture
def heavy_tailed_prices_csv(tmp_path):
    """
    Fixture providing 5001 prices whose log returns are Student-t with 3
    degrees of freedom, skewed by a handful of large drops.
    """
    rng = np.random.default_rng(21)
    returns = 0.005 * rng.standard_t(3, 5000)
    returns[rng.choice(5000, 25, replace=False)] -= 0.1
    return write_prices(tmp_path / 'heavy.csv', returns)


@pytest.fixture
def normal_returns():
    """
    Fixture providing a standardized-looking Gaussian return series.
    """
    rng = np.random.default_rng(7)
    return ReturnSeries(
        values=rng.standard_normal(3000), delta_t=1, source=ReturnSource.EMPIRICAL)
