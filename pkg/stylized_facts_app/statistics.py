"""
Return statistics: log returns, autocorrelation, power-law decay fit and
moment-based normality measures.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from core.exceptions import (
    ConfigurationError,
    DegenerateVarianceError,
    InsufficientDataError,
    PriceDomainError,
)
from simulation_app.mapping import ReturnSeries, ReturnSource


logger = logging.getLogger(__name__)

MIN_FIT_POINTS = 5


@dataclass(frozen=True)
class AcfCurve:
    lags: np.ndarray
    rho: np.ndarray
    n: int

    @property
    def max_lag(self):
        return int(self.lags[-1])


@dataclass(frozen=True)
class PowerLawFit:
    """
    rho(tau) ~ amplitude * tau ** -eta over `lag_window`.
    """
    amplitude: float
    eta: float
    lag_window: tuple
    r_squared: float
    n_points: int
    n_dropped: int


@dataclass(frozen=True)
class HypothesisResult:
    statistic: float
    pvalue: float


def _centered(values, minimum, name):
    values = np.asarray(values, dtype=np.float64)
    if values.size < minimum:
        raise InsufficientDataError(
            f'{name} needs at least {minimum} values, got {values.size}.')
    if np.ptp(values) == 0:
        raise DegenerateVarianceError(f'{name} is undefined for zero-variance data.')
    return values - values.mean()


# ===== RETURNS =====

def log_returns(prices, delta_t=1):
    """
    r(t) = ln P(t) - ln P(t - delta_t) for t = delta_t .. len - 1.
    """
    prices = np.asarray(prices, dtype=np.float64)
    bad = np.flatnonzero(~(prices > 0))
    if bad.size:
        index = int(bad[0])
        raise PriceDomainError(
            f'Price at index {index} is not positive ({prices[index]}).', index=index)
    if delta_t < 1:
        raise InsufficientDataError(f'delta_t must be >= 1, got {delta_t}.')
    if prices.size <= delta_t:
        raise InsufficientDataError(
            f'{prices.size} prices are too few for delta_t={delta_t}.')
    logs = np.log(prices)
    return ReturnSeries(
        values=logs[delta_t:] - logs[:-delta_t],
        delta_t=delta_t,
        source=ReturnSource.EMPIRICAL,
    )


# ===== AUTOCORRELATION =====

def acf(values, max_lag):
    """
    Biased autocorrelation estimator with full-sample mean and variance:

        rho(tau) = sum_t (x_t - mean)(x_{t+tau} - mean) / sum_t (x_t - mean)^2
    """
    values = np.asarray(values, dtype=np.float64)
    if max_lag < 0 or values.size <= max_lag:
        raise InsufficientDataError(
            f'ACF up to lag {max_lag} needs more than {max_lag} values, '
            f'got {values.size}.'
        )
    centered = _centered(values, 1, 'ACF')
    denominator = np.dot(centered, centered)
    n = centered.size

    rho = np.empty(max_lag + 1, dtype=np.float64)
    rho[0] = 1.0
    for lag in range(1, max_lag + 1):
        rho[lag] = np.dot(centered[:n - lag], centered[lag:]) / denominator
    return AcfCurve(lags=np.arange(max_lag + 1), rho=rho, n=n)


def power_law_fit(curve, lag_window=(1, 150)):
    """
    Least-squares fit of ln rho = ln A - eta * ln tau over the lags in the
    window whose rho is positive.
    """
    tau_min, tau_max = (int(v) for v in lag_window)
    if tau_min < 1 or tau_max < tau_min or tau_max > curve.max_lag:
        raise ConfigurationError(
            f'Fit window [{tau_min}, {tau_max}] must satisfy '
            f'1 <= min <= max <= {curve.max_lag}.'
        )

    lags = curve.lags[tau_min:tau_max + 1]
    rho = curve.rho[tau_min:tau_max + 1]
    positive = rho > 0
    n_points = int(positive.sum())
    n_dropped = int(lags.size - n_points)
    if n_points < MIN_FIT_POINTS:
        raise InsufficientDataError(
            f'Only {n_points} lag(s) with positive autocorrelation in '
            f'[{tau_min}, {tau_max}]; need {MIN_FIT_POINTS}. The ACF is too noisy to fit.'
        )
    if n_dropped:
        logger.debug('Dropped %d non-positive ACF lags from the power-law fit', n_dropped)

    fit = stats.linregress(np.log(lags[positive]), np.log(rho[positive]))
    return PowerLawFit(
        amplitude=float(math.exp(fit.intercept)),
        eta=float(-fit.slope),
        lag_window=(tau_min, tau_max),
        r_squared=float(fit.rvalue ** 2),
        n_points=n_points,
        n_dropped=n_dropped,
    )


# ===== MOMENTS =====

def skewness(values):
    """
    S = m3 / m2^(3/2) with biased central moments.
    """
    centered = _centered(values, 3, 'Skewness')
    return float(stats.skew(centered))


def kurtosis(values):
    """
    Raw (Pearson) kurtosis K = m4 / m2^2; 3 for a normal distribution.
    """
    centered = _centered(values, 4, 'Kurtosis')
    return float(stats.kurtosis(centered, fisher=False))


def jarque_bera_from_moments(n, skew, kurt):
    """
    JB = n/6 * (S^2 + (K - 3)^2 / 4), p = exp(-JB / 2).
    """
    statistic = n / 6.0 * (skew ** 2 + (kurt - 3.0) ** 2 / 4.0)
    return HypothesisResult(statistic=float(statistic), pvalue=float(math.exp(-statistic / 2.0)))


def jarque_bera(values):
    """
    Jarque-Bera normality test; the p-value is the exact chi-squared(2)
    survival function.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.size < 10:
        raise InsufficientDataError(
            f'Jarque-Bera needs at least 10 values, got {values.size}.')
    return jarque_bera_from_moments(values.size, skewness(values), kurtosis(values))
