"""
Conversion of a magnetization trajectory into a standardized return series.
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np

from core.exceptions import DegenerateVarianceError, InsufficientDataError


LOG_ABS_FLOOR = 1e-6


class Mapping(str, Enum):
    """
    Price proxy used to turn magnetization into returns.
    """
    M_DIFF = 'm-diff'
    LOG_ABS_M = 'log-abs-m'


class ReturnSource(str, Enum):
    SIMULATED = 'simulated'
    EMPIRICAL = 'empirical'


@dataclass(frozen=True)
class ReturnSeries:
    """
    Returns sampled every `delta_t` sweeps (simulated) or rows (empirical).
    """
    values: np.ndarray
    delta_t: int
    source: ReturnSource
    standardized: bool = False
    mapping: Mapping | None = None

    def __len__(self):
        return len(self.values)

    def metadata(self):
        return {
            'count': len(self.values),
            'delta_t': self.delta_t,
            'source': self.source.value,
            'standardized': self.standardized,
            'mapping': self.mapping.value if self.mapping else None,
        }


def standardize(values):
    """
    (x - mean) / std with the population standard deviation.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.size < 2:
        raise InsufficientDataError(
            f'Standardization needs at least 2 values, got {values.size}.')
    if np.ptp(values) == 0:
        raise DegenerateVarianceError('Cannot standardize: zero variance.')
    std = values.std()
    if not std > 0:
        raise DegenerateVarianceError('Cannot standardize: zero variance.')
    return (values - values.mean()) / std


def raw_returns(values, delta_t, mapping=Mapping.M_DIFF):
    """
    Unstandardized returns r(k) = P(k * delta_t) - P((k - 1) * delta_t)
    for k = 1 .. floor((len - 1) / delta_t), where P is m itself or
    ln max(|m|, 1e-6).
    """
    values = np.asarray(values, dtype=np.float64)
    if delta_t < 1:
        raise InsufficientDataError(f'delta_t must be >= 1, got {delta_t}.')
    if values.size < 2 * delta_t:
        raise InsufficientDataError(
            f'Series of length {values.size} is too short for delta_t={delta_t} '
            f'(need at least {2 * delta_t}).'
        )

    sampled = values[::delta_t]
    if Mapping(mapping) is Mapping.LOG_ABS_M:
        sampled = np.log(np.maximum(np.abs(sampled), LOG_ABS_FLOOR))
    return np.diff(sampled)


def magnetization_to_returns(series, delta_t, mapping=Mapping.M_DIFF):
    """
    Standardized simulated returns from a MagnetizationSeries.
    """
    returns = raw_returns(series.values, delta_t, mapping)
    if returns.size < 2:
        raise InsufficientDataError(
            f'Only {returns.size} return(s) at delta_t={delta_t}; need at least 2.')
    return ReturnSeries(
        values=standardize(returns),
        delta_t=delta_t,
        source=ReturnSource.SIMULATED,
        standardized=True,
        mapping=Mapping(mapping),
    )
