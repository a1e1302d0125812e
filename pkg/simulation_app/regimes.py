"""
Windowed volatility of the magnetization: separates quiet stretches from
intermittent, volatile ones.
"""
from dataclasses import dataclass

import numpy as np

from core.exceptions import InsufficientDataError


@dataclass(frozen=True)
class RegimeSummary:
    window: int
    n_windows: int
    quietest_start: int
    quietest_std: float
    volatile_start: int
    volatile_std: float

    @property
    def contrast(self):
        """
        Ratio of the most volatile to the quietest window; infinite when
        the quietest window is perfectly flat.
        """
        if self.quietest_std == 0:
            return float('inf')
        return self.volatile_std / self.quietest_std

    def as_dict(self):
        contrast = self.contrast
        return {
            'window': self.window,
            'n_windows': self.n_windows,
            'quietest_start': self.quietest_start,
            'quietest_std': self.quietest_std,
            'volatile_start': self.volatile_start,
            'volatile_std': self.volatile_std,
            'contrast': contrast if np.isfinite(contrast) else None,
        }


def window_volatility(values, window):
    """
    Population standard deviation of each complete, non-overlapping window.
    """
    values = np.asarray(values, dtype=np.float64)
    if window < 2:
        raise InsufficientDataError(f'Window must hold at least 2 values, got {window}.')
    n_windows = values.size // window
    if n_windows < 1:
        raise InsufficientDataError(
            f'Series of length {values.size} is shorter than one window of {window}.')
    return values[:n_windows * window].reshape(n_windows, window).std(axis=1)


def regime_summary(series, window):
    """
    Quietest and most volatile windows of a MagnetizationSeries, with start
    positions given as sweep numbers.
    """
    stds = window_volatility(series.values, window)
    first_sweep = series.params.warmup + 1
    quiet = int(np.argmin(stds))
    volatile = int(np.argmax(stds))
    return RegimeSummary(
        window=window,
        n_windows=len(stds),
        quietest_start=first_sweep + quiet * window,
        quietest_std=float(stds[quiet]),
        volatile_start=first_sweep + volatile * window,
        volatile_std=float(stds[volatile]),
    )
