"""
Shapiro-Wilk normality test on samples of 3 to 5000 values.
"""
import logging
import math

import numpy as np
from scipy import stats

from core.exceptions import DegenerateVarianceError, SampleSizeError
from stylized_facts_app.statistics import HypothesisResult


logger = logging.getLogger(__name__)

MIN_SAMPLE = 3
MAX_SAMPLE = 5000


def shapiro_wilk(values):
    """
    Shapiro-Wilk statistic W and p-value for 3 <= n <= 5000. Larger samples
    must be reduced first, see stride_subsample().
    """
    x = np.asarray(values, dtype=np.float64)
    n = x.size
    if not MIN_SAMPLE <= n <= MAX_SAMPLE:
        raise SampleSizeError(
            f'Shapiro-Wilk is calibrated for {MIN_SAMPLE} <= n <= {MAX_SAMPLE}, '
            f'got n={n}; subsample the data first.'
        )
    if np.ptp(x) == 0:
        raise DegenerateVarianceError('Shapiro-Wilk is undefined for zero-variance data.')

    result = stats.shapiro(x)
    return HypothesisResult(
        statistic=min(float(result.statistic), 1.0),
        pvalue=float(result.pvalue),
    )


def stride_subsample(values, limit=MAX_SAMPLE):
    """
    Every k-th value with k = ceil(n / limit), so at most `limit` remain.
    Returns the subsample and the stride used.
    """
    values = np.asarray(values)
    stride = max(1, math.ceil(values.size / limit))
    if stride > 1:
        logger.info('Subsampling %d values with stride %d for Shapiro-Wilk',
                    values.size, stride)
    return values[::stride], stride
