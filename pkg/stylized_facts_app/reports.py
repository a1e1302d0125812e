"""
Assembly of the full stylized-facts report for one return series.
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from core.exceptions import SpinMarketError
from stylized_facts_app.normality import MAX_SAMPLE, shapiro_wilk, stride_subsample
from stylized_facts_app.statistics import (
    AcfCurve,
    PowerLawFit,
    acf,
    jarque_bera,
    kurtosis,
    power_law_fit,
    skewness,
)


logger = logging.getLogger(__name__)

REPORT_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SubsampleInfo:
    applied: bool
    stride: int
    n_used: int


@dataclass
class StatsReport:
    skewness: float
    kurtosis: float
    jb_stat: float
    jb_pvalue: float
    sw_stat: float
    sw_pvalue: float
    n: int
    sw_subsample: SubsampleInfo
    acf_returns: AcfCurve
    acf_abs_returns: AcfCurve
    powerlaw: PowerLawFit
    provenance: dict = field(default_factory=dict)
    regimes: dict | None = None
    schema_version: int = REPORT_SCHEMA_VERSION

    @property
    def kurtosis_excess(self):
        return self.kurtosis - 3.0


def _step(context, func, *args):
    try:
        return func(*args)
    except SpinMarketError as exc:
        raise exc.with_context(context) from exc


def build_report(returns, max_lag=150, fit_window=(1, 150), provenance=None,
                 sw_limit=MAX_SAMPLE):
    """
    Skewness, kurtosis, Jarque-Bera, Shapiro-Wilk (on a stride subsample
    when n exceeds `sw_limit`), ACF of returns and absolute returns, and the
    power-law fit of the absolute-return ACF.
    """
    values = np.asarray(getattr(returns, 'values', returns), dtype=np.float64)

    skew = _step('skewness', skewness, values)
    kurt = _step('kurtosis', kurtosis, values)
    jb = _step('Jarque-Bera', jarque_bera, values)

    sample, stride = stride_subsample(values, sw_limit)
    sw = _step('Shapiro-Wilk', shapiro_wilk, sample)

    acf_returns = _step('ACF of returns', acf, values, max_lag)
    acf_abs = _step('ACF of absolute returns', acf, np.abs(values), max_lag)
    fit = _step('power-law fit of absolute-return ACF', power_law_fit, acf_abs, fit_window)

    logger.info(
        'Report over %d returns: skew=%.4f kurtosis=%.4f eta=%.4f',
        values.size, skew, kurt, fit.eta,
    )
    return StatsReport(
        skewness=skew,
        kurtosis=kurt,
        jb_stat=jb.statistic,
        jb_pvalue=jb.pvalue,
        sw_stat=sw.statistic,
        sw_pvalue=sw.pvalue,
        n=int(values.size),
        sw_subsample=SubsampleInfo(applied=stride > 1, stride=stride, n_used=int(sample.size)),
        acf_returns=acf_returns,
        acf_abs_returns=acf_abs,
        powerlaw=fit,
        provenance=dict(provenance or {}),
    )
