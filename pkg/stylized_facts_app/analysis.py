"""
Empirical pipeline: price CSV -> log returns -> standardized returns ->
stats report.
"""
import logging
from dataclasses import dataclass
from pathlib import Path

from django.conf import settings

from core import __version__
from core.artifacts import ensure_directory
from core.config import merge_options, validate_options
from simulation_app.mapping import ReturnSeries, standardize
from stylized_facts_app.exports import write_acf_curves, write_report, write_returns
from stylized_facts_app.ingestion import load_price_csv
from stylized_facts_app.reports import build_report
from stylized_facts_app.serializers import AnalysisConfigSerializer
from stylized_facts_app.statistics import log_returns


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnalysisConfig:
    csv_path: Path
    date_column: str = 'Date'
    price_column: str = 'Adj Close'
    delta_t: int = 1
    max_lag: int = 150
    fit_window: tuple = (1, 150)
    output_dir: Path = Path('runs/latest')


def build_analysis_config(flags=None, config_path=None):
    """
    Merge defaults, config file and flags for the analyze command. The
    return interval defaults to one row (daily returns).
    """
    defaults = settings.SPIN_MARKET
    options = merge_options(
        {
            'date_col': defaults['DATE_COLUMN'],
            'price_col': defaults['PRICE_COLUMN'],
            'delta_t': 1,
            'max_lag': defaults['MAX_LAG'],
            'fit_window': defaults['FIT_WINDOW'],
            'out': defaults['OUTPUT_DIR'],
        },
        config_path,
        flags,
    )
    data = validate_options(AnalysisConfigSerializer, options)
    return AnalysisConfig(
        csv_path=Path(data['csv']),
        date_column=data['date_col'],
        price_column=data['price_col'],
        delta_t=data['delta_t'],
        max_lag=data['max_lag'],
        fit_window=tuple(data['fit_window']),
        output_dir=Path(data['out']),
    )


def run_analysis(config):
    """
    Analyze a price file and write returns.csv, its sidecar, the ACF CSVs
    and report.json. Returns the report.
    """
    prices = load_price_csv(config.csv_path, config.date_column, config.price_column)
    raw = log_returns(prices.prices, config.delta_t)
    returns = ReturnSeries(
        values=standardize(raw.values),
        delta_t=raw.delta_t,
        source=raw.source,
        standardized=True,
    )
    provenance = {
        'code_version': __version__,
        'input_file': prices.source_path,
        'input_sha256': prices.sha256,
        'label': prices.label,
        'rows': prices.row_count,
        'first_date': str(prices.dates[0]),
        'last_date': str(prices.dates[-1]),
        'date_column': config.date_column,
        'price_column': config.price_column,
    }
    report = build_report(
        returns,
        max_lag=config.max_lag,
        fit_window=config.fit_window,
        provenance=provenance,
        sw_limit=settings.SPIN_MARKET['SW_LIMIT'],
    )

    output_dir = ensure_directory(config.output_dir)
    write_returns(output_dir, returns, input_sha256=prices.sha256)
    write_acf_curves(output_dir, report)
    write_report(output_dir, report)
    logger.info('Analysis of %s written to %s', config.csv_path, output_dir)
    return report
