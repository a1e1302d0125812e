"""
Loading and validation of index price CSV files.
"""
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd

from core.artifacts import format_float, sha256_file, write_csv
from core.exceptions import (
    DataFileError,
    EmptyInputError,
    PriceValidationError,
    SchemaError,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PriceSeries:
    """
    Adjusted close prices with strictly increasing dates.
    """
    dates: np.ndarray
    prices: np.ndarray
    label: str
    source_path: str | None = None
    sha256: str | None = None

    def __len__(self):
        return len(self.prices)

    @property
    def row_count(self):
        return len(self.prices)


def load_price_csv(path, date_column='Date', price_column='Adj Close', label=None):
    """
    Read a comma-separated UTF-8 file with a header row. Rows are kept in
    file order; blank lines are skipped. Row numbers in errors count data
    rows from 1.
    """
    path = Path(path)
    try:
        frame = pd.read_csv(
            path, dtype=str, skip_blank_lines=True, encoding='utf-8',
            keep_default_na=False,
        )
    except FileNotFoundError as exc:
        raise DataFileError(f'Price file not found: {path}', path) from exc
    except pd.errors.EmptyDataError as exc:
        raise EmptyInputError(f'Price file {path} is empty.', path) from exc
    except (OSError, UnicodeDecodeError, pd.errors.ParserError) as exc:
        raise DataFileError(f'Cannot parse price file {path}: {exc}', path) from exc

    missing = [c for c in (date_column, price_column) if c not in frame.columns]
    if missing:
        raise SchemaError(
            f'Missing column(s) {missing} in {path}; '
            f'available columns: {list(frame.columns)}',
            path,
        )
    if frame.empty:
        raise EmptyInputError(f'Price file {path} has a header but no data rows.', path)

    dates = pd.to_datetime(frame[date_column].str.strip(), format='ISO8601', errors='coerce')
    prices = pd.to_numeric(frame[price_column].str.strip(), errors='coerce')

    for row, (raw, parsed) in enumerate(zip(frame[date_column], dates), start=1):
        if pd.isna(parsed):
            raise PriceValidationError(
                f'Row {row}: invalid date {raw!r} in {path}.', path, row)
    for row, (raw, value) in enumerate(zip(frame[price_column], prices), start=1):
        if pd.isna(value):
            raise PriceValidationError(
                f'Row {row}: invalid price {raw!r} in {path}.', path, row)
        if value <= 0:
            raise PriceValidationError(
                f'Row {row}: price {value} is not positive in {path}.', path, row)

    day_values = dates.values.astype('datetime64[D]')
    steps = np.diff(day_values).astype(np.int64)
    if (steps <= 0).any():
        row = int(np.flatnonzero(steps <= 0)[0]) + 2
        raise PriceValidationError(
            f'Row {row}: date {day_values[row - 1]} is not strictly after '
            f'{day_values[row - 2]}; dates must be strictly increasing.',
            path, row,
        )

    series = PriceSeries(
        dates=day_values,
        prices=prices.to_numpy(dtype=np.float64),
        label=label or path.stem,
        source_path=str(path),
        sha256=sha256_file(path),
    )
    logger.info('Loaded %d price rows from %s', series.row_count, path)
    return series


def write_price_csv(series, path, date_column='Date', price_column='Adj Close'):
    """
    Write a PriceSeries in the format load_price_csv reads.
    """
    rows = (
        (str(date), format_float(price))
        for date, price in zip(series.dates, series.prices)
    )
    return write_csv(path, (date_column, price_column), rows)
