"""
Writers and readers for the files every command produces.
"""
import csv
import hashlib
import json
import logging
from pathlib import Path

from rest_framework.renderers import JSONRenderer

from core.exceptions import DataFileError, ReportParseError


logger = logging.getLogger(__name__)


def format_float(value):
    """
    Format a float with 17 significant digits.
    """
    return format(float(value), '.17g')


def ensure_directory(path):
    """
    Create a directory (and parents) if it does not exist yet.
    """
    path = Path(path)
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise DataFileError(
            f'Cannot create output directory {path}: {exc}', path) from exc
    return path


def write_csv(path, header, rows):
    """
    Write rows to a CSV file. Float cells are written with 17 significant
    digits, everything else with str().
    """
    path = Path(path)
    try:
        with path.open('w', newline='', encoding='utf-8') as handle:
            writer = csv.writer(handle, lineterminator='\n')
            writer.writerow(header)
            for row in rows:
                writer.writerow([
                    format_float(cell) if isinstance(cell, float) else cell
                    for cell in row
                ])
    except OSError as exc:
        raise DataFileError(f'Cannot write {path}: {exc}', path) from exc
    logger.info('Wrote %s', path)
    return path


def render_json(data):
    """
    Render data as indented JSON bytes with DRF's strict renderer.
    """
    return JSONRenderer().render(data, renderer_context={'indent': 2}) + b'\n'


def write_json(path, data):
    """
    Write data to a JSON file.
    """
    path = Path(path)
    try:
        path.write_bytes(render_json(data))
    except OSError as exc:
        raise DataFileError(f'Cannot write {path}: {exc}', path) from exc
    logger.info('Wrote %s', path)
    return path


def read_json(path):
    """
    Read a JSON file, raising DataFileError or ReportParseError on failure.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise DataFileError(f'Cannot read {path}: {exc}', path) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportParseError(
            f'Malformed JSON in {path}: {exc}', path) from exc


def sha256_file(path):
    """
    Hex SHA-256 digest of a file's bytes.
    """
    digest = hashlib.sha256()
    with Path(path).open('rb') as handle:
        for chunk in iter(lambda: handle.read(1 << 16), b''):
            digest.update(chunk)
    return digest.hexdigest()
