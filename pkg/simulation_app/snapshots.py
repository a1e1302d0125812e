"""
Plain PGM (P2) export of lattice snapshots.
"""
import logging
from pathlib import Path

import numpy as np

from core.exceptions import DataFileError
from simulation_app.lattice import SpinLattice


logger = logging.getLogger(__name__)

UP_LEVEL = 255
DOWN_LEVEL = 0


def render_snapshot(lattice, comments=()):
    """
    PGM text for a lattice: 255 for +1, 0 for -1, one grid row per line.
    """
    lines = ['P2']
    lines.extend(f'# {comment}' for comment in comments)
    lines.append(f'{lattice.side_length} {lattice.side_length}')
    lines.append(str(UP_LEVEL))
    levels = np.where(lattice.grid() > 0, UP_LEVEL, DOWN_LEVEL)
    lines.extend(' '.join(str(v) for v in row) for row in levels)
    return '\n'.join(lines) + '\n'


def export_snapshot(lattice, path, sweep=None, params=None):
    """
    Write a lattice to `path` as a P2 PGM file. The header comments record
    the sweep index and the model parameters.
    """
    comments = []
    if sweep is not None:
        comments.append(f'sweep={sweep}')
    if params is not None:
        comments.append(' '.join(f'{k}={v}' for k, v in params.as_dict().items()))

    path = Path(path)
    try:
        path.write_text(render_snapshot(lattice, comments), encoding='ascii')
    except OSError as exc:
        raise DataFileError(f'Cannot write snapshot {path}: {exc}', path) from exc
    logger.info('Wrote snapshot %s', path)
    return path


def read_snapshot(path):
    """
    Parse a P2 PGM snapshot back into a SpinLattice.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='ascii')
    except OSError as exc:
        raise DataFileError(f'Cannot read snapshot {path}: {exc}', path) from exc

    tokens = []
    for line in text.splitlines():
        tokens.extend(line.split('#', 1)[0].split())

    if not tokens or tokens[0] != 'P2':
        raise DataFileError(f'{path} is not a plain PGM (P2) file.', path)
    try:
        width, height, max_level = (int(t) for t in tokens[1:4])
        values = np.array([int(t) for t in tokens[4:]])
    except ValueError as exc:
        raise DataFileError(f'Malformed PGM data in {path}: {exc}', path) from exc
    if values.size != width * height:
        raise DataFileError(
            f'{path} declares {width}x{height} pixels but holds {values.size}.', path)

    grid = np.where(values.reshape(height, width) > max_level // 2, 1, -1)
    return SpinLattice.from_grid(grid)
