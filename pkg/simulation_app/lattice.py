"""
Square spin lattice with periodic boundaries.

Spins are stored flat in row-major order as int8 values in {+1, -1}; the
number of up spins is maintained incrementally so the magnetization is
available in constant time.
"""
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from core.exceptions import InvalidDimensionError, SiteIndexError


MIN_SIDE_LENGTH = 2


class InitMode(str, Enum):
    """
    Initial spin configuration of a new lattice.
    """
    ALL_UP = 'all-up'
    ALL_DOWN = 'all-down'
    RANDOM = 'random'


class SiteIndex(NamedTuple):
    """
    Row/column address of a lattice site.
    """
    row: int
    col: int

    def flat(self, side_length):
        return self.row * side_length + self.col

    @classmethod
    def from_flat(cls, flat, side_length):
        row, col = divmod(int(flat), side_length)
        return cls(row, col)


@dataclass
class SpinLattice:
    """
    L x L grid of agent decisions (+1 buy, -1 sell) on a torus.
    """
    side_length: int
    spins: np.ndarray
    up_count: int

    @property
    def size(self):
        return self.side_length * self.side_length

    def magnetization(self):
        return magnetization(self)

    def validate_site(self, site):
        """
        Return the flat index of a site, raising SiteIndexError when it
        lies outside the grid.
        """
        row, col = site
        if not (0 <= row < self.side_length and 0 <= col < self.side_length):
            raise SiteIndexError(
                f'Site ({row}, {col}) outside a '
                f'{self.side_length}x{self.side_length} lattice.'
            )
        return row * self.side_length + col

    def spin(self, site):
        return int(self.spins[self.validate_site(site)])

    def set_spin(self, site, value):
        """
        Set one spin, keeping up_count in step.
        """
        if value not in (1, -1):
            raise ValueError(f'Spin value must be +1 or -1, got {value}.')
        index = self.validate_site(site)
        old = int(self.spins[index])
        if old != value:
            self.spins[index] = value
            self.up_count += 1 if value == 1 else -1

    def flip(self, site):
        self.set_spin(site, -self.spin(site))

    def recount(self):
        """
        Count up spins from scratch.
        """
        return int(np.count_nonzero(self.spins == 1))

    def grid(self):
        """
        Spins as an L x L view.
        """
        return self.spins.reshape(self.side_length, self.side_length)

    def copy(self):
        return SpinLattice(self.side_length, self.spins.copy(), self.up_count)

    @classmethod
    def from_grid(cls, grid):
        """
        Build a lattice from a square array of +1/-1 values.
        """
        grid = np.asarray(grid)
        if grid.ndim != 2 or grid.shape[0] != grid.shape[1]:
            raise InvalidDimensionError(
                f'Spin grid must be square, got shape {grid.shape}.')
        if grid.shape[0] < MIN_SIDE_LENGTH:
            raise InvalidDimensionError(
                f'Side length must be at least {MIN_SIDE_LENGTH}, '
                f'got {grid.shape[0]}.')
        if not np.isin(grid, (1, -1)).all():
            raise ValueError('Spin grid may only contain +1 and -1.')
        spins = grid.astype(np.int8).ravel()
        return cls(grid.shape[0], spins, int(np.count_nonzero(spins == 1)))


def new_lattice(side_length, init=InitMode.RANDOM, seed=None):
    """
    Create an L x L lattice.

    `seed` may be an integer or an existing numpy Generator; a Random
    configuration draws each spin independently with probability 1/2.
    """
    if side_length < MIN_SIDE_LENGTH:
        raise InvalidDimensionError(
            f'Side length must be at least {MIN_SIDE_LENGTH}, got {side_length}.')

    init = InitMode(init)
    size = side_length * side_length

    if init is InitMode.ALL_UP:
        spins = np.ones(size, dtype=np.int8)
    elif init is InitMode.ALL_DOWN:
        spins = -np.ones(size, dtype=np.int8)
    else:
        rng = np.random.default_rng(seed)
        spins = np.where(rng.random(size) < 0.5, 1, -1).astype(np.int8)

    return SpinLattice(side_length, spins, int(np.count_nonzero(spins == 1)))


def neighbors(lattice, site):
    """
    Up, down, left and right neighbors of a site with wrap-around.
    """
    lattice.validate_site(site)
    row, col = site
    side = lattice.side_length
    return (
        SiteIndex((row - 1) % side, col),
        SiteIndex((row + 1) % side, col),
        SiteIndex(row, (col - 1) % side),
        SiteIndex(row, (col + 1) % side),
    )


def magnetization(lattice):
    """
    m = (1/N) * sum of spins, from the incremental up count.
    """
    size = lattice.size
    return (2 * lattice.up_count - size) / size
