"""
Bornholdt heat-bath dynamics and the Monte Carlo simulation loop.

A spin is resampled to +1 with probability 1 / (1 + exp(-2 beta h)) where

    h = J * (sum of the four neighbor spins) - alpha * S_site * |m|

and m is the instantaneous magnetization. Sites are chosen uniformly at
random with replacement; one sweep is N = L * L update attempts.
"""
import logging
import math
from dataclasses import asdict, dataclass, field

import numpy as np
from django.conf import settings
from numba import njit

from core.exceptions import ConfigurationError
from simulation_app.lattice import InitMode, neighbors, new_lattice


logger = logging.getLogger(__name__)

GENERATOR_NAME = 'PCG64'


@dataclass(frozen=True)
class ModelParams:
    """
    Every knob of one simulation run.
    """
    beta: float = 1.7
    alpha: float = 10.0
    coupling: float = 1.0
    side_length: int = 32
    sweeps: int = 1_000_000
    warmup: int = 100_000
    delta_t: int = 100
    seed: int = 0

    def __post_init__(self):
        self.validate()

    def validate(self):
        problems = []
        if not math.isfinite(self.beta) or self.beta < 0:
            problems.append(f'beta must be finite and >= 0, got {self.beta}')
        if not math.isfinite(self.alpha) or self.alpha < 0:
            problems.append(f'alpha must be finite and >= 0, got {self.alpha}')
        if not math.isfinite(self.coupling):
            problems.append(f'coupling must be finite, got {self.coupling}')
        if self.side_length < 2:
            problems.append(f'side_length must be >= 2, got {self.side_length}')
        if self.warmup < 0:
            problems.append(f'warmup must be >= 0, got {self.warmup}')
        if self.sweeps <= self.warmup:
            problems.append(
                f'sweeps ({self.sweeps}) must exceed warmup ({self.warmup})')
        if self.delta_t < 1:
            problems.append(f'delta_t must be >= 1, got {self.delta_t}')
        if self.seed < 0:
            problems.append(f'seed must be >= 0, got {self.seed}')
        if problems:
            raise ConfigurationError('Invalid model parameters: ' + '; '.join(problems))

    def check_return_window(self):
        """
        Require enough recorded sweeps for at least one return.
        """
        if self.recorded_length < 2 * self.delta_t:
            raise ConfigurationError(
                f'sweeps - warmup ({self.recorded_length}) must be at least '
                f'2 * delta_t ({2 * self.delta_t}) to produce returns'
            )

    @property
    def recorded_length(self):
        return self.sweeps - self.warmup

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class MagnetizationSeries:
    """
    m(t) for every recorded sweep, i.e. sweeps warmup+1 .. sweeps.
    """
    values: np.ndarray
    params: ModelParams

    def __post_init__(self):
        self.values.setflags(write=False)

    def __len__(self):
        return len(self.values)

    @property
    def sweep_numbers(self):
        return np.arange(self.params.warmup + 1, self.params.warmup + 1 + len(self.values))


@dataclass
class SimulationResult:
    series: MagnetizationSeries
    snapshots: dict = field(default_factory=dict)
    generator: str = GENERATOR_NAME


# ===== KERNELS =====

@njit(cache=True)
def _probability_up(h, beta):
    x = 2.0 * beta * h
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


@njit(cache=True)
def _apply_updates(spins, up_count, side, beta, alpha, coupling,
                   sites, uniforms, record):
    """
    Apply one heat-bath update per entry of `sites`, writing m after every
    completed sweep into `record` (when it is non-empty). Returns the new
    up count.
    """
    size = side * side
    for k in range(sites.shape[0]):
        site = sites[k]
        row = site // side
        col = site - row * side
        neighbor_sum = (
            spins[((row + side - 1) % side) * side + col]
            + spins[((row + 1) % side) * side + col]
            + spins[row * side + (col + side - 1) % side]
            + spins[row * side + (col + 1) % side]
        )
        m = (2.0 * up_count - size) / size
        h = coupling * neighbor_sum - alpha * spins[site] * abs(m)
        if uniforms[k] < _probability_up(h, beta):
            if spins[site] < 0:
                spins[site] = 1
                up_count += 1
        elif spins[site] > 0:
            spins[site] = -1
            up_count -= 1
        if record.shape[0] > 0 and (k + 1) % size == 0:
            record[(k + 1) // size - 1] = (2.0 * up_count - size) / size
    return up_count


_NO_RECORD = np.empty(0, dtype=np.float64)


# ===== OPERATIONS =====

def local_field(lattice, site, alpha, coupling, m):
    """
    h = J * (sum of neighbor spins) - alpha * S_site * |m|.
    """
    neighbor_sum = sum(lattice.spin(n) for n in neighbors(lattice, site))
    return coupling * neighbor_sum - alpha * lattice.spin(site) * abs(m)


def update_probability(h, beta):
    """
    Probability that the resampled spin is +1. Saturates to 0 or 1 for
    large |beta * h| without overflowing.
    """
    if not (math.isfinite(h) and math.isfinite(beta)):
        raise ValueError(f'h and beta must be finite, got h={h}, beta={beta}.')
    return _probability_up(float(h), float(beta))


def draw_updates(rng, size, sweeps):
    """
    Random sites and uniforms for `sweeps` sweeps of a lattice with `size`
    sites, drawn in that order from one generator.
    """
    count = size * sweeps
    sites = rng.integers(0, size, size=count, dtype=np.int64)
    uniforms = rng.random(count)
    return sites, uniforms


def apply_updates(lattice, params, sites, uniforms, record=None):
    """
    Run the compiled kernel on pre-drawn sites and uniforms.
    """
    lattice.up_count = int(_apply_updates(
        lattice.spins, lattice.up_count, lattice.side_length,
        float(params.beta), float(params.alpha), float(params.coupling),
        sites, uniforms, _NO_RECORD if record is None else record,
    ))
    return lattice


def sweep(lattice, params, rng, count=1):
    """
    Perform `count` sweeps of N random single-site heat-bath updates.
    """
    if lattice.side_length != params.side_length:
        raise ConfigurationError(
            f'Lattice side {lattice.side_length} does not match '
            f'params side {params.side_length}.'
        )
    sites, uniforms = draw_updates(rng, lattice.size, count)
    return apply_updates(lattice, params, sites, uniforms)


def _validate_schedule(schedule, sweeps):
    schedule = sorted(set(int(s) for s in schedule or ()))
    for index in schedule:
        if not 0 <= index <= sweeps:
            raise ConfigurationError(
                f'Snapshot sweep {index} outside [0, {sweeps}].')
    return schedule


def run_simulation(params, snapshot_schedule=None, init=InitMode.RANDOM,
                   block_sweeps=None):
    """
    Run `params.sweeps` sweeps from a seeded initial lattice.

    Returns the magnetization of every sweep after the warm-up and copies
    of the lattice after each sweep index in `snapshot_schedule`
    (0 meaning the initial configuration).
    """
    params.validate()
    schedule = _validate_schedule(snapshot_schedule, params.sweeps)
    block_sweeps = block_sweeps or settings.SPIN_MARKET['BLOCK_SWEEPS']

    rng = np.random.default_rng(params.seed)
    lattice = new_lattice(params.side_length, init, rng)
    size = lattice.size
    trajectory = np.empty(params.sweeps, dtype=np.float64)
    snapshots = {}
    pending = list(schedule)

    if pending and pending[0] == 0:
        snapshots[pending.pop(0)] = lattice.copy()

    logger.info(
        'Simulating L=%d beta=%s alpha=%s J=%s for %d sweeps (warmup %d, seed %d)',
        params.side_length, params.beta, params.alpha, params.coupling,
        params.sweeps, params.warmup, params.seed,
    )

    done = 0
    while done < params.sweeps:
        block = min(block_sweeps, params.sweeps - done)
        sites, uniforms = draw_updates(rng, size, block)

        # Split the block at snapshot points; the draws do not depend on them.
        start = 0
        while start < block:
            stop = block
            if pending and pending[0] <= done + block:
                stop = pending[0] - done
            apply_updates(
                lattice, params,
                sites[start * size:stop * size],
                uniforms[start * size:stop * size],
                trajectory[done + start:done + stop],
            )
            if pending and pending[0] == done + stop:
                snapshots[pending.pop(0)] = lattice.copy()
            start = stop

        done += block
        logger.debug('Completed %d/%d sweeps, m=%.4f', done, params.sweeps,
                     lattice.magnetization())

    series = MagnetizationSeries(trajectory[params.warmup:].copy(), params)
    logger.info('Recorded %d magnetization values', len(series))
    return SimulationResult(series=series, snapshots=snapshots)
