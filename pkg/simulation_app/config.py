"""
Experiment configuration for the simulate and snapshot commands.
"""
from dataclasses import dataclass, field, replace
from pathlib import Path

from django.conf import settings

from core.config import merge_options, validate_options
from simulation_app.dynamics import ModelParams
from simulation_app.lattice import InitMode
from simulation_app.mapping import Mapping
from simulation_app.serializers import ExperimentConfigSerializer


@dataclass(frozen=True)
class ExperimentConfig:
    params: ModelParams
    mapping: Mapping = Mapping.M_DIFF
    init: InitMode = InitMode.RANDOM
    max_lag: int = 150
    fit_window: tuple = (1, 150)
    output_dir: Path = Path('runs/latest')
    snapshot_schedule: tuple = ()
    seeds: tuple = field(default=())

    def for_seed(self, seed, output_dir=None):
        """
        Copy of this config for one seed of a batch.
        """
        return replace(
            self,
            params=replace(self.params, seed=seed),
            output_dir=Path(output_dir) if output_dir else self.output_dir,
            seeds=(),
        )

    def as_dict(self):
        return {
            'params': self.params.as_dict(),
            'mapping': self.mapping.value,
            'init': self.init.value,
            'max_lag': self.max_lag,
            'fit_window': list(self.fit_window),
            'snapshot_schedule': list(self.snapshot_schedule),
        }


def default_options():
    defaults = settings.SPIN_MARKET
    return {
        'beta': defaults['BETA'],
        'alpha': defaults['ALPHA'],
        'coupling': defaults['COUPLING'],
        'size': defaults['SIZE'],
        'sweeps': defaults['SWEEPS'],
        'warmup': defaults['WARMUP'],
        'delta_t': defaults['DELTA_T'],
        'seed': defaults['SEED'],
        'init': defaults['INIT'],
        'mapping': defaults['MAPPING'],
        'max_lag': defaults['MAX_LAG'],
        'fit_window': defaults['FIT_WINDOW'],
        'out': defaults['OUTPUT_DIR'],
    }


def build_experiment_config(flags=None, config_path=None):
    """
    Merge defaults, config file and flags, validate, and build the
    ExperimentConfig. Raises ConfigurationError before any work is done.
    """
    options = merge_options(default_options(), config_path, flags)
    data = validate_options(ExperimentConfigSerializer, options)
    params = ModelParams(
        beta=data['beta'],
        alpha=data['alpha'],
        coupling=data['coupling'],
        side_length=data['size'],
        sweeps=data['sweeps'],
        warmup=data['warmup'],
        delta_t=data['delta_t'],
        seed=data['seed'],
    )
    return ExperimentConfig(
        params=params,
        mapping=Mapping(data['mapping']),
        init=InitMode(data['init']),
        max_lag=data['max_lag'],
        fit_window=tuple(data['fit_window']),
        output_dir=Path(data['out']),
        snapshot_schedule=tuple(data.get('snapshot_at') or ()),
        seeds=tuple(data.get('seeds') or ()),
    )
