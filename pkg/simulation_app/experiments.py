"""
End-to-end simulation experiments: dynamics, market mapping, statistics
and the files they produce.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from django.conf import settings

from core import __version__
from core.artifacts import ensure_directory, write_csv, write_json
from simulation_app.dynamics import GENERATOR_NAME, run_simulation
from simulation_app.mapping import magnetization_to_returns
from simulation_app.regimes import regime_summary
from simulation_app.snapshots import export_snapshot
from stylized_facts_app.exports import write_acf_curves, write_report, write_returns
from stylized_facts_app.reports import build_report


logger = logging.getLogger(__name__)


@dataclass
class ExperimentOutcome:
    config: object
    simulation: object
    returns: object
    report: object


def provenance(config):
    return {
        'code_version': __version__,
        'generator': GENERATOR_NAME,
        'seed': config.params.seed,
        'params': config.params.as_dict(),
        'mapping': config.mapping.value,
        'init': config.init.value,
        'dynamics': 'heat-bath',
    }


def compute_experiment(config, regime_window=None, sw_limit=None):
    """
    Run one simulation and its statistics without touching the filesystem.
    """
    regime_window = regime_window or settings.SPIN_MARKET['REGIME_WINDOW']
    sw_limit = sw_limit or settings.SPIN_MARKET['SW_LIMIT']

    simulation = run_simulation(
        config.params, config.snapshot_schedule, init=config.init)
    returns = magnetization_to_returns(
        simulation.series, config.params.delta_t, config.mapping)
    report = build_report(
        returns,
        max_lag=config.max_lag,
        fit_window=config.fit_window,
        provenance=provenance(config),
        sw_limit=sw_limit,
    )
    window = min(regime_window, len(simulation.series))
    if window >= 2:
        report.regimes = regime_summary(simulation.series, window).as_dict()
    return ExperimentOutcome(config, simulation, returns, report)


def write_experiment(outcome):
    """
    magnetization.csv, returns.csv (+ sidecar), ACF CSVs, report.json and
    snapshots/sweep_<k>.pgm under the configured output directory.
    """
    config = outcome.config
    output_dir = ensure_directory(config.output_dir)
    series = outcome.simulation.series

    write_csv(
        output_dir / 'magnetization.csv',
        ('sweep', 'm'),
        ((int(s), float(m)) for s, m in zip(series.sweep_numbers, series.values)),
    )
    write_returns(
        output_dir, outcome.returns,
        seed=config.params.seed, generator=GENERATOR_NAME,
    )
    write_acf_curves(output_dir, outcome.report)
    write_report(output_dir, outcome.report)

    if outcome.simulation.snapshots:
        snapshot_dir = ensure_directory(output_dir / 'snapshots')
        for sweep_index, lattice in sorted(outcome.simulation.snapshots.items()):
            export_snapshot(
                lattice, snapshot_dir / f'sweep_{sweep_index}.pgm',
                sweep=sweep_index, params=config.params,
            )
    return output_dir


def run_experiment(config):
    outcome = compute_experiment(config)
    write_experiment(outcome)
    return outcome


def _init_worker():
    # Workers started by spawn or forkserver need their own Django setup.
    import django
    django.setup()


def run_batch(config, max_workers=None):
    """
    Run one experiment per seed in `config.seeds`, in parallel processes,
    each writing into <output_dir>/seed-<n>/. Returns a seed -> summary map
    which is also written to batch.json.
    """
    max_workers = max_workers or settings.SPIN_MARKET['MAX_WORKERS']
    root = ensure_directory(config.output_dir)
    configs = [config.for_seed(seed, root / f'seed-{seed}') for seed in config.seeds]

    logger.info('Running %d seeds with up to %d workers', len(configs), max_workers)
    summary = {}
    with ProcessPoolExecutor(max_workers=max_workers, initializer=_init_worker) as pool:
        futures = [
            pool.submit(compute_experiment, c) for c in configs
        ]
        for seed_config, future in zip(configs, futures):
            outcome = future.result()
            write_experiment(outcome)
            report = outcome.report
            summary[str(seed_config.params.seed)] = {
                'eta': report.powerlaw.eta,
                'kurtosis_raw': report.kurtosis,
                'jb_pvalue': report.jb_pvalue,
                'output_dir': str(Path(seed_config.output_dir)),
            }
            logger.info('Seed %d done', seed_config.params.seed)

    write_json(root / 'batch.json', {'config': config.as_dict(), 'seeds': summary})
    return summary
