from django.conf import settings

from core.artifacts import ensure_directory, write_json
from core.commands import MODEL_FLAGS, SpinMarketCommand
from simulation_app.config import build_experiment_config
from simulation_app.dynamics import run_simulation
from simulation_app.regimes import regime_summary
from simulation_app.snapshots import export_snapshot


class Command(SpinMarketCommand):
    """
    Capture lattice snapshots.

    With --snapshot-at the given sweeps are captured. Without it the run is
    done twice with the same seed: the first pass finds the quietest and
    the most volatile magnetization windows, the second captures the
    lattice at the end of each (stable and intermittent phases).
    """
    help = 'Write PGM lattice snapshots at chosen sweeps or in stable/intermittent phases.'

    def add_arguments(self, parser):
        self.add_model_arguments(parser)
        parser.add_argument(
            '--window', type=int,
            help='Window (sweeps) for locating stable and intermittent phases.')

    def run(self, **options):
        config = build_experiment_config(
            self.flags(options, MODEL_FLAGS), options.get('config'))
        output_dir = ensure_directory(config.output_dir / 'snapshots')

        if config.snapshot_schedule:
            names = {s: f'sweep_{s}' for s in config.snapshot_schedule}
            regimes = None
        else:
            window = options.get('window') or settings.SPIN_MARKET['REGIME_WINDOW']
            first = run_simulation(config.params, init=config.init)
            summary = regime_summary(first.series, min(window, len(first.series)))
            stable_end = summary.quietest_start + summary.window - 1
            volatile_end = summary.volatile_start + summary.window - 1
            names = {
                stable_end: f'stable_sweep_{stable_end}',
                volatile_end: f'intermittent_sweep_{volatile_end}',
            }
            regimes = summary.as_dict()

        result = run_simulation(config.params, sorted(names), init=config.init)
        written = []
        for sweep_index, lattice in sorted(result.snapshots.items()):
            path = export_snapshot(
                lattice, output_dir / f'{names[sweep_index]}.pgm',
                sweep=sweep_index, params=config.params,
            )
            written.append(str(path))

        write_json(config.output_dir / 'snapshots.json', {
            'params': config.params.as_dict(),
            'init': config.init.value,
            'snapshots': written,
            'regimes': regimes,
        })
        for path in written:
            self.stdout.write(path)
        self.stdout.write(self.style.SUCCESS(f'{len(written)} snapshot(s) written'))
