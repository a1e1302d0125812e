"""
Base class for the project's management commands.
"""
import logging

from django.core.management.base import BaseCommand, CommandError

from core.exceptions import SpinMarketError


logger = logging.getLogger(__name__)


class SpinMarketCommand(BaseCommand):
    """
    Management command that turns domain errors into CommandError with the
    error's exit code (1 IO/parse, 2 configuration, 3 numerical).
    """
    requires_system_checks = []

    def handle(self, *args, **options):
        try:
            return self.run(**options)
        except SpinMarketError as exc:
            logger.error('%s failed: %s', self.__module__.rsplit('.', 1)[-1], exc)
            raise CommandError(str(exc), returncode=exc.exit_code) from exc

    def run(self, **options):
        raise NotImplementedError

    @staticmethod
    def flags(options, names):
        """
        Pick the given option names. Flags that were not passed come back as
        None, which merge_options() skips so lower layers keep their values.
        """
        return {name: options.get(name) for name in names}

    def add_model_arguments(self, parser):
        """
        Flags shared by the simulation commands. Every default is None so the
        config file and settings can fill in what was not given.
        """
        parser.add_argument('--beta', type=float, help='Inverse temperature.')
        parser.add_argument('--alpha', type=float, help='Minority (frustration) coupling.')
        parser.add_argument('--coupling', type=float, help='Nearest-neighbor coupling J.')
        parser.add_argument('--size', type=int, help='Lattice side length L.')
        parser.add_argument('--sweeps', type=int, help='Total sweeps, warm-up included.')
        parser.add_argument('--warmup', type=int, help='Sweeps discarded before recording.')
        parser.add_argument('--delta-t', type=int, help='Return sampling interval in sweeps.')
        parser.add_argument('--seed', type=int, help='Generator seed.')
        parser.add_argument('--init', choices=['random', 'all-up', 'all-down'],
                            help='Initial spin configuration.')
        parser.add_argument('--mapping', choices=['m-diff', 'log-abs-m'],
                            help='Magnetization to return mapping.')
        parser.add_argument('--max-lag', type=int, help='Largest ACF lag.')
        parser.add_argument('--fit-window', help='Power-law fit lags, e.g. "1,150".')
        parser.add_argument('--snapshot-at', help='Comma-separated sweep indices to snapshot.')
        parser.add_argument('--out', help='Output directory.')
        parser.add_argument('--config', help='TOML config file.')


MODEL_FLAGS = (
    'beta', 'alpha', 'coupling', 'size', 'sweeps', 'warmup', 'delta_t', 'seed',
    'init', 'mapping', 'max_lag', 'fit_window', 'snapshot_at', 'out',
)
