from core.commands import MODEL_FLAGS, SpinMarketCommand
from simulation_app.config import build_experiment_config
from simulation_app.experiments import run_batch, run_experiment


class Command(SpinMarketCommand):
    """
    Run the spin-market simulation and its stylized-facts report.

    The dynamics are the heat-bath rule: each selected agent is resampled to
    +1 with probability 1 / (1 + exp(-2 beta h)). No Metropolis
    accept/reject variant is offered.
    """
    help = (
        'Simulate the spin market and write magnetization.csv, returns.csv, '
        'report.json, ACF CSVs and optional snapshots.'
    )

    def add_arguments(self, parser):
        self.add_model_arguments(parser)
        parser.add_argument(
            '--seeds', help='Inclusive seed range "a..b"; runs each seed in parallel.')

    def run(self, **options):
        config = build_experiment_config(
            self.flags(options, MODEL_FLAGS + ('seeds',)), options.get('config'))

        if config.seeds:
            summary = run_batch(config)
            for seed, row in summary.items():
                self.stdout.write(
                    f"seed {seed}: eta={row['eta']:.4f} "
                    f"kurtosis={row['kurtosis_raw']:.4f} jb_p={row['jb_pvalue']:.3g}"
                )
            self.stdout.write(self.style.SUCCESS(
                f'{len(summary)} runs written to {config.output_dir}'))
            return

        outcome = run_experiment(config)
        report = outcome.report
        self.stdout.write(
            f'eta={report.powerlaw.eta:.4f} kurtosis={report.kurtosis:.4f} '
            f'skewness={report.skewness:.4f} jb_p={report.jb_pvalue:.3g}'
        )
        self.stdout.write(self.style.SUCCESS(f'Results written to {config.output_dir}'))
