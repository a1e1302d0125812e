from core.commands import SpinMarketCommand
from stylized_facts_app.analysis import build_analysis_config, run_analysis


class Command(SpinMarketCommand):
    """
    Stylized-facts report for an index price file.
    """
    help = 'Analyze a price CSV: log returns, ACFs, power-law fit and normality tests.'

    def add_arguments(self, parser):
        parser.add_argument('csv_path', nargs='?', help='Price CSV (same as --csv).')
        parser.add_argument('--csv', help='Price CSV with a header row.')
        parser.add_argument('--date-col', help='Date column name (default "Date").')
        parser.add_argument('--price-col', help='Price column name (default "Adj Close").')
        parser.add_argument('--delta-t', type=int, help='Return interval in rows (default 1).')
        parser.add_argument('--max-lag', type=int, help='Largest ACF lag.')
        parser.add_argument('--fit-window', help='Power-law fit lags, e.g. "1,150".')
        parser.add_argument('--out', help='Output directory.')
        parser.add_argument('--config', help='TOML config file.')

    def run(self, **options):
        options['csv'] = options.get('csv') or options.get('csv_path')
        config = build_analysis_config(
            self.flags(options, (
                'csv', 'date_col', 'price_col', 'delta_t', 'max_lag', 'fit_window', 'out',
            )),
            options.get('config'),
        )
        report = run_analysis(config)
        self.stdout.write(
            f'n={report.n} skewness={report.skewness:.4f} kurtosis={report.kurtosis:.4f} '
            f'eta={report.powerlaw.eta:.4f} jb_p={report.jb_pvalue:.3g} '
            f'sw_p={report.sw_pvalue:.3g}'
        )
        self.stdout.write(self.style.SUCCESS(f'Report written to {config.output_dir}'))
