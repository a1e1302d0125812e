from pathlib import Path

from core.artifacts import ensure_directory, write_json
from core.commands import SpinMarketCommand
from stylized_facts_app.comparison import compare_reports, format_table


class Command(SpinMarketCommand):
    """
    Compare two report.json files statistic by statistic and lag by lag.
    """
    help = 'Compare two stats reports; writes comparison.json and prints a table.'

    def add_arguments(self, parser):
        parser.add_argument('report_a', help='First report.json.')
        parser.add_argument('report_b', help='Second report.json.')
        parser.add_argument('--out', help='Output directory for comparison.json.')

    def run(self, **options):
        comparison = compare_reports(options['report_a'], options['report_b'])
        output_dir = ensure_directory(options.get('out') or Path(options['report_a']).parent)
        write_json(output_dir / 'comparison.json', comparison)
        self.stdout.write(format_table(comparison))
