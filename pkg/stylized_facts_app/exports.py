"""
File artifacts for return series and stats reports.
"""
from pathlib import Path

from core.artifacts import write_csv, write_json
from stylized_facts_app.serializers import StatsReportSerializer


def report_payload(report):
    return StatsReportSerializer(report).data


def write_returns(output_dir, returns, **sidecar):
    """
    returns.csv (`index,return`, 1-based) plus a returns.json sidecar with
    the series metadata and any extra provenance keys.
    """
    output_dir = Path(output_dir)
    write_csv(
        output_dir / 'returns.csv',
        ('index', 'return'),
        ((i, float(v)) for i, v in enumerate(returns.values, start=1)),
    )
    write_json(output_dir / 'returns.json', {**returns.metadata(), **sidecar})


def write_acf_curves(output_dir, report):
    """
    Plot-ready `lag,rho` CSVs for the return and absolute-return ACFs.
    """
    output_dir = Path(output_dir)
    for name, curve in (('acf_returns', report.acf_returns),
                        ('acf_abs_returns', report.acf_abs_returns)):
        write_csv(
            output_dir / f'{name}.csv',
            ('lag', 'rho'),
            ((int(lag), float(rho)) for lag, rho in zip(curve.lags, curve.rho)),
        )


def write_report(output_dir, report):
    return write_json(Path(output_dir) / 'report.json', report_payload(report))
