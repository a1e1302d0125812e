"""
Side-by-side comparison of two stats reports (for example a simulation
against an index).
"""
from core.artifacts import read_json
from core.exceptions import ReportVersionError
from stylized_facts_app.serializers import StatsReportSerializer


# (label in output, path into validated report data)
PAIRED_STATISTICS = (
    ('skewness', ('skewness',)),
    ('kurtosis_raw', ('kurtosis',)),
    ('kurtosis_excess', ('kurtosis_excess',)),
    ('eta', ('powerlaw', 'eta')),
    ('A', ('powerlaw', 'amplitude')),
    ('powerlaw_r2', ('powerlaw', 'r_squared')),
    ('jb_stat', ('jb_stat',)),
    ('jb_pvalue', ('jb_pvalue',)),
    ('sw_stat', ('sw_stat',)),
    ('sw_pvalue', ('sw_pvalue',)),
    ('n', ('n',)),
)


def load_report(path):
    """
    Parse and validate a report.json file.
    """
    payload = read_json(path)
    if not isinstance(payload, dict):
        raise ReportVersionError(f'{path} does not hold a report object.', path)
    serializer = StatsReportSerializer(data=payload)
    if not serializer.is_valid():
        raise ReportVersionError(
            f'{path} does not match report schema: {dict(serializer.errors)}', path)
    return serializer.validated_data


def _lookup(data, path):
    for key in path:
        data = data[key]
    return data


def _acf_difference(curve_a, curve_b):
    shared = min(len(curve_a['rho']), len(curve_b['rho']))
    return {
        'lags': curve_a['lags'][:shared],
        'difference': [a - b for a, b in zip(curve_a['rho'][:shared], curve_b['rho'][:shared])],
    }


def compare_reports(path_a, path_b):
    """
    Paired statistics (value in A, value in B, A - B) and per-lag ACF
    differences A - B over the lags both reports share.
    """
    report_a = load_report(path_a)
    report_b = load_report(path_b)

    statistics = {}
    for label, path in PAIRED_STATISTICS:
        a = _lookup(report_a, path)
        b = _lookup(report_b, path)
        statistics[label] = {'a': a, 'b': b, 'difference': a - b}

    return {
        'report_a': str(path_a),
        'report_b': str(path_b),
        'statistics': statistics,
        'acf_returns': _acf_difference(report_a['acf_returns'], report_b['acf_returns']),
        'acf_abs_returns': _acf_difference(
            report_a['acf_abs_returns'], report_b['acf_abs_returns']),
    }


def format_table(comparison):
    """
    Plain-text table of the paired statistics.
    """
    header = f'{"statistic":<16}{"A":>22}{"B":>22}{"A - B":>22}'
    lines = [header, '-' * len(header)]
    for label, row in comparison['statistics'].items():
        lines.append(
            f'{label:<16}{row["a"]:>22.10g}{row["b"]:>22.10g}{row["difference"]:>22.10g}'
        )
    for name in ('acf_returns', 'acf_abs_returns'):
        diffs = comparison[name]['difference']
        largest = max((abs(d) for d in diffs), default=0.0)
        lines.append(f'max |ACF difference| {name}: {largest:.10g}')
    return '\n'.join(lines)
