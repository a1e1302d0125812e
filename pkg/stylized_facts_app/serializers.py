from rest_framework import serializers

from simulation_app.serializers import WindowField
from stylized_facts_app.reports import REPORT_SCHEMA_VERSION


class AcfCurveSerializer(serializers.Serializer):
    """
    Serializer for an autocorrelation curve.
    """
    lags = serializers.ListField(child=serializers.IntegerField(min_value=0))
    rho = serializers.ListField(child=serializers.FloatField())
    n = serializers.IntegerField(min_value=1)

    def validate(self, attrs):
        if len(attrs['lags']) != len(attrs['rho']):
            raise serializers.ValidationError('lags and rho must have equal length.')
        return attrs


class PowerLawFitSerializer(serializers.Serializer):
    """
    Serializer for the absolute-return ACF power-law fit.
    """
    A = serializers.FloatField(source='amplitude')
    eta = serializers.FloatField()
    r2 = serializers.FloatField(source='r_squared')
    window = serializers.ListField(
        source='lag_window', child=serializers.IntegerField(), min_length=2, max_length=2)
    n_points = serializers.IntegerField(min_value=0)
    n_dropped = serializers.IntegerField(min_value=0)


class SubsampleSerializer(serializers.Serializer):
    applied = serializers.BooleanField()
    stride = serializers.IntegerField(min_value=1)
    n_used = serializers.IntegerField(min_value=0)


class StatsReportSerializer(serializers.Serializer):
    """
    Wire schema of report.json. Serializes a StatsReport and validates a
    parsed report for comparison.
    """
    schema_version = serializers.IntegerField()
    skewness = serializers.FloatField()
    kurtosis_raw = serializers.FloatField(source='kurtosis')
    kurtosis_excess = serializers.FloatField()
    jb_stat = serializers.FloatField(min_value=0)
    jb_pvalue = serializers.FloatField(min_value=0, max_value=1)
    sw_stat = serializers.FloatField(min_value=0, max_value=1)
    sw_pvalue = serializers.FloatField(min_value=0, max_value=1)
    n = serializers.IntegerField(min_value=1)
    sw_subsample = SubsampleSerializer()
    acf_returns = AcfCurveSerializer()
    acf_abs_returns = AcfCurveSerializer()
    powerlaw = PowerLawFitSerializer()
    regimes = serializers.DictField(required=False, allow_null=True)
    provenance = serializers.DictField()

    def validate_schema_version(self, value):
        if value != REPORT_SCHEMA_VERSION:
            raise serializers.ValidationError(
                f'Unsupported schema version {value}; expected {REPORT_SCHEMA_VERSION}.'
            )
        return value


class AnalysisConfigSerializer(serializers.Serializer):
    """
    Serializer for an empirical analysis run.
    """
    csv = serializers.CharField()
    date_col = serializers.CharField()
    price_col = serializers.CharField()
    delta_t = serializers.IntegerField(min_value=1)
    max_lag = serializers.IntegerField(min_value=1)
    fit_window = WindowField()
    out = serializers.CharField()

    def validate(self, attrs):
        low, high = attrs['fit_window']
        if low < 1 or high < low or high > attrs['max_lag']:
            raise serializers.ValidationError(
                {'fit_window': 'Fit window must satisfy 1 <= min <= max <= max_lag.'}
            )
        return attrs
