from rest_framework import serializers

from simulation_app.lattice import InitMode
from simulation_app.mapping import Mapping


def parse_window(value):
    """
    Accept "1,150", "1..150", "1:150" or a two-item sequence.
    """
    if isinstance(value, str):
        for separator in ('..', ',', ':'):
            if separator in value:
                value = value.split(separator)
                break
        else:
            raise serializers.ValidationError('Expected two integers such as "1,150".')
    try:
        low, high = (int(v) for v in value)
    except (TypeError, ValueError):
        raise serializers.ValidationError('Expected two integers such as "1,150".')
    return low, high


def parse_sweep_list(value):
    """
    Accept "1000,5000" or a sequence of integers.
    """
    if isinstance(value, str):
        value = [part for part in value.split(',') if part.strip()]
    try:
        return sorted(set(int(v) for v in value))
    except (TypeError, ValueError):
        raise serializers.ValidationError('Expected a comma-separated list of sweep indices.')


def parse_seed_range(value):
    """
    Accept "a..b" (inclusive) or a single seed.
    """
    if isinstance(value, str) and '..' in value:
        low, high = (int(v) for v in value.split('..', 1))
    else:
        low = high = int(value)
    if low < 0 or high < low:
        raise serializers.ValidationError('Seed range must satisfy 0 <= a <= b.')
    return list(range(low, high + 1))


class WindowField(serializers.Field):
    def to_internal_value(self, data):
        return parse_window(data)

    def to_representation(self, value):
        return list(value)


class SweepListField(serializers.Field):
    def to_internal_value(self, data):
        return parse_sweep_list(data)

    def to_representation(self, value):
        return list(value)


class SeedRangeField(serializers.Field):
    def to_internal_value(self, data):
        try:
            return parse_seed_range(data)
        except (TypeError, ValueError):
            raise serializers.ValidationError('Expected a seed range such as "1..10".')

    def to_representation(self, value):
        return f'{value[0]}..{value[-1]}'


class ModelParamsSerializer(serializers.Serializer):
    """
    Serializer for the model knobs of one simulation.
    """
    beta = serializers.FloatField(min_value=0)
    alpha = serializers.FloatField(min_value=0)
    coupling = serializers.FloatField()
    size = serializers.IntegerField(min_value=2)
    sweeps = serializers.IntegerField(min_value=1)
    warmup = serializers.IntegerField(min_value=0)
    delta_t = serializers.IntegerField(min_value=1)
    seed = serializers.IntegerField(min_value=0)

    def validate(self, attrs):
        """
        Cross-field checks: the warm-up must leave room for at least one
        return at the sampling interval.
        """
        if attrs['sweeps'] <= attrs['warmup']:
            raise serializers.ValidationError(
                {'sweeps': f"sweeps ({attrs['sweeps']}) must exceed warmup ({attrs['warmup']})."}
            )
        if attrs['sweeps'] - attrs['warmup'] < 2 * attrs['delta_t']:
            raise serializers.ValidationError(
                {'delta_t': 'sweeps - warmup must be at least 2 * delta_t.'}
            )
        return attrs


class ExperimentConfigSerializer(ModelParamsSerializer):
    """
    Serializer for a complete simulate/snapshot experiment.
    """
    init = serializers.ChoiceField(choices=[m.value for m in InitMode])
    mapping = serializers.ChoiceField(choices=[m.value for m in Mapping])
    max_lag = serializers.IntegerField(min_value=1)
    fit_window = WindowField()
    out = serializers.CharField()
    snapshot_at = SweepListField(required=False)
    seeds = SeedRangeField(required=False, allow_null=True)

    def validate_fit_window(self, value):
        low, high = value
        if low < 1 or high < low:
            raise serializers.ValidationError('Fit window must satisfy 1 <= min <= max.')
        return value

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if attrs['fit_window'][1] > attrs['max_lag']:
            raise serializers.ValidationError(
                {'fit_window': f"Fit window ends beyond max_lag ({attrs['max_lag']})."}
            )
        for index in attrs.get('snapshot_at', []):
            if not 0 <= index <= attrs['sweeps']:
                raise serializers.ValidationError(
                    {'snapshot_at': f"Sweep {index} outside [0, {attrs['sweeps']}]."}
                )
        return attrs
