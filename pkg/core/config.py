"""
Layered experiment configuration: command-line flags override a TOML
config file, which overrides the defaults from settings.SPIN_MARKET.
"""
import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path

from core.exceptions import ConfigurationError, DataFileError


logger = logging.getLogger(__name__)

CONFIG_TABLE = 'experiment'


def _normalize_key(key):
    return key.replace('-', '_').lower()


def load_config_file(path):
    """
    Read a TOML config file. Keys are named like the command-line flags
    (dashes or underscores) and may sit at top level or in an
    [experiment] table.
    """
    path = Path(path)
    try:
        with path.open('rb') as handle:
            data = tomllib.load(handle)
    except FileNotFoundError as exc:
        raise DataFileError(f'Config file not found: {path}', path) from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigurationError(f'Invalid TOML in {path}: {exc}') from exc

    table = data.get(CONFIG_TABLE, {})
    merged = {k: v for k, v in data.items() if k != CONFIG_TABLE}
    merged.update(table)
    logger.info('Loaded config file %s', path)
    return {_normalize_key(k): v for k, v in merged.items()}


def merge_options(defaults, config_path=None, flags=None):
    """
    Combine defaults, the optional config file and the flags that were
    actually given (None means not given).
    """
    options = {_normalize_key(k): v for k, v in defaults.items()}
    if config_path:
        options.update(load_config_file(config_path))
    for key, value in (flags or {}).items():
        if value is not None:
            options[_normalize_key(key)] = value
    return options


def validate_options(serializer_class, options):
    """
    Validate merged options with a DRF serializer, returning validated data
    or raising ConfigurationError with every problem listed.
    """
    serializer = serializer_class(data=options)
    if not serializer.is_valid():
        problems = '; '.join(
            f'{field}: {" ".join(str(m) for m in messages)}'
            for field, messages in _flatten(serializer.errors)
        )
        raise ConfigurationError(f'Invalid configuration: {problems}')
    return serializer.validated_data


def _flatten(errors, prefix=''):
    for field, messages in errors.items():
        name = f'{prefix}{field}'
        if isinstance(messages, dict):
            yield from _flatten(messages, f'{name}.')
        else:
            yield name, messages
