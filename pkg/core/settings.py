"""
Django settings for the spin-market project.

The project has no web surface: Django provides the settings layer, the
logging configuration and the management-command CLI
(`python manage.py simulate|analyze|compare|snapshot`).

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
from dotenv import load_dotenv
import os

load_dotenv()  # Load environment variables from a .env file if present

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Only used by Django internals; nothing is signed by the CLI.
SECRET_KEY = os.getenv('SECRET_KEY', 'spin-market-cli')

DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'simulation_app',
    'stylized_facts_app',
]

# No persistence: every artifact is written to the output directory.
DATABASES = {}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# REST Framework is used for its serializers and JSON renderer only

REST_FRAMEWORK = {
    'STRICT_JSON': True,
    'UNAUTHENTICATED_USER': None,
}


# Model and experiment defaults. Command-line flags override a TOML config
# file, which overrides these values.

def _env(name, default):
    return os.getenv(f'SPIN_MARKET_{name}', default)


SPIN_MARKET = {
    'BETA': float(_env('BETA', '1.7')),
    'ALPHA': float(_env('ALPHA', '10')),
    'COUPLING': float(_env('COUPLING', '1')),
    'SIZE': int(_env('SIZE', '32')),
    'SWEEPS': int(_env('SWEEPS', '1000000')),
    'WARMUP': int(_env('WARMUP', '100000')),
    'DELTA_T': int(_env('DELTA_T', '100')),
    'SEED': int(_env('SEED', '0')),
    'INIT': _env('INIT', 'random'),
    'MAPPING': _env('MAPPING', 'm-diff'),
    'MAX_LAG': int(_env('MAX_LAG', '150')),
    'FIT_WINDOW': tuple(
        int(part) for part in _env('FIT_WINDOW', '1,150').split(',')
    ),
    'OUTPUT_DIR': _env('OUTPUT_DIR', 'runs/latest'),
    'DATE_COLUMN': _env('DATE_COLUMN', 'Date'),
    'PRICE_COLUMN': _env('PRICE_COLUMN', 'Adj Close'),
    # Shapiro-Wilk approximation is calibrated up to this sample size
    'SW_LIMIT': int(_env('SW_LIMIT', '5000')),
    # Sweeps drawn from the generator per block in the simulation loop
    'BLOCK_SWEEPS': int(_env('BLOCK_SWEEPS', '256')),
    'REGIME_WINDOW': int(_env('REGIME_WINDOW', '1000')),
    'MAX_WORKERS': int(_env('MAX_WORKERS', str(os.cpu_count() or 1))),
}


# Logging goes to stderr so command output on stdout stays machine-readable

LOG_LEVEL = _env('LOG_LEVEL', 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '[{levelname}] {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
        'core': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'simulation_app': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'stylized_facts_app': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}
