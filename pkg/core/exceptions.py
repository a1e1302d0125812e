"""
Error hierarchy shared by both apps.

Every error carries the process exit code a management command reports
when the error reaches the command line:

- 1: I/O and parse failures
- 2: configuration errors
- 3: numerical or insufficient-data errors
"""


class SpinMarketError(Exception):
    """
    Base class for all domain errors raised by the project.
    """
    exit_code = 1

    def with_context(self, context):
        """
        Return a copy of this error whose message is prefixed with context.
        """
        error = type(self).__new__(type(self))
        error.__dict__.update(self.__dict__)
        error.args = (f'{context}: {self}',)
        return error


# ===== IO / PARSE (exit code 1) =====

class DataFileError(SpinMarketError):
    """
    A file could not be read, written or parsed.
    """
    exit_code = 1

    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = str(path) if path is not None else None


class SchemaError(DataFileError):
    """
    A required CSV column is missing.
    """


class PriceValidationError(DataFileError):
    """
    A price row violates positivity or date monotonicity.
    """

    def __init__(self, message, path=None, row=None):
        super().__init__(message, path)
        self.row = row


class EmptyInputError(DataFileError):
    """
    The input file holds no data rows.
    """


class ReportParseError(DataFileError):
    """
    A report file is not valid JSON.
    """


class ReportVersionError(DataFileError):
    """
    A report file does not match the current report schema.
    """


# ===== CONFIGURATION (exit code 2) =====

class ConfigurationError(SpinMarketError):
    """
    Invalid model parameters or experiment configuration.
    """
    exit_code = 2


class InvalidDimensionError(ConfigurationError):
    """
    Lattice side length below the supported minimum.
    """


class SiteIndexError(ConfigurationError, IndexError):
    """
    A lattice site lies outside the grid.
    """


# ===== NUMERICAL (exit code 3) =====

class NumericalError(SpinMarketError):
    """
    A statistic cannot be computed from the given data.
    """
    exit_code = 3


class InsufficientDataError(NumericalError):
    """
    Too few observations for the requested computation.
    """


class DegenerateVarianceError(NumericalError):
    """
    The input has zero variance.
    """


class SampleSizeError(NumericalError):
    """
    Sample size outside the validity range of an approximation.
    """


class PriceDomainError(NumericalError):
    """
    A non-positive price was passed to a logarithmic computation.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index
