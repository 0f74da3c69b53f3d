"""Exception and warning types shared across the pipeline."""


class TermMapError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(TermMapError):
    """An input file does not match its expected format."""


class ValidationError(TermMapError):
    """Input data is well-formed but violates a content constraint."""


class ParameterError(TermMapError):
    """A parameter is outside its documented range."""


class EmptyCorpusError(TermMapError):
    """Loading produced no documents."""


class EmptyNetworkError(TermMapError):
    """No terms survive the minimum-occurrence threshold."""


class DegenerateNetworkError(TermMapError):
    """The network carries no usable co-occurrence signal."""


class DisconnectedWarning(UserWarning):
    """The positive-similarity graph fell apart; only the largest component is kept."""


class ConvergenceWarning(UserWarning):
    """An iterative optimizer hit its iteration cap before converging."""
