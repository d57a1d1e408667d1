"""Exception types shared across the package.

The CLI maps these onto exit codes: ingestion problems exit with 2,
data-insufficiency problems with 3, anything else with 1.
"""


class LengramError(Exception):
    """Base class for all lengram errors."""


class IngestError(LengramError):
    """A document, manifest or configuration input is missing or invalid."""


class InsufficientDataError(LengramError):
    """The data is too short for the requested segmentation or order."""
