"""Exception types shared across the package.

Exit-code mapping for the CLI lives in ``cli.py``: descriptor/usage errors
exit 2, resource-bound errors exit 3, falsified invariants and failing
suites exit 1.
"""


class ClopenError(Exception):
    pass


class InvalidSpaceError(ClopenError, ValueError):
    """A subset family violates the topology axioms."""


class InvalidMapError(ClopenError, ValueError):
    """A point map is not continuous or out of range."""


class InvalidRingError(ClopenError, ValueError):
    """A ring descriptor or operation table violates its invariants."""


class ResourceBoundError(ClopenError, ValueError):
    """Input exceeds a hard enumeration/materialization bound."""


class FalsifiedInvariantError(ClopenError, AssertionError):
    """A checked mathematical invariant failed; carries a witness.

    Raising (instead of returning a failed report) is deliberate: these
    conditions hold for every valid input, so a failure means the engine
    itself is broken, and that should never be swallowed into a report
    stream.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DescriptorError(ClopenError, ValueError):
    """Base for ring-descriptor grammar errors."""

    def __init__(self, message, column=None):
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)
        self.column = column


class DescriptorSyntaxError(DescriptorError):
    pass


class NonPrimeModulusError(DescriptorError):
    pass


class NonMonicPolynomialError(DescriptorError):
    pass
