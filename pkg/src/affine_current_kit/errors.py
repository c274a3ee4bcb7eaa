"""Exception hierarchy.

Everything raised on bad user input derives from :class:`ValidationError`; the
CLI maps those to exit status 2.
"""


class KitError(Exception):
    pass


class ValidationError(KitError, ValueError):
    pass


class InvalidTypeError(ValidationError):
    pass


class HypothesisFailure(ValidationError):
    """One or more named hypotheses of the extension construction failed."""

    def __init__(self, failures):
        self.failures = tuple(failures)
        super().__init__("hypothesis failed: " + ", ".join(self.failures))


class NoSimpleCurrentError(ValidationError):
    pass


class NotSpecifiedError(ValidationError):
    """Requested datum is not determined by the construction (e.g. D_n even generators)."""


class UnsupportedError(ValidationError):
    pass


class TwistedPhaseError(ValidationError):
    """A C-phase exponent is not an integer; carries the exact exponent."""

    def __init__(self, exponent):
        self.exponent = exponent
        super().__init__(f"phase exponent {exponent} is not an integer (twisted regime)")


class MissingFusionData(ValidationError):
    pass
