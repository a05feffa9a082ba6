"""Exception hierarchy.  The CLI maps these onto exit codes."""


class LieStrataError(Exception):
    """Base class."""


class InputError(LieStrataError, ValueError):
    """Malformed or incompatible input (CLI exit code 2)."""


class DimensionMismatch(InputError):
    pass


class NotSubalgebraError(InputError):
    def __init__(self, witness: tuple[int, int], message: str | None = None):
        self.witness = witness
        super().__init__(message or f"subspace not closed under bracket: basis pair {witness}")


class DegenerateFormError(InputError):
    pass


class StratumExitError(InputError):
    """A curve sample left the stratum of its basepoint."""

    def __init__(self, sample, k_expected: int, k_found: int):
        self.sample = sample
        self.k_expected = k_expected
        self.k_found = k_found
        super().__init__(
            f"STRATUM_EXIT at t={sample}: stabilizer dimension {k_found}, expected {k_expected}"
        )


class IrrationalSpectrumError(InputError):
    pass


class NotSemisimpleError(InputError):
    pass


class BoundExceeded(InputError):
    pass


class InvariantViolation(LieStrataError):
    """An internal consistency check failed (CLI exit code 3)."""


class IndexDisagreement(InvariantViolation):
    def __init__(self, coranks):
        self.coranks = coranks
        super().__init__(f"generic corank witnesses disagree: {coranks}")


class ConvergenceError(LieStrataError):
    """Newton projection failed within its retry budget (CLI exit code 4)."""
