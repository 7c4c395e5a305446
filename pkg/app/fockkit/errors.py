"""Exception hierarchy shared by the library and the CLI."""

from typing import Any


class FockkitError(Exception):
    """Base class for all domain errors.

    Each subclass has a stable machine-readable ``code`` that the CLI prints
    together with a human-readable detail.
    """

    code = "fockkit_error"

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail

    def to_dict(self) -> dict[str, Any]:
        return {"error": self.code, "detail": self.detail}

    def __str__(self) -> str:
        return f"[{self.code}] {self.detail}"


class InvalidInput(FockkitError):
    """A precondition on the input data does not hold."""

    code = "invalid_input"


class NotNuRegular(FockkitError):
    """A weight is singular for a root of the Levi subsystem."""

    code = "not_nu_regular"


class Unsupported(FockkitError):
    """Input lies outside the supported integral, negative-level setting."""

    code = "unsupported"


class BudgetExceeded(FockkitError):
    """A search visited more nodes than the configured budget."""

    code = "budget_exceeded"


class NotMinimalCosetRep(FockkitError):
    """An element has a right descent in the parabolic subset."""

    code = "not_minimal_coset_rep"


class InternalNonDivisible(FockkitError):
    """An exact polynomial division left a remainder (implementation bug)."""

    code = "internal_non_divisible"


class CacheError(FockkitError):
    """The persistent KL cache could not be read or written."""

    code = "cache_error"


class ConfigError(FockkitError):
    """An environment setting could not be parsed."""

    code = "config_error"
