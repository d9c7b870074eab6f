"""Errors raised by lrdpyground.

Every error raised on purpose by the library derives from :class:`LRDError`,
so callers that only care about "the simulation refused to do this" can catch
a single class. The command line interface maps these errors to exit codes,
see :mod:`lrdpyground.commands.lrd`.

>>> try:
...     raise ParameterDomainError("beta", 1.2, "(1/2, 1)")
... except LRDError as err:
...     print(err)
beta=1.2 is outside the allowed range (1/2, 1)
"""

from typing import Any


class LRDError(Exception):
    """Base class for all the errors raised by lrdpyground."""


class ParameterDomainError(LRDError, ValueError):
    """A parameter is outside of the domain where the model is defined."""

    def __init__(self, name: str, value: Any, allowed: str) -> None:
        """
        :param name: The name of the offending parameter.
        :param value: The value that was provided.
        :param allowed: Human readable description of the allowed values.
        """
        self.name = name
        self.value = value
        self.allowed = allowed
        super().__init__(f"{name}={value} is outside the allowed range {allowed}")


class ConsistencyError(LRDError):
    """Two objects that must describe the same model do not agree."""


class BudgetExceededError(LRDError):
    """An exact computation was requested beyond its configured size budget."""


class DegenerateModelError(LRDError):
    """The model degenerates and a normalizing constant vanishes."""


class UnsupportedBoundaryError(LRDError):
    """A rate or regime is requested exactly at a boundary where it is undefined."""


class NoRootError(LRDError):
    """The estimating equation of an M-estimator could not be bracketed."""


class RegimeError(LRDError):
    """An operation was requested in the wrong dependence regime."""


class QuadratureError(LRDError):
    """Numerical integration did not reach the requested tolerance."""


class ContractError(LRDError):
    """A callable provided by the caller violates its documented contract."""


class NumericDomainError(LRDError):
    """A numeric value falls outside the domain a formula requires."""


class InsufficientGridError(LRDError):
    """Not enough sample sizes were provided to evaluate a rate."""


class RankClaimError(LRDError):
    """The claimed second order rank disagrees with its classification."""


class PsiParseError(LRDError, ValueError):
    """A psi function specification string is not part of the catalog."""


class InternalError(LRDError):
    """An invariant of the implementation itself has been violated."""


class ConfigError(LRDError):
    """An experiment configuration does not validate.

    The ``pointer`` attribute is the JSON pointer (RFC 6901)
    of the offending field, like ``/process/beta``.
    """

    def __init__(self, pointer: str, message: str) -> None:
        """
        :param pointer: JSON pointer of the field that failed validation.
        :param message: What is wrong with the field.
        """
        self.pointer = pointer
        self.message = message
        super().__init__(f"{pointer or '/'}: {message}")
