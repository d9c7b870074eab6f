"""Catalog of score functions for M-estimators of location.

An M-estimator is defined by a score function ``psi``. Only nondecreasing
and bounded scores are supported, which makes ``x -> sum_j psi(Y_j - x)``
a nonincreasing function of the location and guarantees a bounded
variation score.

Every member of the catalog is an odd function, so under a symmetric
marginal the estimating equation is centered at the true location.
Scores are selected through short specification strings:

>>> parse_psi("sign")
SignPsi()
>>> parse_psi("huber:2.5")
HuberPsi(c=2.5)
>>> parse_psi("ssign").spec
'ssign:0.1'
>>> parse_psi("tukey")
Traceback (most recent call last):
...
lrdpyground.exceptions.PsiParseError: unknown psi 'tukey', available are: sign, huber:<c>, ssign:<h>
"""

import abc
import math
from collections.abc import Callable

import numpy as np
import scipy.special

from ..exceptions import ContractError, ParameterDomainError, PsiParseError

__all__ = (
    "PsiFunction",
    "SignPsi",
    "HuberPsi",
    "SmoothedSignPsi",
    "CustomPsi",
    "parse_psi",
    "PSI_CATALOG",
    "DEFAULT_HUBER_C",
    "DEFAULT_SMOOTHING_H",
)

DEFAULT_HUBER_C = 1.345
DEFAULT_SMOOTHING_H = 0.1

PSI_CATALOG = ("sign", "huber:<c>", "ssign:<h>")


class PsiFunction(abc.ABC):
    """Base class for the score functions.

    A score is a vectorized callable, it must be nondecreasing and bounded
    by :attr:`bound`. :attr:`breakpoints` lists the points where it is not
    smooth, which quadrature routines need to know about.
    """

    kind: str = ""

    @abc.abstractmethod
    def __call__(self, y: np.ndarray | float) -> np.ndarray | float:
        """Evaluate the score."""
        ...

    @property
    @abc.abstractmethod
    def spec(self) -> str:
        """Specification string that :func:`parse_psi` maps back to this score."""
        ...

    @property
    @abc.abstractmethod
    def bound(self) -> float:
        """Supremum of ``|psi|``."""
        ...

    @property
    def breakpoints(self) -> tuple[float, ...]:
        """Points where the score has a jump or a kink."""
        return ()

    def __str__(self) -> str:
        return self.spec


class SignPsi(PsiFunction):
    """``psi(y) = sign(y)``, whose M-estimator is the sample median."""

    kind = "sign"

    def __call__(self, y: np.ndarray | float) -> np.ndarray | float:
        """Evaluate the score."""
        return np.sign(y)

    def __repr__(self) -> str:
        return "SignPsi()"

    @property
    def spec(self) -> str:
        """Specification string of the score."""
        return "sign"

    @property
    def bound(self) -> float:
        """Supremum of ``|psi|``."""
        return 1.0

    @property
    def breakpoints(self) -> tuple[float, ...]:
        """The jump at the origin."""
        return (0.0,)


class HuberPsi(PsiFunction):
    """Huber score, the identity clipped to ``[-c, c]``."""

    kind = "huber"

    def __init__(self, c: float = DEFAULT_HUBER_C) -> None:
        """
        :param c: The clipping threshold, any positive real.
        """
        if not (math.isfinite(c) and c > 0):
            raise ParameterDomainError("c", c, "positive real")
        self.c = float(c)

    def __call__(self, y: np.ndarray | float) -> np.ndarray | float:
        """Evaluate the score."""
        return np.clip(y, -self.c, self.c)

    def __repr__(self) -> str:
        return f"HuberPsi(c={self.c})"

    @property
    def spec(self) -> str:
        """Specification string of the score."""
        return f"huber:{self.c:g}"

    @property
    def bound(self) -> float:
        """Supremum of ``|psi|``."""
        return self.c

    @property
    def breakpoints(self) -> tuple[float, ...]:
        """The two kinks at ``-c`` and ``c``."""
        return (-self.c, self.c)


class SmoothedSignPsi(PsiFunction):
    """The sign function smoothed by a Gaussian kernel of width ``h``.

    ``psi(y) = erf(y / (h sqrt(2)))`` is infinitely differentiable
    and tends to the sign function as ``h`` goes to zero.
    """

    kind = "smoothed_sign"

    def __init__(self, h: float = DEFAULT_SMOOTHING_H) -> None:
        """
        :param h: The smoothing width, any positive real.
        """
        if not (math.isfinite(h) and h > 0):
            raise ParameterDomainError("h", h, "positive real")
        self.h = float(h)

    def __call__(self, y: np.ndarray | float) -> np.ndarray | float:
        """Evaluate the score."""
        return scipy.special.erf(np.asarray(y) / (self.h * math.sqrt(2.0)))

    def __repr__(self) -> str:
        return f"SmoothedSignPsi(h={self.h})"

    @property
    def spec(self) -> str:
        """Specification string of the score."""
        return f"ssign:{self.h:g}"

    @property
    def bound(self) -> float:
        """Supremum of ``|psi|``."""
        return 1.0

    @property
    def breakpoints(self) -> tuple[float, ...]:
        """The steep transition around the origin."""
        return (-self.h, 0.0, self.h)


class CustomPsi(PsiFunction):
    """Wrap an arbitrary callable as a score.

    The callable is spot checked on a grid of ``[-span, span]``
    and rejected unless it is nondecreasing and bounded there.

    >>> CustomPsi(lambda y: -np.tanh(y), name="down")
    Traceback (most recent call last):
    ...
    lrdpyground.exceptions.ContractError: psi 'down' is not nondecreasing
    """

    kind = "custom"

    def __init__(
        self,
        func: Callable[[np.ndarray], np.ndarray],
        name: str,
        span: float = 50.0,
        breakpoints: tuple[float, ...] = (),
    ) -> None:
        """
        :param func: The vectorized score function.
        :param name: Name used in reports.
        :param span: Half width of the interval the contract is checked on.
        :param breakpoints: Points where ``func`` is not smooth.
        """
        grid = np.linspace(-span, span, 4001)
        values = np.asarray(func(grid), dtype=np.float64)
        if not np.all(np.isfinite(values)):
            raise ContractError(f"psi {name!r} is not finite")
        if np.any(np.diff(values) < 0):
            raise ContractError(f"psi {name!r} is not nondecreasing")
        self.func = func
        self.name = name
        self._bound = float(np.max(np.abs(values)))
        self._breakpoints = tuple(breakpoints)

    def __call__(self, y: np.ndarray | float) -> np.ndarray | float:
        """Evaluate the score."""
        return self.func(y)

    def __repr__(self) -> str:
        return f"CustomPsi(name={self.name!r})"

    @property
    def spec(self) -> str:
        """Name of the wrapped score, not parseable."""
        return self.name

    @property
    def bound(self) -> float:
        """Supremum of ``|psi|`` on the checked interval."""
        return self._bound

    @property
    def breakpoints(self) -> tuple[float, ...]:
        """Breakpoints declared at construction."""
        return self._breakpoints


_PSI_KINDS: dict[str, tuple[type[PsiFunction], float | None]] = {
    "sign": (SignPsi, None),
    "huber": (HuberPsi, DEFAULT_HUBER_C),
    "ssign": (SmoothedSignPsi, DEFAULT_SMOOTHING_H),
}


def parse_psi(spec: str) -> PsiFunction:
    """Build a score from its specification string.

    :param spec: One of ``sign``, ``huber:<c>`` or ``ssign:<h>``,
                 the parameter can be omitted to get the default one.
    """
    name, _, argument = spec.strip().partition(":")
    if name not in _PSI_KINDS:
        raise PsiParseError(
            f"unknown psi {spec!r}, available are: {', '.join(PSI_CATALOG)}"
        )
    psi_class, default = _PSI_KINDS[name]
    if default is None:
        if argument:
            raise PsiParseError(f"psi {name!r} takes no parameter, got {spec!r}")
        return psi_class()
    if not argument:
        return psi_class(default)  # type: ignore[call-arg]
    try:
        value = float(argument)
    except ValueError:
        raise PsiParseError(
            f"psi {name!r} parameter must be a real number, got {argument!r}"
        ) from None
    try:
        return psi_class(value)  # type: ignore[call-arg]
    except ParameterDomainError as err:
        raise PsiParseError(f"invalid psi {spec!r}: {err}") from None
