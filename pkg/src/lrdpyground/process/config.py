"""Parameters that fully define one simulated model."""

import enum
import math
from dataclasses import asdict, dataclass
from typing import Any

from ..exceptions import ParameterDomainError

__all__ = ("Innovation", "ProcessConfig", "validate_beta", "DEFAULT_TRUNCATION")

DEFAULT_TRUNCATION = 2**16
"""Default number of moving average coefficients kept after ``c_0``."""

MAX_SEED = 2**64 - 1


class Innovation(str, enum.Enum):
    """Law of the i.i.d. innovations ``eps_t``.

    Only standard Gaussian innovations are provided: they have all the
    moments and smooth bounded derivatives the reduction principle needs,
    and they make the marginal law of ``X_1`` exactly Gaussian.
    """

    STANDARD_GAUSSIAN = "standard_gaussian"


def validate_beta(beta: float) -> float:
    """Check that ``beta`` lies in the long memory range ``(1/2, 1)``.

    >>> validate_beta(0.7)
    0.7
    >>> validate_beta(1.2)
    Traceback (most recent call last):
    ...
    lrdpyground.exceptions.ParameterDomainError: beta=1.2 is outside the allowed range (1/2, 1)
    """
    if not (isinstance(beta, (int, float)) and math.isfinite(beta)):
        raise ParameterDomainError("beta", beta, "(1/2, 1)")
    if not 0.5 < beta < 1.0:
        raise ParameterDomainError("beta", beta, "(1/2, 1)")
    return float(beta)


@dataclass(frozen=True)
class ProcessConfig:
    """Configuration of a long-range dependent linear process.

    The observations are ``Y_i = sigma * X_i + mu`` where
    ``X_i = sum_{k=0}^{trunc_k} c_k eps_{i-k}`` and ``c_k = (k+1)^-beta``.

    >>> ProcessConfig(beta=0.7, trunc_k=16, seed=3)
    ProcessConfig(beta=0.7, trunc_k=16, innovation=<Innovation.STANDARD_GAUSSIAN: 'standard_gaussian'>, mu=0.0, sigma=1.0, seed=3)
    >>> ProcessConfig(beta=0.7, sigma=0.0)
    Traceback (most recent call last):
    ...
    lrdpyground.exceptions.ParameterDomainError: sigma=0.0 is outside the allowed range nonzero real
    """

    beta: float
    trunc_k: int = DEFAULT_TRUNCATION
    innovation: Innovation = Innovation.STANDARD_GAUSSIAN
    mu: float = 0.0
    sigma: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        validate_beta(self.beta)
        # trunc_k = 0 is the white noise control model.
        if not isinstance(self.trunc_k, int) or self.trunc_k < 0:
            raise ParameterDomainError("trunc_k", self.trunc_k, "integer >= 0")
        if not isinstance(self.innovation, Innovation):
            try:
                object.__setattr__(self, "innovation", Innovation(self.innovation))
            except ValueError:
                raise ParameterDomainError(
                    "innovation",
                    self.innovation,
                    "{" + ", ".join(i.value for i in Innovation) + "}",
                ) from None
        if not math.isfinite(self.mu):
            raise ParameterDomainError("mu", self.mu, "finite real")
        if not math.isfinite(self.sigma) or self.sigma == 0:
            raise ParameterDomainError("sigma", self.sigma, "nonzero real")
        if not isinstance(self.seed, int) or not 0 <= self.seed <= MAX_SEED:
            raise ParameterDomainError("seed", self.seed, "64-bit unsigned integer")

    def with_seed(self, seed: int) -> "ProcessConfig":
        """Return the same model driven by a different seed."""
        return ProcessConfig(
            beta=self.beta,
            trunc_k=self.trunc_k,
            innovation=self.innovation,
            mu=self.mu,
            sigma=self.sigma,
            seed=seed,
        )

    def to_dict(self) -> dict[str, Any]:
        """JSON friendly representation of the configuration."""
        data = asdict(self)
        data["innovation"] = self.innovation.value
        return data
