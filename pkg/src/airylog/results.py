"""Result containers shared by the transform modules."""

from __future__ import annotations

from dataclasses import dataclass

from .ddreal import XReal
from .errors import DomainError


@dataclass(frozen=True)
class TransformResult:
    """A computed integral value plus method tag and error estimate.

    Any two methods for the same quantity must agree within the sum of
    their err_est fields; the validation matrix enforces this.
    """

    value: XReal
    method: str
    err_est: float

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class TruncationConfig:
    """Truncation orders for the accelerated pipelines: N explicit roots,
    n terms of the tail power series."""

    N: int
    n: int

    def __post_init__(self):
        if self.N < 1 or self.n < 0:
            raise DomainError("need N >= 1 and n >= 0")
