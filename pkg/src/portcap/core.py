"""Shared protocol parameter and result types."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ProtocolParams:
    """Multi-port teleportation instance: N ports of local dimension d, k teleported systems.

    The exact performance formulas are defined for 1 <= k <= N; the
    discrimination-based bounds additionally require k <= floor(N/2).
    """

    N: int
    k: int
    d: int = 2

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")
        if not 1 <= self.k <= self.N:
            raise ValueError(f"k must satisfy 1 <= k <= N={self.N}, got {self.k}")
        if self.d < 2:
            raise ValueError(f"d must be >= 2, got {self.d}")

    @property
    def n(self) -> int:
        """Total number of systems on one side (ports plus teleported slots)."""
        return self.N + self.k

    @property
    def num_signals(self) -> int:
        """Number of measurement outcomes, k! * C(N, k) ordered port tuples."""
        return math.perm(self.N, self.k)

    @property
    def in_bound_scope(self) -> bool:
        """Whether the discrimination bounds apply (k <= floor(N/2))."""
        return self.k <= self.N // 2

    def require_bound_scope(self) -> None:
        if not self.in_bound_scope:
            raise ValueError(
                f"bound formulas require k <= floor(N/2); got N={self.N}, k={self.k}"
            )


@dataclass(frozen=True)
class EvalResult:
    """A computed figure of merit with arithmetic-path metadata.

    ``exact`` carries the value as a reduced rational whenever the fully
    exact path produced one; ``value`` is always the float view.
    """

    value: float
    exact: Fraction | None
    method: str
    arith: str
    rel_err_bound: float

    @classmethod
    def from_fraction(cls, x: Fraction, method: str) -> "EvalResult":
        return cls(
            value=float(x),
            exact=x,
            method=method,
            arith="exact",
            rel_err_bound=2.0**-53,
        )
