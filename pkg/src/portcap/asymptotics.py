"""Large-N behaviour of the probabilistic multi-port scheme.

With k = a*sqrt(N) teleported qubits the success probability converges to a
Gaussian second-moment integral,

    lim p_succ = 2 * integral_0^inf x^2 phi(x + a) dx
               = 2 * ((1 + a^2) Q(a) - a phi(a)),

with phi the standard normal density and Q its upper tail.  For finite N the
value is sandwiched between two computable bounds built from the same
integral (shifted by a*sqrt(N/(N+1))) plus explicit correction terms coming
from a Berry-Esseen-type normal approximation of the underlying binomial
weights.  ``psucc_largeN`` evaluates the exact qubit sum itself in log space,
so the sandwich can be checked directly against it at any N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_SQRT2 = math.sqrt(2.0)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)
_LN2 = math.log(2.0)


def normal_pdf(x: float) -> float:
    """Standard normal density."""
    return math.exp(-0.5 * x * x) / _SQRT_TWO_PI


def normal_tail(x: float) -> float:
    """Upper tail Q(x) = P(Z > x) via the complementary error function."""
    return 0.5 * math.erfc(x / _SQRT2)


def _shifted_second_moment(b: float) -> float:
    """integral_0^inf x^2 phi(x + b) dx = (1 + b^2) Q(b) - b phi(b)."""
    return (1.0 + b * b) * normal_tail(b) - b * normal_pdf(b)


def gaussian_limit(a: float) -> float:
    """Limiting success probability along k = a*sqrt(N):
    2 * integral_0^inf x^2 phi(x + a) dx, equal to 1 at a = 0 and decreasing."""
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    return 2.0 * _shifted_second_moment(a)


@dataclass(frozen=True)
class GaussBoundTerms:
    """Correction terms of the finite-N sandwich (all nonnegative)."""

    integral: float  # shifted Gaussian second moment, in [0, 1/2]
    mid: float       # Riemann-sum middle-term correction M(N)
    head: float      # truncated head integral near 0
    tail: float      # truncated tail integral beyond the sum range
    delta: float     # accumulated normal-approximation error


def sandwich_k(N: int, a: float) -> int:
    """Teleported-system count for the sandwich: the integer nearest a*sqrt(N)
    with the parity of N (so the spin sum starts at 0).

    Ties resolve upward: the success probability decreases in k, so a larger
    k keeps the true value under the upper bound computed at a*sqrt(N).
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    target = a * math.sqrt(N)
    parity = N % 2
    lo = math.floor(target)
    candidates = [c for c in range(lo - 1, lo + 3) if c >= 1 and c % 2 == parity]
    if not candidates:
        candidates = [parity if parity else 2]
    return min(candidates, key=lambda c: (abs(c - target), -c))


def psucc_sandwich(N: int, a: float) -> tuple[float, float, GaussBoundTerms]:
    """Computable lower/upper bounds on the qubit success probability at
    k = a*sqrt(N), a in (0, 2):

        upper = 2 (J + M)
        lower = 2 (J - M - head - tail) - delta

    where J is the Gaussian integral shifted by a*sqrt(N/(N+1)) and

        M     = 2 / (e sqrt(N+1) sqrt(2 pi))
        head  = (N+1)^(-3/2) / sqrt(2 pi)
        tail  = (sqrt(N+1)/sqrt(2 pi) + 1) exp(-(sqrt(N+1)-1)^2 / 2)
        delta = 4 N^(-3/2) + 11 sqrt(N+1) exp(-(N^(5/8)-1)^2 / (N+1)).

    The lower bound is clamped at 0 and the upper at 1.  The bounds are
    derived for even N; odd N is accepted (the exact sum is parity-safe) but
    only the even case carries the derivation's certification.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if not 0.0 < a < 2.0:
        raise ValueError(f"a must lie in (0, 2), got {a}")
    np1 = N + 1.0
    integral = _shifted_second_moment(a * math.sqrt(N / np1))
    mid = 2.0 / (math.e * math.sqrt(np1) * _SQRT_TWO_PI)
    head = np1**-1.5 / _SQRT_TWO_PI
    tail = (math.sqrt(np1) / _SQRT_TWO_PI + 1.0) * math.exp(
        -0.5 * (math.sqrt(np1) - 1.0) ** 2
    )
    delta = 4.0 * N**-1.5 + 11.0 * math.sqrt(np1) * math.exp(
        -((N**0.625 - 1.0) ** 2) / np1
    )
    upper = min(1.0, 2.0 * (integral + mid))
    lower = max(0.0, 2.0 * (integral - mid - head - tail) - delta)
    return lower, upper, GaussBoundTerms(integral, mid, head, tail, delta)


def psucc_largeN(N: int, k: int) -> float:
    """Qubit success probability evaluated in log space:

        p = 2**-N / (N+1) * sum_s (2s+1)^2 C(N+1, (N-k)/2 - s)

    Matches the exact rational form to ~1e-12 relative and stays finite for N
    up to millions of ports.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if not 1 <= k <= N:
        raise ValueError(f"k must satisfy 1 <= k <= N={N}, got {k}")
    two_s = np.arange((N - k) % 2, N - k + 1, 2, dtype=np.int64)
    m = (N - k - two_s) // 2
    m_max = int(m.max())
    idx = np.arange(1, m_max + 1, dtype=np.float64)
    ln_choose = np.concatenate(([0.0], np.cumsum(np.log((N + 2 - idx) / idx))))
    terms = 2.0 * np.log(two_s + 1.0) + ln_choose[m]
    top = float(terms.max())
    ln_p = (
        top
        + math.log(float(np.exp(terms - top).sum()))
        - math.log(N + 1.0)
        - N * _LN2
    )
    return math.exp(ln_p)
