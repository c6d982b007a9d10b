"""Exact and log-space arithmetic underneath every formula in the package.

Two arithmetic paths coexist.  Arbitrary-precision integers and rationals
(``int``, ``fractions.Fraction``) carry the closed forms exactly for moderate
port counts; a log-space float path keeps the same quantities computable when
the factorials involved overflow any fixed-width type.  The overlap window is
cross-validated by the test suite.

Square roots of integers are handled exactly when the radicand is a perfect
square and otherwise as dyadic rationals with 128 guard bits, so sums of
radical terms come with a certified relative error far below 1e-15.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

_EPS = 2.0**-52
_LN2 = math.log(2.0)

# Route thresholds for ln_binomial: exact big-integer log below _EXACT_COMB_MAX,
# a compensated log-sum while min(k, n-k) stays moderate, log-gamma beyond.
_EXACT_COMB_MAX = 10_000
_LOG_LOOP_MAX = 65_536

# Guard bits for dyadic square-root approximations (relative error <= 2**-128).
_SQRT_GUARD_BITS = 128


@dataclass(frozen=True)
class RealApprox:
    """A float together with a certified relative error bound."""

    value: float
    rel_err_bound: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise ValueError(f"value must be finite, got {self.value}")
        if self.rel_err_bound < 0:
            raise ValueError("rel_err_bound must be nonnegative")


def binomial(n: int, k: int) -> int:
    """C(n, k) with the out-of-range convention C(n, k) = 0 for k < 0 or k > n.

    The zero convention is load-bearing: the spin-coupling coefficients and the
    qubit success-probability sum rely on vanishing out-of-range terms.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling_factorial(n: int, k: int) -> int:
    """n * (n-1) * ... * (n-k+1), i.e. n!/(n-k)!. Requires 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        raise ValueError(f"falling_factorial requires 0 <= k <= n, got n={n}, k={k}")
    return math.perm(n, k)


def ln_int(x: int) -> float:
    """Natural log of a positive integer, accurate to a few ulp at any size."""
    if x <= 0:
        raise ValueError(f"ln_int requires a positive integer, got {x}")
    if x.bit_length() <= 53:
        return math.log(x)
    shift = x.bit_length() - 53
    return math.log(x >> shift) + shift * _LN2


def ln_binomial(n: int, k: int) -> RealApprox:
    """ln C(n, k) for 0 <= k <= n, stable for n far beyond float factorials."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        raise ValueError(f"ln_binomial requires 0 <= k <= n, got n={n}, k={k}")
    kk = min(k, n - k)
    if kk == 0:
        return RealApprox(0.0, 0.0)
    if n <= _EXACT_COMB_MAX:
        return RealApprox(ln_int(math.comb(n, k)), 8 * _EPS)
    if kk <= _LOG_LOOP_MAX:
        terms = [math.log(n - t) - math.log(t + 1) for t in range(kk)]
        value = math.fsum(terms)
        bound = max(2 * kk * _EPS * math.log(n) / value, _EPS) if value > 0 else _EPS
        return RealApprox(value, min(bound, 1e-13))
    big = math.lgamma(n + 1)
    value = big - math.lgamma(k + 1) - math.lgamma(n - k + 1)
    bound = max(8 * _EPS * big / max(value, 1.0), _EPS)
    return RealApprox(value, bound)


def to_real(x: Fraction | int) -> RealApprox:
    """Correctly rounded float view of an exact rational."""
    return RealApprox(float(Fraction(x)), 2.0**-53)


def sqrt_as_fraction(x: int) -> tuple[Fraction, bool]:
    """sqrt(x) as a rational: exact when x is a perfect square, else a dyadic
    approximation with relative error <= 2**-128 (flagged False)."""
    if x < 0:
        raise ValueError(f"radicand must be nonnegative, got {x}")
    root = math.isqrt(x)
    if root * root == x:
        return Fraction(root), True
    scaled = math.isqrt(x << (2 * _SQRT_GUARD_BITS))
    return Fraction(scaled, 1 << _SQRT_GUARD_BITS), False


def square_of_radical_sum(terms: Sequence[tuple[int, int]]) -> tuple[Fraction, bool]:
    """(sum_i c_i * sqrt(R_i))**2 for nonnegative integer coefficients and radicands.

    Expanding the square leaves only pairwise products sqrt(R_i * R_j); each is
    extracted exactly when the product is a perfect square.  The returned flag
    is True iff every surviving cross term was exact, in which case the result
    is the true rational value.  Otherwise the result carries a certified
    relative error below len(terms)**2 * 2**-128 (all terms are nonnegative,
    so no cancellation amplifies it).
    """
    live = [(c, r) for c, r in terms if c != 0 and r != 0]
    for c, r in live:
        if c < 0 or r < 0:
            raise ValueError("coefficients and radicands must be nonnegative")
    total = Fraction(0)
    exact = True
    for i, (ci, ri) in enumerate(live):
        total += ci * ci * ri
        for cj, rj in live[i + 1 :]:
            root, ok = sqrt_as_fraction(ri * rj)
            total += 2 * ci * cj * root
            exact = exact and ok
    return total, exact


def logsumexp(values: Iterable[float]) -> float:
    """log(sum(exp(v))) over a finite iterable, tolerating -inf entries."""
    vals = [v for v in values if v != -math.inf]
    if not vals:
        return -math.inf
    top = max(vals)
    return top + math.log(math.fsum(math.exp(v - top) for v in vals))
