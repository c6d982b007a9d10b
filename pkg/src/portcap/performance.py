"""Exact performance of non-optimal multi-port teleportation.

Entanglement fidelity and success probability come in two equivalent forms:

* the general-dimension Schur-Weyl sums over Young diagrams ``alpha`` of the
  N-k port systems and the diagrams ``mu`` reachable by adding k boxes,

      F = d**-(N+2k) * sum_alpha ( sum_mu m_{mu/alpha} * sqrt(m_mu d_mu) )**2
      p = d**-N      * sum_alpha m_alpha**2 * min_mu (d_mu / m_mu)

* and, for qubits, closed angular-momentum forms where a two-row diagram with
  row difference 2j is the spin-j sector and ``spin_path_count`` plays the
  role of m_{mu/alpha}.

Two easy-to-misplace normalization factors in the qubit forms matter: the
fidelity carries 1/(N+1) outside the squared sum (only sqrt(N+1) goes
inside, since N!/((N/2-j)!(N/2+j+1)!) = C(N+1, N/2-j)/(N+1)), and the
success probability carries a (2s+1)**2 weight.  Both are certified by the
test suite through exact agreement with the general-d sums.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import EvalResult
from .exactmath import binomial, ln_int, logsumexp, square_of_radical_sum
from .tableaux import add_boxes, enumerate_diagrams, ssyt_count, syt_count

# Default switch from exact rationals to the log-space float path.
EXACT_ARITH_MAX_N = 200

_LN2 = math.log(2.0)


def _check_nk(N: int, k: int) -> None:
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if not 1 <= k <= N:
        raise ValueError(f"k must satisfy 1 <= k <= N={N}, got {k}")


def spin_path_count(two_s: int, two_j: int, k: int) -> int:
    """Number of ways to couple k further spin-1/2 systems so that total spin
    s (of N-k systems) becomes total spin j (of N systems):

        C(k, s - j + k/2) - C(k, s + j + k/2 + 1)

    Spins are passed doubled (two_s = 2s), so all parity logic stays integer.
    Out-of-range binomials vanish, making the count total.
    """
    if two_s < 0 or two_j < 0:
        raise ValueError("doubled spins must be nonnegative")
    if (two_s + two_j + k) % 2:
        raise ValueError(
            f"parity mismatch: 2s={two_s}, 2j={two_j} unreachable with k={k} added spins"
        )
    lo = (two_s - two_j + k) // 2
    hi = (two_s + two_j + k) // 2 + 1
    return binomial(k, lo) - binomial(k, hi)


def fidelity_exact(N: int, k: int, d: int = 2) -> EvalResult:
    """Entanglement fidelity of teleporting k qudits through N ports with the
    square-root measurement, as the Schur-Weyl diagram sum.

    The result is a reduced rational whenever every cross term
    sqrt(m_mu d_mu m_mu' d_mu') is a perfect square (always true when each
    diagram block contains a single reachable mu); otherwise the float carries
    a certified relative error below 1e-15.
    """
    _check_nk(N, k)
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    total = Fraction(0)
    all_exact = True
    for alpha in enumerate_diagrams(N - k, d):
        terms = []
        for mu, paths in add_boxes(alpha, k, d):
            terms.append((paths, ssyt_count(mu, d) * syt_count(mu)))
        block, ok = square_of_radical_sum(terms)
        total += block
        all_exact = all_exact and ok
    value = total / Fraction(d) ** (N + 2 * k)
    return EvalResult(
        value=float(value),
        exact=value if all_exact else None,
        method="schur-weyl-sum",
        arith="exact",
        rel_err_bound=2.0**-52,
    )


def psucc_exact(N: int, k: int, d: int = 2) -> Fraction:
    """Averaged success probability of the probabilistic scheme (maximally
    entangled resource, optimal failure branch), as an exact rational:

        d**-N * sum_alpha m_alpha**2 * min_{mu in alpha} d_mu / m_mu
    """
    _check_nk(N, k)
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    total = Fraction(0)
    for alpha in enumerate_diagrams(N - k, d):
        m_alpha = ssyt_count(alpha, d)
        best = min(
            Fraction(syt_count(mu), ssyt_count(mu, d))
            for mu, _ in add_boxes(alpha, k, d)
        )
        total += m_alpha * m_alpha * best
    return total / Fraction(d) ** N


def _two_s_range(N: int, k: int) -> range:
    return range((N - k) % 2, N - k + 1, 2)


def _two_j_range(N: int, two_s: int, k: int) -> range:
    return range(max(N % 2, two_s - k), two_s + k + 1, 2)


def fidelity_qubit(N: int, k: int, arith: str = "auto") -> EvalResult:
    """Qubit entanglement fidelity in the angular-momentum form:

        F = 2**-(N+2k) / (N+1) *
            sum_s ( sum_j spin_path_count(2s,2j,k) * (2j+1) * sqrt(C(N+1, N/2-j)) )**2

    with s over the spins of N-k qubits and j over the spins reachable by
    coupling k more.  Agrees with ``fidelity_exact(N, k, 2)`` to full float
    precision; ``arith`` selects the exact-rational path ("exact", default for
    N <= 200) or the overflow-safe log-space path ("log").
    """
    _check_nk(N, k)
    if arith not in ("auto", "exact", "log"):
        raise ValueError(f"arith must be auto/exact/log, got {arith!r}")
    if arith == "auto":
        arith = "exact" if N <= EXACT_ARITH_MAX_N else "log"
    if arith == "exact":
        total = Fraction(0)
        all_exact = True
        for two_s in _two_s_range(N, k):
            terms = []
            for two_j in _two_j_range(N, two_s, k):
                coeff = spin_path_count(two_s, two_j, k) * (two_j + 1)
                terms.append((coeff, binomial(N + 1, (N - two_j) // 2)))
            block, ok = square_of_radical_sum(terms)
            total += block
            all_exact = all_exact and ok
        value = total / (Fraction(2) ** (N + 2 * k) * (N + 1))
        return EvalResult(
            value=float(value),
            exact=value if all_exact else None,
            method="angular-momentum",
            arith="exact",
            rel_err_bound=2.0**-52,
        )

    ln_choose = _ln_binomial_table(N + 1, N // 2)
    outer = []
    for two_s in _two_s_range(N, k):
        inner = []
        for two_j in _two_j_range(N, two_s, k):
            h = _ln_spin_path_count(two_s, two_j, k)
            if h == -math.inf:
                continue
            inner.append(
                h + math.log(two_j + 1) + 0.5 * ln_choose[(N - two_j) // 2]
            )
        if inner:
            outer.append(2.0 * logsumexp(inner))
    ln_f = logsumexp(outer) - (N + 2 * k) * _LN2 - math.log(N + 1)
    return EvalResult(
        value=math.exp(ln_f),
        exact=None,
        method="angular-momentum",
        arith="log",
        rel_err_bound=1e-10,
    )


def psucc_qubit(N: int, k: int) -> Fraction:
    """Qubit success probability in the angular-momentum form, exact:

        p = 2**-N / (N+1) * sum_s (2s+1)**2 * C(N+1, (N-k)/2 - s)
    """
    _check_nk(N, k)
    total = 0
    for two_s in _two_s_range(N, k):
        total += (two_s + 1) ** 2 * binomial(N + 1, (N - k - two_s) // 2)
    return Fraction(total, 2**N * (N + 1))


def _ln_spin_path_count(two_s: int, two_j: int, k: int) -> float:
    """ln of spin_path_count, safe for k where C(k, k/2) overflows a float."""
    if k <= 1000:
        h = spin_path_count(two_s, two_j, k)
        return ln_int(h) if h > 0 else -math.inf
    lo = (two_s - two_j + k) // 2
    hi = (two_s + two_j + k) // 2 + 1
    if lo < 0 or lo > k:
        return -math.inf
    a = _ln_choose_scalar(k, lo)
    if hi > k:
        return a
    b = _ln_choose_scalar(k, hi)
    return a + math.log1p(-math.exp(b - a))


def _ln_choose_scalar(n: int, m: int) -> float:
    return (
        math.lgamma(n + 1) - math.lgamma(m + 1) - math.lgamma(n - m + 1)
        if m >= 0 and m <= n
        else -math.inf
    )


def _ln_binomial_table(n: int, max_m: int) -> list[float]:
    """ln C(n, m) for m = 0..max_m via the ratio recurrence."""
    table = [0.0] * (max_m + 1)
    acc = 0.0
    for m in range(1, max_m + 1):
        acc += math.log(n - m + 1) - math.log(m)
        table[m] = acc
    return table
