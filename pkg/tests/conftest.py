"""Shared brute-force oracles, deliberately independent of the library's
formula implementations."""

from __future__ import annotations

import itertools


def count_syt_brute(shape: tuple[int, ...]) -> int:
    """Count standard fillings by backtracking over cells in row-major order."""
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    n = len(cells)
    if n == 0:
        return 1
    filling: dict[tuple[int, int], int] = {}

    def place(value: int) -> int:
        if value > n:
            return 1
        total = 0
        for r, c in cells:
            if (r, c) in filling:
                continue
            if c > 0 and (r, c - 1) not in filling:
                continue
            if r > 0 and (r - 1, c) not in filling:
                continue
            filling[(r, c)] = value
            total += place(value + 1)
            del filling[(r, c)]
        return total

    return place(1)


def count_ssyt_brute(shape: tuple[int, ...], d: int) -> int:
    """Count semistandard fillings with entries in {1..d} by enumeration:
    rows weakly increase, columns strictly increase."""
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    total = 0
    for values in itertools.product(range(1, d + 1), repeat=len(cells)):
        filling = dict(zip(cells, values))
        ok = True
        for (r, c), v in filling.items():
            if c > 0 and filling[(r, c - 1)] > v:
                ok = False
                break
            if r > 0 and filling[(r - 1, c)] >= v:
                ok = False
                break
        total += ok
    return total


def growth_paths_brute(
    alpha: tuple[int, ...], mu: tuple[int, ...], max_rows: int
) -> int:
    """Count one-box-at-a-time growth sequences from alpha to mu by direct
    recursion over single additions (no memoization, no library calls)."""
    if alpha == mu:
        return 1
    if sum(mu) <= sum(alpha):
        return 0
    total = 0
    rows = list(alpha)
    for i in range(len(rows) + 1):
        if i == len(rows):
            if len(rows) >= max_rows:
                continue
            grown = tuple(rows) + (1,)
        else:
            if i > 0 and rows[i] + 1 > rows[i - 1]:
                continue
            grown = tuple(rows[:i]) + (rows[i] + 1,) + tuple(rows[i + 1 :])
        if all(g <= m for g, m in zip(grown, mu + (0,) * len(grown))) and len(
            grown
        ) <= len(mu):
            total += growth_paths_brute(grown, mu, max_rows)
    return total
