import itertools
import math
from fractions import Fraction

import pytest

from portcap.bounds import (
    fidelity_bound_bernoulli,
    fidelity_bound_product,
    fidelity_bound_ratio,
    pairwise_signal_trace,
    pdist_lower,
    signal_pair_trace_raw,
    symmetric_poly_bound,
    trace_rho_bar_squared,
    trace_rho_squared,
)
from portcap.performance import fidelity_exact


def port_tuples(num_ports, k):
    return list(itertools.permutations(range(1, num_ports + 1), k))


class TestTraceFormulas:
    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_single_system_form(self, d):
        # k = 1: d^(n-2) (n-1) (d^2 + n - 2)
        for n in range(3, 9):
            assert trace_rho_squared(n, 1, d) == d ** (n - 2) * (n - 1) * (d * d + n - 2)

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_two_system_form(self, d):
        # k = 2: d^(n-4) (n-2)(n-3) (d^2+n-3)(d^2+n-4)
        for n in range(6, 10):
            expected = (
                d ** (n - 4) * (n - 2) * (n - 3) * (d * d + n - 3) * (d * d + n - 4)
            )
            assert trace_rho_squared(n, 2, d) == expected

    def test_rejects_out_of_scope_k(self):
        with pytest.raises(ValueError):
            trace_rho_squared(5, 2, 2)  # N = 3, k = 2 > floor(3/2)

    @pytest.mark.parametrize("d", [2, 3])
    def test_equals_pairwise_sum(self, d):
        for n in range(3, 8):
            for k in (1, 2):
                N = n - k
                if k > N // 2:
                    continue
                tuples = port_tuples(N, k)
                total = sum(
                    signal_pair_trace_raw(a, b, n, k, d)
                    for a in tuples
                    for b in tuples
                )
                assert total == trace_rho_squared(n, k, d)

    def test_normalized_purity_values(self):
        assert trace_rho_bar_squared(2, 1, 2) == Fraction(5, 16)
        assert trace_rho_bar_squared(4, 2, 2) == Fraction(7, 128)

    def test_purity_times_trace_squared_is_raw_purity(self):
        for N in range(2, 9):
            for k in range(1, N // 2 + 1):
                for d in (2, 3):
                    tr_rho = d**N * math.perm(N, k)
                    assert (
                        trace_rho_bar_squared(N, k, d) * tr_rho**2
                        == trace_rho_squared(N + k, k, d)
                    )

    def test_purity_floor(self):
        for N in range(2, 10):
            for k in range(1, N // 2 + 1):
                for d in (2, 3):
                    assert trace_rho_bar_squared(N, k, d) >= Fraction(1, d ** (N + k))


class TestFidelityBounds:
    def test_ratio_values(self):
        assert fidelity_bound_ratio(4, 2, 2) == Fraction(2, 7)
        assert fidelity_bound_ratio(2, 1, 2) == Fraction(2, 5)

    def test_single_system_collapse(self):
        for d in (2, 3, 4):
            for N in range(2, 30):
                expected = 1 - Fraction(d * d - 1, d * d + N - 1)
                assert fidelity_bound_ratio(N, 1, d) == expected
                assert fidelity_bound_product(N, 1, d) == expected

    def test_product_and_bernoulli_values(self):
        assert fidelity_bound_product(4, 2, 2) == Fraction(1, 4)
        assert fidelity_bound_bernoulli(4, 2, 2) == 0  # clamped boundary
        assert fidelity_bound_bernoulli(10, 1, 2) == 1 - Fraction(3, 13)
        assert fidelity_bound_bernoulli(100, 2, 2) == Fraction(16, 17)

    def test_scope_rejected(self):
        for fn in (fidelity_bound_ratio, fidelity_bound_product, fidelity_bound_bernoulli):
            with pytest.raises(ValueError):
                fn(1, 1, 2)

    def test_chain_small_grid(self):
        for N in range(2, 13):
            for k in range(1, N // 2 + 1):
                for d in (2, 3):
                    bern = fidelity_bound_bernoulli(N, k, d)
                    prod = fidelity_bound_product(N, k, d)
                    ratio = fidelity_bound_ratio(N, k, d)
                    assert 0 <= bern <= prod <= ratio < 1
                    assert float(ratio) <= fidelity_exact(N, k, d).value + 1e-12

    def test_range_at_half_rate(self):
        for d in (2, 3):
            for k in range(1, 6):
                v = fidelity_bound_ratio(2 * k, k, d)
                assert 0 < v < 1

    def test_qubit_linearization_below_product(self):
        for N in range(4, 60):
            for k in range(1, N // 2 + 1):
                lin = 1 - Fraction(3 * k, 4 + N - k)
                assert lin <= fidelity_bound_product(N, k, 2)


class TestSymmetricPolyBound:
    def test_order_zero_and_full(self):
        for N in (4, 9, 20):
            for k in range(1, N // 2 + 1):
                for d in (2, 3):
                    assert symmetric_poly_bound(N, k, d, 0) == 1
                    assert symmetric_poly_bound(N, k, d, k) == fidelity_bound_ratio(N, k, d)

    def test_order_one_form(self):
        for N in (5, 12):
            for k in range(1, N // 2 + 1):
                for d in (2, 3):
                    expected = 1 - sum(
                        Fraction(d * d - 1, d * d + N - s - 1) for s in range(k)
                    )
                    assert symmetric_poly_bound(N, k, d, 1) == expected

    def test_order_above_k_rejected(self):
        with pytest.raises(ValueError):
            symmetric_poly_bound(6, 2, 2, 3)


class TestPdistLower:
    def test_composition_reproduces_ratio_bound(self):
        for N in range(2, 12):
            for k in range(1, N // 2 + 1):
                for d in (2, 3):
                    num_signals = math.perm(N, k)
                    composed = Fraction(num_signals, d ** (2 * k)) * pdist_lower(N, k, d)
                    assert composed == fidelity_bound_ratio(N, k, d)

    def test_scope(self):
        with pytest.raises(ValueError):
            pdist_lower(1, 1, 2)


class TestPairwiseSignalTrace:
    def test_counterexample_pair(self):
        # two overlapping two-system signals on six systems: trace is 1/d^4,
        # not the 1/d^6 a purely global-parameter count would suggest
        for d in (2, 3, 4):
            val = pairwise_signal_trace((4, 3), (3, 4), 6, 2, d)
            assert val == Fraction(1, d**4)
            assert val != Fraction(1, d**6)

    def test_equal_tuples(self):
        for n, k, d in [(6, 2, 2), (6, 2, 3), (7, 3, 2), (4, 1, 5)]:
            N = n - k
            for a in port_tuples(N, k)[:6]:
                assert pairwise_signal_trace(a, a, n, k, d) == Fraction(1, d ** (N - k))

    def test_disjoint_tuples(self):
        assert pairwise_signal_trace((1, 2), (3, 4), 6, 2, 3) == Fraction(
            3 ** (6 - 4), 3 ** (2 * 4)
        )

    def test_symmetry_exhaustive_n6(self):
        for d in (2, 3):
            for k in (1, 2):
                n = 6
                tuples = port_tuples(n - k, k)
                for a in tuples:
                    for b in tuples:
                        assert pairwise_signal_trace(a, b, n, k, d) == pairwise_signal_trace(
                            b, a, n, k, d
                        )

    def test_floor_value(self):
        for d in (2, 3):
            n, k = 7, 2
            N = n - k
            floor = Fraction(d ** (n - 2 * k), d ** (2 * N))
            for a in port_tuples(N, k):
                for b in port_tuples(N, k):
                    assert pairwise_signal_trace(a, b, n, k, d) >= floor

    def test_malformed_tuples_rejected(self):
        with pytest.raises(ValueError):
            pairwise_signal_trace((1, 1), (2, 3), 6, 2, 2)
        with pytest.raises(ValueError):
            pairwise_signal_trace((1,), (2, 3), 6, 2, 2)
        with pytest.raises(ValueError):
            pairwise_signal_trace((0, 2), (2, 3), 6, 2, 2)
