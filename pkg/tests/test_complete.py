from fractions import Fraction
from itertools import combinations
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromapoly.chromatic import chromatic_subset_expansion
from chromapoly.complete import (
    IntegralityError,
    MomentSeries,
    RootFindingError,
    TaylorPolyContext,
    a1_complete,
    a1_complete_piecewise,
    a1_complete_recursive,
    a1_complete_sequence,
    block_partition_count,
    float_power_sums,
    log_derivative_series,
    reciprocal_power_sums,
    series_check,
    taylor_roots,
    zemyan_identity_residual,
)
from chromapoly.core import complete_hypergraph, set_partitions
from chromapoly.recursion import a1_recursive


def gaussian_mu2(n):
    """Sum of R^(-n) over the roots -1 +- i of 1 + x + x^2/2, done in Z[i]."""
    # 1/(-1 + i) = (-1 - i)/2 and its conjugate
    re, im = 1, 0
    for _ in range(n):
        re, im = -re + im, -re - im
    return Fraction(2 * re, 2 ** n)


class TestMoments:
    def test_mu2_first_values(self):
        m = reciprocal_power_sums(2, 4)
        assert m.values == (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(-1, 2))

    def test_mu2_against_gaussian_integers(self):
        m = reciprocal_power_sums(2, 30)
        assert all(m[n] == gaussian_mu2(n) for n in range(1, 31))

    def test_mu1_is_alternating(self):
        # single root -1
        assert reciprocal_power_sums(1, 6).values == tuple(Fraction((-1) ** n) for n in range(1, 7))

    def test_context(self):
        ctx = TaylorPolyContext(3)
        assert ctx.coefficients == (1, 1, Fraction(1, 2), Fraction(1, 6))
        assert ctx.elementary == (-1, Fraction(1, 2), Fraction(-1, 6))

    def test_bad_args(self):
        with pytest.raises(ValueError):
            reciprocal_power_sums(0, 3)


class TestA1Complete:
    def test_r3_sequence(self):
        assert a1_complete_sequence(3, 6) == [1, 0, -1, 3, -6, 0]

    def test_r4_sequence(self):
        seq = a1_complete_sequence(4, 8)
        assert seq[:3] == [1, 0, 0]
        assert seq[-1] == -70

    def test_graph_case_is_factorial(self):
        assert a1_complete_sequence(2, 8) == [(-1) ** (n - 1) * factorial(n - 1) for n in range(1, 9)]

    def test_large_graph_value(self):
        assert a1_complete(2, 21) == factorial(20)

    def test_non_integer_raises(self):
        fake = MomentSeries(2, (Fraction(1, 3),))
        with pytest.raises(IntegralityError):
            a1_complete(3, 1, fake)

    def test_bad_args(self):
        with pytest.raises(ValueError):
            a1_complete(1, 3)

    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_matches_expansion(self, r):
        for n in range(1, 7):
            assert a1_complete(r, n) == chromatic_subset_expansion(complete_hypergraph(n, r))[1]

    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_matches_general_recursion(self, r):
        for n in range(1, 7):
            assert a1_complete(r, n) == a1_recursive(complete_hypergraph(n, r))


class TestRecursiveAndPiecewise:
    @given(st.integers(2, 6), st.integers(1, 18))
    @settings(max_examples=60, deadline=None)
    def test_recursive_matches_closed_form(self, r, n):
        assert a1_complete_recursive(r, n) == a1_complete(r, n)

    @given(st.integers(2, 8), st.data())
    @settings(max_examples=60, deadline=None)
    def test_piecewise_matches(self, r, data):
        n = data.draw(st.integers(1, 2 * r))
        assert a1_complete_piecewise(r, n) == a1_complete(r, n)

    def test_piecewise_out_of_range(self):
        assert a1_complete_piecewise(3, 7) is None

    def test_middle_band(self):
        r = 5
        for n in range(r, 2 * r):
            assert a1_complete_piecewise(r, n) == (-1) ** (n - r + 1) * comb(n - 1, r - 1)

    def test_odd_r_vanishes_at_2r(self):
        assert a1_complete(3, 6) == a1_complete(5, 10) == 0


@pytest.mark.parametrize("sizes", [(1, 1), (1, 2), (2, 2), (1, 1, 2), (1, 2, 3), (2, 2, 2), (1, 1, 1, 2)])
def test_block_partition_count(sizes):
    r = sum(sizes)
    target = sorted(sizes)
    count = sum(
        1 for blocks in set_partitions((1 << r) - 1, len(sizes))
        if sorted(bin(b).count("1") for b in blocks) == target
    )
    assert block_partition_count(tuple(sizes)) == count


class TestRoots:
    def test_r2_roots(self):
        roots = sorted(taylor_roots(2), key=lambda z: z.imag)
        assert roots[0] == pytest.approx(-1 - 1j)
        assert roots[1] == pytest.approx(-1 + 1j)

    def test_r1(self):
        assert taylor_roots(1) == [pytest.approx(-1)]

    def test_residuals_small(self):
        for r in range(1, 16):
            coeffs = [1 / factorial(k) for k in range(r + 1)]
            for z in taylor_roots(r):
                assert abs(sum(c * z ** k for k, c in enumerate(coeffs))) < 1e-8 * sum(c * abs(z) ** k for k, c in enumerate(coeffs))

    def test_impossible_tolerance(self):
        with pytest.raises(RootFindingError):
            taylor_roots(20, tol=1e-300, polish_steps=2)

    def test_range(self):
        with pytest.raises(ValueError):
            taylor_roots(0)

    def test_float_power_sums(self):
        exact = reciprocal_power_sums(4, 10)
        approx = float_power_sums(4, 10)
        for n in range(1, 11):
            assert approx[n - 1].real == pytest.approx(float(exact[n]), abs=1e-9)
            assert abs(approx[n - 1].imag) < 1e-9


class TestIdentities:
    @pytest.mark.parametrize("r", [2, 3, 4, 5])
    def test_zemyan(self, r):
        assert all(zemyan_identity_residual(r, m) == 0 for m in range(1, 11))

    def test_zemyan_bad_args(self):
        with pytest.raises(ValueError):
            zemyan_identity_residual(2, 0)

    def test_log_derivative_r2(self):
        # E_1 = 1 + x so E'/E = 1 - x + x^2 - ...
        assert log_derivative_series(2, 5) == [1, -1, 1, -1, 1]

    @pytest.mark.parametrize("r", [2, 3, 4, 5])
    def test_series(self, r):
        assert series_check(r, 12)
