"""Linear chromatic coefficient of the r-complete hypergraph K_n^r.

The exact route goes through power sums of the reciprocal roots of the
Taylor polynomial E_r(x) = sum_{k<=r} x^k / k!, obtained from Newton's
identities over the rationals.  Floating-point roots are only a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from collections import Counter

import numpy as np


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out fractional."""


class RootFindingError(RuntimeError):
    """Polished roots still leave a large residual."""


@dataclass(frozen=True)
class TaylorPolyContext:
    """E_r together with the elementary symmetric functions of its reciprocal roots."""

    r: int

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Coefficients of E_r by ascending power."""
        return tuple(Fraction(1, factorial(k)) for k in range(self.r + 1))

    @property
    def elementary(self) -> tuple[Fraction, ...]:
        """e_1..e_r of the values 1/R_i."""
        return tuple(Fraction((-1) ** k, factorial(k)) for k in range(1, self.r + 1))


@dataclass(frozen=True)
class MomentSeries:
    """``values[n-1]`` is the sum over roots R of E_r of R**(-n)."""

    r: int
    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n - 1]


def reciprocal_power_sums(r: int, N: int) -> MomentSeries:
    """Exact sums of R_i**(-n), n = 1..N, via Newton's identities."""
    if r < 1 or N < 1:
        raise ValueError("need r >= 1 and N >= 1")
    e = (Fraction(1),) + TaylorPolyContext(r).elementary
    p: list[Fraction] = [Fraction(0)]
    for k in range(1, N + 1):
        acc = Fraction(0)
        for i in range(1, min(k - 1, r) + 1):
            acc += (-1) ** (i - 1) * e[i] * p[k - i]
        if k <= r:
            acc += (-1) ** (k - 1) * k * e[k]
        p.append(acc)
    return MomentSeries(r, tuple(p[1:]))


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise IntegralityError(f"{what} = {x} is not an integer")
    return x.numerator


def a1_complete(r: int, n: int, moments: MomentSeries | None = None) -> int:
    """a_1(K_n^r) = -(n-1)! * mu_{r-1}(n)."""
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    if moments is None or moments.r != r - 1 or len(moments.values) < n:
        moments = reciprocal_power_sums(r - 1, n)
    return _as_int(-factorial(n - 1) * moments[n], f"a_1(K_{n}^{r})")


def a1_complete_sequence(r: int, n_max: int) -> list[int]:
    moments = reciprocal_power_sums(r - 1, n_max)
    return [a1_complete(r, n, moments) for n in range(1, n_max + 1)]


def _sorted_compositions(total: int, parts: int, least: int = 1):
    """Non-decreasing sequences of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        if total >= least:
            yield (total,)
        return
    for first in range(least, total // parts + 1):
        for rest in _sorted_compositions(total - first, parts - 1, first):
            yield (first,) + rest


def _weak_compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def block_partition_count(sizes: tuple[int, ...]) -> int:
    """Number of set partitions of {1..sum(sizes)} into blocks of the given sizes."""
    r = sum(sizes)
    denom = prod(factorial(k) for k in sizes) * prod(factorial(c) for c in Counter(sizes).values())
    return factorial(r) // denom


def _multinomial(parts: tuple[int, ...]) -> int:
    return factorial(sum(parts)) // prod(factorial(s) for s in parts)


def a1_complete_recursive(r: int, n: int) -> int:
    """a_1(K_n^r) from the partition recursion specialised to complete hypergraphs."""
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")

    @lru_cache(maxsize=None)
    def a1(m: int) -> int:
        if m == 1:
            return 1
        if m < r:
            return 0
        total = 0
        for j in range(2, r + 1):
            for ks in _sorted_compositions(r, j):
                weight = block_partition_count(ks)
                inner = 0
                for ss in _weak_compositions(m - r, j):
                    term = _multinomial(ss)
                    for k, s in zip(ks, ss):
                        term *= a1(k + s)
                        if not term:
                            break
                    inner += term
                total += weight * inner
        return -total

    for m in range(1, n):
        a1(m)  # fill the cache bottom-up to keep recursion shallow
    return a1(n)


def a1_complete_piecewise(r: int, n: int) -> int | None:
    """Closed form for n <= 2r; ``None`` when n > 2r."""
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    if n == 1:
        return 1
    if n <= r - 1:
        return 0
    if n <= 2 * r - 1:
        return (-1) ** (n - r + 1) * comb(n - 1, r - 1)
    if n == 2 * r:
        return -(1 + (-1) ** r) * comb(2 * r - 1, r)
    return None


def taylor_roots(r: int, tol: float = 1e-10, polish_steps: int = 50) -> list[complex]:
    """Complex roots of E_r from companion-matrix eigenvalues, Newton-polished."""
    if not 1 <= r <= 25:
        raise ValueError("taylor_roots supports 1 <= r <= 25")
    coeffs = [1.0 / factorial(k) for k in range(r + 1)]
    desc = coeffs[::-1]
    dcoeffs = [k * coeffs[k] for k in range(1, r + 1)][::-1]
    roots = np.roots(desc).astype(complex)
    scale = np.polyval(np.abs(desc), np.abs(roots))
    for _ in range(polish_steps):
        f = np.polyval(desc, roots)
        if np.all(np.abs(f) <= tol * scale):
            break
        roots = roots - f / np.polyval(dcoeffs, roots)
        scale = np.polyval(np.abs(desc), np.abs(roots))
    resid = np.abs(np.polyval(desc, roots)) / scale
    if np.any(resid > tol):
        raise RootFindingError(
            f"E_{r} roots did not converge after {polish_steps} Newton steps; worst relative residual {resid.max():.3e}"
        )
    return [complex(z) for z in roots]


def float_power_sums(r: int, N: int) -> list[complex]:
    roots = np.asarray(taylor_roots(r))
    return [complex(np.sum(roots ** (-n))) for n in range(1, N + 1)]


def zemyan_identity_residual(r: int, m: int) -> int:
    """sum_{j<r} C(r-2+m, r-1-j) a_1(K^r_{j+m}); identically zero."""
    if r < 2 or m < 1:
        raise ValueError("need r >= 2 and m >= 1")
    moments = reciprocal_power_sums(r - 1, m + r - 1)
    return sum(comb(r - 2 + m, r - 1 - j) * a1_complete(r, j + m, moments) for j in range(r))


def _series_quotient(num: list[Fraction], den: list[Fraction], N: int) -> list[Fraction]:
    out = []
    for k in range(N):
        acc = num[k] if k < len(num) else Fraction(0)
        for i in range(1, min(k, len(den) - 1) + 1):
            acc -= den[i] * out[k - i]
        out.append(acc / den[0])
    return out


def log_derivative_series(r: int, N: int) -> list[Fraction]:
    """First N power-series coefficients of E'_{r-1} / E_{r-1}."""
    E = list(TaylorPolyContext(r - 1).coefficients)
    dE = [k * E[k] for k in range(1, len(E))]
    return _series_quotient(dE, E, N)


def series_check(r: int, N: int) -> bool:
    """Coefficient n of E'_{r-1}/E_{r-1} equals a_1(K^r_{n+1}) / n! for n < N."""
    if r < 2 or N < 1:
        raise ValueError("need r >= 2 and N >= 1")
    series = log_derivative_series(r, N)
    moments = reciprocal_power_sums(r - 1, N)
    return all(series[n] == Fraction(a1_complete(r, n + 1, moments), factorial(n)) for n in range(N))
