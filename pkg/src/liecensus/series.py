"""Truncated power series in t with coefficients in Z[q].

``product_series(k, eps, N)`` expands ``prod_{r>=1} (1 - eps t^(kr)) / (1 - q t^(kr))``
modulo ``t^(N+1)``; its ``t^n`` coefficient should be ``c_{n,k}(q)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from liecensus.census import c_n_k
from liecensus.config import DEFAULT_SERIES_N
from liecensus.intpoly import IntPoly, Q


@dataclass
class TruncSeries:
    N: int
    coeffs: list  # IntPoly, index = power of t
    eps: int
    k: int = 1

    def __getitem__(self, n: int) -> IntPoly:
        return self.coeffs[n]

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        N = min(self.N, other.N)
        out = [IntPoly() for _ in range(N + 1)]
        for i in range(N + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(N + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return TruncSeries(N, out, self.eps, self.k)

    def substitute(self, k: int, N: int) -> TruncSeries:
        """``t -> t^k``, truncated at ``t^N``."""
        out = [IntPoly() for _ in range(N + 1)]
        for i, c in enumerate(self.coeffs):
            if i * k <= N:
                out[i * k] = c
        if self.N * k < N:
            raise ValueError(f"series known only to t^{self.N}, need t^{N // k}")
        return TruncSeries(N, out, self.eps, self.k * k)


def product_series(k: int, eps: int, N: int = DEFAULT_SERIES_N) -> TruncSeries:
    if k < 1 or N < 0 or eps not in (1, -1):
        raise ValueError(f"bad arguments k={k}, eps={eps}, N={N}")
    coeffs = [IntPoly.const(1)] + [IntPoly() for _ in range(N)]
    r = 1
    while k * r <= N:
        m = k * r
        # multiply by 1 - eps t^m
        for i in range(N, m - 1, -1):
            coeffs[i] = coeffs[i] - eps * coeffs[i - m]
        # divide by 1 - q t^m
        for i in range(m, N + 1):
            coeffs[i] = coeffs[i] + Q * coeffs[i - m]
        r += 1
    return TruncSeries(N, coeffs, eps, k)


@dataclass
class SeriesReport:
    k: int
    eps: int
    N: int
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def first_mismatch(self):
        return self.mismatches[0] if self.mismatches else None


def verify_series_vs_census(k: int, eps: int, N: int = 8) -> SeriesReport:
    """Compare each ``t^n`` coefficient with the type-sum ``c_{n,k}(q)`` as polynomials."""
    series = product_series(k, eps, N)
    report = SeriesReport(k, eps, N)
    for n in range(N + 1):
        expected = c_n_k(n, k, eps)
        report.checked += 1
        if series[n] != expected:
            report.mismatches.append((n, series[n], expected))
    return report
