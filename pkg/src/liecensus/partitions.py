"""Partitions, the polynomials u_i of a class label, and its type."""
from __future__ import annotations

import functools
from collections import Counter

from liecensus import fpoly


class Partition(tuple):
    """Weakly decreasing tuple of positive parts; ``Partition()`` is the empty partition."""

    def __new__(cls, parts=()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> Partition:
        return cls(i for i, m in mult.items() for _ in range(m))

    @property
    def size(self) -> int:
        return sum(self)

    def m(self, i: int) -> int:
        """Number of parts equal to ``i``."""
        return self.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self).items()))

    def __repr__(self):
        if not self:
            return "()"
        mult = self.multiplicities()
        return "(" + " ".join(
            f"{i}^{m}" if m > 1 else f"{i}" for i, m in sorted(mult.items(), reverse=True)
        ) + ")"


@functools.lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enum_partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, largest first part first (reverse lexicographic)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return [Partition(p) for p in _partitions(n, n)]


def u_polys(label) -> list[tuple]:
    """``[u_1, u_2, ...]`` with ``u_i = prod over orbits of prod(1 - aX)^(m_i(lambda))``.

    Each ``u_i`` is a coefficient tuple over ``label.sq.field``, constant term
    first, with ``u_i(0) = 1``.  The list runs up to the largest part.
    """
    F = label.sq.field
    top = max((max(lam) for _, lam in label.items), default=0)
    out = []
    for i in range(1, top + 1):
        u = (1,)
        for gamma, lam in label.items:
            k = lam.m(i)
            if k:
                u = fpoly.mul(F, u, fpoly.power(F, fpoly.reverse(gamma.coeffs), k))
        out.append(u)
    return out


def det_poly(label) -> tuple:
    """``prod u_i^i``, which is ``det(1 - gX)`` for ``g`` in the labelled class."""
    F = label.sq.field
    out = (1,)
    for i, u in enumerate(u_polys(label), start=1):
        out = fpoly.mul(F, out, fpoly.power(F, u, i))
    return out


def type_of(label) -> Partition:
    """The type ``nu = (1^n_1 2^n_2 ...)`` with ``n_i = deg u_i``."""
    mult = Counter()
    for gamma, lam in label.items:
        for i, m in lam.multiplicities().items():
            mult[i] += gamma.degree * m
    return Partition.from_multiplicities(mult)
