"""Elementary divisors of GL_n(eps q): monic irreducibles, the tilde involution
and the orbit families F0 (eps = +1) and F1, F2 (eps = -1).

An orbit of ``a -> a^(eps q)`` on nonzero algebraic elements is stored as the
monic polynomial whose roots are the orbit.  For ``eps = +1`` this is an
irreducible over GF(q) other than ``X``; for ``eps = -1`` it is either a
tilde-stable irreducible over GF(q^2) or a product ``D * tilde(D)`` with
``D != tilde(D)``.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from functools import cached_property

from liecensus import fpoly
from liecensus.gf import Field, FieldElem, FieldError, extension, make_tower, prime_power

POLY_LIMIT = 10**6


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MonicPoly:
    field: Field
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError(f"{self.coeffs} is not monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        return fpoly.to_str(self.coeffs, fmt=self.field.fmt)


@dataclass(frozen=True)
class SignedQ:
    """``q`` together with the sign ``eps``: +1 for GL/SL, -1 for GU/SU."""

    q: int
    eps: int

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps}")
        prime_power(self.q)

    @cached_property
    def tower(self):
        return make_tower(self.q)

    @property
    def p(self) -> int:
        return self.tower.base.p

    @property
    def field(self) -> Field:
        """Coefficient field of the orbit polynomials (and of the matrices)."""
        return self.tower.base if self.eps == 1 else self.tower.ext

    @property
    def center_order(self) -> int:
        return self.q - self.eps

    @cached_property
    def center_generator(self) -> int:
        """Canonical generator of ``{z : z^(q - eps) = 1}`` inside ``field``."""
        if self.eps == 1:
            return self.field.generator
        ext = self.field
        return ext.pow(ext.generator, self.q - 1)

    def z(self, k: int) -> int:
        """Canonical generator ``z_k`` of the order-``k`` subgroup of the center."""
        if k < 1 or self.center_order % k:
            raise InadmissibleError(f"k={k} does not divide q - eps = {self.center_order}")
        return self.field.pow(self.center_generator, self.center_order // k)

    def center(self) -> list[int]:
        g = self.center_generator
        return [self.field.pow(g, i) for i in range(self.center_order)]

    def __str__(self):
        return f"{'GL' if self.eps == 1 else 'GU'}(q={self.q})"


class InadmissibleError(ValueError):
    pass


@functools.lru_cache(maxsize=None)
def signed_q(q: int, eps: int) -> SignedQ:
    return SignedQ(q, eps)


@functools.lru_cache(maxsize=None)
def _irreducible_codes(F: Field, d: int, cap: int) -> tuple:
    if F.order ** d > cap:
        raise CapExceeded(f"{F.order}^{d} monic polynomials exceed the cap {cap}")
    monics = [low + (1,) for low in itertools.product(range(F.order), repeat=d)]
    reducible = set()
    for i in range(1, d // 2 + 1):
        for f in _irreducible_codes(F, i, cap):
            for low in itertools.product(range(F.order), repeat=d - i):
                reducible.add(fpoly.mul(F, f, low + (1,)))
    return tuple(f for f in monics if f not in reducible)


def irreducibles(F: Field, d: int, cap: int = POLY_LIMIT) -> list[MonicPoly]:
    """All monic irreducibles of degree ``d`` over ``F`` by sieving out products.

    Ordered lexicographically on coefficients starting from the constant term.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    return [MonicPoly(F, f) for f in _irreducible_codes(F, d, cap)]


def _tilde(ext: Field, q: int, f: tuple) -> tuple:
    a0 = f[0]
    if a0 == 0:
        raise ValueError("tilde needs a nonzero constant term")
    c = ext.pow(a0, -q)
    m = len(f) - 1
    return tuple(ext.mul(c, ext.pow(f[m - j], q)) for j in range(m + 1))


def tilde(delta: MonicPoly) -> MonicPoly:
    """``X^m a0^(-q) D^q(1/X)``: the monic polynomial with roots ``a^(-q)``."""
    F = delta.field
    if F.base is None or F.rel_degree != 2:
        raise FieldError(f"tilde needs a quadratic extension, got {F}")
    return MonicPoly(F, _tilde(F, F.base.order, delta.coeffs))


@dataclass(frozen=True)
class GammaOrbit:
    """One elementary divisor type: an orbit of ``a -> a^(eps q)``.

    ``factor`` is the polynomial itself for F0/F1, and the lexicographically
    smaller of ``{D, tilde D}`` for F2.
    """

    sq: SignedQ
    coeffs: tuple
    kind: str
    factor: tuple = field(compare=False)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def key(self):
        return (self.degree, self.coeffs)

    def __lt__(self, other):
        return self.key < other.key

    def __str__(self):
        return fpoly.to_str(self.coeffs, fmt=self.sq.field.fmt)


def _orbit(sq: SignedQ, f: tuple) -> GammaOrbit:
    """Orbit record for an irreducible ``f`` (eps=+1) or an irreducible over GF(q^2)."""
    if sq.eps == 1:
        return GammaOrbit(sq, f, "F0", f)
    ext = sq.field
    ft = _tilde(ext, sq.q, f)
    if ft == f:
        return GammaOrbit(sq, f, "F1", f)
    return GammaOrbit(sq, fpoly.mul(ext, f, ft), "F2", min(f, ft))


@functools.lru_cache(maxsize=None)
def _gamma_set(sq: SignedQ, n: int, cap: int) -> tuple:
    F = sq.field
    out = set()
    for d in range(1, n + 1):
        for f in _irreducible_codes(F, d, cap):
            if f == (0, 1):
                continue
            g = _orbit(sq, f)
            if g.degree <= n:
                out.add(g)
    return tuple(sorted(out))


def gamma_set(sq: SignedQ, n: int, cap: int = POLY_LIMIT) -> list[GammaOrbit]:
    """Every orbit polynomial of degree ``<= n``, sorted by (degree, coefficients)."""
    return list(_gamma_set(sq, n, cap))


def orbit_of(sq: SignedQ, f: tuple) -> GammaOrbit:
    """Orbit record for an irreducible polynomial over ``sq.field``."""
    return _orbit(sq, f)


def _twist_poly(F: Field, z: int, f: tuple) -> tuple:
    d = len(f) - 1
    return tuple(F.mul(c, F.pow(z, d - i)) for i, c in enumerate(f))


def twist_code(z: int, g: GammaOrbit) -> GammaOrbit:
    F = g.sq.field
    if g.kind == "F2":
        return _orbit(g.sq, _twist_poly(F, z, g.factor))
    return _orbit(g.sq, _twist_poly(F, z, g.coeffs))


def twist(z: FieldElem, g: GammaOrbit) -> GammaOrbit:
    """The orbit whose roots are ``z * a`` for the roots ``a`` of ``g``."""
    sq = g.sq
    if z.field is not sq.field:
        raise FieldError(f"{z!r} is not in {sq.field}")
    if sq.field.pow(z.code, sq.center_order) != 1:
        raise InadmissibleError(f"{z!r} is not central: z^(q - eps) != 1")
    return twist_code(z.code, g)


def roots(F: Field, f: tuple, degree: int | None = None) -> tuple[Field, list[int]]:
    """Roots of ``f`` in the degree-``degree`` extension of ``F`` (exhaustive search)."""
    d = degree if degree is not None else len(f) - 1
    E = extension(F, d)
    return E, [a for a in E.elements() if fpoly.evaluate(E, f, a) == 0]
