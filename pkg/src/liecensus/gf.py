"""Explicit finite fields and the quadratic tower GF(q) < GF(q^2).

Every field is either a prime field or an extension of an already built
field by a monic irreducible polynomial.  Elements are plain ``int`` codes:
``c_0 + c_1 x + ... + c_{d-1} x^{d-1}`` (``c_i`` codes of the base field) is
stored as ``sum(c_i * |base|**i)``.  Constants of the base keep their code,
so the embedding of the base into an extension is the identity on codes.
The canonical element order is the order of codes.

Multiplication goes through discrete log tables, so arithmetic on an
element code is O(1) once the field is built.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from functools import cached_property

from liecensus import fpoly

TABLE_LIMIT = 1024
FIELD_LIMIT = 1 << 20


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, f)`` with ``q == p**f``; raise if ``q`` is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise FieldError(f"{q} is not a prime power")
    p, f = ps[0], 0
    while q > 1:
        q //= p
        f += 1
    return p, f


class Field:
    """A finite field with O(1) arithmetic on integer element codes."""

    def __init__(self, p: int, base: Field | None = None, modulus: tuple = ()):
        self.p = p
        self.base = base
        self.modulus = tuple(modulus)
        if base is None:
            self.rel_degree = 1
            self.degree = 1
            self.order = p
        else:
            self.rel_degree = len(self.modulus) - 1
            self.degree = base.degree * self.rel_degree
            self.order = base.order ** self.rel_degree
        if self.order > FIELD_LIMIT:
            raise FieldError(f"field of order {self.order} exceeds limit {FIELD_LIMIT}")
        self._build_logs()

    def __repr__(self):
        return f"GF({self.order})"

    # -- construction ---------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        b = self.base.order
        out = []
        for _ in range(self.rel_degree):
            a, r = divmod(a, b)
            out.append(r)
        return out

    def _encode(self, digits) -> int:
        b = self.base.order
        a = 0
        for c in reversed(digits):
            a = a * b + c
        return a

    def _slow_add(self, a: int, b: int) -> int:
        if self.base is None:
            return (a + b) % self.p
        B = self.base
        return self._encode([B.add(x, y) for x, y in zip(self._digits(a), self._digits(b))])

    def _slow_mul(self, a: int, b: int) -> int:
        if self.base is None:
            return a * b % self.p
        B = self.base
        prod = fpoly.mul(B, fpoly.trim(self._digits(a)), fpoly.trim(self._digits(b)))
        rem = list(fpoly.mod(B, prod, self.modulus))
        rem += [0] * (self.rel_degree - len(rem))
        return self._encode(rem)

    def _slow_pow(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._slow_mul(out, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return out

    def _build_logs(self):
        n = self.order - 1
        ps = prime_factors(n)
        gen = None
        for c in range(1, self.order):
            if all(self._slow_pow(c, n // r) != 1 for r in ps):
                gen = c
                break
        self.generator = gen
        exp = [1] * n
        for i in range(1, n):
            exp[i] = self._slow_mul(exp[i - 1], gen)
        log = [None] * self.order
        for i, v in enumerate(exp):
            log[v] = i
        if len(set(exp)) != n:
            raise FieldError(f"modulus {self.modulus} does not define a field")
        self._exp = exp
        self._log = log
        if self.base is not None and self.order <= TABLE_LIMIT:
            Q = self.order
            self._add = [self._slow_add(a, b) for a in range(Q) for b in range(Q)]
        else:
            self._add = None

    # -- arithmetic on codes --------------------------------------------

    zero = 0
    one = 1

    def add(self, a: int, b: int) -> int:
        if self.base is None:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a * self.order + b]
        return self._slow_add(a, b)

    def neg(self, a: int) -> int:
        if self.base is None:
            return -a % self.p
        B = self.base
        return self._encode([B.neg(x) for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[-self._log[a] % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.order - 1)]

    def log(self, a: int) -> int:
        return self._log[a]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.order - 1)]

    def mult_order(self, a: int) -> int:
        n = self.order - 1
        return n // math.gcd(n, self._log[a])

    def from_int(self, k: int) -> int:
        """Image of the integer ``k`` under ``Z -> GF(p) -> self``."""
        return k % self.p

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def add_table(self) -> list[int]:
        Q = self.order
        if self._add is not None:
            return self._add
        return [self.add(a, b) for a in range(Q) for b in range(Q)]

    @cached_property
    def mul_table(self) -> list[int]:
        Q = self.order
        return [self.mul(a, b) for a in range(Q) for b in range(Q)]

    @cached_property
    def neg_table(self) -> list[int]:
        return [self.neg(a) for a in range(self.order)]

    def elem(self, code: int) -> FieldElem:
        if not 0 <= code < self.order:
            raise FieldError(f"{code} is not an element code of {self}")
        return FieldElem(self, code)

    def fmt(self, a: int) -> str:
        if self.base is None:
            return str(a)
        return "[" + ",".join(str(d) for d in self._digits(a)) + "]"


@dataclass(frozen=True)
class FieldElem:
    """An element of an explicit field, with operator arithmetic."""

    field: Field
    code: int

    def _check(self, other):
        if isinstance(other, int):
            return self.field.from_int(other)
        if other.field is not self.field:
            raise FieldError(f"context mismatch: {self.field} vs {other.field}")
        return other.code

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.code, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.code, self._check(other)))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.code, self._check(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.code, self._check(other)))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.code, e))

    def inverse(self) -> FieldElem:
        return FieldElem(self.field, self.field.inv(self.code))

    def order(self) -> int:
        return self.field.mult_order(self.code)

    def __lt__(self, other):
        return self.code < self._check(other)

    def __repr__(self):
        return f"{self.field!r}:{self.field.fmt(self.code)}"


@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> Field:
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    return Field(p)


def least_irreducible(base: Field, d: int) -> tuple:
    """Least monic irreducible of degree ``d`` over ``base``.

    Lower coefficients are compared lexicographically starting from the
    constant term.
    """
    for low in itertools.product(range(base.order), repeat=d):
        if low[0] == 0:
            continue
        f = low + (1,)
        if fpoly.is_irreducible(base, f):
            return f
    raise FieldError(f"no irreducible of degree {d} over {base}")  # pragma: no cover


@functools.lru_cache(maxsize=None)
def extension(base: Field, d: int) -> Field:
    """Degree ``d`` extension of ``base`` by its least monic irreducible."""
    if d < 1:
        raise FieldError("extension degree must be >= 1")
    if d == 1:
        return base
    if base.order ** d > FIELD_LIMIT:
        raise FieldError(f"field of order {base.order ** d} exceeds limit {FIELD_LIMIT}")
    return Field(base.p, base, least_irreducible(base, d))


def make_field(p: int, e: int) -> Field:
    """GF(p^e), built directly over the prime field."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if e < 1:
        raise FieldError("degree must be >= 1")
    return extension(prime_field(p), e)


def gf(q: int) -> Field:
    return make_field(*prime_power(q))


def field_arith(a: FieldElem, b: FieldElem) -> tuple[FieldElem, FieldElem, FieldElem]:
    """``(a + b, a * b, 1 / a)``."""
    return a + b, a * b, a.inverse()


def primitive_element(F: Field) -> FieldElem:
    """Least generator of the multiplicative group in code order."""
    return FieldElem(F, F.generator)


@dataclass(frozen=True)
class Tower:
    """GF(q) inside GF(q^2), with GF(q^2) built as a quadratic extension of GF(q)."""

    base: Field
    ext: Field

    @property
    def q(self) -> int:
        return self.base.order

    def embed(self, a: FieldElem) -> FieldElem:
        if a.field is not self.base:
            raise FieldError(f"{a!r} is not in {self.base}")
        return FieldElem(self.ext, a.code)

    def frobenius(self, a: int) -> int:
        return self.ext.pow(a, self.q)

    def conj(self, a: int) -> int:
        return self.frobenius(a)


@functools.lru_cache(maxsize=None)
def make_tower(q: int) -> Tower:
    base = gf(q)
    return Tower(base, extension(base, 2))


def frobenius_q(t: Tower, a: FieldElem) -> FieldElem:
    """``a -> a^q`` on GF(q^2)."""
    if a.field is not t.ext:
        raise FieldError(f"{a!r} is not in {t.ext}")
    return FieldElem(t.ext, t.frobenius(a.code))
