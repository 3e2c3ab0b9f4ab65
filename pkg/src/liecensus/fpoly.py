"""Dense polynomials over a finite field.

A polynomial is a tuple of element codes, constant term first, with no
trailing zeros.  The zero polynomial is the empty tuple.  Every function
takes the coefficient field as its first argument; only the methods
``add``, ``sub``, ``neg``, ``mul``, ``inv`` and ``pow`` of that field are used.
"""
from __future__ import annotations

Poly = tuple


def trim(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(f: Poly) -> int:
    return len(f) - 1


def add(F, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(out)


def sub(F, f: Poly, g: Poly) -> Poly:
    return add(F, f, tuple(F.neg(c) for c in g))


def scale(F, c: int, f: Poly) -> Poly:
    return trim(F.mul(c, a) for a in f)


def mul(F, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def power(F, f: Poly, k: int) -> Poly:
    out = (1,)
    for _ in range(k):
        out = mul(F, out, f)
    return out


def divmod_(F, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    dg = len(g) - 1
    lead_inv = F.inv(g[-1])
    quot = [0] * max(len(f) - dg, 0)
    for i in range(len(f) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        c = F.mul(c, lead_inv)
        quot[i - dg] = c
        for j, b in enumerate(g):
            rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(c, b))
    return trim(quot), trim(rem[:dg])


def mod(F, f: Poly, g: Poly) -> Poly:
    return divmod_(F, f, g)[1]


def monic(F, f: Poly) -> Poly:
    if not f:
        return f
    return scale(F, F.inv(f[-1]), f)


def gcd(F, f: Poly, g: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    while g:
        f, g = g, mod(F, f, g)
    return monic(F, f)


def powmod(F, f: Poly, e: int, m: Poly) -> Poly:
    result = (1,)
    base = mod(F, f, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        e >>= 1
    return result


def derivative(F, f: Poly) -> Poly:
    out = []
    for i in range(1, len(f)):
        c = 0
        for _ in range(i % F.p):
            c = F.add(c, f[i])
        out.append(c)
    return trim(out)


def evaluate(F, f: Poly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def is_squarefree(F, f: Poly) -> bool:
    # perfect field: squarefree iff coprime to the derivative
    return degree(gcd(F, f, derivative(F, f))) == 0


def is_irreducible(F, f: Poly) -> bool:
    """Ben-Or test: ``f`` has no factor of degree ``i`` for ``i <= deg f / 2``."""
    d = degree(f)
    if d < 1:
        return False
    if d == 1:
        return True
    f = monic(F, f)
    x = (0, 1)
    h = x
    for _ in range(d // 2):
        h = powmod(F, h, F.order, f)
        if degree(gcd(F, f, sub(F, h, x))) > 0:
            return False
    return True


def reverse(f: Poly) -> Poly:
    """``X^deg f * f(1/X)``; for monic ``f`` with roots ``a`` this is ``prod(1 - aX)``."""
    return trim(reversed(f))


def to_str(f: Poly, var: str = "X", fmt=str) -> str:
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(fmt(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{fmt(c)}*{mono}")
    return " + ".join(terms)
