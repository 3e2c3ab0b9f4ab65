"""Class labels of GL_n(eps q) and the symbolic class / character census.

A class label maps each elementary-divisor orbit to a partition; labels
parametrize both the conjugacy classes and the irreducible characters of
GL_n(eps q).  Counting polynomials are :class:`IntPoly` in the variable q.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from liecensus.config import DEFAULT_MAX_LABELS
from liecensus.intpoly import IntPoly, Q
from liecensus.partitions import Partition, enum_partitions, type_of
from liecensus.polyspace import (
    CapExceeded,
    GammaOrbit,
    InadmissibleError,
    SignedQ,
    gamma_set,
    twist_code,
)
from liecensus.gf import is_prime, prime_factors


@dataclass(frozen=True)
class ClassLabel:
    sq: SignedQ
    items: tuple  # ((GammaOrbit, Partition), ...) sorted by orbit key

    @classmethod
    def make(cls, sq: SignedQ, mapping) -> ClassLabel:
        pairs = mapping.items() if isinstance(mapping, dict) else mapping
        items = tuple(sorted(((g, Partition(lam)) for g, lam in pairs if lam), key=lambda x: x[0].key))
        return cls(sq, items)

    @property
    def n(self) -> int:
        return sum(g.degree * lam.size for g, lam in self.items)

    def as_dict(self) -> dict:
        return dict(self.items)

    @property
    def is_semisimple(self) -> bool:
        return all(set(lam) == {1} for _, lam in self.items)

    @property
    def is_regular_semisimple(self) -> bool:
        return all(lam == (1,) for _, lam in self.items)

    def twist(self, z: int) -> ClassLabel:
        """Label of ``z * g``; ``z`` is a central element code."""
        return ClassLabel.make(self.sq, [(twist_code(z, g), lam) for g, lam in self.items])

    def __str__(self):
        return "{" + ", ".join(f"{g} -> {lam!r}" for g, lam in self.items) + "}"


def enumerate_class_labels(n: int, sq: SignedQ, cap: int = DEFAULT_MAX_LABELS) -> list[ClassLabel]:
    """All labels of total degree ``n``, in a deterministic order."""
    gammas = gamma_set(sq, n)
    parts = {m: enum_partitions(m) for m in range(n + 1)}
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(ClassLabel(sq, tuple(acc)))
            if len(out) > cap:
                raise CapExceeded(f"more than {cap} class labels")
            return
        for j in range(start, len(gammas)):
            g = gammas[j]
            d = g.degree
            if d > remaining:
                break
            for size in range(1, remaining // d + 1):
                for lam in parts[size]:
                    acc.append((g, lam))
                    rec(j + 1, remaining - size * d, acc)
                    acc.pop()

    rec(0, n, [])
    return out


def c_nu_k(nu: Partition, k: int, eps: int) -> IntPoly:
    """Number of k-twist-stable classes of type ``nu`` (``nu = (1^n_1 2^n_2 ...)``)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = IntPoly.const(1)
    for i, ni in Partition(nu).multiplicities().items():
        if ni % k:
            return IntPoly()
        e = ni // k
        out = out * (IntPoly.monomial(e) - IntPoly.monomial(e - 1, eps))
    return out


def c_n_k(n: int, k: int, eps: int) -> IntPoly:
    """``c_{n,k}(q)``: the sum of :func:`c_nu_k` over all types of size ``n``."""
    total = IntPoly()
    for nu in enum_partitions(n):
        total = total + c_nu_k(nu, k, eps)
    return total


def c_n(n: int, eps: int) -> IntPoly:
    return c_n_k(n, 1, eps)


def check_admissible(k: int, sq: SignedQ) -> None:
    if k < 1 or sq.center_order % k:
        raise InadmissibleError(f"k={k} does not divide q - eps = {sq.center_order}")


def c_n_k_value(n: int, k: int, sq: SignedQ) -> int:
    check_admissible(k, sq)
    return c_n_k(n, k, sq.eps)(sq.q)


def center_qrank(n: int, eps: int) -> IntPoly:
    """``|Z(G)°^F| q^l`` for GL_n(eps q), with ``l = n - 1`` the semisimple rank."""
    return (Q - eps) * IntPoly.monomial(n - 1)


def count_semisimple(n: int, sq: SignedQ) -> tuple[int, IntPoly]:
    labels = enumerate_class_labels(n, sq)
    return sum(1 for lab in labels if lab.is_semisimple), center_qrank(n, sq.eps)


def count_regular_semisimple(n: int, sq: SignedQ) -> int:
    return sum(1 for lab in enumerate_class_labels(n, sq) if lab.is_regular_semisimple)


def regular_semisimple_gf(n: int, sq: SignedQ) -> int:
    """Coefficient of ``t^n`` in ``prod_d (1 + t^d)^(N_d)``, ``N_d`` = #orbits of degree d."""
    counts = [0] * (n + 1)
    for g in gamma_set(sq, n):
        counts[g.degree] += 1
    series = [1] + [0] * n
    for d in range(1, n + 1):
        for _ in range(counts[d]):
            for i in range(n, d - 1, -1):
                series[i] += series[i - d]
    return series[n]


def _fixed_by_nontrivial(label: ClassLabel) -> bool:
    return any(label.twist(z) == label for z in label.sq.center() if z != 1)


def count_srs0(n: int, sq: SignedQ) -> int:
    """Regular semisimple labels moved by every nontrivial central twist."""
    return sum(
        1
        for lab in enumerate_class_labels(n, sq)
        if lab.is_regular_semisimple and not _fixed_by_nontrivial(lab)
    )


def fixed_label_count(n: int, k: int, sq: SignedQ) -> int:
    """Labels fixed by the twist with ``z_k``; the label-side value of ``c_{n,k}(q)``."""
    z = sq.z(k)
    return sum(1 for lab in enumerate_class_labels(n, sq) if lab.twist(z) == lab)


def squarefree_divisors(m: int) -> list[int]:
    ps = prime_factors(m) if m > 1 else []
    out = [1]
    for p in ps:
        out += [d * p for d in out]
    return sorted(out)


def irr_r_count(n: int, sq: SignedQ) -> int:
    """Characters whose restriction to SL_n(eps q) is reducible.

    Inclusion-exclusion over ``Irr_k`` for squarefree ``k > 1`` dividing
    ``gcd(n, q - eps)``, using ``Irr_a & Irr_b = Irr_lcm(a, b)``.
    """
    g = math.gcd(n, sq.center_order)
    total = 0
    for d in squarefree_divisors(g):
        if d == 1:
            continue
        sign = 1 if len(prime_factors(d)) % 2 else -1
        total += sign * c_n_k(n, d, sq.eps)(sq.q)
    return total


@dataclass(frozen=True)
class RatioReport:
    family: str
    n: int
    q: int
    eps: int
    classes: int
    irr_r: int
    center_qrank: int
    semisimple: int
    regular_semisimple: int
    srs0: int

    @property
    def rA(self) -> Fraction:
        """Share of irreducible characters that stay irreducible on the derived group."""
        return Fraction(self.classes - self.irr_r, self.classes)

    def _over(self, count: int) -> Fraction | None:
        return Fraction(self.center_qrank, count) if count else None

    @property
    def rB_ss(self) -> Fraction | None:
        """``|Z|q^l`` over the semisimple class count; always 1 for GL/GU."""
        return self._over(self.semisimple)

    @property
    def rB_rs(self) -> Fraction | None:
        # strongly regular = regular semisimple in GL/GU
        return self._over(self.regular_semisimple)

    @property
    def r_srs0(self) -> Fraction | None:
        return self._over(self.srs0)

    @property
    def rC(self) -> Fraction:
        return Fraction(self.center_qrank, self.classes)

    def as_dict(self) -> dict:
        out = {
            "family": self.family,
            "n": self.n,
            "q": self.q,
            "epsilon": self.eps,
            "classes": self.classes,
            "irr_r": self.irr_r,
            "irr_ird": self.classes - self.irr_r,
            "center_qrank": self.center_qrank,
            "semisimple": self.semisimple,
            "regular_semisimple": self.regular_semisimple,
            "strongly_regular": self.regular_semisimple,
            "srs0": self.srs0,
        }
        for name in ("rA", "rB_ss", "rB_rs", "r_srs0", "rC"):
            value = getattr(self, name)
            out[name] = None if value is None else str(value)
        return out


def theorem_ratios(n: int, sq: SignedQ) -> RatioReport:
    labels = enumerate_class_labels(n, sq)
    rs = [lab for lab in labels if lab.is_regular_semisimple]
    return RatioReport(
        family="GL" if sq.eps == 1 else "GU",
        n=n,
        q=sq.q,
        eps=sq.eps,
        classes=len(labels),
        irr_r=irr_r_count(n, sq),
        center_qrank=center_qrank(n, sq.eps)(sq.q),
        semisimple=sum(1 for lab in labels if lab.is_semisimple),
        regular_semisimple=len(rs),
        srs0=sum(1 for lab in rs if not _fixed_by_nontrivial(lab)),
    )


def sl_irr_prediction(ell: int, sq: SignedQ) -> int:
    """Predicted ``|Irr(SL_ell(eps q))|`` for a prime ``ell`` dividing ``q - eps``.

    Characters with trivial stabilizer fall in free orbits of size ``q - eps``,
    one restriction each; the ``q - eps`` stable ones form ``ell`` orbits whose
    restrictions split into ``ell`` constituents each.
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    check_admissible(ell, sq)
    total = c_n(ell, sq.eps)(sq.q)
    m = sq.center_order
    free = total - m
    if free % m:
        raise ArithmeticError(f"{free} characters do not split into orbits of size {m}")
    return free // m + ell * ell


def type_counts(labels) -> dict[Partition, int]:
    out: dict[Partition, int] = {}
    for lab in labels:
        nu = type_of(lab)
        out[nu] = out.get(nu, 0) + 1
    return out
