"""Brute-force oracle: GL, SL, GU, SU over explicit small fields.

Groups are enumerated element by element, conjugacy classes are orbits of
conjugation by a generating set, and every class is classified from its
canonical (least) representative.  Nothing here uses the label calculus of
:mod:`liecensus.census`, apart from :func:`label_of_element`, which is how the
two sides are compared.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property

from liecensus import fpoly, linalg
from liecensus.census import ClassLabel
from liecensus.config import DEFAULT_MAX_ORDER, SOFT_WARN_ORDER
from liecensus.partitions import Partition
from liecensus.polyspace import CapExceeded, InadmissibleError, SignedQ, gamma_set, signed_q

log = logging.getLogger(__name__)

FAMILIES = ("GL", "SL", "GU", "SU")


@dataclass(frozen=True)
class GroupSpec:
    family: str
    n: int
    q: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        signed_q(self.q, self.eps)

    @property
    def eps(self) -> int:
        return 1 if self.family in ("GL", "SL") else -1

    @property
    def sq(self) -> SignedQ:
        return signed_q(self.q, self.eps)

    @property
    def special(self) -> bool:
        return self.family in ("SL", "SU")

    def order_formula(self) -> int:
        q, n, e = self.q, self.n, self.eps
        order = q ** (n * (n - 1) // 2)
        for i in range(1, n + 1):
            order *= q**i - e**i
        if self.special:
            order //= q - e
        return order

    def __str__(self):
        return f"{self.family}_{self.n}({self.q})"


def _fast_mul(F, n):
    Q = F.order
    M = F.mul_table
    A = F.add_table
    rng = range(n)

    def mul(a, b):
        out = []
        for i in rng:
            r = i * n
            for j in rng:
                acc = 0
                for k in rng:
                    acc = A[acc * Q + M[a[r + k] * Q + b[k * n + j]]]
                out.append(acc)
        return tuple(out)

    return mul


class MatrixGroup:
    """A fully enumerated matrix group in canonical (row-major, code) order."""

    def __init__(self, spec: GroupSpec, elements: list[tuple]):
        self.spec = spec
        self.n = spec.n
        self.sq = spec.sq
        self.field = self.sq.field
        self.elements = sorted(elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.identity = linalg.identity(self.n)
        self.mul = _fast_mul(self.field, self.n)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.index

    def inv(self, g):
        return linalg.inverse(self.field, g, self.n)

    def conj_transpose(self, g):
        F, n, q = self.field, self.n, self.sq.q
        return tuple(F.pow(g[j * n + i], q) for i in range(n) for j in range(n))

    def scalar(self, c: int):
        return linalg.scalar(self.n, c)

    def closure(self, gens) -> set:
        seen = {self.identity}
        stack = [self.identity]
        while stack:
            x = stack.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    @cached_property
    def gens(self) -> list[tuple]:
        """Greedy generating set: scan in canonical order, keep what enlarges the span."""
        gens = []
        H = {self.identity}
        for g in self.elements:
            if len(H) == len(self.elements):
                break
            if g not in H:
                gens.append(g)
                H = self.closure(gens)
        return gens

    @cached_property
    def center(self) -> list[int]:
        """Codes ``c`` with ``c * I`` in the group, as powers of a canonical generator."""
        sq = self.sq
        m = sq.center_order
        size = math.gcd(self.n, m) if self.spec.special else m
        gen = self.field.pow(sq.center_generator, m // size)
        return [self.field.pow(gen, i) for i in range(size)]

    def order_of(self, g) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            k += 1
        return k

    def centralizer(self, g) -> list[tuple]:
        mul = self.mul
        return [x for x in self.elements if mul(x, g) == mul(g, x)]

    def conjugacy_orbit(self, x, conjugators=None) -> set:
        if conjugators is None:
            conjugators = [(g, self.inv(g)) for g in self.gens]
        seen = {x}
        stack = [x]
        mul = self.mul
        while stack:
            y = stack.pop()
            for g, gi in conjugators:
                z = mul(mul(g, y), gi)
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return seen


def _vectors(Q: int, n: int):
    out = [()]
    for _ in range(n):
        out = [v + (c,) for v in out for c in range(Q)]
    return out


def _gl_rows(F, n):
    vecs = [v for v in _vectors(F.order, n) if any(v)]
    zero = (0,) * n

    def rec(rows, span):
        if len(rows) == n:
            yield tuple(x for r in rows for x in r)
            return
        for v in vecs:
            if v in span:
                continue
            new_span = {
                tuple(F.add(s_i, F.mul(c, v_i)) for s_i, v_i in zip(s, v))
                for s in span
                for c in range(F.order)
            }
            yield from rec(rows + [v], new_span)

    yield from rec([], {zero})


def _gu_rows(F, n, q):
    def herm(v, w):
        acc = 0
        for a, b in zip(v, w):
            acc = F.add(acc, F.mul(a, F.pow(b, q)))
        return acc

    units = [v for v in _vectors(F.order, n) if herm(v, v) == 1]

    def rec(rows):
        if len(rows) == n:
            yield tuple(x for r in rows for x in r)
            return
        for v in units:
            if all(herm(v, r) == 0 for r in rows):
                yield from rec(rows + [v])

    yield from rec([])


def build_group(spec: GroupSpec, max_order: int = DEFAULT_MAX_ORDER) -> MatrixGroup:
    """Enumerate every element.  GU is ``{g : g * conj(g)^T = I}`` for the identity form."""
    order = spec.order_formula()
    if order > max_order:
        raise CapExceeded(f"|{spec}| = {order} exceeds the cap {max_order}")
    if order > SOFT_WARN_ORDER:
        log.warning("enumerating %s with %d elements", spec, order)
    F = spec.sq.field
    n = spec.n
    if spec.eps == 1:
        rows = _gl_rows(F, n)
    else:
        rows = _gu_rows(F, n, spec.q)
    if spec.special:
        elements = [g for g in rows if linalg.det(F, g, n) == 1]
    else:
        elements = list(rows)
    if len(elements) != order:
        raise AssertionError(f"enumerated {len(elements)} elements of {spec}, expected {order}")
    return MatrixGroup(spec, elements)


@dataclass
class ConjClass:
    rep: tuple
    size: int
    semisimple: bool = False
    regular_semisimple: bool = False
    strongly_regular: bool = False
    srs0: bool = False
    label: ClassLabel | None = None


@dataclass
class ClassTable:
    group: MatrixGroup
    classes: list[ConjClass]
    class_of: dict = field(repr=False)
    central_perm: list[int] = field(default_factory=list)

    def __len__(self):
        return len(self.classes)

    def count(self, flag: str) -> int:
        return sum(1 for c in self.classes if getattr(c, flag))


def conjugacy_classes(group: MatrixGroup, by: str = "generators", classify: bool = True) -> ClassTable:
    """Partition the group into conjugacy classes.

    ``by="generators"`` conjugates by the greedy generating set;
    ``by="all"`` conjugates by every element (a slower cross-check).
    """
    if by == "generators":
        conjugators = [(g, group.inv(g)) for g in group.gens]
    elif by == "all":
        conjugators = [(g, group.inv(g)) for g in group.elements]
    else:
        raise ValueError(f"unknown conjugation mode {by!r}")
    class_of: dict = {}
    reps = []
    for x in group.elements:
        if x in class_of:
            continue
        orbit = group.conjugacy_orbit(x, conjugators)
        for y in orbit:
            class_of[y] = len(reps)
        reps.append((x, len(orbit)))
    classes = [ConjClass(rep, size) for rep, size in reps]
    table = ClassTable(group, classes, class_of)
    zgen = group.center[1] if len(group.center) > 1 else 1
    table.central_perm = [class_of[_scale(group, zgen, c.rep)] for c in classes]
    if classify:
        for c in classes:
            flags = classify_class(group, c.rep, class_of)
            c.semisimple, c.regular_semisimple, c.strongly_regular, c.srs0 = flags
            if not group.spec.special:
                c.label = label_of_element(group, c.rep)
    return table


def _scale(group, z, g):
    F = group.field
    return tuple(F.mul(z, x) for x in g)


def _is_abelian(group, elems) -> bool:
    mul = group.mul
    for i, a in enumerate(elems):
        for b in elems[i + 1:]:
            if mul(a, b) != mul(b, a):
                return False
    return True


def classify_class(group: MatrixGroup, rep, class_of=None) -> tuple[bool, bool, bool, bool]:
    """``(semisimple, regular_semisimple, strongly_regular, srs0)`` for ``rep``.

    semisimple: squarefree minimal polynomial, asserted equal to
    "order prime to p"; regular semisimple: squarefree characteristic
    polynomial; strongly regular: semisimple with abelian centralizer;
    srs0: strongly regular and ``z * rep`` not conjugate to ``rep`` for every
    nontrivial scalar ``z`` in the group.
    """
    F, n = group.field, group.n
    ss = fpoly.is_squarefree(F, linalg.minpoly(F, rep, n))
    ss_by_order = group.order_of(rep) % group.sq.p != 0
    if ss != ss_by_order:
        raise AssertionError(f"semisimplicity tests disagree on {rep}")
    rs = ss and fpoly.is_squarefree(F, linalg.charpoly(F, rep, n))
    srs = ss and _is_abelian(group, group.centralizer(rep))
    srs0 = False
    if srs:
        if class_of is None:
            orbit = group.conjugacy_orbit(rep)
            srs0 = all(_scale(group, z, rep) not in orbit for z in group.center if z != 1)
        else:
            srs0 = all(
                class_of[_scale(group, z, rep)] != class_of[rep] for z in group.center if z != 1
            )
    return ss, rs, srs, srs0


def central_fixed_classes(table: ClassTable, k: int) -> int:
    """Number of classes ``C`` with ``z_k C = C`` for the canonical ``z_k``."""
    group = table.group
    z = group.sq.z(k)
    if group.scalar(z) not in group:
        raise InadmissibleError(f"z_{k} is not in {group.spec}")
    return sum(
        1 for i, c in enumerate(table.classes) if table.class_of[_scale(group, z, c.rep)] == i
    )


def label_of_element(group: MatrixGroup, g) -> ClassLabel:
    """Elementary-divisor label of ``g`` in GL_n(eps q).

    The part counts of each ``lambda_Gamma`` come from the kernel dimensions
    of ``Gamma(g)^j``: ``#{parts >= j} = (dim ker Gamma(g)^j - dim ker Gamma(g)^(j-1)) / deg Gamma``.
    """
    if group.spec.special:
        raise ValueError("labels are defined for GL and GU only; SL/SU classes are finer")
    F, n, sq = group.field, group.n, group.sq
    chi = linalg.charpoly(F, g, n)
    items = []
    rest = chi
    for gamma in gamma_set(sq, n):
        mult = 0
        while True:
            quo, rem = fpoly.divmod_(F, rest, gamma.coeffs)
            if rem:
                break
            rest = quo
            mult += 1
        if not mult:
            continue
        d = gamma.degree
        G = linalg.poly_at(F, gamma.coeffs, g, n)
        P = linalg.identity(n)
        kers = [0]
        for _ in range(mult):
            P = linalg.mat_mul(F, P, G, n)
            kers.append(n - linalg.mat_rank(F, P, n))
        at_least = [(kers[j] - kers[j - 1]) // d for j in range(1, mult + 1)] + [0]
        parts = []
        for j in range(1, mult + 1):
            parts += [j] * (at_least[j - 1] - at_least[j])
        lam = Partition(parts)
        if lam.size != mult:
            raise AssertionError(f"inconsistent Jordan data for {gamma} in {g}")
        items.append((gamma, lam))
    if fpoly.degree(rest) != 0:
        raise AssertionError(f"characteristic polynomial of {g} not covered by orbits")
    return ClassLabel.make(sq, items)


def oracle_report(spec: GroupSpec, max_order: int = DEFAULT_MAX_ORDER, table: ClassTable | None = None) -> dict:
    if table is None:
        table = conjugacy_classes(build_group(spec, max_order))
    group = table.group
    m = spec.sq.center_order
    fixed = {}
    for k in range(1, m + 1):
        if m % k == 0 and group.scalar(spec.sq.z(k)) in group:
            fixed[str(k)] = central_fixed_classes(table, k)
    return {
        "group": str(spec),
        "family": spec.family,
        "n": spec.n,
        "q": spec.q,
        "order": len(group),
        "classes": len(table),
        "semisimple": table.count("semisimple"),
        "regular_semisimple": table.count("regular_semisimple"),
        "strongly_regular": table.count("strongly_regular"),
        "srs0": table.count("srs0"),
        "fixed_classes": fixed,
    }
