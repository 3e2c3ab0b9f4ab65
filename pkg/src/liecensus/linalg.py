"""Dense linear algebra over a finite field.

Square matrices are flat row-major tuples of element codes of length n*n.
"""
from __future__ import annotations

from liecensus import fpoly


def identity(n: int) -> tuple:
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def scalar(n: int, c: int) -> tuple:
    return tuple(c if i == j else 0 for i in range(n) for j in range(n))


def mat_mul(F, A, B, n: int) -> tuple:
    out = []
    for i in range(n):
        row = A[i * n:(i + 1) * n]
        for j in range(n):
            acc = 0
            for k in range(n):
                a = row[k]
                if a:
                    acc = F.add(acc, F.mul(a, B[k * n + j]))
            out.append(acc)
    return tuple(out)


def mat_add(F, A, B) -> tuple:
    return tuple(F.add(a, b) for a, b in zip(A, B))


def mat_scale(F, c: int, A) -> tuple:
    return tuple(F.mul(c, a) for a in A)


def transpose(A, n: int) -> tuple:
    return tuple(A[j * n + i] for i in range(n) for j in range(n))


def rref(F, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(F, rows) -> int:
    return len(rref(F, rows)[1])


def mat_rank(F, A, n: int) -> int:
    return rank(F, [list(A[i * n:(i + 1) * n]) for i in range(n)])


def nullspace(F, rows: list[list[int]], ncols: int) -> list[list[int]]:
    red, pivots = rref(F, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(red, pivots):
            v[pc] = F.neg(row[fc])
        basis.append(v)
    return basis


def det(F, A, n: int) -> int:
    rows = [list(A[i * n:(i + 1) * n]) for i in range(n)]
    d = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c]), None)
        if pr is None:
            return 0
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            d = F.neg(d)
        piv = rows[c][c]
        d = F.mul(d, piv)
        inv = F.inv(piv)
        for i in range(c + 1, n):
            if rows[i][c]:
                f = F.mul(rows[i][c], inv)
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[c])]
    return d


def inverse(F, A, n: int) -> tuple:
    aug = [list(A[i * n:(i + 1) * n]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    red, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return tuple(x for row in red for x in row[n:])


def mat_pow(F, A, e: int, n: int) -> tuple:
    out = identity(n)
    while e:
        if e & 1:
            out = mat_mul(F, out, A, n)
        A = mat_mul(F, A, A, n)
        e >>= 1
    return out


def poly_at(F, f, A, n: int) -> tuple:
    """``f(A)`` by Horner's rule."""
    out = tuple([0] * (n * n))
    for c in reversed(f):
        out = mat_mul(F, out, A, n)
        if c:
            out = tuple(F.add(x, c) if i % (n + 1) == 0 else x for i, x in enumerate(out))
    return out


def charpoly(F, A, n: int) -> tuple:
    """``det(X I - A)`` by cofactor expansion over F[X]."""
    entries = [
        [fpoly.trim(((F.neg(A[i * n + j]), 1) if i == j else (F.neg(A[i * n + j]),))) for j in range(n)]
        for i in range(n)
    ]

    def cofactor(rows, cols):
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        total = ()
        r = rows[0]
        for idx, c in enumerate(cols):
            e = entries[r][c]
            if not e:
                continue
            sub = cofactor(rows[1:], cols[:idx] + cols[idx + 1:])
            term = fpoly.mul(F, e, sub)
            total = fpoly.add(F, total, term) if idx % 2 == 0 else fpoly.sub(F, total, term)
        return total

    return cofactor(list(range(n)), list(range(n)))


def minpoly(F, A, n: int) -> tuple:
    """Monic minimal polynomial from the first linear dependency among ``I, A, A^2, ...``."""
    powers = [identity(n)]
    for k in range(1, n + 1):
        powers.append(mat_mul(F, powers[-1], A, n))
        # columns = powers, rows = matrix positions
        rows = [[P[pos] for P in powers] for pos in range(n * n)]
        null = nullspace(F, rows, k + 1)
        if null:
            v = null[0]
            return fpoly.monic(F, fpoly.trim(v))
    raise AssertionError("Cayley-Hamilton violated")  # pragma: no cover
