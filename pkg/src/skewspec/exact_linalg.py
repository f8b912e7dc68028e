"""Dense exact linear algebra over Python integers and rationals.

Matrices are plain tuples of row tuples. Integer matrices hold ``int``
entries; rational matrices hold :class:`fractions.Fraction` entries, which
are always kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import InputError, SingularMatrixError, UnsupportedError
from .primes import is_prime

IntMatrix = Tuple[Tuple[int, ...], ...]
RatMatrix = Tuple[Tuple[Fraction, ...], ...]
IntPolynomial = Tuple[int, ...]  # ascending degree


def as_int_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    """Validate and freeze a rectangular integer matrix."""
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if not m or not m[0]:
        raise InputError("matrix must have at least one row and one column")
    width = len(m[0])
    if any(len(row) != width for row in m):
        raise InputError("ragged matrix: rows have different lengths")
    return m


def shape(m: Sequence[Sequence]) -> tuple[int, int]:
    return len(m), len(m[0])


def _require_square(m) -> int:
    r, c = shape(m)
    if r != c:
        raise InputError(f"expected a square matrix, got {r}x{c}")
    return r


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def ones(n: int) -> IntMatrix:
    return tuple((1,) * n for _ in range(n))


def transpose(m):
    return tuple(zip(*m))


def mat_add(a, b):
    if shape(a) != shape(b):
        raise InputError(f"shape mismatch: {shape(a)} vs {shape(b)}")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    if shape(a) != shape(b):
        raise InputError(f"shape mismatch: {shape(a)} vs {shape(b)}")
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(m, k):
    return tuple(tuple(k * x for x in row) for row in m)


def mat_mul(a, b):
    """Exact product ``a @ b``; works for int and Fraction entries alike."""
    if len(a[0]) != len(b):
        raise InputError(f"cannot multiply {shape(a)} by {shape(b)}")
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def mat_vec(m, v):
    if len(m[0]) != len(v):
        raise InputError(f"cannot multiply {shape(m)} by vector of length {len(v)}")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def det_bareiss(m) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Every division performed is exact; a nonzero remainder would indicate
    a bug and raises ``AssertionError``.
    """
    n = _require_square(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - aik * row_k[j]
                q, r = divmod(num, prev)
                assert r == 0, "inexact Bareiss division"
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def char_poly(m) -> IntPolynomial:
    """Characteristic polynomial det(xI - m), ascending coefficients.

    Uses Berkowitz's division-free recurrence, so only ring operations on
    the entries are performed.
    """
    n = _require_square(m)
    # p holds coefficients in descending order while building up
    p = [1, -m[0][0]]
    for r in range(1, n):
        a_rr = m[r][r]
        row = [m[r][j] for j in range(r)]
        col = [m[i][r] for i in range(r)]
        # t = (1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C)
        t = [1, -a_rr]
        vec = col
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(m[i][j] * vec[j] for j in range(r)) for i in range(r)]
        q = [0] * (r + 2)
        for i in range(r + 2):
            s = 0
            for j in range(min(i, r) + 1):
                s += t[i - j] * p[j]
            q[i] = s
        p = q
    return tuple(reversed(p))


def poly_trim(p: Sequence[int]) -> IntPolynomial:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    """Coefficient-wise equality after dropping leading zeros."""
    return poly_trim(a) == poly_trim(b)


def rat_inverse(m) -> RatMatrix:
    """Exact rational inverse by Gauss-Jordan elimination over Fractions."""
    n = _require_square(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular", det=0)
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return tuple(tuple(row[n:]) for row in a)


def scaled_inverse(m) -> tuple[int, IntMatrix]:
    """Return ``(delta, N)`` with ``N == delta * m^{-1}`` and ``|delta| == |det m|``.

    Fraction-free Gauss-Jordan: every intermediate entry is a minor of
    ``[m | I]``, so all divisions are exact and no rationals are formed.
    """
    n = _require_square(m)
    a = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular", det=0)
            a[k], a[piv] = a[piv], a[k]
        pk = a[k][k]
        row_k = a[k]
        for i in range(n):
            if i == k:
                continue
            row_i = a[i]
            aik = row_i[k]
            for j in range(2 * n):
                if j != k:
                    q, r = divmod(pk * row_i[j] - aik * row_k[j], prev)
                    assert r == 0, "inexact fraction-free division"
                    row_i[j] = q
            row_i[k] = 0
        prev = pk
    return prev, tuple(tuple(row[n:]) for row in a)


def to_rational(m) -> RatMatrix:
    return tuple(tuple(Fraction(x) for x in row) for row in m)


@dataclass(frozen=True)
class SnfDecomposition:
    """``m == u @ diag(n_diag) @ v`` with ``u``, ``v`` unimodular."""

    u: IntMatrix
    n_diag: Tuple[int, ...]
    v: IntMatrix

    def diagonal_matrix(self) -> IntMatrix:
        k = len(self.n_diag)
        return tuple(tuple(self.n_diag[i] if i == j else 0 for j in range(k))
                     for i in range(k))

    def reconstruct(self) -> IntMatrix:
        return mat_mul(mat_mul(self.u, self.diagonal_matrix()), self.v)


def smith_normal_form(m) -> SnfDecomposition:
    """Smith normal form of a nonsingular square integer matrix.

    Pivot choice: the nonzero entry of least absolute value in the active
    submatrix, ties broken by lexicographically smallest (row, col).
    """
    n = _require_square(m)
    if det_bareiss(m) == 0:
        raise UnsupportedError("Smith normal form is only supported for nonsingular matrices")
    a = [list(row) for row in m]
    # invariant: m == u @ a @ v
    u = [list(row) for row in identity(n)]
    v = [list(row) for row in identity(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        for row in u:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        v[i], v[j] = v[j], v[i]

    def add_row(dst, src, q):
        # a[dst] += q * a[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        for row in u:
            row[src] -= q * row[dst]

    def add_col(dst, src, q):
        # a[:, dst] += q * a[:, src]
        for row in a:
            row[dst] += q * row[src]
        v[src] = [x - q * y for x, y in zip(v[src], v[dst])]

    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    x = a[i][j]
                    if x != 0 and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, n)
                        if any(a[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            for row in u:
                row[t] = -row[t]

    return SnfDecomposition(
        u=tuple(map(tuple, u)),
        n_diag=tuple(a[i][i] for i in range(n)),
        v=tuple(map(tuple, v)),
    )


def invariant_factors(m) -> Tuple[int, ...]:
    return smith_normal_form(m).n_diag


def rank_mod_p(m, p: int) -> int:
    """Rank of an integer matrix reduced modulo the prime ``p``."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    a = [[x % p for x in row] for row in m]
    rows, cols = shape(m)
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(rows):
            if i != rank and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank
