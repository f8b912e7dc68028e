"""Walk matrices, generalized skew spectra and rational orthogonal conjugators."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from . import exact_linalg as la
from .errors import InputError, NotControllableError, NotCospectralMateError, SingularMatrixError
from .graph_core import OrientedGraph, skew_adjacency


def walk_matrix(d: OrientedGraph) -> la.IntMatrix:
    """``W = [e, S e, ..., S^{n-1} e]`` built column by column."""
    s = skew_adjacency(d)
    col = (1,) * d.n
    cols = [col]
    for _ in range(d.n - 1):
        col = la.mat_vec(s, col)
        cols.append(col)
    return la.transpose(cols)


def walk_determinant(d: OrientedGraph) -> int:
    return la.det_bareiss(walk_matrix(d))


def is_controllable(d: OrientedGraph) -> bool:
    return walk_determinant(d) != 0


@dataclass(frozen=True)
class SpectralFingerprint:
    """Characteristic polynomials of ``S`` and ``J - S`` (ascending)."""

    p_s: la.IntPolynomial
    p_js: la.IntPolynomial

    def serialize(self) -> str:
        return ",".join(map(str, self.p_s)) + ";" + ",".join(map(str, self.p_js))

    def digest(self) -> str:
        return hashlib.sha256(self.serialize().encode("ascii")).hexdigest()

    @classmethod
    def deserialize(cls, text: str) -> "SpectralFingerprint":
        a, b = text.split(";")
        return cls(tuple(int(x) for x in a.split(",")), tuple(int(x) for x in b.split(",")))


def fingerprint(d: OrientedGraph) -> SpectralFingerprint:
    s = skew_adjacency(d)
    return SpectralFingerprint(la.char_poly(s), la.char_poly(la.mat_sub(la.ones(d.n), s)))


def generalized_cospectral(a: OrientedGraph, b: OrientedGraph) -> bool:
    if a.n != b.n:
        raise InputError(f"graphs have different orders ({a.n} vs {b.n})")
    fa, fb = fingerprint(a), fingerprint(b)
    return la.poly_equal(fa.p_s, fb.p_s) and la.poly_equal(fa.p_js, fb.p_js)


def level(q) -> int:
    """Least positive ``x`` with ``x * q`` integral (lcm of denominators)."""
    return reduce(math.lcm, (Fraction(x).denominator for row in q for x in row), 1)


def is_permutation_matrix(q) -> bool:
    return all(sorted(row) == [0] * (len(row) - 1) + [1] for row in q) and all(
        sorted(col) == [0] * (len(col) - 1) + [1] for col in zip(*q)
    )


@dataclass(frozen=True)
class QCertificate:
    """Exact ``Q`` with ``Q^T Q = I``, ``Q e = e`` and ``Q^T S(source) Q = S(target)``."""

    q: la.RatMatrix
    level: int
    source: OrientedGraph
    target: OrientedGraph

    def scaled(self, k: int) -> la.IntMatrix:
        """``k * Q`` as an integer matrix; ``k`` must be a multiple of the level."""
        if k % self.level:
            raise InputError(f"{k} is not a multiple of the level {self.level}")
        return tuple(tuple(int(x * k) for x in row) for row in self.q)


def gamma_conditions(q, source: OrientedGraph, target: OrientedGraph) -> dict[str, bool]:
    n = source.n
    qt = la.transpose(q)
    return {
        "orthogonal": la.mat_mul(qt, q) == la.to_rational(la.identity(n)),
        "regular": la.mat_vec(q, (1,) * n) == (1,) * n,
        "conjugates": la.mat_mul(la.mat_mul(qt, skew_adjacency(source)), q)
        == skew_adjacency(target),
    }


def verify_gamma_membership(cert: QCertificate) -> bool:
    """Re-check the three defining identities and the stored level."""
    if cert.source.n != cert.target.n or len(cert.q) != cert.source.n:
        return False
    return all(gamma_conditions(cert.q, cert.source, cert.target).values()) and cert.level == level(
        cert.q
    )


def recover_q(d: OrientedGraph, c: OrientedGraph) -> QCertificate:
    """Compute ``Q = W(D) W(C)^{-1}`` and verify it conjugates ``S(D)`` to ``S(C)``.

    Works with ``Q = N / delta`` where ``N = W(D) * delta W(C)^{-1}`` is
    integral, so each defining identity becomes an integer identity:
    ``N^T N = delta^2 I``, ``N e = delta e`` and
    ``N^T S(D) N = delta^2 S(C)``.
    """
    if d.n != c.n:
        raise InputError(f"graphs have different orders ({d.n} vs {c.n})")
    n = d.n
    wd, wc = walk_matrix(d), walk_matrix(c)
    if la.det_bareiss(wd) == 0:
        raise NotControllableError("source graph is not controllable (det W = 0)")
    try:
        delta, wc_adj = la.scaled_inverse(wc)
    except SingularMatrixError:
        raise NotControllableError("target graph is not controllable (det W = 0)") from None
    num = la.mat_mul(wd, wc_adj)
    numt = la.transpose(num)
    d2 = delta * delta
    failed = []
    if la.mat_mul(numt, num) != la.scale(la.identity(n), d2):
        failed.append("orthogonal")
    if la.mat_vec(num, (1,) * n) != (delta,) * n:
        failed.append("regular")
    if la.mat_mul(la.mat_mul(numt, skew_adjacency(d)), num) != la.scale(skew_adjacency(c), d2):
        failed.append("conjugates")
    if failed:
        raise NotCospectralMateError("W(D) W(C)^-1 fails: " + ", ".join(failed))
    g = abs(delta)
    for row in num:
        for x in row:
            g = math.gcd(g, x)
    q = tuple(tuple(Fraction(x, delta) for x in row) for row in num)
    return QCertificate(q=q, level=abs(delta) // g, source=d, target=c)


def identity_certificate(d: OrientedGraph) -> QCertificate:
    return QCertificate(la.to_rational(la.identity(d.n)), 1, d, d)
