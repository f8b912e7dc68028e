"""F_n membership, the mate bound, the WDGSS criterion and lemma audits.

A graph ``D`` of order ``n`` is in F_n when ``det W(D) / 2**(n // 2)`` is
an odd square-free integer. Such a graph has at most ``2**k - 1``
non-isomorphic generalized cospectral mates, ``k`` being the number of
distinct odd primes dividing ``det W(D)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from . import exact_linalg as la
from .errors import InapplicableError
from .graph_core import OrientedGraph, is_isomorphic, transpose
from .primes import FactoredInteger, factorize, is_prime
from .spectral import QCertificate, is_permutation_matrix, level, walk_matrix


@dataclass(frozen=True)
class FnReport:
    n: int
    det_walk: int
    factorization: FactoredInteger
    reduced: Optional[int]  # det / 2**(n//2), None when not integral
    is_member: bool
    odd_primes: tuple[int, ...]
    b: Optional[int]  # |reduced| for members, else None
    k: int
    bound: int


def fn_membership(d: OrientedGraph) -> FnReport:
    det = la.det_bareiss(walk_matrix(d))
    fac = factorize(det)
    power = 2 ** (d.n // 2)
    reduced = det // power if det % power == 0 else None
    odd = tuple(fac.odd_primes)
    is_member = False
    if reduced:
        red_fac = factorize(reduced)
        is_member = reduced % 2 != 0 and red_fac.is_square_free()
        assert tuple(red_fac.odd_primes) == odd
    k = len(odd)
    return FnReport(
        n=d.n,
        det_walk=det,
        factorization=fac,
        reduced=reduced,
        is_member=is_member,
        odd_primes=odd,
        b=abs(reduced) if is_member else None,
        k=k,
        bound=2**k - 1,
    )


def mate_bound(report: FnReport) -> int:
    """Upper bound ``2**k - 1`` on non-isomorphic generalized cospectral mates."""
    if not report.is_member:
        raise InapplicableError("the mate bound only applies to graphs in F_n")
    return 2**report.k - 1


def is_self_transpose(d: OrientedGraph) -> bool:
    return is_isomorphic(d, transpose(d)) is not None


@dataclass(frozen=True)
class WdgssVerdict:
    applicable: bool
    self_transpose: bool
    reduced_is_odd_prime: bool
    verdict: str  # "wdgss_by_criterion" | "not_applicable"


def wdgss_criterion(d: OrientedGraph, report: Optional[FnReport] = None) -> WdgssVerdict:
    """Not self-transpose and ``|det W / 2**(n//2)|`` an odd prime => WDGSS."""
    report = report or fn_membership(d)
    st = is_self_transpose(d)
    red = report.reduced
    odd_prime = red is not None and red % 2 != 0 and is_prime(abs(red))
    ok = (not st) and odd_prime
    return WdgssVerdict(
        applicable=ok,
        self_transpose=st,
        reduced_is_odd_prime=odd_prime,
        verdict="wdgss_by_criterion" if ok else "not_applicable",
    )


def expected_snf_structure(n: int, b: int) -> tuple[int, ...]:
    ones = (n + 1) // 2
    half = n // 2
    if half == 0:
        return (1,) * ones
    return (1,) * ones + (2,) * (half - 1) + (2 * b,)


def snf_structure_check(d: OrientedGraph, report: Optional[FnReport] = None) -> bool:
    """SNF of ``W^T`` is ``diag(1,..,1, 2,..,2, 2b)`` and ``rank_2 W = ceil(n/2)``."""
    report = report or fn_membership(d)
    if not report.is_member:
        raise InapplicableError("SNF structure is only predicted for graphs in F_n")
    w = walk_matrix(d)
    snf = la.smith_normal_form(la.transpose(w))
    return (
        snf.n_diag == expected_snf_structure(d.n, report.b)
        and la.rank_mod_p(w, 2) == (d.n + 1) // 2
    )


def last_invariant_factor(w: la.IntMatrix) -> int:
    """``d_n`` of ``W^T``, asserted equal to ``d_n`` of ``W``."""
    dn = la.smith_normal_form(la.transpose(w)).n_diag[-1]
    assert dn == la.smith_normal_form(w).n_diag[-1]
    return dn


@dataclass(frozen=True)
class AuditCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class AuditResult:
    checks: tuple[AuditCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


def certificate_lemma_audit(
    cert: QCertificate, report: Optional[FnReport] = None, dn: Optional[int] = None
) -> AuditResult:
    """Check the level properties that hold for certificates of F_n graphs.

    * the level is odd;
    * it divides ``d_n`` of both walk matrices (hence their gcd);
    * for each odd prime ``p`` of the level, ``Qbar = d_n Q`` has rank 1
      over F_p and ``Qbar^T Qbar`` vanishes mod ``p**2``.
    """
    report = report or fn_membership(cert.source)
    if dn is None:
        dn = last_invariant_factor(walk_matrix(cert.source))
    dn_target = last_invariant_factor(walk_matrix(cert.target))
    lv = cert.level
    checks = [
        AuditCheck("level_odd", lv % 2 == 1, f"level={lv}"),
        AuditCheck("level_divides_dn_source", dn % lv == 0, f"d_n={dn}"),
        AuditCheck("level_divides_dn_target", dn_target % lv == 0, f"d_n={dn_target}"),
        AuditCheck("level_divides_gcd", math.gcd(dn, dn_target) % lv == 0),
    ]
    if report.is_member:
        checks.append(AuditCheck("dn_equals_twice_reduced",
                                 cert.source.n < 2 or dn == 2 * report.b, f"d_n={dn}"))
    if dn % lv == 0:
        qbar = cert.scaled(dn)
        gram = la.mat_mul(la.transpose(qbar), qbar)
        for p in factorize(lv).odd_primes:
            r = la.rank_mod_p(qbar, p)
            checks.append(AuditCheck(f"rank_p_qbar_is_1[p={p}]", r == 1, f"rank={r}"))
            checks.append(AuditCheck(
                f"gram_qbar_zero_mod_p2[p={p}]",
                all(x % (p * p) == 0 for row in gram for x in row),
            ))
    return AuditResult(tuple(checks))


def pairwise_level_audit(c1: QCertificate, c2: QCertificate) -> AuditResult:
    """Shared odd primes of two levels never divide ``level(Q1^T Q2)``; equal
    levels force ``Q1^T Q2`` to be a permutation matrix."""
    if c1.source != c2.source:
        raise InapplicableError("certificates must share their source graph")
    composite = la.mat_mul(la.transpose(c1.q), c2.q)
    lv = level(composite)
    shared = sorted(set(factorize(c1.level).odd_primes) & set(factorize(c2.level).odd_primes))
    checks = [
        AuditCheck(f"p_not_dividing_composite_level[p={p}]", lv % p != 0, f"level={lv}")
        for p in shared
    ]
    if c1.level == c2.level:
        checks.append(AuditCheck("equal_levels_give_permutation",
                                 is_permutation_matrix(composite), f"level={lv}"))
    return AuditResult(tuple(checks))
