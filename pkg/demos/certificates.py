"""Recover Q = W(D) W(C)^-1 for a pair of cospectral mates and inspect it."""

from fractions import Fraction

from skewspec import exact_linalg as la
from skewspec.characterization import certificate_lemma_audit, pairwise_level_audit
from skewspec.graph_core import skew_adjacency, transpose
from skewspec.worked_examples import example1_c, example1_d
from skewspec.spectral import recover_q

d, c = example1_d(), example1_c()
cert = recover_q(d, c)

print("Q =")
for row in cert.q:
    print("  " + " ".join(f"{str(x):>5}" for x in row))
print("level", cert.level)

# Q is orthogonal, fixes the all-ones vector and conjugates S(D) to S(C).
q = cert.q
qt = la.transpose(q)
n = d.n
print("Q^T Q == I:", la.mat_mul(qt, q) == la.to_rational(la.identity(n)))
print("Q e == e:", all(sum(row) == 1 for row in q))
lhs = la.mat_mul(la.mat_mul(qt, la.to_rational(skew_adjacency(d))), q)
print("Q^T S(D) Q == S(C):", lhs == la.to_rational(skew_adjacency(c)))

# scaled by its level, Q becomes an integer matrix
print("7 Q =", cert.scaled(7)[0], "...")
print("entries of Q are sevenths:", all(Fraction(x).denominator in (1, 7) for row in q for x in row))

audit = certificate_lemma_audit(cert)
for chk in audit.checks:
    print(f"  {'ok ' if chk.passed else 'BAD'} {chk.name}")

other = recover_q(d, transpose(d))
print("second certificate level", other.level)
print("pairwise audit:", pairwise_level_audit(cert, other).passed)
