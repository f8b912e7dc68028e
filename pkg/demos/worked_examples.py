"""Walk through the two bundled example graphs.

Run with ``python3 demos/worked_examples.py``.
"""

from skewspec import exact_linalg as la
from skewspec.census import verify_candidate_mate
from skewspec.characterization import fn_membership, wdgss_criterion
from skewspec.graph_core import canonical_form, transpose
from skewspec.worked_examples import example1_c, example1_d, example2_d
from skewspec.spectral import fingerprint, walk_matrix

# The first example has seven vertices and ten arcs.
d = example1_d()
c = example1_c()
print("D =", canonical_form(d))
print("C =", canonical_form(c))

# Its walk matrix is nonsingular, so D is controllable.
rep = fn_membership(d)
print("det W(D) =", rep.det_walk, "=", rep.factorization)
print("reduced value", rep.reduced, "odd primes", rep.odd_primes)
print("at most", rep.bound, "mates up to isomorphism")

# C shares both characteristic polynomials with D but is a different graph.
print("same fingerprint:", fingerprint(d) == fingerprint(c))

# Every mate comes with a rational orthogonal certificate; its level is the
# least common denominator.
report = verify_candidate_mate(d, c)
for member, level in zip(report.members, report.levels):
    print(f"  {member}  level {level}")
print("lemma audits pass:", report.audits_passed)

# The second example sits in F_6 with a prime reduced value.
d2 = example2_d()
rep2 = fn_membership(d2)
print()
print("det W =", rep2.det_walk, "=", rep2.factorization)
print("verdict:", wdgss_criterion(d2, rep2).verdict)
print("SNF of W^T:", la.invariant_factors(la.transpose(walk_matrix(d2))))
print("its transpose:", canonical_form(transpose(d2)))
