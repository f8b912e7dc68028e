"""Encodings, relabelings and canonical forms."""

import random

from skewspec.graph_core import (
    OrientedGraph,
    apply_permutation,
    canonical_form,
    format_text,
    is_isomorphic,
    to_code,
    to_compact,
    transpose,
)

g = OrientedGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
print("arc list:")
print(format_text(g), end="")
print("compact:", to_compact(g), "integer code:", to_code(g))

# relabel at random; the canonical form does not move
rng = random.Random(0)
sigma = list(range(4))
rng.shuffle(sigma)
h = apply_permutation(g, sigma)
print("relabeled by", sigma, "->", to_compact(h))
print("canonical forms:", canonical_form(g), canonical_form(h))
print("witness:", is_isomorphic(g, h))

# a graph and its transpose need not be isomorphic
t = transpose(g)
print("transpose canonical form:", canonical_form(t))
print("self-transpose:", canonical_form(t) == canonical_form(g))
