"""Skew-adjacency matrices of the two worked examples, as embedded fixtures.

Rows/columns are 0-indexed in the order of the original listing.
"""

from .graph_core import OrientedGraph, from_skew_matrix

EXAMPLE1_D_MATRIX = (
    (0, 1, 1, -1, 0, 0, 0),
    (-1, 0, 0, 0, 0, 0, 0),
    (-1, 0, 0, 1, 1, 1, 0),
    (1, 0, -1, 0, 1, 0, 1),
    (0, 0, -1, -1, 0, 1, -1),
    (0, 0, -1, 0, -1, 0, 0),
    (0, 0, 0, -1, 1, 0, 0),
)

EXAMPLE1_C_MATRIX = (
    (0, 1, 1, -1, 0, 0, 0),
    (-1, 0, 1, 0, 0, 0, -1),
    (-1, -1, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, -1, -1, 0),
    (0, 0, 0, 1, 0, 1, 1),
    (0, 0, 0, 1, -1, 0, -1),
    (0, 1, 0, 0, -1, 1, 0),
)

EXAMPLE2_D_MATRIX = (
    (0, 1, -1, -1, 0, 0),
    (-1, 0, 0, 0, 0, 0),
    (1, 0, 0, -1, -1, 0),
    (1, 0, 1, 0, -1, -1),
    (0, 0, 1, 1, 0, 0),
    (0, 0, 0, 1, 0, 0),
)


def example1_d() -> OrientedGraph:
    return from_skew_matrix(EXAMPLE1_D_MATRIX)


def example1_c() -> OrientedGraph:
    return from_skew_matrix(EXAMPLE1_C_MATRIX)


def example2_d() -> OrientedGraph:
    return from_skew_matrix(EXAMPLE2_D_MATRIX)
