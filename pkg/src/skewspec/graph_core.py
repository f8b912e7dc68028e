"""Oriented graphs: construction, encodings, relabeling and isomorphism.

Vertex pairs ``(i, j)`` with ``i < j`` are listed lexicographically; a graph
on ``n`` vertices is then a base-3 string over these pairs with digit 0 for
no arc, 1 for ``i -> j`` and 2 for ``j -> i``. Reading the string with the
first pair as the most significant digit gives the integer *code* used by
enumeration and sharding; lexicographic order on strings of equal length
matches numeric order on codes.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, Optional, Sequence, Tuple

import numpy as np

from .errors import InputError, UnsupportedError
from .exact_linalg import IntMatrix

MAX_ORDER = 10
MAX_CANON_ORDER = 9
MAX_ENUM_ORDER = 6

Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    arcs: FrozenSet[Tuple[int, int]]

    def __init__(self, n: int, arcs=()):
        arcs = frozenset((int(u), int(v)) for u, v in arcs)
        if not 1 <= n <= MAX_ORDER:
            raise InputError(f"vertex count must be in 1..{MAX_ORDER}, got {n}")
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if (v, u) in arcs:
                raise InputError(f"digon between {u} and {v}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "arcs", arcs)

    def __repr__(self) -> str:
        return f"OrientedGraph({to_compact(self)!r})"

    def out_degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, _ in self.arcs:
            deg[u] += 1
        return deg

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for _, v in self.arcs:
            deg[v] += 1
        return deg


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(itertools.combinations(range(n), 2))


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


# ---------------------------------------------------------------- matrices

def skew_adjacency(d: OrientedGraph) -> IntMatrix:
    s = [[0] * d.n for _ in range(d.n)]
    for u, v in d.arcs:
        s[u][v] = 1
        s[v][u] = -1
    return tuple(map(tuple, s))


def from_skew_matrix(s: Sequence[Sequence[int]]) -> OrientedGraph:
    """Inverse of :func:`skew_adjacency`; validates skew-symmetry."""
    n = len(s)
    if any(len(row) != n for row in s):
        raise InputError("skew-adjacency matrix must be square")
    arcs = []
    for i in range(n):
        if s[i][i] != 0:
            raise InputError(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, n):
            x, y = s[i][j], s[j][i]
            if x != -y or x not in (-1, 0, 1):
                raise InputError(f"entries ({i},{j}) and ({j},{i}) are not skew {{-1,0,1}}")
            if x == 1:
                arcs.append((i, j))
            elif x == -1:
                arcs.append((j, i))
    return OrientedGraph(n, arcs)


def transpose(d: OrientedGraph) -> OrientedGraph:
    return OrientedGraph(d.n, ((v, u) for u, v in d.arcs))


# --------------------------------------------------------------- encodings

def encode(d: OrientedGraph) -> str:
    """Base-3 digit string of ``d`` (no order prefix)."""
    digits = []
    for i, j in vertex_pairs(d.n):
        if (i, j) in d.arcs:
            digits.append("1")
        elif (j, i) in d.arcs:
            digits.append("2")
        else:
            digits.append("0")
    return "".join(digits)


def decode(n: int, digits: str) -> OrientedGraph:
    pairs = vertex_pairs(n)
    if len(digits) != len(pairs) or any(c not in "012" for c in digits):
        raise InputError(f"expected {len(pairs)} base-3 digits for n={n}, got {digits!r}")
    arcs = []
    for (i, j), c in zip(pairs, digits):
        if c == "1":
            arcs.append((i, j))
        elif c == "2":
            arcs.append((j, i))
    return OrientedGraph(n, arcs)


def to_code(d: OrientedGraph) -> int:
    s = encode(d)
    return int(s, 3) if s else 0


def from_code(n: int, code: int) -> OrientedGraph:
    m = num_pairs(n)
    if not 0 <= code < 3**m:
        raise InputError(f"code {code} out of range for n={n}")
    return decode(n, _code_digits(code, m))


def _code_digits(code: int, m: int) -> str:
    out = []
    for _ in range(m):
        code, r = divmod(code, 3)
        out.append("012"[r])
    return "".join(reversed(out))


def to_compact(d: OrientedGraph) -> str:
    return f"o{d.n}:{encode(d)}"


_COMPACT_RE = re.compile(r"^o(\d+):([012]*)$")


def from_compact(text: str) -> OrientedGraph:
    m = _COMPACT_RE.match(text.strip())
    if not m:
        raise InputError(f"not a compact graph string: {text!r}")
    return decode(int(m.group(1)), m.group(2))


def code_to_compact(n: int, code: int) -> str:
    return f"o{n}:{_code_digits(int(code), num_pairs(n))}"


def compact_to_code(text: str) -> Tuple[int, int]:
    m = _COMPACT_RE.match(text.strip())
    if not m:
        raise InputError(f"not a compact graph string: {text!r}")
    digits = m.group(2)
    return int(m.group(1)), (int(digits, 3) if digits else 0)


def format_text(d: OrientedGraph) -> str:
    lines = [f"n {d.n}"] + [f"{u} {v}" for u, v in sorted(d.arcs)]
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> OrientedGraph:
    """Parse the line-oriented ``n <count>`` / ``u v`` graph format."""
    n = None
    arcs = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise InputError(f"line {lineno}: expected 'n <count>', got {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise InputError(f"line {lineno}: expected an arc 'u v', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise InputError(f"line {lineno}: bad arc {u} {v} for n={n}")
        if (v, u) in seen:
            raise InputError(f"line {lineno}: digon {u} {v}")
        seen.add((u, v))
        arcs.append((u, v))
    if n is None:
        raise InputError("missing 'n <count>' header")
    try:
        return OrientedGraph(n, arcs)
    except InputError as exc:
        raise InputError(f"invalid graph: {exc}") from None


def parse_graph(text: str) -> OrientedGraph:
    """Auto-detect the compact (``o<n>:...``) or text format."""
    for line in text.splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            if s.startswith("o"):
                return from_compact(s)
            break
    return parse_text(text)


# ------------------------------------------------------------ permutations

def check_permutation(sigma: Sequence[int], n: int) -> Permutation:
    sigma = tuple(int(x) for x in sigma)
    if len(sigma) != n:
        raise InputError(f"permutation has length {len(sigma)}, graph has {n} vertices")
    if sorted(sigma) != list(range(n)):
        raise InputError(f"{sigma} is not a permutation of 0..{n - 1}")
    return sigma


def permutation_matrix(sigma: Sequence[int]) -> IntMatrix:
    """``P`` with ``P[u][sigma[u]] = 1``, so ``S(sigma D) = P^T S(D) P``."""
    n = len(sigma)
    return tuple(tuple(int(sigma[u] == c) for c in range(n)) for u in range(n))


def apply_permutation(d: OrientedGraph, sigma: Sequence[int]) -> OrientedGraph:
    sigma = check_permutation(sigma, d.n)
    return OrientedGraph(d.n, ((sigma[u], sigma[v]) for u, v in d.arcs))


def is_isomorphic(a: OrientedGraph, b: OrientedGraph) -> Optional[Permutation]:
    """Return ``sigma`` with ``apply_permutation(a, sigma) == b``, or None.

    Plain backtracking; candidate images must agree in (out, in) degree.
    """
    if a.n != b.n or len(a.arcs) != len(b.arcs):
        return None
    n = a.n
    deg_a = list(zip(a.out_degrees(), a.in_degrees()))
    deg_b = list(zip(b.out_degrees(), b.in_degrees()))
    if sorted(deg_a) != sorted(deg_b):
        return None
    sa, sb = skew_adjacency(a), skew_adjacency(b)
    # most constrained vertices first
    order = sorted(range(n), key=lambda u: sum(x == deg_a[u] for x in deg_a))
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        u = order[k]
        for w in range(n):
            if used[w] or deg_b[w] != deg_a[u]:
                continue
            if any(sa[u][order[t]] != sb[w][image[order[t]]] for t in range(k)):
                continue
            image[u], used[w] = w, True
            if extend(k + 1):
                return True
            image[u], used[w] = -1, False
        return False

    return tuple(image) if extend(0) else None


# ------------------------------------------------------- orbits and canon

@lru_cache(maxsize=8)
def _orbit_tables(n: int):
    """Per-permutation contributions of digits 1 and 2 at each pair slot.

    Row ``p`` of ``c1`` (``c2``) gives, for each pair index ``t``, what a
    digit 1 (2) at ``t`` adds to the code of the graph relabeled by the
    ``p``-th permutation in ``itertools.permutations`` order.
    """
    pairs = vertex_pairs(n)
    m = len(pairs)
    index = {pr: t for t, pr in enumerate(pairs)}
    pow3 = np.array([3 ** (m - 1 - k) for k in range(m)], dtype=np.int64)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    c1 = np.zeros((len(perms), m), dtype=np.int64)
    c2 = np.zeros((len(perms), m), dtype=np.int64)
    for p, sigma in enumerate(perms):
        for t, (i, j) in enumerate(pairs):
            a, b = sigma[i], sigma[j]
            if a < b:
                w = pow3[index[(a, b)]]
                c1[p, t], c2[p, t] = w, 2 * w
            else:
                w = pow3[index[(b, a)]]
                c1[p, t], c2[p, t] = 2 * w, w
    return perms, c1, c2


def _digit_array(n: int, code: int) -> np.ndarray:
    m = num_pairs(n)
    return np.array([int(c) for c in _code_digits(code, m)], dtype=np.int8)


def orbit_codes(n: int, code: int) -> np.ndarray:
    """Codes of all ``n!`` relabelings of the graph with the given code."""
    if n > 7:
        raise UnsupportedError("orbit tables are only built for n <= 7")
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    _, c1, c2 = _orbit_tables(n)
    digits = _digit_array(n, code)
    return c1[:, digits == 1].sum(axis=1) + c2[:, digits == 2].sum(axis=1)


def canonical_code(d: OrientedGraph) -> int:
    """Least code over all relabelings of ``d``."""
    if d.n > MAX_CANON_ORDER:
        raise UnsupportedError(f"canonical form needs n <= {MAX_CANON_ORDER}, got {d.n}")
    if d.n <= 7:
        return int(orbit_codes(d.n, to_code(d)).min())
    # n = 8, 9: stream the permutations instead of tabulating them
    pairs = vertex_pairs(d.n)
    m = len(pairs)
    index = {pr: t for t, pr in enumerate(pairs)}
    best = None
    arcs = sorted(d.arcs)
    for sigma in itertools.permutations(range(d.n)):
        digits = [0] * m
        for u, v in arcs:
            a, b = sigma[u], sigma[v]
            if a < b:
                digits[index[(a, b)]] = 1
            else:
                digits[index[(b, a)]] = 2
        code = 0
        for x in digits:
            code = 3 * code + x
        if best is None or code < best:
            best = code
    return best


def canonical_form(d: OrientedGraph) -> str:
    """Compact string of the lexicographically least relabeling of ``d``."""
    return code_to_compact(d.n, canonical_code(d))


def canonical_graph(d: OrientedGraph) -> OrientedGraph:
    return from_code(d.n, canonical_code(d))


# ------------------------------------------------------------- enumeration

def shard_range(total: int, shards: int, index: int) -> range:
    if shards < 1 or not 0 <= index < shards:
        raise InputError(f"invalid shard {index} of {shards}")
    return range(index * total // shards, (index + 1) * total // shards)


def enumerate_codes(n: int, shards: int = 1, index: int = 0) -> range:
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise UnsupportedError(f"full enumeration needs 1 <= n <= {MAX_ENUM_ORDER}, got {n}")
    return shard_range(3 ** num_pairs(n), shards, index)


def enumerate_all(n: int, shards: int = 1, index: int = 0) -> Iterator[OrientedGraph]:
    """Every labeled oriented graph on ``n`` vertices, in code order.

    With ``shards > 1`` only the ``index``-th contiguous slice is produced;
    concatenating all slices in index order gives the full stream.
    """
    for code in enumerate_codes(n, shards, index):
        yield from_code(n, code)
