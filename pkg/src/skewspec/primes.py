"""Primality testing and integer factorization.

Trial division handles everything below ``TRIAL_LIMIT``; larger cofactors
are split with Pollard's rho (Brent variant) and certified by Miller-Rabin.
Miller-Rabin is deterministic below ``DETERMINISTIC_MR_LIMIT`` and uses
``PROBABILISTIC_ROUNDS`` seeded random bases above it, so runs reproduce.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Dict

TRIAL_LIMIT = 10**6
# first 13 primes as bases are a proof of primality below this bound
DETERMINISTIC_MR_LIMIT = 3_317_044_064_679_887_385_961_981
MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
PROBABILISTIC_ROUNDS = 40
RNG_SEED = 0x5EED
RHO_MAX_RESTARTS = 64


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(limit + 1) if sieve[i]]


_SMALL_PRIMES: list[int] | None = None


def small_primes() -> list[int]:
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        _SMALL_PRIMES = _small_primes(TRIAL_LIMIT)
    return _SMALL_PRIMES


def _mr_witness(a: int, n: int, d: int, s: int) -> bool:
    """True if ``a`` proves ``n`` composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    n = int(n)
    if n < 2:
        return False
    for p in MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < DETERMINISTIC_MR_LIMIT:
        return not any(_mr_witness(a, n, d, s) for a in MR_BASES)
    rng = random.Random(RNG_SEED ^ n.bit_length())
    bases = list(MR_BASES) + [rng.randrange(2, n - 1) for _ in range(PROBABILISTIC_ROUNDS)]
    return not any(_mr_witness(a, n, d, s) for a in bases)


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    for _ in range(RHO_MAX_RESTARTS):
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RuntimeError(f"Pollard rho failed to split {n}")


@dataclass(frozen=True)
class FactoredInteger:
    """``sign * prod(p**e)``; ``sign == 0`` marks the non-factorable zero."""

    sign: int
    factors: Dict[int, int] = field(default_factory=dict)

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors.items():
            out *= p**e
        return out

    @property
    def odd_primes(self) -> list[int]:
        return sorted(p for p in self.factors if p != 2)

    def is_square_free(self) -> bool:
        return self.sign != 0 and all(e == 1 for e in self.factors.values())

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(self.factors.items())]
        body = " * ".join(parts) if parts else "1"
        return f"-({body})" if self.sign < 0 else body


def factorize(x: int) -> FactoredInteger:
    """Complete prime factorization of ``x``."""
    x = int(x)
    if x == 0:
        return FactoredInteger(0, {})
    sign = -1 if x < 0 else 1
    n = abs(x)
    factors: Dict[int, int] = {}
    for p in small_primes():
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n > 1:
        rng = random.Random(RNG_SEED)
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                factors[m] = factors.get(m, 0) + 1
                continue
            r = math.isqrt(m)
            if r * r == m:
                stack.extend((r, r))
                continue
            d = _pollard_brent(m, rng)
            stack.extend((d, m // d))
    return FactoredInteger(sign, dict(sorted(factors.items())))
