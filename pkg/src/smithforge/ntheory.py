"""Arithmetic kernel: factorization and the multiplicative functions used
throughout the package.

Everything operates on plain Python integers, so all results are exact at
any size; there are no floating-point code paths anywhere in this module.
gcd and lcm are re-exported from math: the C implementations are exact and
there is no reason to duplicate them.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from math import gcd, isqrt, lcm

from .errors import NonPositive

__all__ = [
    "gcd",
    "lcm",
    "gcd_of",
    "lcm_of",
    "factorize",
    "divisors",
    "is_prime",
    "is_squarefree",
    "mobius",
    "jordan_totient",
    "delta",
]


def gcd_of(values) -> int:
    """gcd of a nonempty iterable of positive integers."""
    return reduce(gcd, values)


def lcm_of(values) -> int:
    """lcm of a nonempty iterable of positive integers."""
    return reduce(lcm, values)


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, e), ...) with primes ascending.

    Deterministic trial division.  Operands in this package stay well below
    10**9, where this is effectively instant; factorize(1) is ().
    """
    if not isinstance(n, int) or n < 1:
        raise NonPositive(n)
    pairs: list[tuple[int, int]] = []
    m = n
    e = 0
    while m % 2 == 0:
        m //= 2
        e += 1
    if e:
        pairs.append((2, e))
    p = 3
    while p <= isqrt(m):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
        p += 2
    if m > 1:
        pairs.append((m, 1))
    return tuple(pairs)


def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def is_squarefree(n: int) -> bool:
    """True when no prime divides n twice."""
    return all(e == 1 for _, e in factorize(n))


def mobius(n: int) -> int:
    """Moebius function: (-1)**(number of prime factors) on squarefree n, else 0."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def jordan_totient(a: int, n: int) -> int:
    """Jordan totient J_a(n) = n**a * prod over p|n of (1 - p**-a), exactly.

    Computed multiplicatively as prod of p**(a*(e-1)) * (p**a - 1), which
    clears all denominators; equals sum over d|n of mobius(d) * (n//d)**a.
    Always >= 1, and J_1 is Euler's totient.
    """
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"exponent must be a positive integer, got {a!r}")
    out = 1
    for p, e in factorize(n):
        out *= p ** (a * (e - 1)) * (p**a - 1)
    return out


def delta(n: int) -> int:
    """1 at n = 1 and 0 elsewhere: the identity for Dirichlet convolution."""
    if not isinstance(n, int) or n < 1:
        raise NonPositive(n)
    return 1 if n == 1 else 0
