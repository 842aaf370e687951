"""Shared fixtures and independent brute-force oracles.

The oracles here re-derive everything by exhaustive search and never call
into the solver code paths they are used to check.
"""

from __future__ import annotations

import math

import pytest

from genusfield import construct, factor_squarefree
from genusfield.errors import Degenerate, NotCoveredError, NotSquareFree, UnsupportedPrime

ACCEPTANCE_BOUND = 50_000


def sieve_primes(limit: int) -> list[int]:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i, v in enumerate(flags) if v]


def oracle_representations(form_d: int, n: int) -> list[tuple[int, int]]:
    """All primitive (x, y), x > 0, y >= 0, with x^2 + form_d * y^2 = n."""
    found = []
    y = 0
    while form_d * y * y <= n:
        rest = n - form_d * y * y
        x = math.isqrt(rest)
        if x * x == rest and x > 0 and math.gcd(x, y) == 1:
            found.append((x, y))
        y += 1
    return found


def oracle_pell32(n: int, f_bound: int) -> list[tuple[int, int]]:
    """All (e, f) with e, f >= 1, e^2 - 32 f^2 = n and f <= f_bound."""
    out = []
    for f in range(1, f_bound + 1):
        e2 = n + 32 * f * f
        e = math.isqrt(e2)
        if e * e == e2:
            out.append((e, f))
    return out


def supported_d_values(bound: int) -> list[int]:
    out = []
    for d in range(2, bound + 1):
        try:
            f = factor_squarefree(d)
        except (Degenerate, NotSquareFree):
            continue
        if all(p % 16 == 9 or p % 8 in (3, 5) for p in f.primes):
            out.append(d)
    return out


@pytest.fixture(scope="session")
def sweep_50k():
    """Constructed genus fields for every covered square-free d <= 50000."""
    fields = {}
    not_covered = []
    for d in range(2, ACCEPTANCE_BOUND + 1):
        try:
            fields[d] = construct(d)
        except (Degenerate, NotSquareFree, UnsupportedPrime):
            continue
        except NotCoveredError:
            not_covered.append(d)
    return fields, not_covered
