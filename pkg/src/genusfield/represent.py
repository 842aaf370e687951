"""Solvers for the quadratic-form identities attached to each prime class.

Definite forms x^2 + D y^2 (D = 1, 2, 8, 16) are solved by Cornacchia's
descent on prime targets and by multiplying prime solutions together in the
ambient quadratic ring for composite targets; targets below a cutoff use an
exhaustive scan instead.  The indefinite form x^2 - 32 y^2 is solved by a
bounded Pell-style search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import factor_squarefree, is_prime, sqrt_mod_prime
from .errors import InternalContradiction

EXHAUSTIVE_CUTOFF = 1_000_000
PELL_MULTIPLIER = 3


@dataclass(frozen=True)
class Representation:
    """A solved identity x^2 + form_d * y^2 = target.

    form_d = -32 encodes the indefinite identity x^2 - 32 y^2 = target.
    x may be negative after sign normalization to x = 1 (mod 4); y > 0.
    """

    form_d: int
    x: int
    y: int
    target: int

    def holds(self) -> bool:
        return self.x * self.x + self.form_d * self.y * self.y == self.target

    def is_primitive(self) -> bool:
        return math.gcd(self.x, self.y) == 1


def _exhaustive(d: int, n: int) -> list[tuple[int, int]]:
    """All primitive (x, y) with x > 0, y >= 0 and x^2 + d y^2 = n."""
    out = []
    y = 0
    while d * y * y <= n:
        r = n - d * y * y
        x = math.isqrt(r)
        if x * x == r and x > 0 and math.gcd(x, y) == 1:
            out.append((x, y))
        y += 1
    return sorted(out)


def _cornacchia_prime(d: int, p: int) -> tuple[int, int] | None:
    """One primitive solution of x^2 + d y^2 = p for an odd prime p."""
    root = sqrt_mod_prime(-d % p, p)
    if root is None:
        return None
    if 2 * root < p:
        root = p - root
    a, b = p, root
    limit = math.isqrt(p)
    while b > limit:
        a, b = b, a % b
    c, rem = divmod(p - b * b, d)
    if rem:
        return None
    t = math.isqrt(c)
    if t * t != c or math.gcd(b, t) != 1:
        return None
    return (b, t)


def _compose_all(d: int, n: int) -> list[tuple[int, int]]:
    """All primitive solutions of x^2 + d y^2 = n for odd square-free n, d in {1, 2}.

    Multiplies prime solutions in Z[sqrt(-d)], taking both conjugate choices
    at every prime, which walks through every solution class.
    """
    fact = factor_squarefree(n)
    reps: set[tuple[int, int]] = {(1, 0)}
    for p in fact.primes:
        if p == 2:
            return []
        pr = _cornacchia_prime(d, p)
        if pr is None:
            return []
        a, b = pr
        nxt: set[tuple[int, int]] = set()
        for x, y in reps:
            nxt.add((abs(x * a - d * y * b), abs(x * b + y * a)))
            nxt.add((abs(x * a + d * y * b), abs(x * b - y * a)))
        reps = nxt
    found = {(x, y) for x, y in reps if x > 0 and math.gcd(x, y) == 1}
    if d == 1:
        found |= {(y, x) for x, y in found if y > 0}
    return sorted(found)


def all_representations(d: int, n: int, *, exhaustive_cutoff: int = EXHAUSTIVE_CUTOFF) -> list[tuple[int, int]]:
    """Every primitive (x, y), x > 0, y >= 0, with x^2 + d y^2 = n, sorted."""
    if d not in (1, 2, 8, 16):
        raise ValueError(f"unsupported form coefficient {d}")
    if n < 2:
        raise ValueError("target must be >= 2")
    if n < exhaustive_cutoff:
        return _exhaustive(d, n)
    if d in (8, 16):
        # reduce to the class-number-one base form; valid for odd square-free n
        base, stride = (2, 2) if d == 8 else (1, 4)
        reps = _compose_all(base, n)
        return sorted(
            (x, y // stride)
            for x, y in reps
            if y % stride == 0 and math.gcd(x, y // stride) == 1
        )
    return _compose_all(d, n)


def cornacchia(d: int, n: int, *, exhaustive_cutoff: int = EXHAUSTIVE_CUTOFF) -> Representation | None:
    """A primitive solution of x^2 + d y^2 = n, or None; returns the minimal-x one."""
    reps = all_representations(d, n, exhaustive_cutoff=exhaustive_cutoff)
    if not reps:
        return None
    x, y = min(reps)
    return Representation(d, x, y, n)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


@lru_cache(maxsize=None)
def solve_gamma(p1: int, pi: int, exhaustive_cutoff: int = EXHAUSTIVE_CUTOFF) -> Representation:
    """Solve p1 * pi = x^2 + y^2 with x odd and y = 0 (mod 4).

    Both primitive solution classes satisfy 4 | y; exactly one satisfies
    8 | y, and that one is the canonical pick (it fixes output bytes, and
    the constructed field does not depend on the choice).
    """
    _require(p1 % 8 == 5 and pi % 8 == 5, "both primes must be 5 (mod 8)")
    _require(p1 != pi, "primes must be distinct")
    _require(is_prime(p1) and is_prime(pi), "arguments must be prime")
    n = p1 * pi
    cands = [
        (x, y)
        for x, y in all_representations(1, n, exhaustive_cutoff=exhaustive_cutoff)
        if x % 2 == 1 and y % 8 == 0
    ]
    if len(cands) != 1:
        raise InternalContradiction(
            f"expected one solution of {n} = x^2 + y^2 with x odd, 8 | y; got {cands}"
        )
    x, y = cands[0]
    return Representation(1, x, y, n)


@lru_cache(maxsize=None)
def solve_alpha(q1: int, qi: int, exhaustive_cutoff: int = EXHAUSTIVE_CUTOFF) -> Representation:
    """Solve q1 * qi = x^2 + 2 y^2 with x odd and y even; minimal y wins."""
    _require(q1 % 8 == 3 and qi % 8 == 3, "both primes must be 3 (mod 8)")
    _require(q1 != qi, "primes must be distinct")
    _require(is_prime(q1) and is_prime(qi), "arguments must be prime")
    n = q1 * qi
    cands = [
        (x, y)
        for x, y in all_representations(2, n, exhaustive_cutoff=exhaustive_cutoff)
        if x % 2 == 1 and y % 2 == 0
    ]
    if not cands:
        raise InternalContradiction(f"no solution of {n} = x^2 + 2 y^2 with x odd, y even")
    x, y = min(cands, key=lambda c: (c[1], c[0]))
    return Representation(2, x, y, n)


def _sign_normalize(x: int) -> int:
    return x if x % 4 == 1 else -x


@lru_cache(maxsize=None)
def solve_pi1(l: int, exhaustive_cutoff: int = EXHAUSTIVE_CUTOFF) -> Representation:
    """Solve l = a^2 + 16 b^2 with b > 0; a sign-normalized to 1 (mod 4)."""
    _require(l % 16 == 9 and is_prime(l), "l must be a prime = 9 (mod 16)")
    reps = all_representations(16, l, exhaustive_cutoff=exhaustive_cutoff)
    if len(reps) != 1:
        raise InternalContradiction(f"{l} = a^2 + 16 b^2 has solutions {reps}")
    a, b = reps[0]
    return Representation(16, _sign_normalize(a), b, l)


@lru_cache(maxsize=None)
def solve_pi3(l: int, exhaustive_cutoff: int = EXHAUSTIVE_CUTOFF) -> Representation:
    """Solve l = u^2 + 8 v^2 with v > 0; u sign-normalized to 1 (mod 4)."""
    _require(l % 16 == 9 and is_prime(l), "l must be a prime = 9 (mod 16)")
    reps = all_representations(8, l, exhaustive_cutoff=exhaustive_cutoff)
    if len(reps) != 1:
        raise InternalContradiction(f"{l} = u^2 + 8 v^2 has solutions {reps}")
    u, v = reps[0]
    return Representation(8, _sign_normalize(u), v, l)


@lru_cache(maxsize=None)
def solve_pi2(l: int, pell_multiplier: int = PELL_MULTIPLIER) -> Representation:
    """Solve l = e^2 - 32 f^2 with minimal f >= 1; e sign-normalized to 1 (mod 4).

    The fundamental solution (17, 3) of e^2 - 32 f^2 = 1 bounds a minimal
    orbit representative well below f = isqrt(l); the search margin is
    pell_multiplier * isqrt(l).
    """
    _require(l % 16 == 9 and is_prime(l), "l must be a prime = 9 (mod 16)")
    bound = pell_multiplier * math.isqrt(l) + 1
    for f in range(1, bound + 1):
        e2 = l + 32 * f * f
        e = math.isqrt(e2)
        if e * e == e2:
            if math.gcd(e, f) != 1:
                continue
            return Representation(-32, _sign_normalize(e), f, l)
    raise InternalContradiction(f"no solution of {l} = e^2 - 32 f^2 with f <= {bound}")
