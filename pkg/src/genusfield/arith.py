"""Exact integer primitives: primality, square-free factorization, residue symbols."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import Degenerate, InternalContradiction, NotSquareFree

# Strong-pseudoprime witnesses: deterministic for n below ~3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

TRIAL_DIVISION_BOUND = 1_000_000


@dataclass(frozen=True)
class Factorization:
    """A square-free integer together with its distinct ascending prime divisors."""

    value: int
    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b <= a for a, b in zip(self.primes, self.primes[1:])):
            raise ValueError("primes must be strictly ascending")
        if math.prod(self.primes) != abs(self.value):
            raise ValueError("primes do not multiply to |value|")

    @property
    def abs_value(self) -> int:
        return abs(self.value)


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed witness set (deterministic below 3.3e24)."""
    if n < 2:
        raise ValueError("primality is defined here for n >= 2")
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus for exp >= 0, modulus >= 1."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if exp < 0:
        raise ValueError("exponent must be >= 0")
    return pow(base, exp, modulus)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a / n) for odd n >= 3."""
    if n < 3 or n % 2 == 0:
        raise ValueError("jacobi symbol needs odd n >= 3")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def quartic_symbol_two(l: int) -> int:
    """The value 2**((l-1)/4) mod l as +-1, for a prime l = 1 (mod 8).

    2 is a quadratic residue mod such l, so the fourth-power test can only
    land on +1 or -1; +1 says 2 is a fourth power mod l.
    """
    if l % 8 != 1:
        raise ValueError("quartic character of 2 needs l = 1 (mod 8)")
    r = pow(2, (l - 1) // 4, l)
    if r == 1:
        return 1
    if r == l - 1:
        return -1
    raise InternalContradiction(f"2 is not a square mod {l}; is {l} prime?")


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """A square root of a modulo an odd prime p, or None for a non-residue."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _brent_rho(n: int) -> int:
    """A nontrivial factor of odd composite n (Brent's cycle variant)."""
    rng = random.Random(n)  # deterministic per input
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
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
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g


def _rho_factor(n: int) -> list[int]:
    if is_prime(n):
        return [n]
    g = _brent_rho(n)
    return _rho_factor(g) + _rho_factor(n // g)


def factor_squarefree(d: int, *, trial_bound: int = TRIAL_DIVISION_BOUND) -> Factorization:
    """Distinct-prime factorization of |d|; rejects square factors.

    Trial division up to trial_bound, then rho for any large cofactor.
    """
    if d == 0:
        raise ValueError("d must be nonzero")
    n = abs(d)
    if n == 1:
        raise Degenerate("|d| = 1 has no prime divisors")
    primes: list[int] = []

    def take(p: int) -> None:
        nonlocal n
        n //= p
        if n % p == 0:
            raise NotSquareFree(d, p)
        primes.append(p)

    if n % 2 == 0:
        take(2)
    f = 3
    while n > 1 and f <= trial_bound and f * f <= n:
        if n % f == 0:
            take(f)
        f += 2
    if n > 1:
        if f * f > n or is_prime(n):
            primes.append(n)
        else:
            rest = sorted(_rho_factor(n))
            for p, nxt in zip(rest, rest[1:] + [0]):
                if p == nxt:
                    raise NotSquareFree(d, p)
            primes.extend(rest)
    return Factorization(d, tuple(sorted(primes)))


def factorization_from_primes(d: int, primes: list[int]) -> Factorization:
    """Build a Factorization from a caller-supplied prime list, fully validated."""
    ps = sorted(int(p) for p in primes)
    if len(set(ps)) != len(ps):
        raise ValueError("repeated prime in supplied factorization")
    for p in ps:
        if p < 2 or not is_prime(p):
            raise ValueError(f"{p} is not prime")
    if math.prod(ps) != abs(d):
        raise ValueError("supplied primes do not multiply to |d|")
    return Factorization(d, tuple(ps))
