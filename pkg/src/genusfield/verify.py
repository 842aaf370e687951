"""Independent checks of a constructed genus field.

Unramifiedness is checked generator by generator: the norm's prime support
must divide d (so the generated ideal is an ideal square), and the element
must be congruent to a square modulo 4, tested exactly in the 256-element
ring Z[zeta_8]/(4).  Multiplicative independence modulo squares is checked
over GF(2) on norm-content parity vectors, with an exhaustive subset oracle
as the second route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

from .arith import Factorization
from .genus import KIND_GAUSSIAN, KIND_RATIONAL, KIND_SQRT2, GeneratorElement, GenusField

Elem = tuple[int, int, int, int]


def ring_mul(u: Elem, v: Elem) -> Elem:
    """Multiply in Z[zeta_8]/(4) over the basis {1, z, z^2, z^3}; z^4 = -1."""
    out = [0, 0, 0, 0]
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            k = i + j
            if k < 4:
                out[k] += a * b
            else:
                out[k - 4] -= a * b
    return (out[0] % 4, out[1] % 4, out[2] % 4, out[3] % 4)


@cache
def ring_square_set() -> frozenset[Elem]:
    """Squares of all 256 elements of Z[zeta_8]/(4)."""
    elems = [
        (a, b, c, d)
        for a in range(4)
        for b in range(4)
        for c in range(4)
        for d in range(4)
    ]
    return frozenset(ring_mul(e, e) for e in elems)


def embed_mod4(g: GeneratorElement) -> Elem:
    """Image in Z[zeta_8]/(4): sqrt(-1) -> z^2, sqrt(2) -> z - z^3, sqrt(-2) -> z + z^3."""
    if g.kind == KIND_RATIONAL:
        return (g.coords[0] % 4, 0, 0, 0)
    a, b = g.coords
    if g.kind == KIND_GAUSSIAN:
        return (a % 4, 0, b % 4, 0)
    if g.kind == KIND_SQRT2:
        return (a % 4, b % 4, 0, -b % 4)
    return (a % 4, b % 4, 0, b % 4)


def norm_to_q(g: GeneratorElement) -> int:
    """Rational norm of a generator (the prime itself for rational generators)."""
    return g.norm()


def check_ideal_square(g: GeneratorElement, f: Factorization) -> bool:
    """True iff every prime dividing the norm divides |d|.

    Each such prime ramifies in the quadratic step of the tower, so the
    ideal generated by g is the square of a fractional ideal there.
    """
    n = g.norm()
    for p in f.primes:
        while n % p == 0:
            n //= p
    return n == 1


def is_square_mod4(g: GeneratorElement) -> bool:
    """Membership of g's image in the square set of Z[zeta_8]/(4)."""
    if g.norm() % 2 == 0:
        raise ValueError("mod-4 square test needs an element coprime to 2")
    return embed_mod4(g) in ring_square_set()


def _parity_bits(n: int, primes: tuple[int, ...]) -> int | None:
    """Bitmask of odd valuations of n over primes; None if a foreign prime remains."""
    bits = 0
    for i, p in enumerate(primes):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            bits |= 1 << i
    root = math.isqrt(n)
    if root * root != n:
        return None
    return bits


def _gf2_rank(rows: list[int]) -> int:
    rank = 0
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
            rank += 1
    return rank


def _norm_block(g: GeneratorElement) -> int:
    # block index per kind: 0 Gaussian, 1 Sqrt2, 2 SqrtMinus2
    return {KIND_GAUSSIAN: 0, KIND_SQRT2: 1}.get(g.kind, 2)


def independence_gf2(gens: list[GeneratorElement], f: Factorization) -> bool:
    """GF(2) independence of norm-content parity vectors.

    Row layout: one block of coordinates per quadratic subfield norm
    direction, plus a fourth block recording rational-prime content.  A
    rational prime keeps its support in all four blocks; a quadratic-ring
    element carries its norm support in its own norm block only.  The
    rational block separates rational primes from ring elements of equal
    norm content (the executable form of the beta-versus-d*beta split: a
    subset product can only collapse to a square when its rational
    sub-product is itself trivial modulo squares).  Full rank certifies
    that no subset product collapses.
    """
    k = len(f.primes)
    rows = []
    for g in gens:
        v = _parity_bits(g.norm(), f.primes)
        if v is None:
            return False
        if g.kind == KIND_RATIONAL:
            row = v | (v << k) | (v << (2 * k)) | (v << (3 * k))
        else:
            row = v << (_norm_block(g) * k)
        rows.append(row)
    return _gf2_rank(rows) == len(rows)


def brute_force_subset_oracle(gens: list[GeneratorElement], f: Factorization) -> bool:
    """Exhaustive counterpart of independence_gf2 via integer arithmetic.

    For every nonempty subset, multiply the norm contents falling into each
    of the three subfield directions, and separately the rational primes of
    the subset, then reduce all four products to square-free parts over the
    primes of d.  A subset is cleared when some product carries nontrivial
    content.  Conjunction over all subsets.
    """
    if len(gens) > 12:
        raise ValueError("refusing subset enumeration beyond 12 generators")
    contents = []
    for g in gens:
        n = g.norm()
        if _parity_bits(n, f.primes) is None:
            return False
        if g.kind == KIND_RATIONAL:
            contents.append((n, n, n, n))
        else:
            block = _norm_block(g)
            vals = [1, 1, 1]
            vals[block] = n
            contents.append((*vals, 1))
    for mask in range(1, 1 << len(gens)):
        prods = [1, 1, 1, 1]
        for i, cs in enumerate(contents):
            if mask >> i & 1:
                for j in range(4):
                    prods[j] *= cs[j]
        if all(_squarefree_over(p, f.primes) == 1 for p in prods):
            return False
    return True


def _squarefree_over(n: int, primes: tuple[int, ...]) -> int:
    """Square-free part of n over primes; the cofactor is a square by precondition."""
    out = 1
    for p in primes:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
    return out


@dataclass(frozen=True)
class GeneratorCheck:
    display: str
    norm_ok: bool
    ideal_square_ok: bool
    square_mod4_ok: bool

    @property
    def ok(self) -> bool:
        return self.norm_ok and self.ideal_square_ok and self.square_mod4_ok


@dataclass(frozen=True)
class VerificationReport:
    """Per-generator checks plus independence and the count-equals-rank law."""

    generator_checks: tuple[GeneratorCheck, ...]
    independence_ok: bool
    count_matches_rank: bool

    @property
    def overall(self) -> bool:
        return (
            all(c.ok for c in self.generator_checks)
            and self.independence_ok
            and self.count_matches_rank
        )


def full_report(gf: GenusField, f: Factorization) -> VerificationReport:
    """Run every check on every generator and aggregate."""
    checks = []
    for g in gf.generators:
        norm = g.norm()
        stripped = norm
        for p in f.primes:
            while stripped % p == 0:
                stripped //= p
        norm_ok = norm >= 1 and stripped == 1
        try:
            sq4 = is_square_mod4(g)
        except ValueError:
            sq4 = False
        checks.append(
            GeneratorCheck(
                display=g.display(),
                norm_ok=norm_ok,
                ideal_square_ok=check_ideal_square(g, f),
                square_mod4_ok=sq4,
            )
        )
    return VerificationReport(
        generator_checks=tuple(checks),
        independence_ok=independence_gf2(list(gf.generators), f),
        count_matches_rank=len(gf.generators) == gf.expected_rank,
    )
