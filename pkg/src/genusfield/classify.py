"""Prime classification and dispatch onto the 15 construction cases."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import Factorization, quartic_symbol_two
from .errors import UnsupportedPrime


class PrimeClass(Enum):
    L9 = "L9"  # prime = 9 (mod 16)
    P5 = "P5"  # prime = 5 (mod 8)
    Q3 = "Q3"  # prime = 3 (mod 8)
    UNSUPPORTED = "Unsupported"


def classify_prime(p: int) -> PrimeClass:
    """Residue-class label of a prime; 2, 7 (mod 8) and 1 (mod 16) are unsupported."""
    if p % 16 == 9:
        return PrimeClass.L9
    if p % 8 == 5:
        return PrimeClass.P5
    if p % 8 == 3:
        return PrimeClass.Q3
    return PrimeClass.UNSUPPORTED


# Cases whose construction splits on the quartic signs of the l primes.
BRANCH_CASES = frozenset({5, 6, 7, 11, 12})


@dataclass(frozen=True)
class CaseSignature:
    """Counts (r, s, t), the matched case and per-l quartic signs.

    case_id None means no construction case covers the signature.
    """

    r: int
    s: int
    t: int
    case_id: int | None
    sub_branch: str | None
    quartic_signs: tuple[int, ...]
    ls: tuple[int, ...]
    ps: tuple[int, ...]
    qs: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.r + self.s + self.t

    @property
    def covered(self) -> bool:
        return self.case_id is not None


def dispatch_case(r: int, s: int, t: int) -> int | None:
    """Map a signature to its case number 1..15, or None when uncovered.

    Exactly one case fires for every signature with r + s + t >= 1; the two
    uncovered patterns are (r=0, s=1, t>=2) and (r=0, t=1, s>=2).
    """
    if r < 0 or s < 0 or t < 0 or r + s + t == 0:
        raise ValueError("signature counts must be nonnegative with n >= 1")
    if r == 0:
        if s == 0:
            return 14 if t == 1 else 2
        if s == 1:
            if t == 0:
                return 14
            return 13 if t == 1 else None
        # s >= 2
        if t == 0:
            return 1
        return None if t == 1 else 3
    if s == 0 and t == 0:
        return 15 if r == 1 else 7
    if s == 0:
        return 12 if t == 1 else 6
    if t == 0:
        return 11 if s == 1 else 5
    if s == 1 and t == 1:
        return 10
    if s == 1:
        return 8
    if t == 1:
        return 9
    return 4


def _branch(case_id: int, signs: tuple[int, ...]) -> str:
    if case_id in (5, 11):
        return "A" if any(v == 1 for v in signs) else "B"
    if case_id in (6, 12):
        return "A" if any(v == -1 for v in signs) else "B"
    if case_id == 7:
        return "A" if len(set(signs)) > 1 else "B"
    raise ValueError(f"case {case_id} has no sub-branches")


def sub_branch(sig: CaseSignature) -> str:
    """Which bullet of a branching case applies ('A' or 'B')."""
    if sig.case_id not in BRANCH_CASES:
        raise ValueError(f"case {sig.case_id} has no sub-branches")
    return _branch(sig.case_id, sig.quartic_signs)


def make_signature(f: Factorization) -> CaseSignature:
    """Classify every prime of f and resolve the case dispatch."""
    buckets: dict[PrimeClass, list[int]] = {
        PrimeClass.L9: [],
        PrimeClass.P5: [],
        PrimeClass.Q3: [],
    }
    for p in f.primes:
        cls = classify_prime(p)
        if cls is PrimeClass.UNSUPPORTED:
            raise UnsupportedPrime(p)
        buckets[cls].append(p)
    ls = tuple(buckets[PrimeClass.L9])
    ps = tuple(buckets[PrimeClass.P5])
    qs = tuple(buckets[PrimeClass.Q3])
    signs = tuple(quartic_symbol_two(l) for l in ls)
    case = dispatch_case(len(ls), len(ps), len(qs))
    branch = _branch(case, signs) if case in BRANCH_CASES else None
    return CaseSignature(
        r=len(ls),
        s=len(ps),
        t=len(qs),
        case_id=case,
        sub_branch=branch,
        quartic_signs=signs,
        ls=ls,
        ps=ps,
        qs=qs,
    )
