"""Exception types shared across the package, with their process exit codes."""

from __future__ import annotations


class GenusFieldError(Exception):
    """Base class for all input and construction failures."""

    exit_code = 1


class Degenerate(GenusFieldError):
    """Input d for which the target field collapses (|d| in {0, 1, 2})."""

    exit_code = 4


class NotSquareFree(GenusFieldError):
    """Input d with a repeated prime factor."""

    exit_code = 4

    def __init__(self, d: int, prime: int):
        super().__init__(f"{d} is divisible by {prime}^2")
        self.d = d
        self.prime = prime


class UnsupportedPrime(GenusFieldError):
    """A prime divisor of d outside the residue classes the construction handles."""

    exit_code = 2

    def __init__(self, prime: int):
        super().__init__(
            f"prime {prime} is not 9 (mod 16), 5 (mod 8) or 3 (mod 8)"
        )
        self.prime = prime


class NotCoveredError(GenusFieldError):
    """The (r, s, t) signature matches none of the 15 construction cases."""

    exit_code = 3

    def __init__(self, r: int, s: int, t: int):
        super().__init__(
            f"signature (r={r}, s={s}, t={t}) is outside the 15 supported case "
            "patterns: no case covers (r=0, s=1, t>=2) or (r=0, t=1, s>=2)"
        )
        self.r = r
        self.s = s
        self.t = t


class InternalContradiction(GenusFieldError):
    """A solver failed on input the classification guarantees to be solvable."""

    exit_code = 1
