"""Generator construction for the genus field of Q(zeta_{2^m}, sqrt(d)).

Each of the 15 classification cases assembles its generator list exactly in
the order of the case's defining products: l primes with their pi elements
grouped per l, then the p primes, q primes, gamma elements and alpha
elements.  Generators are independent of the level m, so construction
happens once at m = 3 and lifts to any higher level by relabeling.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from .arith import Factorization, factor_squarefree, factorization_from_primes
from .classify import BRANCH_CASES, CaseSignature, make_signature
from .config import DEFAULT_CONFIG, SolverConfig
from .errors import Degenerate, InternalContradiction, NotCoveredError
from .represent import Representation, solve_alpha, solve_gamma, solve_pi1, solve_pi2, solve_pi3

KIND_RATIONAL = "RationalPrime"
KIND_GAUSSIAN = "Gaussian"  # A + B*sqrt(-1)
KIND_SQRT2 = "Sqrt2"  # A + B*sqrt(2)
KIND_SQRTM2 = "SqrtMinus2"  # A + B*sqrt(-2)

_RADICAND = {KIND_GAUSSIAN: -1, KIND_SQRT2: 2, KIND_SQRTM2: -2}


@dataclass(frozen=True)
class GeneratorElement:
    """A genus-field generator: a rational prime or A + B*sqrt(D), D in {-1, 2, -2}."""

    kind: str
    coords: tuple[int, ...]

    @classmethod
    def rational(cls, p: int) -> GeneratorElement:
        return cls(KIND_RATIONAL, (p,))

    @classmethod
    def gaussian(cls, a: int, b: int) -> GeneratorElement:
        return cls(KIND_GAUSSIAN, (a, b))

    @classmethod
    def sqrt2(cls, a: int, b: int) -> GeneratorElement:
        return cls(KIND_SQRT2, (a, b))

    @classmethod
    def sqrt_minus2(cls, a: int, b: int) -> GeneratorElement:
        return cls(KIND_SQRTM2, (a, b))

    def norm(self) -> int:
        """Rational norm: A^2+B^2, |A^2-2B^2|, A^2+2B^2, or the prime itself."""
        if self.kind == KIND_RATIONAL:
            return self.coords[0]
        a, b = self.coords
        if self.kind == KIND_GAUSSIAN:
            return a * a + b * b
        if self.kind == KIND_SQRT2:
            return abs(a * a - 2 * b * b)
        return a * a + 2 * b * b

    def display(self) -> str:
        if self.kind == KIND_RATIONAL:
            return str(self.coords[0])
        a, b = self.coords
        return f"{a}{b:+d}*sqrt({_RADICAND[self.kind]})"


_DISPLAY_RE = re.compile(r"^(-?\d+)([+-]\d+)\*sqrt\((-1|2|-2)\)$")


def parse_generator_display(text: str) -> GeneratorElement:
    """Inverse of GeneratorElement.display()."""
    if re.fullmatch(r"\d+", text):
        return GeneratorElement.rational(int(text))
    m = _DISPLAY_RE.match(text)
    if m is None:
        raise ValueError(f"unparseable generator display {text!r}")
    a, b, rad = int(m.group(1)), int(m.group(2)), int(m.group(3))
    kind = {v: k for k, v in _RADICAND.items()}[rad]
    return GeneratorElement(kind, (a, b))


@dataclass(frozen=True)
class GenusField:
    """Base parameters, ordered generators and the expected 2-rank."""

    m: int
    d: int
    signature: CaseSignature
    generators: tuple[GeneratorElement, ...]
    expected_rank: int
    notes: tuple[str, ...]

    @property
    def case_id(self) -> int | None:
        return self.signature.case_id


def expected_rank(sig: CaseSignature) -> int:
    """Closed-form 2-rank for the matched case (equals the generator count)."""
    if sig.case_id is None:
        raise NotCoveredError(sig.r, sig.s, sig.t)
    r, s, t = sig.r, sig.s, sig.t
    case = sig.case_id
    branch_a = sig.sub_branch == "A"
    if case in (1, 2):
        return 2 * sig.n - 2
    if case == 3:
        return 2 * (s + t) - 3
    if case == 4:
        return 4 * r + 2 * s + 2 * t - 3
    if case == 5:
        return 4 * r + 2 * s - (3 if branch_a else 2)
    if case == 6:
        return 4 * r + 2 * t - (3 if branch_a else 2)
    if case == 7:
        return 4 * r - (3 if branch_a else 2)
    if case == 8:
        return 4 * r + 2 * t - 1
    if case == 9:
        return 4 * r + 2 * s - 1
    if case == 10:
        return 4 * r + 1
    if case in (11, 12):
        return 4 * r - (1 if branch_a else 0)
    if case == 13:
        return 1
    if case == 14:
        return 0
    return 2  # case 15


_BRANCH_REASON = {
    (5, "A"): "a quartic sign equals +1",
    (5, "B"): "no quartic sign equals +1",
    (11, "A"): "a quartic sign equals +1",
    (11, "B"): "no quartic sign equals +1",
    (6, "A"): "a quartic sign equals -1",
    (6, "B"): "no quartic sign equals -1",
    (12, "A"): "a quartic sign equals -1",
    (12, "B"): "no quartic sign equals -1",
    (7, "A"): "quartic signs differ",
    (7, "B"): "all quartic signs equal",
}


def build_generators(sig: CaseSignature, f: Factorization, config: SolverConfig = DEFAULT_CONFIG) -> GenusField:
    """Assemble the generator list for the matched case, at level m = 3."""
    if sig.case_id is None:
        raise NotCoveredError(sig.r, sig.s, sig.t)
    case = sig.case_id
    ls, ps, qs = sig.ls, sig.ps, sig.qs
    cutoff = config.exhaustive_cutoff
    notes: list[str] = []
    if f.value < 0:
        notes.append(
            f"d = {f.value} normalized to {f.abs_value}: sqrt(-1) lies in the "
            "base field, so the construction is unchanged"
        )
    if case == 2:
        notes.append("case 2: level bound m >= 3 applied uniformly")
    if case == 4:
        notes.append("case 4: rank 4r+2s+2t-3 equals the constructed generator count")
    if case in BRANCH_CASES:
        notes.append(
            f"case {case}: branch {sig.sub_branch} ({_BRANCH_REASON[(case, sig.sub_branch)]})"
        )

    def normalized_pi(tag: str, l: int, rep: Representation) -> Representation:
        if rep.x < 0:
            notes.append(f"{tag}({l}): leading coefficient sign-flipped to 1 (mod 4)")
        return rep

    def pi1(l: int) -> GeneratorElement:
        rep = normalized_pi("pi1", l, solve_pi1(l, cutoff))
        return GeneratorElement.gaussian(rep.x, 4 * rep.y)

    def pi2(l: int) -> GeneratorElement:
        rep = normalized_pi("pi2", l, solve_pi2(l, config.pell_multiplier))
        return GeneratorElement.sqrt2(rep.x, 4 * rep.y)

    def pi3(l: int) -> GeneratorElement:
        rep = normalized_pi("pi3", l, solve_pi3(l, cutoff))
        return GeneratorElement.sqrt_minus2(rep.x, 2 * rep.y)

    def pi_triple(l: int) -> list[GeneratorElement]:
        return [pi1(l), pi2(l), pi3(l)]

    def ell_block(l: int) -> list[GeneratorElement]:
        return [GeneratorElement.rational(l), *pi_triple(l)]

    def rationals(seq: tuple[int, ...]) -> list[GeneratorElement]:
        return [GeneratorElement.rational(p) for p in seq]

    def gammas() -> list[GeneratorElement]:
        out = []
        for p in ps[1:]:
            rep = solve_gamma(ps[0], p, cutoff)
            out.append(GeneratorElement.gaussian(rep.x, rep.y))
        return out

    def alphas() -> list[GeneratorElement]:
        out = []
        for q in qs[1:]:
            rep = solve_alpha(qs[0], q, cutoff)
            out.append(GeneratorElement.sqrt_minus2(rep.x, rep.y))
        return out

    gens: list[GeneratorElement] = []
    if case == 1:
        gens += rationals(ps[:-1]) + gammas()
    elif case == 2:
        gens += rationals(qs[:-1]) + alphas()
    elif case == 3:
        gens += rationals(ps) + rationals(qs[:-1]) + gammas() + alphas()
    elif case == 4:
        for l in ls:
            gens += ell_block(l)
        gens += rationals(ps) + rationals(qs[:-1]) + gammas() + alphas()
    elif case == 5:
        if sig.sub_branch == "A":
            for l in ls:
                gens += pi_triple(l)
            gens += rationals(ls[:-1])
        else:
            for l in ls:
                gens += ell_block(l)
        gens += rationals(ps[:-1]) + gammas()
    elif case == 6:
        if sig.sub_branch == "A":
            for l in ls:
                gens += pi_triple(l)
            gens += rationals(ls[:-1])
        else:
            for l in ls:
                gens += ell_block(l)
        gens += rationals(qs[:-1]) + alphas()
    elif case == 7:
        if sig.sub_branch == "A":
            gens += rationals(ls)
            for l in ls[:-1]:
                gens += pi_triple(l)
        else:
            for l in ls:
                gens += [GeneratorElement.rational(l), pi1(l)]
            for l in ls[:-1]:
                gens += [pi2(l), pi3(l)]
    elif case == 8:
        for l in ls:
            gens += ell_block(l)
        gens += rationals(qs) + alphas()
    elif case == 9:
        for l in ls:
            gens += ell_block(l)
        gens += rationals(ps) + gammas()
    elif case == 10:
        for l in ls:
            gens += ell_block(l)
        gens += rationals(ps)
    elif case in (11, 12):
        if sig.sub_branch == "A":
            for l in ls:
                gens += pi_triple(l)
            gens += rationals(ls[:-1])
        else:
            for l in ls:
                gens += ell_block(l)
    elif case == 13:
        gens += rationals(ps)
        notes.append(
            f"case 13: sqrt({qs[0]}) generates the same extension "
            f"(squarefree part of {ps[0]}*{qs[0]} is {f.abs_value})"
        )
    elif case == 14:
        pass
    elif case == 15:
        gens += [pi1(ls[0]), pi2(ls[0])]
    else:  # pragma: no cover
        raise InternalContradiction(f"unhandled case {case}")

    rank = expected_rank(sig)
    if len(gens) != rank or len(set(gens)) != len(gens):
        raise InternalContradiction(
            f"built {len(gens)} generators for case {case}, expected rank {rank}"
        )
    _check_norm_support(gens, f)
    return GenusField(
        m=3,
        d=f.value,
        signature=sig,
        generators=tuple(gens),
        expected_rank=rank,
        notes=tuple(notes),
    )


def _check_norm_support(gens: list[GeneratorElement], f: Factorization) -> None:
    """Every generator norm must factor over the primes of d."""
    for g in gens:
        n = g.norm()
        for p in f.primes:
            while n % p == 0:
                n //= p
        if n != 1:
            raise InternalContradiction(
                f"generator {g.display()} has norm {g.norm()} with a prime outside d"
            )


def lift_to_level(g: GenusField, m: int) -> GenusField:
    """Relabel a construction at level m >= 3; the generator list is m-independent."""
    if m < 3:
        raise ValueError("m must be >= 3")
    if m == g.m:
        return g
    return replace(g, m=m)


def field_description(m: int, abs_d: int, gens: tuple[GeneratorElement, ...]) -> str:
    parts = [f"zeta_{2 ** m}", f"sqrt({abs_d})"]
    parts += [f"sqrt({g.display()})" for g in gens]
    return "Q(" + ", ".join(parts) + ")"


def construct(
    d: int,
    m: int = 3,
    primes: list[int] | None = None,
    config: SolverConfig = DEFAULT_CONFIG,
) -> GenusField:
    """End-to-end pipeline: validate, factor, classify, build, lift to m."""
    if m < 3:
        raise ValueError("m must be >= 3")
    if d == 0 or abs(d) == 1:
        raise Degenerate(f"d = {d} is degenerate: no quadratic part")
    if abs(d) == 2:
        raise Degenerate("d = +-2 collapses: sqrt(2) already lies in the base field")
    if primes is not None:
        f = factorization_from_primes(d, primes)
    else:
        f = factor_squarefree(d, trial_bound=config.trial_division_bound)
    sig = make_signature(f)
    gf = build_generators(sig, f, config)
    return lift_to_level(gf, m)
