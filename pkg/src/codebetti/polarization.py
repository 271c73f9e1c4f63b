"""Squarefree monomials in paired x/y variables and polarized neural ideals.

Polarization sends the pseudo-monomial factor (1-x_j) to y_j, turning the
vanishing ideal of a code into a squarefree monomial ideal of the ring on
2n variables, where it is graded and its Betti numbers make sense.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .codes import indices_of, mask_of
from .pseudomonomials import PseudoMonomial


class IdealParseError(ValueError):
    """Raised for malformed monomial-list files."""


@dataclass(frozen=True)
class SquarefreeMonomial:
    """prod x_i (i in xsupp) * prod y_j (j in ysupp); multidegree (|xsupp|, |ysupp|)."""

    xsupp: int
    ysupp: int

    def __post_init__(self):
        if self.xsupp < 0 or self.ysupp < 0:
            raise ValueError("negative support mask")

    @property
    def multidegree(self) -> tuple[int, int]:
        return (self.xsupp.bit_count(), self.ysupp.bit_count())

    @property
    def degree(self) -> int:
        return self.xsupp.bit_count() + self.ysupp.bit_count()

    def sort_key(self):
        return (self.degree, self.xsupp, self.ysupp)

    def divides(self, other: "SquarefreeMonomial") -> bool:
        return self.xsupp & ~other.xsupp == 0 and self.ysupp & ~other.ysupp == 0

    def support_mask(self, n: int) -> int:
        """Combined mask in the 2n-variable bit space (x_i -> bit i-1, y_i -> bit n+i-1)."""
        return self.xsupp | (self.ysupp << n)

    def render(self) -> str:
        parts = [f"x{i}" for i in indices_of(self.xsupp)]
        parts += [f"y{i}" for i in indices_of(self.ysupp)]
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.render()


def polarize(f: PseudoMonomial) -> SquarefreeMonomial:
    """Replace each (1-x_j) factor by y_j."""
    return SquarefreeMonomial(f.sigma, f.tau)


def depolarize(m: SquarefreeMonomial) -> PseudoMonomial:
    """Inverse substitution y_j -> (1-x_j); defined only for disjoint supports."""
    if m.xsupp & m.ysupp:
        raise ValueError(f"{m.render()} depolarizes to a multiple of x_i*(1-x_i)")
    return PseudoMonomial(m.xsupp, m.ysupp)


def minimalize(monomials) -> list[SquarefreeMonomial]:
    """Drop duplicates and every monomial divisible by another one."""
    uniq = sorted(set(monomials), key=SquarefreeMonomial.sort_key)
    out: list[SquarefreeMonomial] = []
    for m in uniq:
        if not any(o.divides(m) for o in out):
            out.append(m)
    return out


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Squarefree monomial ideal in F2[x1..xn, y1..yn] given by minimal generators."""

    n: int
    gens: tuple[SquarefreeMonomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(sorted(self.gens, key=SquarefreeMonomial.sort_key)))
        width = (1 << self.n) - 1
        for g in self.gens:
            if g.xsupp & ~width or g.ysupp & ~width:
                raise ValueError(f"generator {g.render()} uses variables beyond n={self.n}")
            if g.xsupp == 0 and g.ysupp == 0:
                raise ValueError("the unit ideal is not representable")
            if g.xsupp & g.ysupp:
                raise ValueError(f"generator {g.render()} is divisible by some x_i*y_i")
        for a in self.gens:
            for b in self.gens:
                if a is not b and a.divides(b):
                    raise ValueError(f"{a.render()} divides {b.render()}: generators are not minimal")

    @classmethod
    def from_monomials(cls, n: int, monomials, reduce: bool = False) -> "SquarefreeIdeal":
        gens = list(monomials)
        if reduce:
            gens = minimalize(gens)
        return cls(n, tuple(gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def render(self) -> str:
        return ", ".join(g.render() for g in self.gens) if self.gens else "0"


def polarized_ideal(cf, n: int) -> SquarefreeIdeal:
    """Polarize each canonical-form element; the images stay a minimal generating set."""
    return SquarefreeIdeal(n, tuple(polarize(f) for f in cf))


@dataclass(frozen=True)
class PiercingStep:
    """One constructive step: the neuron pierces the interval [sigma, tau] of the prior code."""

    neuron: int
    sigma: int
    tau: int

    def __post_init__(self):
        if self.neuron < 1:
            raise ValueError("neuron index must be positive")
        if self.sigma & ~self.tau:
            raise ValueError("sigma must be contained in tau")
        if self.tau >> (self.neuron - 1) & 1:
            raise ValueError("the pierced interval cannot involve the new neuron")

    @property
    def k(self) -> int:
        """Rank of the pierced interval."""
        return (self.tau & ~self.sigma).bit_count()

    @property
    def ell(self) -> int:
        """Number of fields the new field sits inside."""
        return self.sigma.bit_count()

    def render(self) -> str:
        sig = "{" + ",".join(str(i) for i in indices_of(self.sigma)) + "}"
        tau = "{" + ",".join(str(i) for i in indices_of(self.tau)) + "}"
        return f"step {self.neuron}: sigma={sig} tau={tau} k={self.k} l={self.ell}"

    def __str__(self) -> str:
        return self.render()


def piercing_variables(step: PiercingStep, existing) -> tuple[SquarefreeMonomial, ...]:
    """Variables x_i for existing fields disjoint from the new one, plus y_j for j in sigma.

    `existing` is the set (mask or iterable of 1-based indices) of neurons
    present before the step; there are (|existing| - k - l) x's and l y's.
    """
    exist_mask = existing if isinstance(existing, int) else mask_of(existing)
    if step.tau & ~exist_mask:
        raise ValueError(f"{step.render()}: pierces neurons that are not present yet")
    if exist_mask >> (step.neuron - 1) & 1:
        raise ValueError(f"neuron {step.neuron} is already present")
    out = [SquarefreeMonomial(1 << (i - 1), 0) for i in indices_of(exist_mask & ~step.tau)]
    out += [SquarefreeMonomial(0, 1 << (j - 1)) for j in indices_of(step.sigma)]
    return tuple(out)


def piercing_ideal(step: PiercingStep, n: int) -> tuple[SquarefreeMonomial, ...]:
    """Piercing variables in the normalized setting: the new neuron is n, 1..n-1 exist."""
    if step.neuron != n:
        raise ValueError("normalized form expects the newest neuron to be n")
    return piercing_variables(step, (1 << (n - 1)) - 1)


def extend_ideal(J_prev: SquarefreeIdeal, step: PiercingStep, existing=None) -> SquarefreeIdeal:
    """Adjoin x_new * v for each piercing variable v.

    For a genuinely new piercing step the union needs no antichain
    reduction; if it would, the step is inconsistent and we raise.
    """
    if existing is None:
        existing = (1 << (step.neuron - 1)) - 1
    exist_mask = existing if isinstance(existing, int) else mask_of(existing)
    for g in J_prev.gens:
        if (g.xsupp | g.ysupp) & ~exist_mask:
            raise ValueError("previous ideal uses neurons outside the existing set")
    new_bit = 1 << (step.neuron - 1)
    new = [SquarefreeMonomial(v.xsupp | new_bit, v.ysupp) for v in piercing_variables(step, exist_mask)]
    try:
        return SquarefreeIdeal(max(J_prev.n, step.neuron), J_prev.gens + tuple(new))
    except ValueError as exc:
        raise ValueError(f"inconsistent piercing step: {exc}") from exc


def ideal_from_steps(steps, n: int | None = None) -> SquarefreeIdeal:
    """Fold extend_ideal over a construction sequence, tracking which neurons exist."""
    steps = tuple(steps)
    if n is None:
        n = max((s.neuron for s in steps), default=0)
    ideal = SquarefreeIdeal(n, ())
    existing = 0
    for step in steps:
        ideal = extend_ideal(ideal, step, existing)
        existing |= 1 << (step.neuron - 1)
    return ideal


def render_ideal(ideal: SquarefreeIdeal) -> str:
    return ideal.render()


_FACTOR_RE = re.compile(r"^([xy])([0-9]+)$")


def parse_ideal(text: str) -> SquarefreeIdeal:
    """Read a monomial-list file: one monomial per line, factors like "x3*y5".

    Accepts any squarefree ideal, not only polarized neural ones; redundant
    generators are reduced away.  An optional "n=<int>" header fixes the
    variable-pair count, otherwise the maximum index seen is used.
    """
    declared = None
    gens: list[SquarefreeMonomial] = []
    top = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("n="):
            if gens or declared is not None:
                raise IdealParseError(f"line {lineno}: n= header must come first")
            try:
                declared = int(line[2:])
            except ValueError:
                raise IdealParseError(f"line {lineno}: bad header {line!r}") from None
            continue
        if line == "0":
            continue
        xm = ym = 0
        for factor in line.split("*"):
            m = _FACTOR_RE.match(factor.strip())
            if m is None:
                raise IdealParseError(f"line {lineno}: bad factor {factor.strip()!r}")
            idx = int(m.group(2))
            if idx <= 0:
                raise IdealParseError(f"line {lineno}: variable indices are positive")
            if m.group(1) == "x":
                xm |= 1 << (idx - 1)
            else:
                ym |= 1 << (idx - 1)
            top = max(top, idx)
        gens.append(SquarefreeMonomial(xm, ym))
    n = top if declared is None else declared
    if top > n:
        raise IdealParseError(f"variable index {top} exceeds declared n={n}")
    try:
        return SquarefreeIdeal.from_monomials(n, gens, reduce=True)
    except ValueError as exc:
        raise IdealParseError(str(exc)) from exc
