"""Pseudo-monomials and the minimal generating set of a code's vanishing ideal."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .codes import NeuralCode, indices_of


@dataclass(frozen=True)
class PseudoMonomial:
    """Product of x_i over sigma and (1-x_j) over tau, with disjoint supports."""

    sigma: int
    tau: int

    def __post_init__(self):
        if self.sigma < 0 or self.tau < 0:
            raise ValueError("negative support mask")
        if self.sigma & self.tau:
            raise ValueError("sigma and tau must be disjoint")

    @property
    def degree(self) -> int:
        return self.sigma.bit_count() + self.tau.bit_count()

    def sort_key(self):
        return (self.degree, self.sigma, self.tau)

    def divides(self, other: "PseudoMonomial") -> bool:
        return self.sigma & ~other.sigma == 0 and self.tau & ~other.tau == 0

    def vanishes_on(self, word: int) -> bool:
        """False exactly when every sigma-neuron fires in the word and no tau-neuron does."""
        return not (self.sigma & ~word == 0 and self.tau & word == 0)

    def vanishes_on_code(self, code: NeuralCode) -> bool:
        return all(self.vanishes_on(w) for w in code.words)

    def render(self) -> str:
        parts = [f"x{i}" for i in indices_of(self.sigma)]
        parts += [f"(1-x{i})" for i in indices_of(self.tau)]
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.render()


def canonical_form(code: NeuralCode) -> tuple[PseudoMonomial, ...]:
    """Divisibility-minimal pseudo-monomials vanishing on every codeword.

    Sweeps the disjoint (sigma, tau) pairs in increasing total degree, so a
    vanishing pair is minimal exactly when no already-kept pair divides it.
    Output is sorted by (degree, sigma, tau) for reproducible listings.
    """
    n = code.n
    words = sorted(code.words)
    found: list[PseudoMonomial] = []
    for deg in range(1, n + 1):
        for support_bits in combinations(range(n), deg):
            supp = 0
            for b in support_bits:
                supp |= 1 << b
            sub = supp
            while True:
                sigma = sub
                tau = supp & ~sub
                if not any(f.sigma & ~sigma == 0 and f.tau & ~tau == 0 for f in found):
                    if all((sigma & ~w) or (tau & w) for w in words):
                        found.append(PseudoMonomial(sigma, tau))
                if sub == 0:
                    break
                sub = (sub - 1) & supp
    found.sort(key=PseudoMonomial.sort_key)
    return tuple(found)
