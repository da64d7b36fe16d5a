"""Weighted projective spaces: weights, invariants, and coordinate singularities.

A tuple of positive integers (a_0, ..., a_n) defines the weighted projective
space P^n(a_0, ..., a_n).  The description is well-formed when every n of the
n+1 weights are jointly coprime; all invariants here presume that (the Fano
index of a non-well-formed tuple is refused rather than guessed).

For a well-formed space the anticanonical divisor has degree h = sum of
weights, the Fano index equals h (the class group is infinite cyclic,
generated by the degree-one reflexive sheaf, so the index is the degree of
the anticanonical class), the space is Gorenstein iff every weight divides
h, and the anticanonical volume is h^n / (a_0 * ... * a_n) exactly.

Singularities only occur along coordinate strata, and torus-invariance of
the canonical/terminal locus reduces everything to the coordinate points:
the point with weight a_i carries the cyclic quotient singularity
1/a_i(a_j mod a_i : j != i), smooth when a_i = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInput
from .exactarith import check_nat
from .singularities import CyclicQuotientSingularity


@dataclass(frozen=True, eq=False)
class Weights:
    """Weight tuple of a weighted projective space, length >= 2, entries >= 1.

    Entry order is preserved (certificates and point reports refer to
    positions), but two instances compare equal iff their descending sorts
    agree: they present the same space.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(check_nat(a, minimum=1, name="weight") for a in self.entries)
        if len(entries) < 2:
            raise InvalidInput("need at least two weights (dimension >= 1)")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *entries: int) -> "Weights":
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "Weights":
        """Parse a comma-separated decimal list such as "33,22,6,5"."""
        parts = [p.strip() for p in text.split(",")]
        values = []
        for part in parts:
            if not part or not part.isdigit():
                raise InvalidInput(f"bad weight token {part!r} in {text!r}")
            values.append(int(part))
        return cls(tuple(values))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Weights):
            return NotImplemented
        return sorted(self.entries) == sorted(other.entries)

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.entries)))

    def __str__(self) -> str:
        return self.label

    @property
    def dim(self) -> int:
        return len(self.entries) - 1

    @property
    def h(self) -> int:
        """Degree of the anticanonical divisor: the sum of the weights."""
        return sum(self.entries)

    @property
    def label(self) -> str:
        return f"P^{self.dim}({','.join(map(str, self.entries))})"

    def canonical_form(self) -> "Weights":
        """Entries sorted descending; idempotent."""
        return Weights(tuple(sorted(self.entries, reverse=True)))

    def is_well_formed(self) -> bool:
        """True iff omitting any single entry leaves a coprime tuple."""
        n = len(self.entries)
        prefix = [0] * (n + 1)
        for i, a in enumerate(self.entries):
            prefix[i + 1] = math.gcd(prefix[i], a)
        suffix = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            suffix[i] = math.gcd(suffix[i + 1], self.entries[i])
        return all(math.gcd(prefix[i], suffix[i + 1]) == 1 for i in range(n))

    def require_well_formed(self) -> None:
        if not self.is_well_formed():
            raise InvalidInput(f"{self.label} is not well-formed")

    def fano_index(self) -> int:
        """Fano index of a well-formed space; equals the weight sum."""
        self.require_well_formed()
        return self.h

    def is_gorenstein(self) -> bool:
        """True iff every weight divides the weight sum."""
        h = self.h
        return all(h % a == 0 for a in self.entries)

    def anticanonical_volume(self):
        """Exact volume h^n / (product of weights) as a reduced Fraction."""
        from fractions import Fraction

        return Fraction(self.h ** self.dim, math.prod(self.entries))

    def coordinate_singularities(self) -> list[tuple[int, CyclicQuotientSingularity]]:
        """(entry index, quotient singularity) for every point with weight >= 2.

        Weight-one points are smooth and omitted.  Residues keep entry order
        with the point's own weight skipped, so certificate positions line up.
        """
        self.require_well_formed()
        out = []
        for i, r in enumerate(self.entries):
            if r == 1:
                continue
            residues = tuple(a % r for j, a in enumerate(self.entries) if j != i)
            out.append((i, CyclicQuotientSingularity(r, residues)))
        return out


def residue_position(point_index: int, entry_index: int) -> int:
    """Position of an entry inside the residue list of a coordinate point."""
    if entry_index == point_index:
        raise InvalidInput("the point's own weight has no residue position")
    return entry_index if entry_index < point_index else entry_index - 1
