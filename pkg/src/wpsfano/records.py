"""Golden table of published record values, recomputed exactly on demand.

Each row names a claim about a specific weighted projective space or family
member (a Fano index, an anticanonical volume, a singularity class, or a
Gorenstein flag), the value reported in the classification literature, and
the value this package computes.  Everything is exact integer/rational
arithmetic, so a row passes only on literal equality.

Index records: the dimension-2 canonical bound 6 at P(3,2,1); the
dimension-3 records 66 at P(33,22,6,5) and 3486 at P(1743,1162,498,42,41);
the Q-Fano threefold records 19 at P(7,5,4,3) and 17 at P(7,5,3,2); the
dimension-4 terminal record 881 at P(430,287,123,21,20); and the Gorenstein
canonical family with index s_n - 1.

Volume records: the Gorenstein terminal optima in dimensions 4, 6, 8, 10
and the odd-dimensional family members in dimensions 5, 7, 9; the
dimension-3 volume-72 pair; and the closed-form family volumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput
from .exactarith import check_nat, sylvester
from .families import FamilyId, generate
from .report import classify_wps
from .singularities import DEFAULT_COST_CAP, SingularityClass
from .wps import Weights


@dataclass(frozen=True)
class ReferenceRow:
    claim: str
    dim: int
    expected: str
    computed: str

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


_INDEX_RECORDS = [
    ((3, 2, 1), 6),
    ((33, 22, 6, 5), 66),
    ((1743, 1162, 498, 42, 41), 3486),
    ((7, 5, 3, 2), 17),
    ((430, 287, 123, 21, 20), 881),
    ((7, 5, 4, 3), 19),
]

_VOLUME_RECORDS = [
    ((1, 1, 1), 9),
    ((3, 1, 1, 1), 72),
    ((6, 4, 1, 1), 72),
    ((2, 1, 1, 1, 1), 648),
    ((4, 3, 2, 1, 1, 1), 10368),
    ((8, 6, 4, 3, 1, 1, 1), 331776),
    ((28, 21, 14, 12, 6, 1, 1, 1), 49787136),
    ((140, 105, 84, 60, 15, 10, 4, 1, 1), 21781872000),
    ((1204, 903, 602, 516, 258, 84, 42, 1, 1, 1), 340424620687872),
    ((16328, 12246, 8164, 6123, 3768, 1884, 312, 156, 1, 1, 1), 23029100604532998144),
]

_T = SingularityClass.TERMINAL
_C = SingularityClass.CANONICAL_NOT_TERMINAL

_CLASS_RECORDS = [
    ((33, 22, 6, 5), _C),
    ((7, 5, 3, 2), _T),
    ((430, 287, 123, 21, 20), _T),
    ((3, 1, 1, 1), _C),
    ((6, 4, 1, 1), _C),
    ((2, 1, 1, 1, 1), _T),
    ((4, 3, 2, 1, 1, 1), _T),
    ((8, 6, 4, 3, 1, 1, 1), _T),
    ((28, 21, 14, 12, 6, 1, 1, 1), _T),
    ((140, 105, 84, 60, 15, 10, 4, 1, 1), _T),
    ((1204, 903, 602, 516, 258, 84, 42, 1, 1, 1), _T),
    ((16328, 12246, 8164, 6123, 3768, 1884, 312, 156, 1, 1, 1), _T),
]

_GORENSTEIN_RECORDS = [
    ((3, 1, 1, 1), True),
    ((6, 4, 1, 1), True),
    ((2, 1, 1, 1, 1), True),
    ((4, 3, 2, 1, 1, 1), True),
    ((8, 6, 4, 3, 1, 1, 1), True),
    ((28, 21, 14, 12, 6, 1, 1, 1), True),
    ((140, 105, 84, 60, 15, 10, 4, 1, 1), True),
    ((1204, 903, 602, 516, 258, 84, 42, 1, 1, 1), True),
    ((16328, 12246, 8164, 6123, 3768, 1884, 312, 156, 1, 1, 1), True),
    ((33, 22, 6, 5), False),
    ((7, 5, 3, 2), False),
]


def reference_rows(max_dim: int, cost_cap: int = DEFAULT_COST_CAP) -> list[ReferenceRow]:
    """Recompute every record claim with dimension <= max_dim."""
    check_nat(max_dim, minimum=0, name="max_dim")
    if max_dim < 4:
        raise InvalidInput(f"max_dim must be at least 4, got {max_dim}")
    rows = []

    def add(claim, dim, expected, computed):
        rows.append(ReferenceRow(claim, dim, str(expected), str(computed)))

    for entries, index in _INDEX_RECORDS:
        w = Weights(entries)
        if w.dim <= max_dim:
            add(f"{w.label} Fano index", w.dim, index, w.fano_index())

    for n in range(1, min(max_dim, 10) + 1):
        inst = generate(FamilyId.GORENSTEIN_CANONICAL_MAX_INDEX, n)
        add(
            f"Gorenstein canonical family index at n={n}",
            n,
            sylvester(n) - 1,
            inst.weights.fano_index(),
        )

    for entries, volume in _VOLUME_RECORDS:
        w = Weights(entries)
        if w.dim <= max_dim:
            add(f"{w.label} volume", w.dim, Fraction(volume), w.anticanonical_volume())

    for n in range(5, min(max_dim, 11) + 1, 2):
        inst = generate(FamilyId.GORENSTEIN_TERMINAL_MAX_VOLUME, n)
        add(
            f"Gorenstein terminal family volume at n={n}",
            n,
            inst.predicted_volume,
            inst.weights.anticanonical_volume(),
        )
    for n in range(4, min(max_dim, 10) + 1):
        inst = generate(FamilyId.NILL_GORENSTEIN_MAX_VOLUME, n)
        add(
            f"Gorenstein canonical volume family at n={n}",
            n,
            inst.predicted_volume,
            inst.weights.anticanonical_volume(),
        )
    for n in range(2, min(max_dim, 10) + 1):
        inst = generate(FamilyId.KASPRZYK_TERMINAL_MAX_VOLUME, n)
        add(
            f"terminal volume family at n={n}",
            n,
            inst.predicted_volume,
            inst.weights.anticanonical_volume(),
        )

    for entries, klass in _CLASS_RECORDS:
        w = Weights(entries)
        if w.dim <= max_dim:
            result = classify_wps(w, cost_cap=cost_cap)
            add(f"{w.label} singularity class", w.dim, klass.label, result.overall.label)

    for entries, flag in _GORENSTEIN_RECORDS:
        w = Weights(entries)
        if w.dim <= max_dim:
            add(f"{w.label} Gorenstein", w.dim, flag, w.is_gorenstein())

    return rows
