"""Cyclic quotient singularities, the Reid-Tai criterion, and subset certificates.

A cyclic group of order r acting on affine s-space with exponent vector
(b_1, ..., b_s) defines the quotient singularity 1/r(b_1, ..., b_s).  For a
well-formed description, the Reid-Tai criterion classifies it by the minimum
over t = 1, ..., r-1 of

    sum_k (t * b_k mod r)

with each summand reduced into {0, ..., r-1}: the singularity is canonical
iff every such sum is >= r, and terminal iff every sum is > r.

The brute-force loop is O(r * s) and refuses to run past a configurable cost
cap, because the group orders arising from Sylvester-weight constructions are
doubly exponential.  For those, subset certificates prove the inequality
structurally: if some subset I of the exponents sums to a multiple of r and
shares no common factor with r, the Reid-Tai sum restricted to I is already
>= r for every t (canonical); if additionally some exponent outside I is
coprime to r, it contributes >= 1 more, so every sum is > r (terminal).
Certificates are one-directional: a passing check proves a lower bound on
the class, a failing check proves nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .errors import CostCapExceeded, InvalidInput
from .exactarith import check_nat

DEFAULT_COST_CAP = 10**6

# Use vectorized sweeps once the t-loop is long enough to amortize array
# setup, provided products t*b stay comfortably inside int64.
_NUMPY_MIN_R = 1024
_NUMPY_MAX_R = 2**31
_CHUNK = 1 << 20


class SingularityClass(IntEnum):
    """Ordered verdicts: NON_CANONICAL < CANONICAL_NOT_TERMINAL < TERMINAL < SMOOTH."""

    NON_CANONICAL = 0
    CANONICAL_NOT_TERMINAL = 1
    TERMINAL = 2
    SMOOTH = 3

    @property
    def is_canonical(self) -> bool:
        return self >= SingularityClass.CANONICAL_NOT_TERMINAL

    @property
    def is_terminal(self) -> bool:
        return self >= SingularityClass.TERMINAL

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")

    @classmethod
    def from_label(cls, label: str) -> "SingularityClass":
        try:
            return cls[label.upper().replace("-", "_")]
        except KeyError:
            raise InvalidInput(f"unknown singularity class {label!r}") from None


CERT_TERMINAL = "terminal"
CERT_CANONICAL = "canonical"


@dataclass(frozen=True)
class CyclicQuotientSingularity:
    """Quotient singularity 1/r(b_1, ..., b_s), exponents reduced mod r.

    Reduction at construction is harmless: Reid-Tai sums depend only on the
    residues, and gcds against r are preserved.  The order of the residues is
    significant because certificates reference them by position.
    """

    r: int
    residues: tuple[int, ...]

    def __post_init__(self):
        check_nat(self.r, minimum=1, name="r")
        if not self.residues:
            raise InvalidInput("residue list must be nonempty")
        reduced = tuple(check_nat(b, minimum=0, name="residue") % self.r for b in self.residues)
        object.__setattr__(self, "residues", reduced)
        if self.r >= 2 and not any(reduced):
            raise InvalidInput("at least one residue must be nonzero mod r")

    def __str__(self) -> str:
        return f"1/{self.r}({','.join(map(str, self.residues))})"

    def is_well_formed(self) -> bool:
        """gcd(r, all residues but one) = 1 for every omitted position."""
        if self.r == 1:
            return True
        n = len(self.residues)
        prefix = [0] * (n + 1)
        for i, b in enumerate(self.residues):
            prefix[i + 1] = math.gcd(prefix[i], b)
        suffix = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            suffix[i] = math.gcd(suffix[i + 1], self.residues[i])
        return all(
            math.gcd(self.r, math.gcd(prefix[i], suffix[i + 1])) == 1 for i in range(n)
        )

    def require_well_formed(self) -> None:
        if not self.is_well_formed():
            raise InvalidInput(f"singularity {self} is not well-formed")


@dataclass(frozen=True)
class SubsetCertificate:
    """Subset of residue positions whose sum is a multiple of r.

    ``kind`` is "terminal" or "canonical"; terminal certificates must name a
    witness position outside the subset whose residue is coprime to r.
    ``multiple`` optionally records sum(residues over subset) / r.
    Positions index into the residue list of the singularity being certified.
    """

    kind: str
    subset: tuple[int, ...]
    witness: int | None = None
    multiple: int | None = None

    def __post_init__(self):
        if self.kind not in (CERT_TERMINAL, CERT_CANONICAL):
            raise InvalidInput(f"unknown certificate kind {self.kind!r}")
        if not self.subset:
            raise InvalidInput("certificate subset must be nonempty")
        ordered = tuple(sorted(check_nat(i, minimum=0, name="subset index") for i in self.subset))
        if len(set(ordered)) != len(ordered):
            raise InvalidInput("certificate subset has repeated indices")
        object.__setattr__(self, "subset", ordered)
        if self.witness is not None:
            check_nat(self.witness, minimum=0, name="witness")
            if self.witness in ordered:
                raise InvalidInput("witness must lie outside the subset")
        if self.kind == CERT_TERMINAL and self.witness is None:
            raise InvalidInput("terminal certificate requires a witness")

    def to_json_dict(self) -> dict:
        d: dict = {"kind": self.kind, "subset": list(self.subset)}
        if self.witness is not None:
            d["witness"] = self.witness
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "SubsetCertificate":
        try:
            return cls(
                kind=d["kind"],
                subset=tuple(d["subset"]),
                witness=d.get("witness"),
                multiple=d.get("multiple"),
            )
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed certificate object: {d!r}") from exc


def reid_tai_sum(t: int, sing: CyclicQuotientSingularity) -> int:
    """sum_k (t * b_k mod r), each summand reduced into {0, ..., r-1}."""
    if not 1 <= t <= sing.r - 1:
        raise InvalidInput(f"t must lie in [1, {sing.r - 1}], got {t}")
    r = sing.r
    return sum((t * b) % r for b in sing.residues)


def _min_reid_tai_sum(r: int, residues: tuple[int, ...]) -> int:
    """Minimum Reid-Tai sum over t = 1..r-1; early exit once a sum drops below r."""
    nonzero = [b for b in residues if b]
    if r <= _NUMPY_MIN_R or r > _NUMPY_MAX_R:
        current = list(nonzero)
        best = sum(current)
        if best < r:
            return best
        for _ in range(r - 2):
            total = 0
            for i, b in enumerate(nonzero):
                c = current[i] + b
                if c >= r:
                    c -= r
                current[i] = c
                total += c
            if total < best:
                best = total
                if best < r:
                    break
        return best

    base = np.array(nonzero, dtype=np.int64)
    best = None
    for start in range(1, r, _CHUNK):
        ts = np.arange(start, min(start + _CHUNK, r), dtype=np.int64)
        totals = np.zeros(len(ts), dtype=np.int64)
        for b in base:
            totals += (ts * b) % r
        chunk_min = int(totals.min())
        if best is None or chunk_min < best:
            best = chunk_min
            if best < r:
                break
    assert best is not None
    return best


def classify_brute(
    sing: CyclicQuotientSingularity, cost_cap: int = DEFAULT_COST_CAP
) -> SingularityClass:
    """Classify by the full Reid-Tai loop; refuses when r exceeds the cost cap."""
    check_nat(cost_cap, minimum=1, name="cost_cap")
    if sing.r > cost_cap:
        raise CostCapExceeded(sing.r, cost_cap)
    sing.require_well_formed()
    if sing.r == 1:
        return SingularityClass.SMOOTH
    m = _min_reid_tai_sum(sing.r, sing.residues)
    if m > sing.r:
        return SingularityClass.TERMINAL
    if m == sing.r:
        return SingularityClass.CANONICAL_NOT_TERMINAL
    return SingularityClass.NON_CANONICAL


def _subset_residues(sing: CyclicQuotientSingularity, cert: SubsetCertificate) -> list[int]:
    n = len(sing.residues)
    for i in cert.subset:
        if i >= n:
            raise InvalidInput(f"subset index {i} out of range for {n} residues")
    if cert.witness is not None and cert.witness >= n:
        raise InvalidInput(f"witness index {cert.witness} out of range for {n} residues")
    return [sing.residues[i] for i in cert.subset]


def _sum_and_gcd_conditions(sing: CyclicQuotientSingularity, cert: SubsetCertificate) -> bool:
    picked = _subset_residues(sing, cert)
    total = sum(picked)
    if total % sing.r != 0:
        return False
    if cert.multiple is not None and total != cert.multiple * sing.r:
        return False
    return math.gcd(sing.r, *picked) == 1


def check_canonical_certificate(
    sing: CyclicQuotientSingularity, cert: SubsetCertificate
) -> bool:
    """True iff the subset sums to a multiple of r and is jointly coprime to r.

    A passing check proves the singularity is canonical; a failing check
    proves nothing.
    """
    if cert.kind != CERT_CANONICAL:
        raise InvalidInput(f"expected a canonical certificate, got kind {cert.kind!r}")
    return _sum_and_gcd_conditions(sing, cert)


def check_terminal_certificate(
    sing: CyclicQuotientSingularity, cert: SubsetCertificate
) -> bool:
    """Canonical conditions plus a witness outside the subset coprime to r.

    A passing check proves the singularity is terminal; a failing check
    proves nothing.
    """
    if cert.kind != CERT_TERMINAL:
        raise InvalidInput(f"expected a terminal certificate, got kind {cert.kind!r}")
    if cert.witness is None:
        raise InvalidInput("terminal certificate requires a witness")
    if not _sum_and_gcd_conditions(sing, cert):
        return False
    return math.gcd(sing.residues[cert.witness], sing.r) == 1


def check_certificate(sing: CyclicQuotientSingularity, cert: SubsetCertificate) -> bool:
    if cert.kind == CERT_TERMINAL:
        return check_terminal_certificate(sing, cert)
    return check_canonical_certificate(sing, cert)


def certificate_class(cert: SubsetCertificate) -> SingularityClass:
    """Lower bound on the class that a passing certificate establishes."""
    if cert.kind == CERT_TERMINAL:
        return SingularityClass.TERMINAL
    return SingularityClass.CANONICAL_NOT_TERMINAL
