"""Extremal families of Fano weighted projective spaces built from Sylvester numbers.

Seven parametric families plus a table of sporadic record spaces.  Each
generated instance carries its weights (descending), the closed-form
predicted Fano index or volume where one exists, and per-point subset
certificates extracted from the constructions' defining identities, so the
claimed singularity class can be verified at any dimension without ever
running an O(r) loop.

Writing s_j for Sylvester's sequence 2, 3, 7, 43, ... and using the unit
fraction identity 1/s_0 + ... + 1/s_{m-1} = 1 - 1/(s_m - 1):

* canonical-max-index (n >= 2): h = (s-1)(2s-3) with s = s_{n-1}; weights
  (h/s_0, ..., h/s_{n-2}, s-1, s-2).  Fano index h, canonical.  At every
  point with weight dividing h the other weights sum to a multiple of it;
  at the last point the weights h/s_0, ..., h/s_{n-2} sum to (2s-3)(s-2).
* terminal-max-index (n >= 3): with s = s_{n-1}, weights a_0 = (s-1)/2 - 1,
  a_1 = (s-1)/2, a_i = (s-1)(s-2)/(2 s_{n-i}) for 2 <= i <= n-1, and
  a_n = ((s-1)(s-2)/2 - 1)/2.  Fano index (s-1)^2/2 - 1, terminal.  The
  subset identities: sum(a_{n-1..2}) + a_0 = a_n; dropping a_0 and a_i
  leaves (s_{n-i}-1) a_i; the non-extreme weights sum to (s-3) a_1 =
  (s-1) a_0.
* gorenstein-canonical-max-index (n >= 1): h = s_n - 1; weights
  (h/s_0, ..., h/s_{n-1}, 1).  Fano index h, Gorenstein canonical.
* gorenstein-terminal-max-volume (odd n = 2k+1 >= 5): h = 2(s_k - 1);
  weights h/3, h/4, h/6, then h/s_m and h/(2 s_m) for m = k-1, ..., 2,
  then 1, 1, 1.  Volume 2^(k+1) (s_k - 1)^4, Gorenstein terminal.  The
  certificates use sum over m of h/(2 s_m) = h/12 - 1, so that h/4 plus
  these plus a unit sums to h/3, and so on per point; every subset keeps a
  unit inside (forcing the gcd condition) and a unit outside as witness.
* nill-gorenstein-max-volume (n >= 4): weights (2(s_{n-1}-1)/s_j for
  j <= n-2, 1, 1); volume 2(s_{n-1}-1)^2, Gorenstein canonical.
* kasprzyk-terminal-max-volume (n >= 2): weights ((s_{n-1}-1)/s_j for
  j <= n-2, 1, 1); volume s_{n-1}^n/(s_{n-1}-1)^(n-2), terminal.  At each
  non-unit point the other non-units plus one unit sum to (s_m - 1) r.
* bkn-canonical-max-volume (n >= 4): weights (2(s_n-1)/s_j for
  1 <= j <= n-1, 1, 1) as published.  The published volume claim
  2(s_n-1)^2 disagrees with the exact value (s_n-1)^2/2^n computed from
  these weights (checked here at n = 4, where the tuple is not even
  canonical), so no predicted volume or class is attached and the instance
  carries an explanatory note.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import InvalidInput, Undecided
from .exactarith import check_nat, sylvester
from .report import (
    METHOD_BRUTE,
    METHOD_CERTIFICATE,
    METHOD_UNIT,
    PointReport,
    overall_class,
)
from .singularities import (
    CERT_CANONICAL,
    CERT_TERMINAL,
    DEFAULT_COST_CAP,
    SingularityClass,
    SubsetCertificate,
    check_certificate,
    certificate_class,
    classify_brute,
)
from .wps import Weights, residue_position


class FamilyId(str, Enum):
    CANONICAL_MAX_INDEX = "canonical-max-index"
    TERMINAL_MAX_INDEX = "terminal-max-index"
    GORENSTEIN_CANONICAL_MAX_INDEX = "gorenstein-canonical-max-index"
    GORENSTEIN_TERMINAL_MAX_VOLUME = "gorenstein-terminal-max-volume"
    NILL_GORENSTEIN_MAX_VOLUME = "nill-gorenstein-max-volume"
    KASPRZYK_TERMINAL_MAX_VOLUME = "kasprzyk-terminal-max-volume"
    BKN_CANONICAL_MAX_VOLUME = "bkn-canonical-max-volume"


# id -> (smallest n, parity restriction: None or "odd")
_DOMAINS: dict[FamilyId, tuple[int, str | None]] = {
    FamilyId.CANONICAL_MAX_INDEX: (2, None),
    FamilyId.TERMINAL_MAX_INDEX: (3, None),
    FamilyId.GORENSTEIN_CANONICAL_MAX_INDEX: (1, None),
    FamilyId.GORENSTEIN_TERMINAL_MAX_VOLUME: (5, "odd"),
    FamilyId.NILL_GORENSTEIN_MAX_VOLUME: (4, None),
    FamilyId.KASPRZYK_TERMINAL_MAX_VOLUME: (2, None),
    FamilyId.BKN_CANONICAL_MAX_VOLUME: (4, None),
}


@dataclass(frozen=True, eq=False)
class FamilyInstance:
    """One member of a family: weights, predictions, and point certificates.

    ``claimed_class`` is a lower bound the construction is known to satisfy
    (terminal families claim TERMINAL, canonical ones claim at least
    CANONICAL_NOT_TERMINAL); ``certificates`` map entry index to the subset
    certificate proving that bound at that point.
    """

    family: str
    dim: int
    weights: Weights
    predicted_index: int | None = None
    predicted_volume: Fraction | None = None
    certificates: dict[int, SubsetCertificate] = field(default_factory=dict)
    claimed_class: SingularityClass | None = None
    gorenstein_claim: bool | None = None
    notes: tuple[str, ...] = ()


def family_domain(family: FamilyId) -> tuple[int, str | None]:
    return _DOMAINS[family]


def in_domain(family: FamilyId, n: int) -> bool:
    lo, parity = _DOMAINS[family]
    if n < lo:
        return False
    return parity != "odd" or n % 2 == 1


def _require_domain(family: FamilyId, n: int) -> None:
    check_nat(n, minimum=1, name="dimension")
    if not in_domain(family, n):
        lo, parity = _DOMAINS[family]
        constraint = f"odd n >= {lo}" if parity == "odd" else f"n >= {lo}"
        raise InvalidInput(f"{family.value} requires {constraint}, got n = {n}")


def predicted_fano_index(family: FamilyId, n: int) -> int | None:
    """Closed-form Fano index; None for the volume-record families."""
    _require_domain(family, n)
    if family is FamilyId.CANONICAL_MAX_INDEX:
        s = sylvester(n - 1)
        return (s - 1) * (2 * s - 3)
    if family is FamilyId.TERMINAL_MAX_INDEX:
        s = sylvester(n - 1)
        return (s - 1) ** 2 // 2 - 1
    if family is FamilyId.GORENSTEIN_CANONICAL_MAX_INDEX:
        return sylvester(n) - 1
    return None


def predicted_volume(family: FamilyId, n: int) -> Fraction | None:
    """Closed-form anticanonical volume; None for the index-record families."""
    _require_domain(family, n)
    if family is FamilyId.GORENSTEIN_TERMINAL_MAX_VOLUME:
        k = (n - 1) // 2
        return Fraction(2 ** (k + 1) * (sylvester(k) - 1) ** 4)
    if family is FamilyId.NILL_GORENSTEIN_MAX_VOLUME:
        return Fraction(2 * (sylvester(n - 1) - 1) ** 2)
    if family is FamilyId.KASPRZYK_TERMINAL_MAX_VOLUME:
        s = sylvester(n - 1)
        return Fraction(s**n, (s - 1) ** (n - 2))
    return None


def _certificate_for(
    weights: Weights,
    point: int,
    entry_subset: list[int],
    kind: str,
    witness_entry: int | None = None,
) -> SubsetCertificate:
    """Build a certificate from entry indices, recording the residue multiple."""
    r = weights.entries[point]
    subset = tuple(residue_position(point, q) for q in entry_subset)
    witness = None if witness_entry is None else residue_position(point, witness_entry)
    total = sum(weights.entries[q] % r for q in entry_subset)
    assert total % r == 0, (weights, point, entry_subset)
    return SubsetCertificate(kind=kind, subset=subset, witness=witness, multiple=total // r)


def _all_but(n_entries: int, *skip: int) -> list[int]:
    return [q for q in range(n_entries) if q not in skip]


def _canonical_max_index(n: int) -> FamilyInstance:
    s = sylvester(n - 1)
    h = (s - 1) * (2 * s - 3)
    entries = tuple(h // sylvester(j) for j in range(n - 1)) + (s - 1, s - 2)
    w = Weights(entries)
    N = n
    certs = {}
    for p, a in enumerate(entries):
        if a == 1:
            continue
        if p == N:
            # Last weight does not divide h; the h/s_j block sums to (2s-3)(s-2).
            subset = list(range(N - 1))
        else:
            subset = _all_but(N + 1, p)
        certs[p] = _certificate_for(w, p, subset, CERT_CANONICAL)
    return FamilyInstance(
        family=FamilyId.CANONICAL_MAX_INDEX.value,
        dim=n,
        weights=w,
        predicted_index=h,
        certificates=certs,
        claimed_class=SingularityClass.CANONICAL_NOT_TERMINAL,
    )


def _terminal_max_index(n: int) -> FamilyInstance:
    s = sylvester(n - 1)
    a0 = (s - 1) // 2 - 1
    a1 = (s - 1) // 2
    mids = [(s - 1) * (s - 2) // (2 * sylvester(n - i)) for i in range(2, n)]  # a_2..a_{n-1}
    an = ((s - 1) * (s - 2) // 2 - 1) // 2
    entries = (an, *reversed(mids), a1, a0)
    w = Weights(entries)
    N = n  # positions: 0 = a_n, 1..N-2 = a_{n-1}..a_2, N-1 = a_1, N = a_0
    certs = {
        0: _certificate_for(w, 0, _all_but(N + 1, 0, N - 1), CERT_TERMINAL, N - 1),
        N - 1: _certificate_for(w, N - 1, list(range(N - 1)), CERT_TERMINAL, N),
        N: _certificate_for(w, N, list(range(N - 1)), CERT_TERMINAL, N - 1),
    }
    for p in range(1, N - 1):
        certs[p] = _certificate_for(w, p, _all_but(N + 1, p, N), CERT_TERMINAL, N)
    return FamilyInstance(
        family=FamilyId.TERMINAL_MAX_INDEX.value,
        dim=n,
        weights=w,
        predicted_index=(s - 1) ** 2 // 2 - 1,
        certificates=certs,
        claimed_class=SingularityClass.TERMINAL,
    )


def _gorenstein_canonical_max_index(n: int) -> FamilyInstance:
    h = sylvester(n) - 1
    entries = tuple(h // sylvester(j) for j in range(n)) + (1,)
    w = Weights(entries)
    certs = {
        p: _certificate_for(w, p, _all_but(n + 1, p), CERT_CANONICAL)
        for p, a in enumerate(entries)
        if a >= 2
    }
    return FamilyInstance(
        family=FamilyId.GORENSTEIN_CANONICAL_MAX_INDEX.value,
        dim=n,
        weights=w,
        predicted_index=h,
        certificates=certs,
        claimed_class=SingularityClass.CANONICAL_NOT_TERMINAL,
        gorenstein_claim=True,
    )


def _gorenstein_terminal_max_volume(n: int) -> FamilyInstance:
    k = (n - 1) // 2
    h = 2 * (sylvester(k) - 1)
    by_index = {0: 1, 1: 1, 2: 1, n - 2: h // 6, n - 1: h // 4, n: h // 3}
    for i in range(2, k):
        m = k + 1 - i
        by_index[2 * i - 1] = h // (2 * sylvester(m))
        by_index[2 * i] = h // sylvester(m)
    entries = tuple(by_index[j] for j in range(n, -1, -1))
    w = Weights(entries)
    N = n
    pos = lambda j: N - j  # entry position of a_j
    odd_block = [pos(2 * i - 1) for i in range(2, k)]
    unit_in, witness = pos(1), pos(0)
    certs = {
        pos(n): _certificate_for(w, pos(n), [pos(n - 1), *odd_block, unit_in], CERT_TERMINAL, witness),
        pos(n - 1): _certificate_for(w, pos(n - 1), [pos(n - 2), *odd_block, unit_in], CERT_TERMINAL, witness),
        pos(n - 2): _certificate_for(w, pos(n - 2), [pos(n - 1), *odd_block, unit_in], CERT_TERMINAL, witness),
    }
    for i in range(2, k):
        block = [q for q in odd_block if q != pos(2 * i - 1)]
        subset = [pos(n - 1), pos(n - 2), *block, unit_in]
        for j in (2 * i - 1, 2 * i):
            certs[pos(j)] = _certificate_for(w, pos(j), subset, CERT_TERMINAL, witness)
    return FamilyInstance(
        family=FamilyId.GORENSTEIN_TERMINAL_MAX_VOLUME.value,
        dim=n,
        weights=w,
        predicted_volume=predicted_volume(FamilyId.GORENSTEIN_TERMINAL_MAX_VOLUME, n),
        certificates=certs,
        claimed_class=SingularityClass.TERMINAL,
        gorenstein_claim=True,
    )


def _nill_gorenstein_max_volume(n: int) -> FamilyInstance:
    h = 2 * (sylvester(n - 1) - 1)
    entries = tuple(h // sylvester(j) for j in range(n - 1)) + (1, 1)
    w = Weights(entries)
    certs = {
        p: _certificate_for(w, p, _all_but(n + 1, p), CERT_CANONICAL)
        for p, a in enumerate(entries)
        if a >= 2
    }
    return FamilyInstance(
        family=FamilyId.NILL_GORENSTEIN_MAX_VOLUME.value,
        dim=n,
        weights=w,
        predicted_volume=predicted_volume(FamilyId.NILL_GORENSTEIN_MAX_VOLUME, n),
        certificates=certs,
        claimed_class=SingularityClass.CANONICAL_NOT_TERMINAL,
        gorenstein_claim=True,
    )


def _kasprzyk_terminal_max_volume(n: int) -> FamilyInstance:
    P = sylvester(n - 1) - 1
    entries = tuple(sorted((P // sylvester(j) for j in range(n - 1)), reverse=True)) + (1, 1)
    w = Weights(entries)
    N = n
    certs = {}
    for p, a in enumerate(entries):
        if a == 1:
            continue
        subset = [q for q in range(N - 1) if q != p] + [N - 1]
        certs[p] = _certificate_for(w, p, subset, CERT_TERMINAL, N)
    return FamilyInstance(
        family=FamilyId.KASPRZYK_TERMINAL_MAX_VOLUME.value,
        dim=n,
        weights=w,
        predicted_volume=predicted_volume(FamilyId.KASPRZYK_TERMINAL_MAX_VOLUME, n),
        certificates=certs,
        claimed_class=SingularityClass.TERMINAL,
    )


def _bkn_canonical_max_volume(n: int) -> FamilyInstance:
    h2 = 2 * (sylvester(n) - 1)
    entries = tuple(sorted((h2 // sylvester(j) for j in range(1, n)), reverse=True)) + (1, 1)
    w = Weights(entries)
    computed = w.anticanonical_volume()
    published = 2 * (sylvester(n) - 1) ** 2
    return FamilyInstance(
        family=FamilyId.BKN_CANONICAL_MAX_VOLUME.value,
        dim=n,
        weights=w,
        notes=(
            f"published volume claim {published} disagrees with the exact value "
            f"{computed} computed from the published weights; reporting the "
            "computed value and attaching no class claim",
        ),
    )


_GENERATORS = {
    FamilyId.CANONICAL_MAX_INDEX: _canonical_max_index,
    FamilyId.TERMINAL_MAX_INDEX: _terminal_max_index,
    FamilyId.GORENSTEIN_CANONICAL_MAX_INDEX: _gorenstein_canonical_max_index,
    FamilyId.GORENSTEIN_TERMINAL_MAX_VOLUME: _gorenstein_terminal_max_volume,
    FamilyId.NILL_GORENSTEIN_MAX_VOLUME: _nill_gorenstein_max_volume,
    FamilyId.KASPRZYK_TERMINAL_MAX_VOLUME: _kasprzyk_terminal_max_volume,
    FamilyId.BKN_CANONICAL_MAX_VOLUME: _bkn_canonical_max_volume,
}


def generate(family: FamilyId | str, n: int) -> FamilyInstance:
    """Generate the family member of dimension n; exact in all arithmetic."""
    if not isinstance(family, FamilyId):
        try:
            family = FamilyId(family)
        except ValueError:
            raise InvalidInput(f"unknown family {family!r}") from None
    _require_domain(family, n)
    instance = _GENERATORS[family](n)
    assert instance.weights.is_well_formed()
    assert instance.predicted_index is None or instance.predicted_index == instance.weights.h
    assert (
        instance.predicted_volume is None
        or instance.predicted_volume == instance.weights.anticanonical_volume()
    )
    return instance


def _sporadic(
    name: str,
    entries: tuple[int, ...],
    *,
    index: int | None = None,
    volume: int | None = None,
    claimed: SingularityClass,
    gorenstein: bool | None = None,
) -> FamilyInstance:
    w = Weights(entries)
    return FamilyInstance(
        family=name,
        dim=w.dim,
        weights=w,
        predicted_index=index,
        predicted_volume=None if volume is None else Fraction(volume),
        claimed_class=claimed,
        gorenstein_claim=gorenstein,
    )


def sporadic_table() -> list[FamilyInstance]:
    """Record spaces with no parametric generalization (or none used here)."""
    T = SingularityClass.TERMINAL
    C = SingularityClass.CANONICAL_NOT_TERMINAL
    return [
        _sporadic("P3-index-19", (7, 5, 4, 3), index=19, claimed=T),
        _sporadic("P3-index-17", (7, 5, 3, 2), index=17, claimed=T),
        _sporadic("P3-vol-72-a", (3, 1, 1, 1), volume=72, claimed=C, gorenstein=True),
        _sporadic("P3-vol-72-b", (6, 4, 1, 1), volume=72, claimed=C, gorenstein=True),
        _sporadic("P4-gorterm-vol", (2, 1, 1, 1, 1), volume=648, claimed=T, gorenstein=True),
        _sporadic("P6-gorterm-vol", (8, 6, 4, 3, 1, 1, 1), volume=331776, claimed=T, gorenstein=True),
        _sporadic(
            "P8-gorterm-vol",
            (140, 105, 84, 60, 15, 10, 4, 1, 1),
            volume=21781872000,
            claimed=T,
            gorenstein=True,
        ),
        _sporadic(
            "P10-gorterm-vol",
            (16328, 12246, 8164, 6123, 3768, 1884, 312, 156, 1, 1, 1),
            volume=23029100604532998144,
            claimed=T,
            gorenstein=True,
        ),
    ]


def lookup_sporadic(name: str) -> FamilyInstance:
    for instance in sporadic_table():
        if instance.family == name:
            return instance
    raise InvalidInput(f"unknown sporadic space {name!r}")


VERIFY_AUTO = "auto"
VERIFY_BRUTE = "brute"
VERIFY_CERTIFICATE = "certificate"


@dataclass(frozen=True)
class PointVerdict:
    index: int
    weight: int
    klass: SingularityClass
    method: str
    ok: bool


@dataclass(frozen=True)
class FamilyVerification:
    instance: FamilyInstance
    points: tuple[PointVerdict, ...]
    overall: SingularityClass
    computed_index: int
    computed_volume: Fraction
    gorenstein: bool
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures and all(p.ok for p in self.points)


def verify_instance(
    instance: FamilyInstance,
    mode: str = VERIFY_AUTO,
    cost_cap: int = DEFAULT_COST_CAP,
) -> FamilyVerification:
    """Check an instance against its own predictions and class claim.

    mode "brute" forces the Reid-Tai loop at every point (may exceed the
    cost cap), "certificate" uses only the attached certificates, and
    "auto" takes brute force when the order fits under the cap and the
    certificate otherwise.
    """
    if mode not in (VERIFY_AUTO, VERIFY_BRUTE, VERIFY_CERTIFICATE):
        raise InvalidInput(f"unknown verify mode {mode!r}")
    w = instance.weights
    failures = []
    if not w.is_well_formed():
        raise InvalidInput(f"{w.label} is not well-formed")
    if instance.predicted_index is not None and instance.predicted_index != w.h:
        failures.append(
            f"predicted index {instance.predicted_index} != weight sum {w.h}"
        )
    volume = w.anticanonical_volume()
    if instance.predicted_volume is not None and instance.predicted_volume != volume:
        failures.append(
            f"predicted volume {instance.predicted_volume} != computed {volume}"
        )
    gorenstein = w.is_gorenstein()
    if instance.gorenstein_claim is not None and instance.gorenstein_claim != gorenstein:
        failures.append(f"gorenstein flag is {gorenstein}, claimed {instance.gorenstein_claim}")

    singular = dict(w.coordinate_singularities())
    verdicts = []
    for index, a in enumerate(w.entries):
        if a == 1:
            verdicts.append(PointVerdict(index, a, SingularityClass.SMOOTH, METHOD_UNIT, True))
            continue
        sing = singular[index]
        cert = instance.certificates.get(index)
        use_brute = mode == VERIFY_BRUTE or (mode == VERIFY_AUTO and sing.r <= cost_cap)
        if use_brute:
            klass = classify_brute(sing, cost_cap)  # may raise CostCapExceeded
            method = METHOD_BRUTE
        else:
            if cert is None:
                raise Undecided(index, sing.r)
            if not check_certificate(sing, cert):
                verdicts.append(
                    PointVerdict(index, a, SingularityClass.NON_CANONICAL, METHOD_CERTIFICATE, False)
                )
                failures.append(f"certificate failed at point {index}")
                continue
            klass = certificate_class(cert)
            method = METHOD_CERTIFICATE
        ok = instance.claimed_class is None or klass >= instance.claimed_class
        if not ok:
            failures.append(
                f"point {index} classified {klass.label}, below claimed "
                f"{instance.claimed_class.label}"
            )
        verdicts.append(PointVerdict(index, a, klass, method, ok))

    points = tuple(verdicts)
    return FamilyVerification(
        instance=instance,
        points=points,
        overall=overall_class(
            tuple(PointReport(v.index, v.weight, v.klass, v.method) for v in points)
        ),
        computed_index=w.h,
        computed_volume=volume,
        gorenstein=gorenstein,
        failures=tuple(failures),
    )
