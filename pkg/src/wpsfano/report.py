"""Whole-space classification: per-point verdicts and the full analysis record.

Points are decided by the brute-force Reid-Tai loop whenever the group order
fits under the cost cap, and by supplied subset certificates otherwise.
Certificates only establish lower bounds, so a certificate-decided point is
tagged with method "certificate" and its class reads "at least this".  The
overall class of the space is the minimum over coordinate points (smooth
when there are no singular points).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import CertificateRejected, Undecided
from .singularities import (
    DEFAULT_COST_CAP,
    SingularityClass,
    SubsetCertificate,
    certificate_class,
    check_certificate,
    classify_brute,
)
from .wps import Weights

METHOD_BRUTE = "brute"
METHOD_CERTIFICATE = "certificate"
METHOD_UNIT = "unit-weight"


@dataclass(frozen=True)
class PointReport:
    """Verdict for one coordinate point of a weighted projective space."""

    index: int
    weight: int
    klass: SingularityClass
    method: str


@dataclass(frozen=True)
class ClassificationResult:
    points: tuple[PointReport, ...]
    overall: SingularityClass


@dataclass(frozen=True)
class WpsReport:
    """Full exact analysis of a well-formed weighted projective space."""

    weights: Weights
    well_formed: bool
    h: int
    fano_index: int
    gorenstein: bool
    volume: Fraction
    point_reports: tuple[PointReport, ...]
    overall_class: SingularityClass


def overall_class(points: tuple[PointReport, ...]) -> SingularityClass:
    return min((p.klass for p in points), default=SingularityClass.SMOOTH)


def classify_wps(
    weights: Weights,
    certificates: Mapping[int, SubsetCertificate] | None = None,
    cost_cap: int = DEFAULT_COST_CAP,
) -> ClassificationResult:
    """Classify every coordinate point; certificates keyed by entry index.

    Raises Undecided when a point exceeds the cost cap and has no
    certificate, and CertificateRejected when a supplied certificate fails
    its checks at a point that needs it.
    """
    weights.require_well_formed()
    certificates = certificates or {}
    singular = dict(weights.coordinate_singularities())
    points = []
    for index, a in enumerate(weights.entries):
        if a == 1:
            points.append(PointReport(index, a, SingularityClass.SMOOTH, METHOD_UNIT))
            continue
        sing = singular[index]
        if sing.r <= cost_cap:
            klass = classify_brute(sing, cost_cap)
            points.append(PointReport(index, a, klass, METHOD_BRUTE))
            continue
        cert = certificates.get(index)
        if cert is None:
            raise Undecided(index, sing.r)
        if not check_certificate(sing, cert):
            raise CertificateRejected(index, f"checks failed at {sing}")
        points.append(
            PointReport(index, a, certificate_class(cert), METHOD_CERTIFICATE)
        )
    pts = tuple(points)
    return ClassificationResult(pts, overall_class(pts))


def analyze(
    weights: Weights,
    certificates: Mapping[int, SubsetCertificate] | None = None,
    cost_cap: int = DEFAULT_COST_CAP,
) -> WpsReport:
    """Assemble the full report for a well-formed space."""
    weights.require_well_formed()
    result = classify_wps(weights, certificates, cost_cap)
    return WpsReport(
        weights=weights,
        well_formed=True,
        h=weights.h,
        fano_index=weights.fano_index(),
        gorenstein=weights.is_gorenstein(),
        volume=weights.anticanonical_volume(),
        point_reports=result.points,
        overall_class=result.overall,
    )
