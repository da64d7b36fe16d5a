"""Request/response models for the HTTP API.

All integers that can grow with the weights (weights themselves, degrees,
indices, volumes, group orders) travel as decimal strings: family values
overflow both int64 and float64 long before n reaches 12.  Small structural
integers (dimensions, positions, counts) stay native.
"""

from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from ..families import FamilyInstance, FamilyVerification
from ..records import ReferenceRow
from ..report import WpsReport
from ..search import SearchRecord, SearchRow
from ..singularities import SingularityClass, SubsetCertificate


class RationalModel(BaseModel):
    num: str
    den: str

    @classmethod
    def from_fraction(cls, value: Fraction) -> "RationalModel":
        return cls(num=str(value.numerator), den=str(value.denominator))

    def to_fraction(self) -> Fraction:
        return Fraction(int(self.num), int(self.den))


class AnalyzeRequest(BaseModel):
    weights: str = Field(description="comma-separated positive decimal weights")
    cost_cap: int | None = None


class PointModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    index: int
    weight: str
    klass: str = Field(alias="class")
    method: str


class AnalyzeResponse(BaseModel):
    well_formed: bool
    weights: list[str]
    label: str
    dim: int
    h: str | None = None
    fano_index: str | None = None
    gorenstein: bool | None = None
    volume: RationalModel | None = None
    points: list[PointModel] | None = None
    overall_class: str | None = None


def analyze_response(report: WpsReport) -> AnalyzeResponse:
    return AnalyzeResponse(
        well_formed=True,
        weights=[str(a) for a in report.weights.entries],
        label=report.weights.label,
        dim=report.weights.dim,
        h=str(report.h),
        fano_index=str(report.fano_index),
        gorenstein=report.gorenstein,
        volume=RationalModel.from_fraction(report.volume),
        points=[
            PointModel(index=p.index, weight=str(p.weight), klass=p.klass.label, method=p.method)
            for p in report.point_reports
        ],
        overall_class=report.overall_class.label,
    )


class CertificateModel(BaseModel):
    kind: str
    subset: list[int]
    witness: int | None = None

    @classmethod
    def from_certificate(cls, cert: SubsetCertificate) -> "CertificateModel":
        return cls(kind=cert.kind, subset=list(cert.subset), witness=cert.witness)


class FamilyRequest(BaseModel):
    name: str
    dim: int | None = None
    verify: str = "auto"
    cost_cap: int | None = None


class FamilyPointModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    index: int
    weight: str
    klass: str = Field(alias="class")
    method: str
    ok: bool


class FamilyResponse(BaseModel):
    family: str
    dim: int
    weights: list[str]
    label: str
    predicted_index: str | None = None
    predicted_volume: RationalModel | None = None
    certificates: dict[str, CertificateModel]
    computed_index: str
    computed_volume: RationalModel
    gorenstein: bool
    overall_class: str
    points: list[FamilyPointModel]
    ok: bool
    failures: list[str]
    notes: list[str]


def family_response(
    instance: FamilyInstance, verification: FamilyVerification
) -> FamilyResponse:
    return FamilyResponse(
        family=instance.family,
        dim=instance.dim,
        weights=[str(a) for a in instance.weights.entries],
        label=instance.weights.label,
        predicted_index=(
            None if instance.predicted_index is None else str(instance.predicted_index)
        ),
        predicted_volume=(
            None
            if instance.predicted_volume is None
            else RationalModel.from_fraction(instance.predicted_volume)
        ),
        certificates={
            str(i): CertificateModel.from_certificate(c)
            for i, c in sorted(instance.certificates.items())
        },
        computed_index=str(verification.computed_index),
        computed_volume=RationalModel.from_fraction(verification.computed_volume),
        gorenstein=verification.gorenstein,
        overall_class=verification.overall.label,
        points=[
            FamilyPointModel(
                index=v.index,
                weight=str(v.weight),
                klass=v.klass.label,
                method=v.method,
                ok=v.ok,
            )
            for v in verification.points
        ],
        ok=verification.ok,
        failures=list(verification.failures),
        notes=list(instance.notes),
    )


class SearchRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    dim: int
    class_filter: str = Field(alias="class")
    objective: str
    sum_max: int
    cost_cap: int | None = None
    workers: int = 1
    include_rows: bool = False


class SearchRowModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    weights: list[str]
    h: str
    klass: str = Field(alias="class")
    gorenstein: bool
    fano_index: str
    volume: RationalModel

    @classmethod
    def from_row(cls, row: SearchRow) -> "SearchRowModel":
        return cls(
            weights=[str(a) for a in row.weights],
            h=str(row.h),
            klass=row.klass.label,
            gorenstein=row.gorenstein,
            fano_index=str(row.h),
            volume=RationalModel.from_fraction(row.volume),
        )

    def to_row(self) -> SearchRow:
        return SearchRow(
            weights=tuple(int(a) for a in self.weights),
            h=int(self.h),
            klass=SingularityClass.from_label(self.klass),
            gorenstein=self.gorenstein,
            volume=self.volume.to_fraction(),
        )


class SearchResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    dim: int
    class_filter: str = Field(alias="class")
    objective: str
    sum_max: int
    cost_cap: int
    workers: int
    best_index: str | None = None
    best_volume: RationalModel | None = None
    achievers: list[list[str]]
    tuples_enumerated: int
    tuples_classified: int
    note: str
    rows: list[SearchRowModel] | None = None


def search_response(
    record: SearchRecord, rows: list[SearchRow] | None, note: str
) -> SearchResponse:
    config = record.config
    by_index = config.objective == "fano-index"
    return SearchResponse(
        dim=config.dim,
        class_filter=config.class_filter,
        objective=config.objective,
        sum_max=config.sum_max,
        cost_cap=config.cost_cap,
        workers=config.worker_count,
        best_index=str(record.best_value) if by_index else None,
        best_volume=None if by_index else RationalModel.from_fraction(record.best_value),
        achievers=[[str(a) for a in t] for t in record.achievers],
        tuples_enumerated=record.tuples_enumerated,
        tuples_classified=record.tuples_classified,
        note=note,
        rows=None if rows is None else [SearchRowModel.from_row(r) for r in rows],
    )


class VerifyPaperRequest(BaseModel):
    max_dim: int = 10
    cost_cap: int | None = None


class VerifyRowModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    claim: str
    dim: int
    expected: str
    computed: str
    passed: bool = Field(alias="pass")

    @classmethod
    def from_row(cls, row: ReferenceRow) -> "VerifyRowModel":
        return cls(
            claim=row.claim,
            dim=row.dim,
            expected=row.expected,
            computed=row.computed,
            passed=row.passed,
        )


class VerifyPaperResponse(BaseModel):
    rows: list[VerifyRowModel]
    all_pass: bool


class HealthResponse(BaseModel):
    status: str
    version: str


class FamilyInfoModel(BaseModel):
    name: str
    kind: str
    min_dim: int | None = None
    parity: str | None = None
    dim: int | None = None


class ErrorBody(BaseModel):
    kind: str
    message: str
