"""HTTP service exposing the analyzer, family generators, search, and records.

Error contract: domain failures surface as JSON bodies
``{"detail": {"kind": ..., "message": ...}}`` with status 400 for invalid
input and 422 for computations refused under the cost cap (undecided points,
rejected certificates).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import InvalidInput, WpsError
from ..families import (
    FamilyId,
    family_domain,
    generate,
    lookup_sporadic,
    sporadic_table,
    verify_instance,
)
from ..records import reference_rows
from ..report import analyze
from ..search import EVIDENCE_NOTE, SearchConfig, find_extremal
from ..singularities import DEFAULT_COST_CAP
from ..wps import Weights
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    FamilyInfoModel,
    FamilyRequest,
    FamilyResponse,
    HealthResponse,
    SearchRequest,
    SearchResponse,
    VerifyPaperRequest,
    VerifyPaperResponse,
    VerifyRowModel,
    analyze_response,
    family_response,
    search_response,
)

app = FastAPI(
    title="wpsfano",
    description=(
        "Exact-arithmetic analysis of Fano weighted projective spaces: "
        "Reid-Tai classification, extremal families with certificates, and "
        "bounded exhaustive searches."
    ),
    version=__version__,
)


@app.exception_handler(WpsError)
async def wps_error_handler(request: Request, exc: WpsError) -> JSONResponse:
    status = 400 if isinstance(exc, InvalidInput) else 422
    return JSONResponse(
        status_code=status,
        content={"detail": {"kind": exc.kind, "message": str(exc)}},
    )


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.get("/families", response_model=list[FamilyInfoModel])
def families() -> list[FamilyInfoModel]:
    out = []
    for fid in FamilyId:
        lo, parity = family_domain(fid)
        out.append(FamilyInfoModel(name=fid.value, kind="parametric", min_dim=lo, parity=parity))
    for inst in sporadic_table():
        out.append(FamilyInfoModel(name=inst.family, kind="sporadic", dim=inst.dim))
    return out


@app.post("/analyze", response_model=AnalyzeResponse, response_model_exclude_none=True)
def analyze_endpoint(request: AnalyzeRequest) -> AnalyzeResponse:
    weights = Weights.parse(request.weights).canonical_form()
    if not weights.is_well_formed():
        return AnalyzeResponse(
            well_formed=False,
            weights=[str(a) for a in weights.entries],
            label=weights.label,
            dim=weights.dim,
        )
    cost_cap = request.cost_cap if request.cost_cap is not None else DEFAULT_COST_CAP
    return analyze_response(analyze(weights, cost_cap=cost_cap))


def _resolve_family(request: FamilyRequest):
    try:
        fid = FamilyId(request.name)
    except ValueError:
        instance = lookup_sporadic(request.name)
        if request.dim is not None and request.dim != instance.dim:
            raise InvalidInput(
                f"{request.name} has dimension {instance.dim}, not {request.dim}"
            )
        return instance
    if request.dim is None:
        raise InvalidInput(f"family {fid.value} requires a dimension")
    return generate(fid, request.dim)


@app.post("/family", response_model=FamilyResponse, response_model_exclude_none=True)
def family_endpoint(request: FamilyRequest) -> FamilyResponse:
    instance = _resolve_family(request)
    cost_cap = request.cost_cap if request.cost_cap is not None else DEFAULT_COST_CAP
    verification = verify_instance(instance, mode=request.verify, cost_cap=cost_cap)
    return family_response(instance, verification)


@app.post("/search", response_model=SearchResponse, response_model_exclude_none=True)
def search_endpoint(request: SearchRequest) -> SearchResponse:
    config = SearchConfig(
        dim=request.dim,
        class_filter=request.class_filter,
        objective=request.objective,
        sum_max=request.sum_max,
        cost_cap=request.cost_cap if request.cost_cap is not None else DEFAULT_COST_CAP,
        worker_count=request.workers,
    )
    record, rows = find_extremal(config, collect_rows=request.include_rows)
    return search_response(record, rows if request.include_rows else None, EVIDENCE_NOTE)


@app.post("/verify-paper", response_model=VerifyPaperResponse)
def verify_paper_endpoint(request: VerifyPaperRequest) -> VerifyPaperResponse:
    cost_cap = request.cost_cap if request.cost_cap is not None else DEFAULT_COST_CAP
    rows = [VerifyRowModel.from_row(r) for r in reference_rows(request.max_dim, cost_cap)]
    return VerifyPaperResponse(rows=rows, all_pass=all(r.passed for r in rows))
