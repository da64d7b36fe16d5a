"""Exact-arithmetic toolkit for extremal Fano weighted projective spaces.

Classifies the singularities of weighted projective spaces with the
Reid-Tai criterion (brute force under a cost cap, subset certificates
beyond it), generates the Sylvester-weight record families with their
closed-form indices and volumes, and runs bounded exhaustive searches for
extremal examples.  Ships as a library, an HTTP service, and a CLI client.
"""

__version__ = "0.1.0"

from .errors import (
    CertificateRejected,
    CostCapExceeded,
    InvalidInput,
    Undecided,
    WpsError,
)
from .exactarith import gcd_all, lcm_all, sylvester
from .families import (
    FamilyId,
    FamilyInstance,
    generate,
    lookup_sporadic,
    predicted_fano_index,
    predicted_volume,
    sporadic_table,
    verify_instance,
)
from .report import WpsReport, analyze, classify_wps
from .search import (
    SearchConfig,
    SearchRecord,
    enumerate_weight_tuples,
    find_extremal,
    verify_conjecture,
)
from .singularities import (
    DEFAULT_COST_CAP,
    CyclicQuotientSingularity,
    SingularityClass,
    SubsetCertificate,
    check_canonical_certificate,
    check_terminal_certificate,
    classify_brute,
    reid_tai_sum,
)
from .wps import Weights

__all__ = [
    "CertificateRejected",
    "CostCapExceeded",
    "CyclicQuotientSingularity",
    "DEFAULT_COST_CAP",
    "FamilyId",
    "FamilyInstance",
    "InvalidInput",
    "SearchConfig",
    "SearchRecord",
    "SingularityClass",
    "SubsetCertificate",
    "Undecided",
    "Weights",
    "WpsError",
    "WpsReport",
    "analyze",
    "check_canonical_certificate",
    "check_terminal_certificate",
    "classify_brute",
    "classify_wps",
    "enumerate_weight_tuples",
    "find_extremal",
    "gcd_all",
    "generate",
    "lcm_all",
    "lookup_sporadic",
    "predicted_fano_index",
    "predicted_volume",
    "reid_tai_sum",
    "sporadic_table",
    "sylvester",
    "verify_conjecture",
    "verify_instance",
    "__version__",
]
