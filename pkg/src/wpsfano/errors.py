"""Domain error types shared across the package.

Every error carries a stable ``kind`` string; the HTTP layer puts it in
error payloads and the CLI maps it to an exit code.
"""

from __future__ import annotations


class WpsError(Exception):
    kind = "error"


class InvalidInput(WpsError, ValueError):
    """Malformed or out-of-contract input (bad weights, bad index, bad range)."""

    kind = "invalid-input"


class CostCapExceeded(WpsError):
    """Group order too large for the brute-force Reid-Tai loop; use a certificate."""

    kind = "cost-cap-exceeded"

    def __init__(self, r: int, cost_cap: int):
        super().__init__(f"group order {r} exceeds brute-force cost cap {cost_cap}")
        self.r = r
        self.cost_cap = cost_cap


class Undecided(WpsError):
    """A coordinate point is beyond the cost cap and has no usable certificate."""

    kind = "undecided"

    def __init__(self, point_index: int, r: int):
        super().__init__(
            f"point {point_index} (order {r}) is beyond the cost cap and no "
            "certificate was supplied"
        )
        self.point_index = point_index
        self.r = r


class CertificateRejected(WpsError):
    """A supplied subset certificate failed its checks at some point."""

    kind = "certificate-rejected"

    def __init__(self, point_index: int, reason: str):
        super().__init__(f"certificate for point {point_index} rejected: {reason}")
        self.point_index = point_index
        self.reason = reason
