"""Bounded exhaustive search for extremal weighted projective spaces.

Enumerates every well-formed weight tuple (ascending entries, exactly one
representative per space) with weight sum up to a bound, classifies each by
the brute-force Reid-Tai loop, and reports the maximum Fano index or volume
within a singularity-class filter together with every tuple attaining it.

The bound is on the weight sum h.  Since the Fano index of a well-formed
space equals h, an index search with bound B is complete for "index <= B";
volume searches reuse the same enumeration so results stay comparable.

Everything here is evidence within the stated bound, never a proof of
maximality in all dimensions.

Work can be split across processes: shards are keyed by the smallest weight
(round-robin on its value), each shard is enumerated in the same
deterministic order, and the merge is order-independent, so the output is
identical for any worker count.
"""

from __future__ import annotations

import csv
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import InvalidInput
from .exactarith import check_nat
from .families import FamilyId, FamilyInstance, generate
from .report import classify_wps
from .singularities import DEFAULT_COST_CAP, SingularityClass
from .wps import Weights

EVIDENCE_NOTE = "evidence within bound only; not a proof of maximality"

CLASS_FILTERS = ("canonical", "terminal", "gorenstein-canonical", "gorenstein-terminal")
OBJECTIVES = ("fano-index", "volume")

CSV_HEADER = ["weights", "h", "class", "gorenstein", "fano_index", "volume_num", "volume_den"]


@dataclass(frozen=True)
class SearchConfig:
    dim: int
    class_filter: str
    objective: str
    sum_max: int
    cost_cap: int = DEFAULT_COST_CAP
    worker_count: int = 1

    def __post_init__(self):
        check_nat(self.dim, minimum=2, name="dim")
        if self.class_filter not in CLASS_FILTERS:
            raise InvalidInput(f"class filter must be one of {CLASS_FILTERS}")
        if self.objective not in OBJECTIVES:
            raise InvalidInput(f"objective must be one of {OBJECTIVES}")
        check_nat(self.sum_max, minimum=self.dim + 1, name="sum_max")
        check_nat(self.cost_cap, minimum=1, name="cost_cap")
        check_nat(self.worker_count, minimum=1, name="worker_count")
        if self.sum_max > self.cost_cap:
            raise InvalidInput(
                f"sum_max {self.sum_max} exceeds cost cap {self.cost_cap}; "
                "brute classification would be refused"
            )


@dataclass(frozen=True)
class SearchRow:
    """One classified tuple (entries ascending)."""

    weights: tuple[int, ...]
    h: int
    klass: SingularityClass
    gorenstein: bool
    volume: Fraction


@dataclass(frozen=True)
class SearchRecord:
    config: SearchConfig
    best_value: int | Fraction
    achievers: tuple[tuple[int, ...], ...]
    tuples_enumerated: int
    tuples_classified: int

    def result_fields(self):
        """Everything except the config echo; equal across worker counts."""
        return (
            self.best_value,
            self.achievers,
            self.tuples_enumerated,
            self.tuples_classified,
        )


def _raw_tuples(dim: int, sum_max: int, a0_values: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Ascending positive tuples of length dim+1 with sum <= sum_max.

    Ordered by sum, then lexicographically.  ``a0_values`` restricts the
    smallest entry (the sharding key); order within a shard is unchanged.
    """

    def extend(prefix: list[int], remaining: int, parts: int, lo: int):
        if parts == 1:
            if lo <= remaining:
                yield tuple(prefix) + (remaining,)
            return
        for v in range(lo, remaining // parts + 1):
            prefix.append(v)
            yield from extend(prefix, remaining - v, parts - 1, v)
            prefix.pop()

    parts = dim + 1
    for total in range(parts, sum_max + 1):
        if a0_values is None:
            yield from extend([], total, parts, 1)
        else:
            for a0 in a0_values:
                if a0 * parts > total:
                    break
                yield from extend([a0], total - a0, parts - 1, a0)


def enumerate_weight_tuples(dim: int, sum_max: int) -> Iterator[tuple[int, ...]]:
    """Well-formed ascending tuples, each space exactly once, by sum then lex."""
    check_nat(dim, minimum=1, name="dim")
    check_nat(sum_max, minimum=dim + 1, name="sum_max")
    for t in _raw_tuples(dim, sum_max):
        if Weights(t).is_well_formed():
            yield t


def passes_filter(class_filter: str, klass: SingularityClass, gorenstein: bool) -> bool:
    if class_filter.endswith("terminal"):
        if klass < SingularityClass.TERMINAL:
            return False
    elif klass < SingularityClass.CANONICAL_NOT_TERMINAL:
        return False
    return not class_filter.startswith("gorenstein") or gorenstein


def _objective_value(objective: str, row: SearchRow):
    return row.h if objective == "fano-index" else row.volume


def _scan_shard(
    config: SearchConfig,
    a0_values: Sequence[int] | None,
    collect_rows: bool,
    progress_every: int | None = None,
):
    best = None
    achievers: list[tuple[int, ...]] = []
    rows: list[SearchRow] = []
    raw = classified = 0
    started = time.perf_counter()
    for t in _raw_tuples(config.dim, config.sum_max, a0_values):
        raw += 1
        w = Weights(t)
        if not w.is_well_formed():
            continue
        classified += 1
        result = classify_wps(w, cost_cap=config.cost_cap)
        row = SearchRow(t, w.h, result.overall, w.is_gorenstein(), w.anticanonical_volume())
        if collect_rows:
            rows.append(row)
        if progress_every and classified % progress_every == 0:
            print(
                f"search dim={config.dim} sum<={config.sum_max}: classified "
                f"{classified} tuples ({time.perf_counter() - started:.1f}s)",
                file=sys.stderr,
            )
        if not passes_filter(config.class_filter, row.klass, row.gorenstein):
            continue
        value = _objective_value(config.objective, row)
        if best is None or value > best:
            best, achievers = value, [t]
        elif value == best:
            achievers.append(t)
    return {"best": best, "achievers": achievers, "raw": raw, "classified": classified, "rows": rows}


def _shard_worker(args):
    config_fields, a0_values, collect_rows = args
    return _scan_shard(SearchConfig(*config_fields), a0_values, collect_rows)


def find_extremal(
    config: SearchConfig,
    collect_rows: bool = False,
    progress_every: int | None = None,
) -> tuple[SearchRecord, list[SearchRow]]:
    """Run the search; returns the record and (optionally) all classified rows.

    Deterministic for any worker count: shards partition the smallest
    weight's values round-robin and the merge does not depend on completion
    order.
    """
    a0_max = config.sum_max // (config.dim + 1)
    workers = min(config.worker_count, a0_max)
    if workers <= 1:
        shards = [_scan_shard(config, None, collect_rows, progress_every)]
    else:
        config_fields = (
            config.dim,
            config.class_filter,
            config.objective,
            config.sum_max,
            config.cost_cap,
            config.worker_count,
        )
        jobs = [
            (config_fields, list(range(1 + shard, a0_max + 1, workers)), collect_rows)
            for shard in range(workers)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            shards = list(pool.map(_shard_worker, jobs))

    best = None
    for shard in shards:
        if shard["best"] is not None and (best is None or shard["best"] > best):
            best = shard["best"]
    if best is None:
        # Unreachable given sum_max >= dim+1: the all-ones tuple passes every filter.
        raise InvalidInput("no tuple passed the filter within the bound")
    achievers = sorted(
        t for shard in shards if shard["best"] == best for t in shard["achievers"]
    )
    rows = sorted((r for shard in shards for r in shard["rows"]), key=lambda r: (r.h, r.weights))
    record = SearchRecord(
        config=config,
        best_value=best,
        achievers=tuple(achievers),
        tuples_enumerated=sum(s["raw"] for s in shards),
        tuples_classified=sum(s["classified"] for s in shards),
    )
    if progress_every:
        print(
            f"search dim={config.dim} {config.class_filter}/{config.objective} "
            f"sum<={config.sum_max}: best={best} achievers={len(achievers)} "
            f"({record.tuples_classified} classified)",
            file=sys.stderr,
        )
    return record, rows


def write_rows_csv(path: str, rows: Sequence[SearchRow]) -> None:
    """Write classified tuples; all large integers as decimal strings."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in rows:
            writer.writerow(
                [
                    ";".join(map(str, r.weights)),
                    str(r.h),
                    r.klass.label,
                    "true" if r.gorenstein else "false",
                    str(r.h),
                    str(r.volume.numerator),
                    str(r.volume.denominator),
                ]
            )


_FAMILY_SEARCH = {
    FamilyId.CANONICAL_MAX_INDEX: ("canonical", "fano-index"),
    FamilyId.TERMINAL_MAX_INDEX: ("terminal", "fano-index"),
    FamilyId.GORENSTEIN_CANONICAL_MAX_INDEX: ("gorenstein-canonical", "fano-index"),
    FamilyId.GORENSTEIN_TERMINAL_MAX_VOLUME: ("gorenstein-terminal", "volume"),
    FamilyId.NILL_GORENSTEIN_MAX_VOLUME: ("gorenstein-canonical", "volume"),
    FamilyId.KASPRZYK_TERMINAL_MAX_VOLUME: ("terminal", "volume"),
    FamilyId.BKN_CANONICAL_MAX_VOLUME: ("canonical", "volume"),
}


@dataclass(frozen=True)
class ConjectureEvidence:
    family: str
    dim: int
    family_value: int | Fraction
    search_best: int | Fraction
    unbeaten: bool
    record: SearchRecord
    note: str = EVIDENCE_NOTE


def verify_conjecture(
    family: FamilyId | str,
    n: int,
    sum_max: int,
    cost_cap: int = DEFAULT_COST_CAP,
    worker_count: int = 1,
) -> ConjectureEvidence:
    """Compare a family member against the exhaustive bounded search.

    Evidence only: "unbeaten" means no space with weight sum <= sum_max does
    better, nothing more.
    """
    if not isinstance(family, FamilyId):
        family = FamilyId(family)
    instance: FamilyInstance = generate(family, n)
    class_filter, objective = _FAMILY_SEARCH[family]
    h = instance.weights.h
    if h > sum_max:
        raise InvalidInput(
            f"family member has weight sum {h}, beyond the search bound {sum_max}"
        )
    config = SearchConfig(
        dim=n,
        class_filter=class_filter,
        objective=objective,
        sum_max=sum_max,
        cost_cap=cost_cap,
        worker_count=worker_count,
    )
    record, _ = find_extremal(config)
    family_value = h if objective == "fano-index" else instance.weights.anticanonical_volume()
    return ConjectureEvidence(
        family=instance.family,
        dim=n,
        family_value=family_value,
        search_best=record.best_value,
        unbeaten=record.best_value == family_value,
        record=record,
    )
