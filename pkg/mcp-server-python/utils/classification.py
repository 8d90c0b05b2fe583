"""
Per-code classification records and census summaries.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Optional, Sequence

from config import config
from models.genetic_code import GeneticCode
from models.poset import k0 as compute_k0
from models.poset import max_initial_segment, multiset_union
from schemas.classification import (
    CensusSummary,
    ClassificationRecord,
    GeeSizeSummary,
    ZclBounds,
)
from utils.code_notation import format_code
from utils.genetics import is_connected, special_case, subgee_counts
from utils.zcl_bounds import zcl_bounds

logger = logging.getLogger(__name__)


def build_record(code: GeneticCode, bounds: Optional[ZclBounds]) -> ClassificationRecord:
    """Assemble a record; ``bounds`` is None for the disconnected code."""
    return ClassificationRecord(
        n=code.n,
        m=code.m,
        s=code.s,
        code=format_code(code),
        gees=[g.label for g in code.gees],
        subgee_counts=subgee_counts(code),
        k0=compute_k0(code.gees),
        zcl_lower=bounds.lower if bounds else None,
        zcl_upper=bounds.upper if bounds else None,
        zcl_exact=bounds.exact if bounds else None,
        tc_lower=bounds.lower + 1 if bounds else None,
        tc_upper=2 * code.n - 5 if bounds else None,
        model_exact=code.m >= 2 * code.s,
        connected=bounds is not None,
        special_case=special_case(code),
    )


def classify(code: GeneticCode, verify: Optional[bool] = None) -> ClassificationRecord:
    """Classification record of a realizable code."""
    bounds = zcl_bounds(code, verify=verify) if is_connected(code) else None
    return build_record(code, bounds)


def classify_all(
    codes: Sequence[GeneticCode], workers: Optional[int] = None, verify: Optional[bool] = None
) -> list[ClassificationRecord]:
    """Classify many codes, fanning out to processes when ``workers`` > 1."""
    workers = workers or config.threads
    verify = config.verify_certificates if verify is None else verify
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(classify, codes, [verify] * len(codes), chunksize=16))
    return [classify(code, verify) for code in codes]


def _reaches(first, second, t: int) -> bool:
    return max_initial_segment(multiset_union(first, second)) >= t


def summarize(
    n: int, codes: Sequence[GeneticCode], records: Sequence[ClassificationRecord]
) -> CensusSummary:
    """
    Census counts. Codes split by s exclude the disconnected code and the
    special family S^(m-k) x T^k; for each s, with t = min(2s, m), a code
    counts as "self pair" when some gee G has G + G >= [t], "distinct pair
    only" when only two different gees reach [t], and "neither" otherwise.
    """
    m = n - 3
    groups: dict[int, Counter] = {}
    special = 0
    disconnected = 0
    for code, record in zip(codes, records):
        if not record.connected:
            disconnected += 1
            continue
        if record.special_case is not None:
            special += 1
            continue
        t = min(2 * code.s, m)
        counter = groups.setdefault(code.s, Counter())
        counter["count"] += 1
        if any(_reaches(g, g, t) for g in code.gees):
            counter["self_pair"] += 1
        elif any(_reaches(g, h, t) for g, h in combinations(code.gees, 2)):
            counter["distinct_pair_only"] += 1
        else:
            counter["neither"] += 1

    histogram = Counter(str(r.zcl_lower) for r in records if r.zcl_lower is not None)
    summary = CensusSummary(
        n=n,
        total=len(records),
        disconnected=disconnected,
        special=special,
        model_exact=sum(1 for r in records if r.model_exact),
        by_s=[
            GeeSizeSummary(
                s=s,
                t=min(2 * s, m),
                count=counter["count"],
                self_pair=counter["self_pair"],
                distinct_pair_only=counter["distinct_pair_only"],
                neither=counter["neither"],
            )
            for s, counter in sorted(groups.items())
        ],
        zcl_lower_histogram=dict(sorted(histogram.items(), key=lambda item: int(item[0]))),
    )
    logger.info(f"n={n} census: {summary.total} codes, {summary.model_exact} exact")
    return summary
