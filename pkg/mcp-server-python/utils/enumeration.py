"""
Exhaustive enumeration of realizable genetic codes for n sides.

Gees of a code generate a down-set D of subsets of [n-1] (the sets A with
A + {n} short). The search walks the subsets of [n-1] in rank order (element
sum, a linear extension of dominance) and decides for each one whether it
joins D. A subset may join only when all of its lower covers are already in
D and it is compatible with every member: A and A' cannot both be in D when
[n-1] - A' <= A + {n}, since that set would be short and long at once.
Every completed down-set is a candidate; the realization LP decides.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Optional

from config import config
from models.errors import create_size_limit_error, create_validation_error
from models.genetic_code import GeneticCode
from models.poset import (
    IndexSubset,
    dominates,
    mask_elements,
    mask_lower_covers,
    mask_rank,
    mask_upper_covers,
)
from utils.realizability import is_realizable

logger = logging.getLogger(__name__)

MIN_ENUMERATION_N = 4


def _check_size(n: int) -> None:
    if n < MIN_ENUMERATION_N:
        raise create_validation_error(
            f"Enumeration needs n >= {MIN_ENUMERATION_N}, got n = {n}"
        )
    limit = config.enumeration_limit()
    if limit is not None and n > limit:
        raise create_size_limit_error("Enumeration", n, limit)


def conflict_table(n: int) -> list[int]:
    """
    For each mask A of [n-1], a bitset over masks A' that cannot share a
    down-set with A (the bit for A itself is set when A conflicts with itself).
    """
    universe = n - 1
    full = (1 << universe) - 1
    subsets = [mask_elements(mask) for mask in range(full + 1)]
    with_n = [items + [n] for items in subsets]
    table = [0] * (full + 1)
    for first in range(full + 1):
        for second in range(full + 1):
            if dominates(subsets[full & ~second], with_n[first]):
                table[first] |= 1 << second
                table[second] |= 1 << first
    return table


def _code_from_down_set(n: int, members: list[int], member_bits: int) -> GeneticCode:
    maximal = [
        mask
        for mask in members
        if not any((member_bits >> c) & 1 for c in mask_upper_covers(mask, n - 1))
    ]
    return GeneticCode.from_gees(n, (IndexSubset.from_mask(mask) for mask in maximal))


def candidate_codes(n: int, prefilter: bool = True) -> Iterator[GeneticCode]:
    """
    Yield the code of every down-set of subsets of [n-1] containing the empty
    set, skipping incompatible pairs when ``prefilter`` is set.
    """
    universe = n - 1
    order = sorted(range(1, 1 << universe), key=lambda mask: (mask_rank(mask), mask))
    covers = {mask: mask_lower_covers(mask) for mask in order}
    conflicts = conflict_table(n) if prefilter else None

    # Explicit stack of (position in order, member bitset, member list)
    stack: list[tuple[int, int, list[int]]] = [(0, 1, [0])]
    while stack:
        position, bits, members = stack.pop()
        if position == len(order):
            yield _code_from_down_set(n, members, bits)
            continue
        mask = order[position]
        stack.append((position + 1, bits, members))
        if not all((bits >> c) & 1 for c in covers[mask]):
            continue
        if conflicts is not None and (conflicts[mask] & (bits | (1 << mask))):
            continue
        stack.append((position + 1, bits | (1 << mask), members + [mask]))


def enumerate_codes(n: int, workers: Optional[int] = None) -> list[GeneticCode]:
    """
    Every realizable genetic code for n sides, once each, in canonical order.

    The disconnected code is included; codes of empty spaces are not.

    Args:
        n: Number of sides, 4 <= n <= configured cap
        workers: Process count for the realization checks (default config.threads)

    Raises:
        ToolError: VALIDATION_ERROR for n < 4, SIZE_LIMIT beyond the cap.
    """
    _check_size(n)
    workers = workers or config.threads

    candidates = list(candidate_codes(n))
    logger.info(f"n={n}: {len(candidates)} candidate codes after pre-filter")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(is_realizable, candidates, chunksize=32))
    else:
        verdicts = [is_realizable(code) for code in candidates]

    codes = sorted(
        (code for code, ok in zip(candidates, verdicts) if ok), key=lambda code: code.key
    )
    logger.info(f"n={n}: {len(codes)} realizable codes")
    return codes
