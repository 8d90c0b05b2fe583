"""
Short and long subsets, genericity and genetic codes of length vectors.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Optional

from config import config
from models.errors import (
    create_empty_space_error,
    create_not_generic_error,
    create_size_limit_error,
)
from models.genetic_code import GeneticCode, LengthVector
from models.poset import IndexSubset, initial_segment, mask_elements, mask_upper_covers

logger = logging.getLogger(__name__)


def is_generic(lengths: LengthVector) -> bool:
    """
    True when no subset of sides sums to exactly half the perimeter.

    All 2^n subset sums are compared exactly, so n is capped by
    ``config.generic_limit()``.

    Raises:
        ToolError: SIZE_LIMIT when n exceeds the configured cap.
    """
    limit = config.generic_limit()
    if limit is not None and lengths.n > limit:
        raise create_size_limit_error("Genericity test", lengths.n, limit)

    half = lengths.total / 2
    sums = {Fraction(0)}
    for value in lengths.lengths:
        sums |= {s + value for s in sums}
    return half not in sums


def is_short(lengths: LengthVector, subset: IndexSubset) -> bool:
    """Sum over ``subset`` strictly below half the perimeter."""
    return 2 * lengths.sum_of(subset) < lengths.total


def genetic_code(lengths: LengthVector) -> GeneticCode:
    """
    Genes of a generic length vector: maximal short subsets containing n.

    Raises:
        ToolError: NOT_GENERIC, or EMPTY_SPACE when {n} itself is long.
    """
    if not is_generic(lengths):
        raise create_not_generic_error(str(lengths))
    n = lengths.n
    if not is_short(lengths, IndexSubset.of(n)):
        raise create_empty_space_error(n)

    # Short subsets of [n-1] that stay short with n added form a down-set;
    # its maximal members are those with no upper cover inside it.
    budget = lengths.total - 2 * lengths.lengths[-1]
    short = {
        mask
        for mask in range(1 << (n - 1))
        if 2 * sum((lengths.lengths[i - 1] for i in mask_elements(mask)), Fraction(0)) < budget
    }
    maximal = [
        mask for mask in short if not any(c in short for c in mask_upper_covers(mask, n - 1))
    ]
    code = GeneticCode.from_gees(n, (IndexSubset.from_mask(mask) for mask in maximal))
    logger.debug(f"Genetic code of ({lengths}) is {code}")
    return code


def subgees(code: GeneticCode) -> list[IndexSubset]:
    """All subgees including the empty set, by cardinality then lexicographically."""
    return sorted(IndexSubset.from_mask(mask) for mask in code.short_family())


def subgee_counts(code: GeneticCode) -> list[int]:
    """a_0, ..., a_s: the number of subgees of each cardinality."""
    counts = [0] * (code.s + 1)
    for subset in subgees(code):
        counts[len(subset)] += 1
    return counts


def disconnected_code(n: int) -> GeneticCode:
    """<{n, n-3, ..., 1}>, the code of two disjoint (n-3)-tori."""
    return GeneticCode.from_gees(n, [initial_segment(n - 3)])


def is_connected(code: GeneticCode) -> bool:
    return code != disconnected_code(code.n)


def special_case(code: GeneticCode) -> Optional[str]:
    """
    Name the space when the only gee is [k] with k <= m - 1.

    Those codes give S^(m-k) x T^k and are understood by elementary means;
    other codes return None.
    """
    if len(code.genes) != 1:
        return None
    gee = code.gees[0]
    k = len(gee)
    if gee != initial_segment(k) or k > code.m - 1:
        return None
    if k == 0:
        return f"S^{code.m}"
    if k == code.m - 1:
        return f"T^{code.m}"
    return f"S^{code.m - k} x T^{k}"
