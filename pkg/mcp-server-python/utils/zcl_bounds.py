"""
Zero-divisor-cup-length and topological complexity bounds from a genetic code.

With k0 the largest k such that some ordered pair of gees has G + G' >= [k]:

    lower = k0 + 2 if k0 = m (mod 2) else k0 + 1
    upper = min(2s + 2, 2m)

and the lower bound is exact when m >= 2s. TC lies in [zcl + 1, 2n - 5].
"""

from __future__ import annotations

import logging
from typing import Optional

from config import config
from models.errors import create_certificate_failed_error
from models.genetic_code import GeneticCode
from models.poset import k0 as compute_k0
from models.ring import GradedRing
from schemas.classification import ZclBounds
from utils.cohomology import build_canonical_ring
from utils.zero_divisors import certificate_product

logger = logging.getLogger(__name__)


def lower_bound(k: int, m: int) -> int:
    """Smallest integer above k with the parity of m."""
    return k + 2 if (k - m) % 2 == 0 else k + 1


def zcl_bounds(
    code: GeneticCode,
    ring: Optional[GradedRing] = None,
    verify: Optional[bool] = None,
) -> ZclBounds:
    """
    zcl interval for a connected code, with the certificate product checked
    in the canonical ring when ``verify`` (default from config) is set.

    Raises:
        ToolError: DISCONNECTED from ring construction; CERTIFICATE_FAILED if
            the certificate product vanishes.
    """
    if ring is None:
        ring, _ = build_canonical_ring(code)
    verify = config.verify_certificates if verify is None else verify

    k = compute_k0(code.gees)
    m, s = code.m, code.s
    lower = lower_bound(k, m)
    upper = min(2 * s + 2, 2 * m)
    model_exact = m >= 2 * s

    certificate_text = None
    if verify:
        certificate = certificate_product(code, k, ring)
        if not certificate.is_nonzero():
            logger.warning(f"Certificate for {code} at k0={k} evaluated to zero")
            raise create_certificate_failed_error(code.label, k)
        if certificate.length != lower:
            logger.warning(
                f"Certificate for {code} has {certificate.length} factors, expected {lower}"
            )
        certificate_text = certificate.describe()

    return ZclBounds(
        k0=k,
        lower=lower,
        upper=upper,
        exact=lower if model_exact else None,
        model_exact=model_exact,
        certificate=certificate_text,
    )


def tc_bounds(code: GeneticCode, bounds: Optional[ZclBounds] = None) -> tuple[int, int]:
    """(zcl lower + 1, 2n - 5)."""
    if bounds is None:
        bounds = zcl_bounds(code, verify=False)
    return bounds.lower + 1, 2 * code.n - 5
