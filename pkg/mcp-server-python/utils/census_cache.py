"""
CSV cache of classified censuses.

One file per n and format version under ``config.cache_dir``; columns
n, genes, s, k0, zcl_lower, zcl_upper, zcl_exact, connected with one row per
code in canonical order. Records are rebuilt from the cached bounds plus the
cheap per-code statistics, so a cache hit skips enumeration and certificates.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Sequence

import pandas as pd

from config import config
from models.genetic_code import GeneticCode
from schemas.classification import ClassificationRecord, ZclBounds
from utils.classification import build_record, classify_all
from utils.code_notation import parse_code
from utils.enumeration import enumerate_codes
from utils.file_ops import atomic_write

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
COLUMNS = ["n", "genes", "s", "k0", "zcl_lower", "zcl_upper", "zcl_exact", "connected"]
_NULLABLE = ["zcl_lower", "zcl_upper", "zcl_exact"]


def cache_path(n: int, cache_dir: Optional[Path] = None) -> Path:
    return Path(cache_dir or config.cache_dir) / f"codes_n{n}_v{FORMAT_VERSION}.csv"


def census_frame(records: Sequence[ClassificationRecord]) -> pd.DataFrame:
    """Records as a frame with the cache columns; missing bounds stay <NA>."""
    frame = pd.DataFrame(
        [
            {
                "n": r.n,
                "genes": r.code,
                "s": r.s,
                "k0": r.k0,
                "zcl_lower": r.zcl_lower,
                "zcl_upper": r.zcl_upper,
                "zcl_exact": r.zcl_exact,
                "connected": r.connected,
            }
            for r in records
        ],
        columns=COLUMNS,
    )
    for column in _NULLABLE:
        frame[column] = frame[column].astype("Int64")
    return frame


def census_csv(records: Sequence[ClassificationRecord]) -> str:
    return census_frame(records).to_csv(index=False, lineterminator="\n")


def write_census(
    n: int, records: Sequence[ClassificationRecord], cache_dir: Optional[Path] = None
) -> Path:
    path = cache_path(n, cache_dir)
    atomic_write(path, census_csv(records))
    logger.info(f"Cached {len(records)} codes for n={n} at {path}")
    return path


def _optional(value) -> Optional[int]:
    return None if pd.isna(value) else int(value)


def read_census(
    n: int, cache_dir: Optional[Path] = None
) -> Optional[tuple[list[GeneticCode], list[ClassificationRecord]]]:
    """Codes and records from the cache, or None when absent or unreadable."""
    path = cache_path(n, cache_dir)
    if not path.exists():
        return None
    try:
        frame = pd.read_csv(path, dtype={"genes": str, **{c: "Int64" for c in _NULLABLE}})
        if list(frame.columns) != COLUMNS or (frame["n"] != n).any():
            raise ValueError("unexpected columns or n")
        codes: list[GeneticCode] = []
        records: list[ClassificationRecord] = []
        for row in frame.itertuples(index=False):
            code = parse_code(row.genes, n)
            bounds = None
            if bool(row.connected):
                lower = _optional(row.zcl_lower)
                upper = _optional(row.zcl_upper)
                exact = _optional(row.zcl_exact)
                bounds = ZclBounds(
                    k0=int(row.k0),
                    lower=lower,
                    upper=upper,
                    exact=exact,
                    model_exact=code.m >= 2 * code.s,
                )
            codes.append(code)
            records.append(build_record(code, bounds))
    except Exception as e:
        logger.warning(f"Ignoring unreadable census cache {path}: {e}")
        return None
    logger.info(f"Loaded {len(codes)} cached codes for n={n} from {path}")
    return codes, records


def load_census(
    n: int,
    use_cache: bool = True,
    workers: Optional[int] = None,
    verify: Optional[bool] = None,
    cache_dir: Optional[Path] = None,
) -> tuple[list[GeneticCode], list[ClassificationRecord], bool]:
    """
    Codes and classification records for n, plus whether they came from the cache.

    A cache hit skips enumeration and certificate checks. A fresh census is
    written back when ``use_cache`` is set.

    Raises:
        ToolError: VALIDATION_ERROR or SIZE_LIMIT from enumeration.
    """
    if use_cache:
        cached = read_census(n, cache_dir)
        if cached is not None:
            codes, records = cached
            return codes, records, True

    codes = enumerate_codes(n, workers)
    records = classify_all(codes, workers, verify)
    if use_cache:
        try:
            write_census(n, records, cache_dir)
        except OSError as e:
            logger.warning(f"Could not write census cache for n={n}: {e}")
    return codes, records, False
