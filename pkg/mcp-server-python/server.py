#!/usr/bin/env python3
"""
MCP Server entry point for polygon-zcl.

Exposes the polygon-space tools (analyze, enumerate_codes, realize, ring,
zcl, verify_tables) to LLM agents via the Model Context Protocol. Every tool
forwards to the handler of the same name in tools/, which never raises and
returns either a response dict or {"error": {...}}.

Usage:
    python server.py

The server runs in stdio mode, the standard transport for MCP servers that
are invoked by LLM agents.
"""

import logging

from mcp.server.fastmcp import FastMCP

from config import get_config
from tools.analyze import analyze
from tools.enumerate_codes import enumerate_codes
from tools.realize import realize
from tools.ring import ring
from tools.verify_tables import verify_tables
from tools.zcl import zcl

# Create FastMCP server instance
config = get_config()
mcp = FastMCP(
    name=config.server_name,
    instructions=(
        "This server computes rational cohomology, zero-divisor-cup-length (zcl) and "
        "topological complexity (TC) bounds for spaces of planar polygons with generic "
        "side lengths.\n\n"
        "A space is named either by side lengths (lengths='1,1,1,3,3,4') or by a genetic "
        "code with its number of sides (code='9421,95', n=9). Codes list genes separated "
        "by commas; a gene of one-digit elements is written as digits, larger elements "
        "in braces ('{10,4,2,1}'). Pass gees=true to write genes without n.\n\n"
        "Use analyze for a full report on one space. Use zcl for bounds and an optional "
        "product search, ring for the structure constants of the cohomology ring, realize "
        "to find side lengths for a code, enumerate_codes for the census of all codes for "
        "one n, and verify_tables to recompute the reference values."
    ),
)


def _provided(**kwargs) -> dict:
    """Only the arguments that were explicitly provided."""
    return {key: value for key, value in kwargs.items() if value is not None}


@mcp.tool(
    name="analyze",
    description=(
        "Full report for one polygon space: genetic code, realizing side lengths, Betti "
        "numbers, zcl and TC intervals with the certificate product, and warnings when the "
        "canonical ring model may miss exotic products."
    ),
)
def analyze_tool(
    lengths: str | None = None,
    code: str | None = None,
    n: int | None = None,
    gees: bool | None = None,
    verify: bool | None = None,
    budget: int | None = None,
) -> dict:
    """
    Analyze one polygon space.

    Args:
        lengths: Side lengths as integers or exact fractions p/q, e.g. "1,1,1,3,3,4".
            A 0 stands for a tiny side (1/1000 by default).
        code: Genetic code text, e.g. "9421,95". Requires n; excludes lengths.
        n: Number of sides for ``code``.
        gees: Read ``code`` as gees (genes with n removed).
        verify: Check the certificate product in the canonical ring (default: config).
        budget: Cap on partial products for the genus-2 search.

    Returns:
        Dictionary with structure:
        {
            "record": {...},          # n, m, s, code, gees, k0, zcl/TC bounds, flags
            "lengths": [str],         # Given lengths or an integer witness
            "lengths_given": bool,
            "betti": [int] | None,    # None for the disconnected space
            "certificate": str|None,  # Factors of the nonzero product behind zcl_lower
            "warnings": [str],
            "oracle": {...} | None    # True-ring zcl, only for <632>
        }

        On error, returns:
        {
            "error": {
                "code": str,          # PARSE_ERROR, NOT_GENERIC, NOT_REALIZABLE, ...
                "message": str,
                "retryable": bool
            }
        }

    Examples:
        analyze_tool(lengths="1,1,1,3,3,4")     # <632>, zcl in [5, 6]
        analyze_tool(code="9421,95", n=9)        # zcl exactly 6, TC in [7, 13]
    """
    return analyze(
        _provided(lengths=lengths, code=code, n=n, gees=gees, verify=verify, budget=budget)
    )


@mcp.tool(
    name="enumerate_codes",
    description=(
        "Enumerate every realizable genetic code for n sides (4 <= n <= 9 by default) with "
        "per-code zcl statistics; classify=true adds verified certificates and the census "
        "summary. Results are cached per n."
    ),
)
def enumerate_codes_tool(
    n: int,
    classify: bool | None = None,
    use_cache: bool | None = None,
    threads: int | None = None,
) -> dict:
    """
    Census of realizable codes.

    Args:
        n: Number of sides.
        classify: Verify zcl certificates and include the summary (default: false).
        use_cache: Read and write the CSV census cache (default: true).
        threads: Worker processes (default: POLYGONZCL_THREADS).

    Returns:
        {"n", "count", "cached", "records": [...], "summary": {...} | None}
        or {"error": {...}} with VALIDATION_ERROR or SIZE_LIMIT.

    Examples:
        enumerate_codes_tool(n=7)                  # 134 codes
        enumerate_codes_tool(n=8, classify=True)   # 2469 codes with summary
    """
    return enumerate_codes(
        _provided(n=n, classify=classify, use_cache=use_cache, threads=threads)
    )


@mcp.tool(
    name="realize",
    description=(
        "Find integer side lengths whose genetic code is the given code, by exact rational "
        "linear programming; fails with NOT_REALIZABLE when no such lengths exist."
    ),
)
def realize_tool(code: str, n: int, gees: bool | None = None) -> dict:
    """
    Realize a genetic code.

    Args:
        code: Genetic code text, e.g. "8531".
        n: Number of sides.
        gees: Read ``code`` as gees, e.g. "7531" for the gene {8,7,5,3,1}.

    Returns:
        {"code", "lengths": [str], "slack": "p/q", "round_trip": bool}
        or {"error": {...}} with PARSE_ERROR, NOT_ANTICHAIN or NOT_REALIZABLE.
    """
    return realize(_provided(code=code, n=n, gees=gees))


@mcp.tool(
    name="ring",
    description=(
        "Canonical rational cohomology ring of a connected polygon space: basis classes "
        "V_S, W_S with degrees and the nonzero structure constants as exact rationals."
    ),
)
def ring_tool(
    lengths: str | None = None,
    code: str | None = None,
    n: int | None = None,
    gees: bool | None = None,
    check: bool | None = None,
) -> dict:
    """
    Dump the canonical ring.

    Args:
        lengths: Side lengths; excludes code.
        code: Genetic code text; requires n.
        n: Number of sides for ``code``.
        gees: Read ``code`` as gees.
        check: Also verify Poincaré duality, associativity and graded commutativity.

    Returns:
        {"name", "m", "model_exact", "betti", "basis", "products", "poincare",
         "violations", "exotic_products"} or {"error": {...}}.
    """
    return ring(_provided(lengths=lengths, code=code, n=n, gees=gees, check=check))


@mcp.tool(
    name="zcl",
    description=(
        "zcl and TC intervals of a connected polygon space, with an optional search for "
        "the longest nonzero product of barred classes in the canonical ring."
    ),
)
def zcl_tool(
    lengths: str | None = None,
    code: str | None = None,
    n: int | None = None,
    gees: bool | None = None,
    verify: bool | None = None,
    search: bool | None = None,
    degree_one: bool | None = None,
    max_len: int | None = None,
    budget: int | None = None,
) -> dict:
    """
    zcl bounds for one space.

    Args:
        lengths: Side lengths; excludes code.
        code: Genetic code text; requires n.
        n: Number of sides for ``code``.
        gees: Read ``code`` as gees.
        verify: Check the certificate product (default: config).
        search: Run the product search.
        degree_one: Search only degree-one barred classes.
        max_len: Longest product to try (default: 2m).
        budget: Cap on partial products (default: POLYGONZCL_SEARCH_BUDGET).

    Returns:
        {"code", "bounds", "tc_lower", "tc_upper", "search", "oracle", "warnings"}
        or {"error": {...}} with BUDGET_EXCEEDED when the search runs out.
    """
    return zcl(
        _provided(
            lengths=lengths,
            code=code,
            n=n,
            gees=gees,
            verify=verify,
            search=search,
            degree_one=degree_one,
            max_len=max_len,
            budget=budget,
        )
    )


@mcp.tool(
    name="verify_tables",
    description=(
        "Recompute the reference values (example ring, special cases, "
        "equilateral family, genus-2 ring, allowable genes, censuses) and report each as "
        "passed or failed; full=true adds the n=8 census."
    ),
)
def verify_tables_tool(full: bool | None = None, threads: int | None = None) -> dict:
    """
    Run the reproduction suite.

    Returns:
        {"items": [{"group", "name", "expected", "actual", "passed"}],
         "passed", "failed", "all_passed"}
    """
    return verify_tables(_provided(full=full, threads=threads))


def main():
    """
    Main entry point for the MCP server.

    Runs the server in stdio mode, which is the standard transport
    for MCP servers that are invoked by LLM agents.
    """
    # Load and setup configuration
    config.setup_logging()

    logger = logging.getLogger(__name__)
    logger.info("Starting polygon-zcl MCP Server")
    logger.info(f"Server name: {config.server_name}")
    logger.info(f"Cache directory: {config.cache_dir}")

    # Validate configuration and log warnings
    warnings = config.validate()
    for warning in warnings:
        logger.warning(warning)

    logger.info("Server starting in stdio mode")
    mcp.run(transport="stdio")


if __name__ == "__main__":
    main()
