#!/usr/bin/env python3
"""
Command-line interface for polygon-zcl.

Every command calls the same handler as the MCP tool of the same name and
renders its response, either as a human-readable report or, with --json,
as the response dict itself.

Usage:
    python cli.py analyze --lengths 1,1,1,3,3,4
    python cli.py analyze --code 9421,95 --n 9 --json
    python cli.py enumerate --n 8 --classify --out codes_n8.csv
    python cli.py realize --code 7531 --n 8 --gees
    python cli.py ring --code 632 --n 6 --check
    python cli.py zcl --code 632 --n 6 --search
    python cli.py verify-tables --full

Exit codes: 0 success, 2 usage or parse error, 3 domain failure (not
generic, empty space, not realizable, disconnected, size limit), 4 search
budget exceeded, 1 anything else including failed verify-tables items.
"""

from __future__ import annotations

import json
from typing import Any, Callable, Optional

import click

from config import get_config
from models.errors import exit_code_for
from schemas.classification import ClassificationRecord
from tools.analyze import analyze
from tools.enumerate_codes import enumerate_codes
from tools.realize import realize
from tools.ring import ring
from tools.verify_tables import verify_tables
from tools.zcl import zcl
from utils.census_cache import census_csv
from utils.file_ops import atomic_write

config = get_config()


def _provided(**kwargs) -> dict:
    return {key: value for key, value in kwargs.items() if value is not None}


def _emit(ctx: click.Context, text: str) -> None:
    """Write to --out when given, otherwise to stdout."""
    out = ctx.obj["out"]
    if out:
        atomic_write(out, text if text.endswith("\n") else text + "\n")
        click.echo(f"Wrote {out}", err=True)
    else:
        click.echo(text)


def _finish(
    ctx: click.Context, result: dict[str, Any], render: Callable[[dict[str, Any]], str]
) -> None:
    """Print an error and exit with its code, or emit the rendered result."""
    error = result.get("error")
    if error:
        click.echo(f"Error [{error['code']}]: {error['message']}", err=True)
        ctx.exit(exit_code_for(error["code"]))
    if ctx.obj["json"]:
        _emit(ctx, json.dumps(result, indent=2, ensure_ascii=False))
    else:
        _emit(ctx, render(result))


def _interval(lower: Optional[int], upper: Optional[int], exact: Optional[int] = None) -> str:
    if exact is not None:
        return f"{exact} (exact)"
    if lower is None:
        return "n/a"
    return f"[{lower}, {upper}]"


def _record_lines(record: dict[str, Any]) -> list[str]:
    lines = [
        f"code:        <{record['code']}>  (n={record['n']}, m={record['m']}, s={record['s']})",
        f"gees:        {', '.join(record['gees']) or '(none)'}",
        f"subgees:     {record['subgee_counts']}",
        f"k0:          {record['k0']}",
        "zcl:         "
        + _interval(record["zcl_lower"], record["zcl_upper"], record["zcl_exact"]),
        f"TC:          {_interval(record['tc_lower'], record['tc_upper'])}",
        f"model exact: {record['model_exact']}",
    ]
    if record["special_case"]:
        lines.append(f"family:      {record['special_case']}")
    return lines


def render_analyze(result: dict[str, Any]) -> str:
    lines = _record_lines(result["record"])
    label = "lengths:    " if result["lengths_given"] else "witness:    "
    lines.insert(1, f"{label} {','.join(result['lengths'])}")
    if result["betti"] is not None:
        lines.append(f"betti:       {tuple(result['betti'])}")
    if result["certificate"]:
        lines.append(f"certificate: {result['certificate']}")
    oracle = result["oracle"]
    if oracle:
        lines.append(
            f"true ring:   {oracle['ring']} has zcl {oracle['zcl']}, "
            f"TC in [{oracle['tc_lower']}, {oracle['tc_upper']}]"
        )
        lines.append(f"             witness {' * '.join(oracle['witness'])}")
    lines.extend(f"warning:     {w}" for w in result["warnings"])
    return "\n".join(lines)


def render_summary(summary: dict[str, Any]) -> str:
    lines = [
        f"n={summary['n']}: {summary['total']} codes",
        f"  disconnected: {summary['disconnected']}",
        f"  special:      {summary['special']}",
        f"  model exact:  {summary['model_exact']}",
    ]
    for row in summary["by_s"]:
        lines.append(
            f"  s={row['s']}: {row['count']} "
            f"(G+G >= [{row['t']}]: {row['self_pair']}, "
            f"distinct pair only: {row['distinct_pair_only']}, neither: {row['neither']})"
        )
    histogram = ", ".join(f"{k}: {v}" for k, v in summary["zcl_lower_histogram"].items())
    lines.append(f"  zcl lower:    {histogram}")
    return "\n".join(lines)


def render_realize(result: dict[str, Any]) -> str:
    return "\n".join(
        [
            f"code:       <{result['code']}>",
            f"lengths:    {','.join(result['lengths'])}",
            f"slack:      {result['slack']}",
            f"round trip: {'ok' if result['round_trip'] else 'FAILED'}",
        ]
    )


def render_ring(result: dict[str, Any]) -> str:
    names = [b["name"] for b in result["basis"]]
    lines = [
        f"ring {result['name']}  m={result['m']}  model exact: {result['model_exact']}",
        f"betti: {tuple(result['betti'])}",
    ]
    for degree in range(result["m"] + 1):
        in_degree = [b["name"] for b in result["basis"] if b["degree"] == degree]
        lines.append(f"  H^{degree}: {' '.join(in_degree)}")
    lines.append("products:")
    for i, j, terms in result["products"]:
        value = " + ".join(f"{c.removesuffix('/1')}*{names[k]}" for k, c in terms)
        lines.append(f"  {names[i]} * {names[j]} = {value}")
    if result["poincare"] is not None:
        lines.append(f"poincare duality: {'ok' if result['poincare'] else 'FAILED'}")
    if result["violations"] is not None:
        lines.append(f"violations: {len(result['violations'])}")
        lines.extend(f"  {v}" for v in result["violations"])
    for text in result["exotic_products"]:
        lines.append(f"exotic: {text}")
    return "\n".join(lines)


def render_zcl(result: dict[str, Any]) -> str:
    bounds = result["bounds"]
    lines = [
        f"code:        <{result['code']}>",
        f"k0:          {bounds['k0']}",
        f"zcl:         {_interval(bounds['lower'], bounds['upper'], bounds['exact'])}",
        f"TC:          [{result['tc_lower']}, {result['tc_upper']}]",
    ]
    if bounds["certificate"]:
        lines.append(f"certificate: {bounds['certificate']}")
    search = result["search"]
    if search:
        lines.append(
            f"search:      {search['length']} factors over {search['generators']} generators "
            f"({search['states']} states)"
        )
        if search["witness"]:
            lines.append(f"             {' * '.join(search['witness'])}")
    oracle = result["oracle"]
    if oracle:
        lines.append(f"true ring:   {oracle['ring']} has zcl {oracle['zcl']}")
    lines.extend(f"warning:     {w}" for w in result["warnings"])
    return "\n".join(lines)


def render_verify(result: dict[str, Any]) -> str:
    lines = []
    for item in result["items"]:
        status = "PASS" if item["passed"] else "FAIL"
        line = f"{status}  {item['group']}: {item['name']} = {item['actual']}"
        if not item["passed"]:
            line += f" (expected {item['expected']})"
        lines.append(line)
    lines.append(f"{result['passed']} passed, {result['failed']} failed")
    return "\n".join(lines)


def _code_options(func):
    for option in reversed(
        [
            click.option("--lengths", help="Side lengths, e.g. 1,1,1,3,3,4 or 1/2,1,2"),
            click.option("--code", help="Genetic code, e.g. 9421,95 (needs --n)"),
            click.option("--n", "n", type=int, help="Number of sides for --code"),
            click.option("--gees", is_flag=True, help="Read --code as gees"),
        ]
    ):
        func = option(func)
    return func


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Print the response as JSON")
@click.option("--out", type=click.Path(dir_okay=False), help="Write output to FILE")
@click.option("--threads", type=int, help="Worker processes for enumeration")
@click.option("--budget", type=int, help="Cap on partial products in zcl searches")
@click.pass_context
def cli(ctx, as_json, out, threads, budget):
    """
    Cohomology, zcl and TC bounds for spaces of planar polygons.
    """
    config.setup_logging()
    for warning in config.validate():
        click.echo(f"Warning: {warning}", err=True)
    ctx.ensure_object(dict)
    ctx.obj.update(json=as_json, out=out, threads=threads, budget=budget)


@cli.command("analyze")
@_code_options
@click.option("--no-verify", is_flag=True, help="Skip the certificate product check")
@click.pass_context
def analyze_command(ctx, lengths, code, n, gees, no_verify):
    """Full report for one polygon space."""
    args = _provided(
        lengths=lengths,
        code=code,
        n=n,
        gees=gees or None,
        verify=False if no_verify else None,
        budget=ctx.obj["budget"],
    )
    _finish(ctx, analyze(args), render_analyze)


@cli.command("enumerate")
@click.option("--n", "n", type=int, required=True, help="Number of sides")
@click.option("--classify", is_flag=True, help="Verify certificates and print the summary")
@click.option("--no-cache", is_flag=True, help="Ignore and do not write the census cache")
@click.pass_context
def enumerate_command(ctx, n, classify, no_cache):
    """CSV of every realizable code for n sides."""
    result = enumerate_codes(
        _provided(n=n, classify=classify, use_cache=not no_cache, threads=ctx.obj["threads"])
    )
    if result.get("error") or ctx.obj["json"]:
        _finish(ctx, result, render_summary)
        return

    records = [ClassificationRecord.model_validate(r) for r in result["records"]]
    _emit(ctx, census_csv(records).rstrip("\n"))
    if result["summary"]:
        # Keep stdout a clean CSV when no --out is given
        click.echo(render_summary(result["summary"]), err=not ctx.obj["out"])


@cli.command("realize")
@click.option("--code", required=True, help="Genetic code, e.g. 8531")
@click.option("--n", "n", type=int, required=True, help="Number of sides")
@click.option("--gees", is_flag=True, help="Read --code as gees")
@click.pass_context
def realize_command(ctx, code, n, gees):
    """Integer side lengths with a given genetic code."""
    _finish(ctx, realize(_provided(code=code, n=n, gees=gees or None)), render_realize)


@cli.command("ring")
@_code_options
@click.option("--check", is_flag=True, help="Verify duality, associativity, commutativity")
@click.pass_context
def ring_command(ctx, lengths, code, n, gees, check):
    """Basis and structure constants of the canonical ring."""
    args = _provided(lengths=lengths, code=code, n=n, gees=gees or None, check=check or None)
    _finish(ctx, ring(args), render_ring)


@cli.command("zcl")
@_code_options
@click.option("--no-verify", is_flag=True, help="Skip the certificate product check")
@click.option("--search", is_flag=True, help="Search products of barred classes")
@click.option("--degree-one", is_flag=True, help="Search degree-one barred classes only")
@click.option("--max-len", type=int, help="Longest product to try")
@click.pass_context
def zcl_command(ctx, lengths, code, n, gees, no_verify, search, degree_one, max_len):
    """zcl and TC intervals, optionally with a product search."""
    args = _provided(
        lengths=lengths,
        code=code,
        n=n,
        gees=gees or None,
        verify=False if no_verify else None,
        search=search or None,
        degree_one=degree_one or None,
        max_len=max_len,
        budget=ctx.obj["budget"],
    )
    _finish(ctx, zcl(args), render_zcl)


@cli.command("verify-tables")
@click.option("--full", is_flag=True, help="Include the n=8 census (minutes)")
@click.pass_context
def verify_tables_command(ctx, full):
    """Recompute the reference values; exit 1 if any differs."""
    result = verify_tables(_provided(full=full or None, threads=ctx.obj["threads"]))
    _finish(ctx, result, render_verify)
    if not result.get("error") and not result["all_passed"]:
        ctx.exit(1)


def main() -> None:
    cli(obj={})


if __name__ == "__main__":
    main()
