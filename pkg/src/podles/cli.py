"""Command line front end.

The CLI is a thin client of the operations layer.  By default it runs the
engine in process; with ``--server URL`` every command is forwarded to a
running service instance instead (start one with ``podles serve``).

Exit codes: 0 all checks pass, 1 a verification failed (the report carries
the counterexample), 2 usage or parse error.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import operations
from .expressions import EvalError, ParseError

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _load_config(path: str | None) -> dict:
    """key = value lines; blank lines and # comments ignored."""
    out: dict[str, str] = {}
    if path is None:
        return out
    p = Path(path)
    if not p.exists():
        raise click.ClickException(f"config file not found: {path}")
    for ln, raw in enumerate(p.read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise click.ClickException(f"{path}:{ln}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        out[key] = val
    return out


class Client:
    """Dispatches either in process or to a remote service."""

    def __init__(self, server: str | None):
        self.server = server.rstrip("/") if server else None

    def _http(self, method: str, path: str, **kwargs):
        import httpx

        url = f"{self.server}{path}"
        resp = httpx.request(method, url, timeout=600.0, **kwargs)
        if resp.status_code == 422:
            detail = resp.json().get("detail", resp.text)
            raise operations.UsageError(str(detail))
        resp.raise_for_status()
        return resp

    def eval(self, expression: str) -> dict:
        if self.server:
            return self._http("POST", "/eval",
                              json={"expression": expression}).json()
        return operations.run_eval(expression)

    def verify(self, suite: str, max_level: int, mode: str, s0,
               symbolic_budget: int = 512) -> dict:
        if self.server:
            return self._http("POST", "/verify", json={
                "suite": suite, "max_level": max_level, "mode": mode,
                "s0": None if s0 is None else str(s0),
                "symbolic_budget": symbolic_budget}).json()
        return operations.run_verify(suite, max_level, mode, s0,
                                     symbolic_budget)

    def cohomology(self, max_level: int) -> dict:
        if self.server:
            return self._http(
                "GET", f"/cohomology?max_level={max_level}").json()
        return operations.run_cohomology(max_level)

    def matrix(self, op: str, level: int, sector: str | None, fmt: str):
        if self.server:
            sector_q = f"&sector={sector}" if sector else ""
            resp = self._http(
                "GET", f"/matrix?op={op}&level={level}&format={fmt}{sector_q}")
            return resp.text if fmt == "csv" else resp.json()
        return operations.run_matrix(op, level, sector, fmt)

    def calibrate(self) -> dict:
        if self.server:
            return self._http("GET", "/calibration").json()
        return operations.run_calibrate()


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Forward commands to a running service instead of "
                   "computing in process.")
@click.option("--config", default=None, metavar="PATH",
              help="key = value file with defaults: max_level, s0, mode, "
                   "symbolic_budget.")
@click.pass_context
def main(ctx: click.Context, server: str | None, config: str | None) -> None:
    """Exact verification engine for the q-deformed geometry of the
    Podles sphere."""
    ctx.ensure_object(dict)
    cfg = _load_config(config)
    ctx.obj["client"] = Client(server)
    ctx.obj["config"] = cfg


def _default_level(ctx: click.Context, cli_value: int | None, fallback: int) -> int:
    if cli_value is not None:
        return cli_value
    cfg = ctx.obj["config"]
    if "max_level" in cfg:
        try:
            return int(cfg["max_level"])
        except ValueError:
            raise click.ClickException(f"bad max_level in config: {cfg['max_level']}")
    return fallback


@main.command("eval")
@click.argument("expression")
@click.pass_context
def eval_cmd(ctx: click.Context, expression: str) -> None:
    """Evaluate an expression and print the canonical form."""
    try:
        out = ctx.obj["client"].eval(expression)
    except (ParseError, EvalError, operations.UsageError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    click.echo(out["value"])
    sys.exit(EXIT_OK)


@main.command("verify")
@click.argument("suite", type=click.Choice(operations.SUITES))
@click.option("--max-level", type=int, default=None)
@click.option("--symbolic", "mode", flag_value="symbolic", default=True)
@click.option("--numeric", "s0_numeric", default=None, metavar="S0",
              help="verify after exact specialization at s = S0 (e.g. 7/10)")
@click.pass_context
def verify_cmd(ctx: click.Context, suite: str, max_level: int | None,
               mode: str, s0_numeric: str | None) -> None:
    """Run a verification suite and print the JSON report."""
    cfg = ctx.obj["config"]
    level = _default_level(ctx, max_level, 3)
    s0 = s0_numeric if s0_numeric is not None else cfg.get("s0")
    run_mode = "numeric" if s0_numeric is not None else cfg.get("mode", "symbolic")
    try:
        budget = int(cfg.get("symbolic_budget", "512"))
    except ValueError:
        click.echo("error: bad symbolic_budget in config", err=True)
        sys.exit(EXIT_USAGE)
    try:
        report = ctx.obj["client"].verify(suite, level, run_mode, s0, budget)
    except operations.UsageError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    click.echo(operations.to_json(report), nl=False)
    sys.exit(EXIT_OK if report["failed"] == 0 else EXIT_VIOLATION)


@main.command("cohomology")
@click.option("--max-level", type=int, default=None)
@click.pass_context
def cohomology_cmd(ctx: click.Context, max_level: int | None) -> None:
    """Harmonic dimensions per block, totals and the Dolbeault refinement."""
    level = _default_level(ctx, max_level, 4)
    try:
        table = ctx.obj["client"].cohomology(level)
    except operations.UsageError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    click.echo(operations.to_json(table), nl=False)
    sys.exit(EXIT_OK if table["refinement"] == "ok" else EXIT_VIOLATION)


@main.command("matrix")
@click.option("--op", "op", required=True, type=click.Choice(operations.MATRIX_OPS))
@click.option("--level", type=int, required=True)
@click.option("--sector", type=click.Choice(operations.SECTORS), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
              default="json")
@click.pass_context
def matrix_cmd(ctx: click.Context, op: str, level: int, sector: str | None,
               fmt: str) -> None:
    """Export the exact block matrix of an operator."""
    try:
        out = ctx.obj["client"].matrix(op, level, sector, fmt)
    except operations.UsageError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    if fmt == "csv":
        click.echo(out, nl=False)
    else:
        click.echo(operations.to_json(out), nl=False)
    sys.exit(EXIT_OK)


@main.command("calibrate")
@click.pass_context
def calibrate_cmd(ctx: click.Context) -> None:
    """Derive all normalization constants and print the report."""
    from .calculus import CalibrationError

    try:
        report = ctx.obj["client"].calibrate()
    except CalibrationError as exc:
        click.echo(f"calibration failed: {exc}", err=True)
        sys.exit(EXIT_VIOLATION)
    click.echo(operations.to_json(report), nl=False)
    sys.exit(EXIT_OK)


@main.command("serve")
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve_cmd(host: str, port: int) -> None:
    """Start the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
