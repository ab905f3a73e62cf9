"""Core operations shared by the HTTP service and the CLI.

A single Engine instance holds the calibrated calculus, the Peter-Weyl
block cache and memoized reports, so a long-running service amortizes the
expensive state across requests.  All results are plain JSON-ready dicts
with deterministic ordering; two identical requests produce byte-identical
serializations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import expressions, verify
from .calculus import Calculus, CalibrationReport, calibrate
from .scalars import SpecializationPole
from .verify import BlockSet, DEFAULT_S0

SUITES = ("hopf", "calculus", "metric", "hodge", "sl2", "kahler", "all")
SECTORS = ("omega0", "omega10", "omega01", "omega2")
MATRIX_OPS = ("d", "del", "dbar", "d*", "del*", "dbar*", "D_d", "D_del",
              "D_dbar", "Delta_d", "Delta_del", "Delta_dbar", "L", "Lambda",
              "Counting", "HodgeStar")


class UsageError(ValueError):
    """Bad request parameters; maps to HTTP 422 / exit code 2."""


@dataclass
class Engine:
    calc: Calculus = field(default_factory=Calculus)
    _blocks: BlockSet | None = None
    _calibration: CalibrationReport | None = None

    @property
    def blocks(self) -> BlockSet:
        if self._blocks is None:
            self._blocks = BlockSet(self.calc)
        return self._blocks

    def calibration(self) -> CalibrationReport:
        if self._calibration is None:
            self._calibration = calibrate()
        return self._calibration


_ENGINE: Engine | None = None


def engine() -> Engine:
    global _ENGINE
    if _ENGINE is None:
        _ENGINE = Engine()
    return _ENGINE


def reset_engine() -> None:
    global _ENGINE
    _ENGINE = None


def run_eval(expression: str) -> dict:
    eng = engine()
    value, rendered = expressions.eval_text(expression, eng.calc)
    return {"expression": expression, "value": rendered}


def _parse_s0(s0: str | Fraction | None) -> Fraction:
    if s0 is None:
        return DEFAULT_S0
    if isinstance(s0, Fraction):
        return s0
    try:
        if "/" in s0:
            p, q = s0.split("/")
            return Fraction(int(p), int(q))
        return Fraction(s0)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad specialization point {s0!r}: {exc}") from exc


def run_verify(suite: str, max_level: int = 3, mode: str = "symbolic",
               s0: str | Fraction | None = None,
               symbolic_budget: int = 512) -> dict:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {SUITES}")
    if mode not in ("symbolic", "numeric", "certified"):
        raise UsageError(
            f"mode must be symbolic, numeric or certified, got {mode!r}")
    if max_level < 0:
        raise UsageError("max level must be nonnegative")
    point = _parse_s0(s0)
    eng = engine()
    calc, blocks = eng.calc, eng.blocks

    downgraded = False
    if mode == "symbolic" and suite != "hopf":
        # entry-size budget: past it, identities are certified by evaluation
        # at degree-bound many exact points instead of symbolic equality
        degree = 0
        for n in range(max_level + 1):
            if blocks.block(n).dim:
                mat = blocks.matrix_of(blocks.operator("Delta_d"), n)
                degree = max(degree, verify.matrix_degree(mat))
        if degree > symbolic_budget:
            mode = "certified"
            downgraded = True

    rows: list[dict] = []
    try:
        if suite in ("hopf", "all"):
            rows.extend(verify.hopf_suite(max(2, min(max_level, 4)), mode, point))
        if suite in ("calculus", "all"):
            rows.extend(verify.calculus_suite(calc, blocks, max_level, mode, point))
        if suite in ("metric", "all"):
            rows.extend(verify.metric_suite(calc, blocks, max_level, mode, point))
        if suite in ("hodge", "all"):
            rows.extend(verify.hodge_suite(calc, blocks, max_level, mode, point))
        if suite in ("sl2", "all"):
            rows.extend(verify.sl2_suite(calc, blocks, max_level, mode, point))
        if suite in ("kahler", "all"):
            rows.extend(verify.kahler_suite(calc, blocks, max_level, mode, point))
    except SpecializationPole as exc:
        rows.append({"check": f"{suite}:specialization", "block": -1,
                     "sector": "", "status": "fail", "mode": mode,
                     "counterexample": str(exc)})

    rows = verify._sorted_rows(rows)
    report = {
        "suite": suite,
        "max_level": max_level,
        "mode": mode,
        "budget_downgrade": downgraded,
        "s0": str(point) if mode == "numeric" else None,
        "results": rows,
        "passed": sum(1 for r in rows if r["status"] == "pass"),
        "failed": sum(1 for r in rows if r["status"] == "fail"),
        "calibration": eng.calibration().to_dict(),
    }
    return report


def run_cohomology(max_level: int = 4) -> dict:
    if max_level < 0:
        raise UsageError("max level must be nonnegative")
    eng = engine()
    table = verify.cohomology(eng.calc, eng.blocks, max_level)
    table["H0"] = table["totals"]["H0"]
    table["H1"] = table["totals"]["H1"]
    table["H2"] = table["totals"]["H2"]
    table["refinement"] = "ok" if table["refinement_ok"] else "violated"
    return table


def run_matrix(op: str, level: int, sector: str | None = None,
               fmt: str = "json") -> dict | str:
    if op not in MATRIX_OPS:
        raise UsageError(f"unknown operator {op!r}; choose from {MATRIX_OPS}")
    if sector is not None and sector not in SECTORS:
        raise UsageError(f"unknown sector {sector!r}; choose from {SECTORS}")
    if fmt not in ("json", "csv"):
        raise UsageError(f"format must be json or csv, got {fmt!r}")
    if level < 0:
        raise UsageError("level must be nonnegative")
    eng = engine()
    blocks = eng.blocks
    blk = blocks.block(level)
    mat = blocks.matrix_of(blocks.operator(op), level)
    if sector is not None:
        lo, hi = blk.slices[sector]
        cols = list(range(lo, hi))
    else:
        cols = list(range(blk.dim))
    rows_ix = list(range(blk.dim))
    entries = [[mat[r][c].render() for c in cols] for r in rows_ix]
    if fmt == "csv":
        lines = ["row,col,value"]
        for r in rows_ix:
            for j, c in enumerate(cols):
                val = mat[r][c]
                if not val.is_zero():
                    lines.append(f"{r},{j},{val.render()}")
        return "\n".join(lines) + "\n"
    return {
        "op": op,
        "level": level,
        "sector": sector or "all",
        "shape": [len(rows_ix), len(cols)],
        "sector_dims": blk.sector_dims(),
        "entries": entries,
    }


def run_calibrate() -> dict:
    return engine().calibration().to_dict()


def to_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
