"""Pydantic request/response models for the verification service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str = "ok"


class EvalRequest(BaseModel):
    expression: str = Field(..., min_length=1, description="expression to evaluate")


class EvalResponse(BaseModel):
    expression: str
    value: str


class VerifyRequest(BaseModel):
    suite: str = Field("all", description="hopf, calculus, metric, hodge, sl2, kahler or all")
    max_level: int = Field(3, ge=0, le=8)
    mode: str = Field("symbolic", description="symbolic, numeric or certified")
    s0: Optional[str] = Field(None, description="rational specialization point, e.g. 7/10")
    symbolic_budget: int = Field(512, ge=1, description="entry degree budget "
                                 "past which identities are certified by "
                                 "evaluation instead of symbolic equality")


class CheckResult(BaseModel):
    check: str
    block: int
    sector: str
    status: str
    mode: str
    counterexample: Optional[str] = None


class VerifyResponse(BaseModel):
    suite: str
    max_level: int
    mode: str
    budget_downgrade: bool
    s0: Optional[str]
    results: list[CheckResult]
    passed: int
    failed: int
    calibration: dict


class CohomologyResponse(BaseModel):
    max_level: int
    H0: int
    H1: int
    H2: int
    refinement: str
    totals: dict
    bidegree_totals: dict
    per_block: list[dict]
    refinement_ok: bool
    H0_equals_H2: bool
    pairing_H10_H01: dict


class MatrixResponse(BaseModel):
    op: str
    level: int
    sector: str
    shape: list[int]
    sector_dims: dict
    entries: list[list[str]]
