"""
Pydantic schemas - run configuration and the records of the report stream.
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from symcheck.config import (
    DEFAULT_FORMAT,
    DEFAULT_N_MAX,
    DEFAULT_SUITES,
    DEFAULT_WEIGHT_MAX,
    DEFAULT_WORKERS,
    DEFAULT_Y_DEGREE_MAX,
    SUITES,
)

Status = Literal["pass", "fail", "report_only"]


class SuiteConfig(BaseModel):
    """Validated options of one verify run."""
    model_config = ConfigDict(frozen=True)

    suites: List[str] = Field(default_factory=lambda: list(DEFAULT_SUITES))
    n_max: int = Field(default=DEFAULT_N_MAX, ge=1)
    weight_max: int = Field(default=DEFAULT_WEIGHT_MAX, ge=0)
    y_degree_max: int = Field(default=DEFAULT_Y_DEGREE_MAX, ge=0)
    workers: int = Field(default=DEFAULT_WORKERS, ge=1)
    format: Literal["json", "text"] = DEFAULT_FORMAT
    timings: bool = False

    @field_validator("suites")
    @classmethod
    def known_suites(cls, value: List[str]) -> List[str]:
        unknown = [s for s in value if s not in SUITES]
        if unknown:
            raise ValueError(f"unknown suite(s) {unknown}; choose from {list(SUITES)}")
        if not value:
            raise ValueError("at least one suite is required")
        return [s for s in SUITES if s in value]


class CheckReport(BaseModel):
    """Outcome of one verification instance."""
    check: str
    params: Dict[str, str]
    status: Status
    witness: Optional[str] = None
    elapsed_ms: Optional[int] = None


class SummaryRecord(BaseModel):
    """Final record of a report stream."""
    summary: bool = True
    total: int
    passed: int
    failed: int
    report_only: int
    exit_code: int
    wall_ms: Optional[int] = None


class BlockExport(BaseModel):
    """A Kostka or inverse-Kostka weight block as index list plus row-major entries."""
    kind: str
    weight: int
    n: int
    index: List[str]
    entries: List[List[str]]


class ExpandResult(BaseModel):
    """A rendered polynomial from the expand command."""
    object: str
    params: Dict[str, str]
    value: str
