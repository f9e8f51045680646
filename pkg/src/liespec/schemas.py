"""Pydantic request/response models shared by the HTTP service and the CLI.

Rationals travel as strings in lowest terms ("p/q" or "p"); field order is
fixed so serialized records are byte-stable.
"""

from __future__ import annotations

import re
from fractions import Fraction as Q
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = "1"

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class RationalSyntaxError(ValueError):
    pass


def parse_rational(text: str) -> Q:
    """Parse "p/q" or "p"; decimals and anything else are rejected."""
    if not _RATIONAL_RE.match(text.strip()):
        raise RationalSyntaxError(f"malformed rational {text!r}; use p or p/q")
    return Q(text.strip())


def format_rational(q: Q) -> str:
    return str(Q(q))


class WeightOut(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    Lambda: List[int]
    nu: List[int]
    dim: int


class SpectrumEntryOut(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: str = Field(alias="lambda")
    multiplicity: int
    weights: List[WeightOut]


class SpectrumRecord(BaseModel):
    """The machine-readable spectrum table (OutputRecord, schema version 1)."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = SCHEMA_VERSION
    group: str
    gamma: str
    entries: List[SpectrumEntryOut]


class SpectrumRequest(BaseModel):
    group: str
    cutoff: str
    gamma: str = "1"
    workers: int = 1


class CheckRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    group: str
    lam: str = Field(alias="lambda")
    gamma: str = "1"


class CheckResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    group: str
    lam: str = Field(alias="lambda")
    gamma: str
    is_eigenvalue: bool
    weight_count: int
    case_tag: str
    k: Optional[int] = None
    l2: Optional[int] = None
    l3: Optional[int] = None
    formula: str = ""


class ValidateRequest(BaseModel):
    group: str
    cutoff: str


class MismatchOut(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: str = Field(alias="lambda")
    enumerated_weights: int
    theorem_weights: int
    case_tag: str


class ValidateResponse(BaseModel):
    group: str
    cutoff: str
    candidates_checked: int
    ok: bool
    mismatches: List[MismatchOut]


class NumberTheoryRequest(BaseModel):
    op: str
    args: List[str]


class NumberTheoryResponse(BaseModel):
    op: str
    args: List[str]
    result: Union[int, List[int]]


class GroupInfo(BaseModel):
    name: str
    display_name: str
    root_system: str
    dim: int
    pi1_order: int
    center_order: int
    aliases: List[str]
