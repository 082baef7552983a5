# 파일: src/report/schema.py
"""
보고서 페이로드 (pydantic v2)

정확 섹션의 행렬 성분은 모두 "p/q" 또는 정수 문자열입니다. 부동소수점은 numeric 섹션에만 허용됩니다.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.exact import ExactMatrix, IdentityCheck, matrix_to_strings


class IdentityRecord(BaseModel):
    model_config = ConfigDict(extra="ignore", populate_by_name=True)

    name: str
    ref: str = Field(alias="paper_ref")
    passed: bool = Field(alias="pass")
    detail: Optional[str] = None

    @classmethod
    def from_check(cls, check: IdentityCheck) -> "IdentityRecord":
        return cls(name=check.name, ref=check.ref, passed=check.passed, detail=check.detail or None)


class ReportDocument(BaseModel):
    model_config = ConfigDict(extra="ignore")

    k: int
    section: str
    matrix: List[List[str]] = Field(default_factory=list)
    identities: List[IdentityRecord] = Field(default_factory=list)
    matrices: Optional[Dict[str, List[List[str]]]] = None
    values: Optional[Dict[str, Any]] = None
    numeric: Optional[Dict[str, Any]] = None
    notes: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.identities)

    @property
    def failed(self) -> List[IdentityRecord]:
        return [r for r in self.identities if not r.passed]


class VerifySummary(BaseModel):
    model_config = ConfigDict(extra="ignore")

    section: str = "verify"
    k_min: int
    k_max: int
    passed: bool
    reports: List[ReportDocument] = Field(default_factory=list)
    errors: Dict[str, str] = Field(default_factory=dict)


def matrix_payload(m: ExactMatrix) -> List[List[str]]:
    return matrix_to_strings(m)


def records(checks) -> List[IdentityRecord]:
    return [IdentityRecord.from_check(c) for c in checks]


def to_canonical_json(model: BaseModel) -> str:
    payload = model.model_dump(by_alias=True, exclude_none=True)
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
