from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, model_validator

SCHEMA_VERSION = 1


class CommandResult(BaseModel):
    schema_version: int = SCHEMA_VERSION
    command: str
    status: Literal["ok", "error"]
    payload: Optional[Any] = None
    diagnostics: List[str] = []
    exit_code: int = 0

    @model_validator(mode="after")
    def _error_has_no_payload(self) -> "CommandResult":
        if self.status == "error":
            if self.payload is not None:
                raise ValueError("error result must not carry a payload")
            if self.exit_code == 0:
                raise ValueError("error result needs a nonzero exit code")
        return self


class ConventionOutcome(BaseModel):
    name: str
    description: str
    lr_matrix: List[List[int]]
    kronecker_matrix: List[List[int]]
    product: List[List[int]]
    is_identity: bool


class MatrixExperimentReport(BaseModel):
    nu: str
    index: List[str]
    conventions: List[ConventionOutcome]
    returned_convention: str
    note: str


class HornLREntry(BaseModel):
    triple: str
    lam: str
    mu: str
    nu: str
    coefficient: int
    in_t: bool


class HornLRReport(BaseModel):
    n: int
    r: int
    t_entries: List[HornLREntry]
    complement_entries: List[HornLREntry]

    @property
    def t_positive(self) -> bool:
        return all(entry.coefficient > 0 for entry in self.t_entries)

    @property
    def complement_vanishing(self) -> bool:
        return all(entry.coefficient == 0 for entry in self.complement_entries)

    @property
    def consistent(self) -> bool:
        return self.t_positive and self.complement_vanishing


class CollineationReport(BaseModel):
    n: int
    q: int
    point_count: int
    diagonal: Dict[str, bool]
    reversal_preserved: bool

    @property
    def all_preserved(self) -> bool:
        return self.reversal_preserved and all(self.diagonal.values())


class GrassmannParams(BaseModel):
    n: int
    r: int
    q: int
    length: int
    dimension_binomial: int
    dimension_bruteforce: Optional[int] = None


class CheckResult(BaseModel):
    suite: str
    name: str
    passed: bool
    detail: str = ""


class SuiteReport(BaseModel):
    suite: str
    checks: List[CheckResult]
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def summary(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "total": len(self.checks),
            "passed": sum(check.passed for check in self.checks),
            "failed": len(self.failures),
            "elapsed": round(self.elapsed, 3),
        }
