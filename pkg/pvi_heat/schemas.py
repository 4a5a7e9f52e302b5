from enum import Enum

from pydantic import BaseModel


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"


class CheckReport(BaseModel):
    """One record of the verify report; field order is the JSON key order."""
    check_name: str
    status: CheckStatus
    detail: str
    witness_digest: str     # sha256 of the witness records
    elapsed_ms: int
