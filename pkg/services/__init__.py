from .certify_service import CertifyService, InvariantViolation
from .contracts import CertifySettings, InvariantTally, VerifySummary
from .report_service import ReportService
from .verify_service import VerifyService

__all__ = [
    "CertifyService",
    "CertifySettings",
    "InvariantTally",
    "InvariantViolation",
    "ReportService",
    "VerifyService",
    "VerifySummary",
]
