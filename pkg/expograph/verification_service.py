#!/usr/bin/env python3
"""
Default Verification Service

Concrete implementation of VerificationService using dependency injection.
"""

import logging
from datetime import datetime, timedelta
from typing import Any, Dict, Optional

import pandas as pd

from .interfaces import VerificationRepository
from .models import AnalysisReport, CheckResult, LedgerStats, Magnitude, VerificationRecord

logger = logging.getLogger(__name__)


def _text(value: Any) -> Optional[str]:
    if value is None:
        return None
    if isinstance(value, Magnitude):
        return value.to_json()
    return str(value)


class DefaultVerificationService:
    """Default implementation of VerificationService."""

    def __init__(self, repository: VerificationRepository):
        self.repository = repository

    def record_check(self, subject: str, check: CheckResult,
                     metadata: Optional[Dict[str, Any]] = None) -> None:
        """Record one formula-versus-measurement check."""
        record = VerificationRecord(
            timestamp=datetime.now(),
            subject=subject,
            check_name=check.name,
            expected=_text(check.expected),
            measured=_text(check.measured),
            agreed=check.agreed,
            metadata=metadata
        )
        self.repository.log_check(record)

    def record_report(self, report: AnalysisReport, command: str = "analyze") -> int:
        """Record every check of a report plus one run row."""
        metadata = {"materialized": report.materialized}
        for check in report.checks:
            self.record_check(report.spec, check, metadata)
        self.repository.log_run(command, len(report.checks), {"spec": report.spec})
        logger.info("ledger: %d checks recorded for %s", len(report.checks), report.spec)
        return len(report.checks)

    def get_recent_stats(self, hours: int = 24) -> LedgerStats:
        """Get statistics for recent activity."""
        end_time = datetime.now()
        start_time = end_time - timedelta(hours=hours)

        return self.repository.get_ledger_stats(start_time, end_time)

    def export_csv(self, filepath: str, subject: Optional[str] = None) -> int:
        """Export ledger rows to CSV file."""
        records = self.repository.get_checks(subject=subject)

        data = []
        for record in records:
            row = {
                'timestamp': record.timestamp,
                'subject': record.subject,
                'check_name': record.check_name,
                'expected': record.expected,
                'measured': record.measured,
                'agreed': record.agreed
            }
            data.append(row)

        df = pd.DataFrame(data, columns=['timestamp', 'subject', 'check_name',
                                         'expected', 'measured', 'agreed'])
        df.to_csv(filepath, index=False)
        return len(df)
