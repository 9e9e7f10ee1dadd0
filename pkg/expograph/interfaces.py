#!/usr/bin/env python3
"""
Expograph Interfaces

Abstract interfaces for services and stores using Protocol for dependency injection.
"""

from datetime import datetime
from typing import Any, Dict, List, Optional, Protocol, Tuple

import pandas as pd

from .models import (
    AnalysisReport,
    CheckResult,
    ExpoEdgeKind,
    LedgerStats,
    VerificationRecord,
)


class NeighborOracle(Protocol):
    """Anything that can enumerate the neighbors of a vertex id without a materialized graph."""

    order: int

    def neighbors(self, x: int) -> List[Tuple[int, ExpoEdgeKind]]:
        """Sorted (neighbor id, edge kind) pairs of x."""
        ...

    def degree(self, x: int) -> int:
        """Number of neighbors of x."""
        ...


class VerificationRepository(Protocol):
    """Abstract interface for verification ledger storage."""

    def initialize(self) -> None:
        """Initialize the repository."""
        ...

    def log_check(self, record: VerificationRecord) -> int:
        """Persist one check. Returns the row ID."""
        ...

    def log_run(self, command: str, total_checks: int, config_snapshot: Dict[str, Any]) -> int:
        """Persist one CLI run. Returns the row ID."""
        ...

    def get_checks(self,
                   start_time: Optional[datetime] = None,
                   end_time: Optional[datetime] = None,
                   subject: Optional[str] = None,
                   limit: Optional[int] = None) -> List[VerificationRecord]:
        """Get checks with optional filtering."""
        ...

    def get_ledger_stats(self,
                         start_time: Optional[datetime] = None,
                         end_time: Optional[datetime] = None) -> LedgerStats:
        """Get aggregated statistics for a time period."""
        ...

    def get_database_info(self) -> Dict[str, Any]:
        """Get database path, row counts and size."""
        ...


class VerificationService(Protocol):
    """High-level ledger interface."""

    def record_check(self, subject: str, check: CheckResult,
                     metadata: Optional[Dict[str, Any]] = None) -> None:
        """Record one formula-versus-measurement check."""
        ...

    def record_report(self, report: AnalysisReport, command: str = "analyze") -> int:
        """Record every check of a report. Returns the number of rows written."""
        ...

    def get_recent_stats(self, hours: int = 24) -> LedgerStats:
        """Get statistics for recent activity."""
        ...

    def export_csv(self, filepath: str, subject: Optional[str] = None) -> int:
        """Export ledger rows to CSV. Returns the number of rows."""
        ...


class AnalysisService(Protocol):
    """Analysis of a single graph expression."""

    def analyze(self, expr: str, kappa: bool = False, lam: bool = False,
                superlambda: bool = False, diam: str = "formula") -> AnalysisReport:
        """Formula values, measured values where within budget, and their comparison."""
        ...


class TableService(Protocol):
    """Comparison tables with formula-only / verified cells."""

    def build_table(self, which: int, **params: Any) -> pd.DataFrame:
        """Build one table as a DataFrame of rendered cells."""
        ...

    def export_csv(self, frame: pd.DataFrame, filepath: str) -> None:
        """Write a table to CSV."""
        ...
