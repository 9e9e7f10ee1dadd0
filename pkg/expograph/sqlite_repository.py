#!/usr/bin/env python3
"""
SQLite Verification Repository

Concrete implementation of VerificationRepository using SQLite database.
"""

import json
import os
import sqlite3
from datetime import datetime, timedelta
from typing import Any, Dict, List, Optional

from .models import DatabaseSchema, LedgerStats, VerificationRecord
from .settings import DATABASE_PATH


class SQLiteVerificationRepository:
    """SQLite implementation of VerificationRepository."""

    def __init__(self, db_path: str = DATABASE_PATH):
        self.db_path = db_path
        self._ensure_db_directory()

    def _ensure_db_directory(self):
        """Ensure the database directory exists."""
        db_dir = os.path.dirname(self.db_path)
        if db_dir and not os.path.exists(db_dir):
            os.makedirs(db_dir, exist_ok=True)

    def initialize(self) -> None:
        """Initialize the database with required tables."""
        with sqlite3.connect(self.db_path) as conn:
            for schema in DatabaseSchema.get_all_schemas():
                conn.execute(schema)
            conn.commit()

    def log_check(self, record: VerificationRecord) -> int:
        """Persist one check and return its row ID."""
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()
            metadata_json = json.dumps(record.metadata, sort_keys=True) if record.metadata else None
            agreed = None if record.agreed is None else int(record.agreed)

            cursor.execute("""
                INSERT INTO verification_checks
                (timestamp, subject, check_name, expected, measured, agreed, metadata)
                VALUES (?, ?, ?, ?, ?, ?, ?)
            """, (
                (record.timestamp or datetime.now()).isoformat(sep=" "),
                record.subject,
                record.check_name,
                record.expected,
                record.measured,
                agreed,
                metadata_json
            ))

            check_id = cursor.lastrowid
            conn.commit()
            return check_id

    def log_run(self, command: str, total_checks: int, config_snapshot: Dict[str, Any]) -> int:
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()
            cursor.execute("""
                INSERT INTO verification_runs (command, total_checks, config_snapshot)
                VALUES (?, ?, ?)
            """, (command, total_checks, json.dumps(config_snapshot, sort_keys=True, default=str)))
            run_id = cursor.lastrowid
            conn.commit()
            return run_id

    def get_checks(self,
                   start_time: Optional[datetime] = None,
                   end_time: Optional[datetime] = None,
                   subject: Optional[str] = None,
                   limit: Optional[int] = None) -> List[VerificationRecord]:
        """Get checks with optional filtering, newest first."""

        query = "SELECT * FROM verification_checks WHERE 1=1"
        params: List[Any] = []

        if start_time:
            query += " AND timestamp >= ?"
            params.append(start_time.isoformat(sep=" "))

        if end_time:
            query += " AND timestamp <= ?"
            params.append(end_time.isoformat(sep=" "))

        if subject:
            query += " AND subject = ?"
            params.append(subject)

        query += " ORDER BY timestamp DESC, id DESC"

        if limit:
            query += " LIMIT ?"
            params.append(limit)

        with sqlite3.connect(self.db_path) as conn:
            conn.row_factory = sqlite3.Row
            cursor = conn.cursor()
            cursor.execute(query, params)
            rows = cursor.fetchall()

            records = []
            for row in rows:
                metadata = json.loads(row['metadata']) if row['metadata'] else None
                records.append(VerificationRecord(
                    id=row['id'],
                    timestamp=datetime.fromisoformat(row['timestamp']),
                    subject=row['subject'],
                    check_name=row['check_name'],
                    expected=row['expected'],
                    measured=row['measured'],
                    agreed=None if row['agreed'] is None else bool(row['agreed']),
                    metadata=metadata
                ))

            return records

    def get_ledger_stats(self,
                         start_time: Optional[datetime] = None,
                         end_time: Optional[datetime] = None) -> LedgerStats:
        """Get aggregated statistics for a time period."""

        if not start_time:
            start_time = datetime.now() - timedelta(days=1)
        if not end_time:
            end_time = datetime.now()
        window = (start_time.isoformat(sep=" "), end_time.isoformat(sep=" "))

        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()

            cursor.execute("""
                SELECT
                    COUNT(*),
                    SUM(CASE WHEN agreed = 1 THEN 1 ELSE 0 END),
                    SUM(CASE WHEN agreed = 0 THEN 1 ELSE 0 END),
                    SUM(CASE WHEN agreed IS NULL THEN 1 ELSE 0 END),
                    COUNT(DISTINCT subject),
                    MIN(timestamp),
                    MAX(timestamp)
                FROM verification_checks
                WHERE timestamp BETWEEN ? AND ?
            """, window)

            total, agreed, mismatched, formula_only, subjects, first, last = cursor.fetchone()
            stats = LedgerStats(
                total_checks=total or 0,
                agreed_checks=agreed or 0,
                mismatched_checks=mismatched or 0,
                formula_only_checks=formula_only or 0,
                subjects=subjects or 0,
            )
            if first:
                stats.first_check = datetime.fromisoformat(first)
            if last:
                stats.last_check = datetime.fromisoformat(last)
            return stats

    def cleanup_old_data(self, days_to_keep: int = 30) -> int:
        """Remove old checks. Returns number of records removed."""
        cutoff_date = datetime.now() - timedelta(days=days_to_keep)

        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()
            cursor.execute("""
                DELETE FROM verification_checks
                WHERE timestamp < ?
            """, (cutoff_date.isoformat(sep=" "),))

            deleted_count = cursor.rowcount
            conn.commit()
            return deleted_count

    def get_database_info(self) -> Dict[str, Any]:
        """Get database information and statistics."""
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()

            cursor.execute("SELECT COUNT(*) FROM verification_checks")
            check_count = cursor.fetchone()[0]
            cursor.execute("SELECT COUNT(*) FROM verification_runs")
            run_count = cursor.fetchone()[0]

            cursor.execute("PRAGMA page_count")
            page_count = cursor.fetchone()[0]
            cursor.execute("PRAGMA page_size")
            page_size = cursor.fetchone()[0]
            db_size_bytes = page_count * page_size

            cursor.execute("""
                SELECT MIN(timestamp), MAX(timestamp)
                FROM verification_checks
            """)
            date_range = cursor.fetchone()

            return {
                "db_path": self.db_path,
                "total_checks": check_count,
                "total_runs": run_count,
                "db_size_bytes": db_size_bytes,
                "db_size_mb": round(db_size_bytes / (1024 * 1024), 2),
                "earliest_check": date_range[0] if date_range[0] else None,
                "latest_check": date_range[1] if date_range[1] else None
            }
