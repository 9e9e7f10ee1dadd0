#!/usr/bin/env python3
"""
Verification Ledger Tests

SQLite repository, the verification service on top of it, and the
dependency-injection container wiring.
"""

import os
import sys
import tempfile
import traceback

import pandas as pd

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from container import initialize_expograph_system
from expograph import (
    AnalysisReport,
    CheckResult,
    DefaultVerificationService,
    SQLiteVerificationRepository,
)
from expograph.expo import magnitude


def _result(ok):
    print(f"  Result: {'✅ PASS' if ok else '❌ FAIL'}")
    print()
    return ok


def _service(tmp):
    repository = SQLiteVerificationRepository(os.path.join(tmp, "ledger", "verification.db"))
    repository.initialize()
    return repository, DefaultVerificationService(repository)


def test_record_and_stats():
    print("Test LED_001: recorded checks and their statistics")
    with tempfile.TemporaryDirectory() as tmp:
        repository, service = _service(tmp)
        service.record_check("EXP(K2,K2)", CheckResult("order", 8, 8))
        service.record_check("EXP(K2,K2)", CheckResult("diameter", 4, 5))
        service.record_check("PSI(4)", CheckResult("order", magnitude(2 ** 2059)))
        stats = service.get_recent_stats(hours=1)
        records = repository.get_checks(subject="EXP(K2,K2)")
        print(f"  total {stats.total_checks}, agreed {stats.agreed_checks}, "
              f"mismatched {stats.mismatched_checks}, formula-only {stats.formula_only_checks}")
        ok = (stats.total_checks == 3 and stats.agreed_checks == 1
              and stats.mismatched_checks == 1 and stats.formula_only_checks == 1
              and stats.subjects == 2 and stats.agreement_rate == 0.5
              and len(records) == 2
              and records[0].check_name == "diameter" and records[0].agreed is False
              and records[1].expected == "8" and records[1].agreed is True)
        psi = repository.get_checks(subject="PSI(4)")
        ok = (ok and psi[0].expected == magnitude(2 ** 2059).to_json()
              and psi[0].measured is None and psi[0].agreed is None)
    return _result(ok)


def test_record_report_and_export():
    print("Test LED_002: report rows, run rows and CSV export")
    with tempfile.TemporaryDirectory() as tmp:
        repository, service = _service(tmp)
        report = AnalysisReport(spec="EXP(C8,K2)", order=magnitude(128), materialized=True,
                                checks=[CheckResult("order", 128, 128), CheckResult("diameter", 10, 10)])
        recorded = service.record_report(report)
        info = repository.get_database_info()
        target = os.path.join(tmp, "exports", "ledger.csv")
        os.makedirs(os.path.dirname(target))
        exported = service.export_csv(target, subject="EXP(C8,K2)")
        frame = pd.read_csv(target)
        print(f"  recorded {recorded}, runs {info['total_runs']}, exported {exported}")
        ok = (recorded == 2 and info["total_checks"] == 2 and info["total_runs"] == 1
              and exported == 2 and list(frame["check_name"]) == ["diameter", "order"]
              and repository.get_checks()[0].metadata == {"materialized": True}
              and repository.cleanup_old_data(days_to_keep=30) == 0)
    return _result(ok)


def test_container_wiring():
    print("Test LED_003: container configuration overrides")
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "db", "verification.db")
        container = initialize_expograph_system({"database_path": path, "max_vertices": 1000,
                                                 "table_max_vertices": 500},
                                                initialize_ledger=True)
        analysis = container.analysis_service()
        tables = container.table_service()
        ok = (os.path.exists(path)
              and container.config.max_vertices() == 1000
              and analysis.max_vertices == 1000
              and tables.max_vertices == 500
              and container.verification_repository() is container.verification_repository()
              and container.verification_service().repository.db_path == path)
        print(f"  ledger at {path}: {os.path.exists(path)}")
    plain = initialize_expograph_system()
    ok = ok and plain.config.ham_dp_limit() == 15 and plain.table_service().flow_max_vertices == 400
    return _result(ok)


def main():
    """Run all ledger tests."""
    print("=" * 60)
    print("VERIFICATION LEDGER TESTS")
    print("=" * 60)
    print()

    tests = [
        test_record_and_stats,
        test_record_report_and_export,
        test_container_wiring,
    ]

    passed = 0
    total = len(tests)

    for test in tests:
        try:
            if test():
                passed += 1
        except Exception as e:
            print(f"  ❌ {test.__name__} raised {e!r}")
            traceback.print_exc()
            print()

    print("=" * 60)
    print(f"RESULTS: {passed}/{total} tests passed")
    if passed == total:
        print("🎉 ALL TESTS PASSED!")
    else:
        print(f"❌ {total - passed} tests failed")
    print("=" * 60)

    return passed == total


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
