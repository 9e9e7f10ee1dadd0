#!/usr/bin/env python3
"""
Expograph CLI

Command-line interface for generating exponential graphs, analyzing them,
routing, building Hamiltonicity certificates, reproducing the comparison
tables and reviewing the verification ledger.
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from container import initialize_expograph_system
from expograph import expressions, graph_core
from expograph.errors import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    ExpoGraphError,
    MalformedCertificateError,
    PreconditionError,
)
from expograph.hamiltonicity import (
    canonical_hamiltonian_cycle,
    cist_gkn,
    cp_ham_cycle,
    edhc_gkn,
    ham_cycle_gk2,
    lift_ham_cycle,
    verify_cist,
    verify_edge_disjoint,
    verify_ham_cycle,
)
from expograph.connectivity import verify_cut
from expograph.metrics import measure_route, route, verify_route_plan
from expograph.models import AnalysisReport, CheckResult, CistPair, CutWitness, HamCycleCert, RoutePlan
from expograph.settings import CIST_EXHAUSTIVE_LIMIT, REPORT_SCHEMA_VERSION

logger = logging.getLogger("expograph")

CIST_SAMPLES = 100


class ExpoArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, default=str)


def emit(text: str, out: Optional[str]) -> None:
    """Write text to the --out path, or stdout."""
    if not out:
        print(text)
        return
    directory = os.path.dirname(out)
    if directory and not os.path.exists(directory):
        os.makedirs(directory, exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text if text.endswith("\n") else text + "\n")


def print_report(report: AnalysisReport) -> None:
    print(f"Analysis: {report.spec}")
    print("=" * 50)
    print(f"Order: {report.order}")
    if report.size is not None:
        print(f"Size: {report.size}")
    print(f"Degree: min {report.min_degree}, max {report.max_degree}")
    for key, value in report.diameter.items():
        print(f"Diameter ({key}): {value}")
    if report.connectivity is not None:
        c = report.connectivity
        print(f"Connectivity: kappa {c.kappa}, lambda {c.lam}, delta {c.delta}")
        if c.super_lambda is not None:
            print(f"Super-lambda: {c.super_lambda.value} (lambda' = {c.lambda_prime})")
    if report.hamiltonicity:
        print(f"Hamiltonicity: {report.hamiltonicity}")
    for note in report.notes:
        print(f"Note: {note}")
    if report.checks:
        print("Checks:")
        for check in report.checks:
            if check.agreed is None:
                print(f"  - {check.name}: {check.expected} (formula only)")
            elif check.agreed:
                print(f"  ✓ {check.name}: {check.measured}")
            else:
                print(f"  ❌ {check.name}: expected {check.expected}, measured {check.measured}")


def parse_params(pairs: List[str]) -> Dict[str, Any]:
    params: Dict[str, Any] = {}
    for pair in pairs or []:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ExpoGraphError(f"table parameter must look like key=value, got {pair!r}")
        params[key] = int(value) if value.lstrip("-").isdigit() else value
    return params


def build_certificate(expr: str, what: str, pivot: bool, max_vertices: int) -> Dict[str, Any]:
    """Construct the requested certificate document for an EXP expression."""
    space = expressions.space(expr, max_vertices=max_vertices)
    G, H = space.base, space.exponent
    hc = canonical_hamiltonian_cycle(G)
    if what == "cycle":
        if H.n == 2 and H.m == 1:
            cert = ham_cycle_gk2(G, hc)
        else:
            cycle = cp_ham_cycle(G, hc, space.q)
            cert = lift_ham_cycle(space, cycle, require="pivot" if pivot else "connected")
        cert.host = space.name
        return cert.to_dict()
    if not H.is_complete():
        raise PreconditionError("exponent must be complete (K_n)")
    if what == "edhc":
        first, second = edhc_gkn(G, hc, H.n)
        first.host = second.host = space.name
        return {"type": "edhc-pair", "host": space.name,
                "cycles": [first.to_dict(), second.to_dict()]}
    pair = cist_gkn(G, hc, H.n)
    pair.host = space.name
    return pair.to_dict()


def check_certificate(expr: str, document: Dict[str, Any], max_vertices: int, seed: int) -> bool:
    """Re-check a certificate document against the host regenerated from expr."""
    kind = document.get("type")
    if kind == "ham-cycle":
        return verify_ham_cycle(HamCycleCert.from_dict(document), expressions.space(expr, max_vertices))
    if kind == "edhc-pair":
        cycles = document.get("cycles")
        if not isinstance(cycles, list) or len(cycles) != 2:
            raise MalformedCertificateError("edhc-pair needs exactly two cycles")
        space = expressions.space(expr, max_vertices)
        first, second = (HamCycleCert.from_dict(c) for c in cycles)
        return (verify_ham_cycle(first, space) and verify_ham_cycle(second, space)
                and verify_edge_disjoint(first, second))
    if kind == "cist-pair":
        return verify_cist(CistPair.from_dict(document), expressions.space(expr, max_vertices),
                           exhaustive_limit=CIST_EXHAUSTIVE_LIMIT, samples=CIST_SAMPLES, seed=seed)
    if kind == "route-plan":
        return verify_route_plan(RoutePlan.from_dict(document), expressions.space(expr, max_vertices))
    if "elements" in document:
        graph = expressions.build(expr, max_vertices=max_vertices)
        return verify_cut(graph, CutWitness.from_dict(document))
    raise MalformedCertificateError(f"unknown certificate type {kind!r}")


def main(argv: Optional[List[str]] = None) -> int:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', help='Write output to this path instead of stdout')
    common.add_argument('--json', action='store_true', help='Emit JSON instead of text')
    common.add_argument('--max-vertices', type=int, help='Materialization budget')
    common.add_argument('--canonical', action='store_true', help='Byte-reproducible output (no timing)')
    common.add_argument('--seed', type=int, default=0, help='Seed for sampled checks')
    common.add_argument('--ledger', help='Record checks in this ledger database')
    common.add_argument('--verbose', action='store_true', help='Debug logging')

    parser = ExpoArgumentParser(description="Exponential graph toolkit")
    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    # Generate command
    gen_parser = subparsers.add_parser('gen', parents=[common], help='Write an edge list and JSON sidecar')
    gen_parser.add_argument('expr', help='Graph expression, e.g. EXP(K2,K2)')

    # Analyze command
    analyze_parser = subparsers.add_parser('analyze', parents=[common], help='Formula and measured analysis')
    analyze_parser.add_argument('expr', help='Graph expression')
    analyze_parser.add_argument('--kappa', action='store_true', help='Vertex connectivity by max-flow')
    analyze_parser.add_argument('--lambda', dest='lam', action='store_true', help='Edge connectivity')
    analyze_parser.add_argument('--superlambda', action='store_true', help='Super edge-connectivity verdict')
    analyze_parser.add_argument('--diam', choices=['formula', 'bfs', 'both'], default='formula',
                                help='Diameter by formula, BFS or both')

    # Route command
    route_parser = subparsers.add_parser('route', parents=[common], help='Route between two vertices of G^H')
    route_parser.add_argument('expr', help='Exponential graph expression')
    route_parser.add_argument('x', type=int, help='Source vertex id')
    route_parser.add_argument('y', type=int, help='Target vertex id')
    route_parser.add_argument('--mode', choices=['exact', 'hamcycle'], default='exact', help='Routing mode')

    # Hamiltonicity command
    ham_parser = subparsers.add_parser('ham', parents=[common], help='Build Hamiltonicity certificates')
    ham_parser.add_argument('expr', help='Exponential graph expression')
    ham_parser.add_argument('--what', choices=['cycle', 'edhc', 'cist'], default='cycle',
                            help='Certificate to construct')
    ham_parser.add_argument('--verify', action='store_true', help='Re-check before writing')
    ham_parser.add_argument('--pivot', action='store_true',
                            help='Lift with the pivot-vertex precondition instead of Hamiltonian-connectedness')

    # Tables command
    tables_parser = subparsers.add_parser('tables', parents=[common], help='Reproduce a comparison table')
    tables_parser.add_argument('which', type=int, choices=range(1, 9), help='Table number (1-8)')
    tables_parser.add_argument('--param', action='append', default=[],
                               help='Table parameter key=value, e.g. n=3 (repeatable)')

    # Verify command
    verify_parser = subparsers.add_parser('verify', parents=[common], help='Re-check a saved certificate')
    verify_parser.add_argument('expr', help='Host graph expression')
    verify_parser.add_argument('--certificate', required=True, help='Certificate JSON file')

    # Ledger command
    ledger_parser = subparsers.add_parser('ledger', parents=[common], help='Review the verification ledger')
    ledger_parser.add_argument('action', choices=['info', 'recent', 'stats', 'export'], help='Ledger action')
    ledger_parser.add_argument('output_file', nargs='?', help='CSV path for export')
    ledger_parser.add_argument('--limit', type=int, default=20, help='Rows to show')
    ledger_parser.add_argument('--subject', help='Filter by subject expression')
    ledger_parser.add_argument('--hours', type=int, default=24, help='Hours back to analyze')

    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="[%(levelname)s] %(message)s")

    overrides: Dict[str, Any] = {"canonical": args.canonical, "seed": args.seed}
    if args.max_vertices is not None:
        overrides["max_vertices"] = overrides["table_max_vertices"] = args.max_vertices
    if args.ledger:
        overrides["database_path"] = args.ledger
    use_ledger = bool(args.ledger) or args.command == 'ledger'

    # Initialize container and services
    container = initialize_expograph_system(overrides, initialize_ledger=use_ledger)
    max_vertices = container.config.max_vertices()
    verification = container.verification_service() if use_ledger else None

    try:
        if args.command == 'gen':
            graph = expressions.build(args.expr, max_vertices=max_vertices)
            if args.out:
                graph_core.write_edge_list(graph, args.out,
                                           comments=[f"expograph {graph.name}",
                                                     f"schema {REPORT_SCHEMA_VERSION}"])
                sidecar = {"schemaVersion": REPORT_SCHEMA_VERSION, **graph_core.describe(graph)}
                emit(dump_json(sidecar), f"{args.out}.json")
                print(f"Wrote {graph.n} vertices, {graph.m} edges to {args.out}")
            else:
                print(graph_core.format_edge_list(graph), end="")

        elif args.command == 'analyze':
            analysis = container.analysis_service()
            report = analysis.analyze(args.expr, kappa=args.kappa, lam=args.lam,
                                      superlambda=args.superlambda, diam=args.diam)
            if args.json or args.out:
                emit(dump_json(report.to_dict(REPORT_SCHEMA_VERSION, canonical=args.canonical)), args.out)
            else:
                print_report(report)
            if verification:
                verification.record_report(report, command="analyze")
            if report.mismatches:
                return EXIT_MISMATCH

        elif args.command == 'route':
            space = expressions.space(args.expr, max_vertices=max_vertices)
            plan = route(space, args.x, args.y, mode=args.mode)
            if space.order <= max_vertices:
                plan = measure_route(plan, expressions.build(args.expr, max_vertices=max_vertices))
            else:
                logger.warning("%s not materialized; stretch unavailable", space.name)
            emit(dump_json(plan.to_dict()), args.out)
            if plan.bfs_distance is not None:
                check = (CheckResult("routeLength", plan.bfs_distance, plan.length) if args.mode == 'exact'
                         else CheckResult("stretch>=1", True, plan.length >= plan.bfs_distance))
                if verification:
                    verification.record_check(space.name, check, {"x": args.x, "y": args.y})
                if not check.agreed:
                    print(f"Error: route length {plan.length} vs BFS distance {plan.bfs_distance}",
                          file=sys.stderr)
                    return EXIT_MISMATCH

        elif args.command == 'ham':
            document = build_certificate(args.expr, args.what, args.pivot, max_vertices)
            if args.verify:
                valid = check_certificate(args.expr, document, max_vertices, args.seed)
                if verification:
                    verification.record_check(expressions.canonical(args.expr),
                                              CheckResult(f"certificate:{document['type']}", True, valid))
                if not valid:
                    print(f"Error: {document['type']} certificate failed verification", file=sys.stderr)
                    return EXIT_MISMATCH
                logger.info("%s certificate verified", document['type'])
            emit(dump_json(document), args.out)

        elif args.command == 'tables':
            tables = container.table_service()
            frame = tables.build_table(args.which, **parse_params(args.param))
            if args.out:
                tables.export_csv(frame, args.out)
                print(f"Table {args.which} exported to {args.out}")
            elif args.json:
                print(dump_json({"title": frame.attrs["title"], "cells": frame.to_dict()}))
            else:
                print(tables.render(frame))
            if verification:
                for check in frame.attrs["checks"]:
                    verification.record_check(f"table{args.which}", check)
            if tables.mismatches(frame):
                return EXIT_MISMATCH

        elif args.command == 'verify':
            with open(args.certificate, "r", encoding="utf-8") as fh:
                try:
                    document = json.load(fh)
                except json.JSONDecodeError as e:
                    raise MalformedCertificateError(f"{args.certificate} is not JSON: {e}") from e
            if not isinstance(document, dict):
                raise MalformedCertificateError("certificate must be a JSON object")
            valid = check_certificate(args.expr, document, max_vertices, args.seed)
            kind = document.get("type", "cut-witness")
            if verification:
                verification.record_check(expressions.canonical(args.expr),
                                          CheckResult(f"certificate:{kind}", True, valid))
            result = {"certificate": args.certificate, "type": kind, "valid": valid}
            if args.json:
                print(dump_json(result))
            else:
                print(f"{'✓' if valid else '❌'} {kind} certificate for {expressions.canonical(args.expr)}")
            if not valid:
                return EXIT_MISMATCH

        elif args.command == 'ledger':
            repository = container.verification_repository()
            if args.action == 'info':
                db_info = repository.get_database_info()
                print("Ledger Information:")
                print("=" * 40)
                print(f"Path: {db_info['db_path']}")
                print(f"Total Checks: {db_info['total_checks']:,}")
                print(f"Total Runs: {db_info['total_runs']:,}")
                print(f"Database Size: {db_info['db_size_mb']} MB")
                print(f"Earliest Check: {db_info['earliest_check']}")
                print(f"Latest Check: {db_info['latest_check']}")

            elif args.action == 'recent':
                records = repository.get_checks(subject=args.subject, limit=args.limit)
                print(f"Recent Checks (up to {args.limit}):")
                print("=" * 60)
                for record in records:
                    mark = "-" if record.agreed is None else ("✓" if record.agreed else "❌")
                    print(f"{record.timestamp} | {mark} {record.subject:24} | {record.check_name}: "
                          f"{record.expected} / {record.measured}")

            elif args.action == 'stats':
                stats = verification.get_recent_stats(args.hours)
                print(f"Ledger Statistics (last {args.hours} hours):")
                print("=" * 40)
                print(f"Total Checks: {stats.total_checks}")
                print(f"Agreed: {stats.agreed_checks}")
                print(f"Mismatched: {stats.mismatched_checks}")
                print(f"Formula Only: {stats.formula_only_checks}")
                print(f"Subjects: {stats.subjects}")
                print(f"Agreement Rate: {stats.agreement_rate * 100:.1f}%")

            elif args.action == 'export':
                if not args.output_file:
                    raise ExpoGraphError("ledger export needs an output file")
                count = verification.export_csv(args.output_file, subject=args.subject)
                print(f"{count} checks exported to {args.output_file}")

    except ExpoGraphError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
