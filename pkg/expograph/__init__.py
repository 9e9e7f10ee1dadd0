#!/usr/bin/env python3
"""
Expograph Package

Exponential graphs G^H: generation, routing, diameter and connectivity
analysis, Hamiltonicity constructions, and a verification ledger.
"""

from .models import (
    AnalysisReport,
    CheckResult,
    CistPair,
    ConnectivityReport,
    CutWitness,
    ExpoEdgeKind,
    FamilySpec,
    HamCycleCert,
    LedgerStats,
    Magnitude,
    RoutePlan,
    RouteSegment,
    StepKind,
    SuperLambdaVerdict,
    VerificationRecord,
    WalkSpec,
)
from .interfaces import (
    AnalysisService,
    NeighborOracle,
    TableService,
    VerificationRepository,
    VerificationService,
)
from .errors import ExpoGraphError
from .graph_core import Graph
from .expo import ExpoSpace, exponential
from .sqlite_repository import SQLiteVerificationRepository
from .verification_service import DefaultVerificationService
from .analysis import DefaultAnalysisService
from .tables import DefaultTableService

__all__ = [
    # Models
    'AnalysisReport',
    'CheckResult',
    'CistPair',
    'ConnectivityReport',
    'CutWitness',
    'ExpoEdgeKind',
    'FamilySpec',
    'HamCycleCert',
    'LedgerStats',
    'Magnitude',
    'RoutePlan',
    'RouteSegment',
    'StepKind',
    'SuperLambdaVerdict',
    'VerificationRecord',
    'WalkSpec',

    # Interfaces
    'AnalysisService',
    'NeighborOracle',
    'TableService',
    'VerificationRepository',
    'VerificationService',

    # Core
    'ExpoGraphError',
    'Graph',
    'ExpoSpace',
    'exponential',

    # Implementations
    'SQLiteVerificationRepository',
    'DefaultVerificationService',
    'DefaultAnalysisService',
    'DefaultTableService',
]
