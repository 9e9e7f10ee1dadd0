#!/usr/bin/env python3
"""
Dependency Injection Container

Configures and provides the ledger and analysis services.
"""

from typing import Any, Dict, Optional

from dependency_injector import containers, providers
from expograph import (
    SQLiteVerificationRepository,
    DefaultVerificationService,
    DefaultAnalysisService,
    DefaultTableService
)
from expograph.settings import DEFAULT_CONFIG


class ExpoGraphContainer(containers.DeclarativeContainer):
    """Container for expograph services."""

    # Configuration
    config = providers.Configuration()

    # Ledger repository
    verification_repository = providers.Singleton(
        SQLiteVerificationRepository,
        db_path=config.database_path
    )

    # Services
    verification_service = providers.Factory(
        DefaultVerificationService,
        repository=verification_repository
    )

    analysis_service = providers.Factory(
        DefaultAnalysisService,
        max_vertices=config.max_vertices,
        kappa_max_vertices=config.kappa_max_vertices,
        lambda_prime_max_vertices=config.lambda_prime_max_vertices,
        ham_dp_limit=config.ham_dp_limit,
        ham_brute_force_limit=config.ham_brute_force_limit
    )

    table_service = providers.Factory(
        DefaultTableService,
        max_vertices=config.table_max_vertices,
        flow_max_vertices=config.table_flow_max_vertices,
        ham_dp_limit=config.ham_dp_limit
    )


def initialize_expograph_system(overrides: Optional[Dict[str, Any]] = None,
                                initialize_ledger: bool = False) -> ExpoGraphContainer:
    """Build the container from the default settings plus overrides.

    The ledger database is only created when ``initialize_ledger`` is set.
    """
    container = ExpoGraphContainer()
    container.config.from_dict({**DEFAULT_CONFIG, **(overrides or {})})
    if initialize_ledger:
        repo = container.verification_repository()
        repo.initialize()
    return container
