#!/usr/bin/env python3
"""
Default Settings

Budgets and limits used as keyword defaults throughout the library.
The container seeds its Configuration provider from DEFAULT_CONFIG.
"""

########################################################
# === Materialization budgets ===
########################################################
MAX_VERTICES = 2_000_000          # largest graph we build explicitly
MAX_EDGES = 20_000_000
EXACT_BITS_LIMIT = 1 << 20        # bigger magnitudes are kept symbolic

########################################################
# === Brute force and dynamic programming ===
########################################################
HAM_BRUTE_FORCE_LIMIT = 14        # Hamiltonian cycle / path backtracking
HAM_DP_LIMIT = 15                 # subset DP for Hamiltonian-distance
UPPER_WALK_ALL_PAIRS_LIMIT = 64   # covering-walk upper bound over all pairs
CIST_EXHAUSTIVE_LIMIT = 200       # literal path-disjointness check

########################################################
# === Flow budgets ===
########################################################
KAPPA_MAX_VERTICES = 5000
LAMBDA_PRIME_MAX_VERTICES = 2000

########################################################
# === BFS ===
########################################################
BFS_BATCH = 64                    # sources per uint64 bitset sweep

########################################################
# === Tables and reports ===
########################################################
TABLE_MAX_VERTICES = 100_000
TABLE_FLOW_MAX_VERTICES = 400
REPORT_SCHEMA_VERSION = "1.0"
DATABASE_PATH = "database/verification.db"
EXPORTS_DIRECTORY = "database/exports"

DEFAULT_CONFIG = {
    "max_vertices": MAX_VERTICES,
    "max_edges": MAX_EDGES,
    "ham_brute_force_limit": HAM_BRUTE_FORCE_LIMIT,
    "ham_dp_limit": HAM_DP_LIMIT,
    "cist_exhaustive_limit": CIST_EXHAUSTIVE_LIMIT,
    "kappa_max_vertices": KAPPA_MAX_VERTICES,
    "lambda_prime_max_vertices": LAMBDA_PRIME_MAX_VERTICES,
    "table_max_vertices": TABLE_MAX_VERTICES,
    "table_flow_max_vertices": TABLE_FLOW_MAX_VERTICES,
    "database_path": DATABASE_PATH,
    "exports_directory": EXPORTS_DIRECTORY,
    "canonical": False,
    "seed": 0,
}
