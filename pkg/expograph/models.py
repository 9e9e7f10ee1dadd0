#!/usr/bin/env python3
"""
Expograph Data Models

Walks, certificates, reports and the verification ledger schema.
Everything here serializes to plain JSON; big integers are rendered as
decimal strings.
"""

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from .errors import MalformedCertificateError


class StepKind(Enum):
    PLAIN = "plain"
    H_EDGE = "h"
    G_EDGE = "g"


@dataclass(frozen=True)
class ExpoEdgeKind:
    """Edge classification in G^H: an H-edge, or a G-edge of dimension j (1-based)."""
    kind: StepKind = StepKind.PLAIN
    dimension: Optional[int] = None

    @classmethod
    def h_edge(cls) -> "ExpoEdgeKind":
        return cls(StepKind.H_EDGE)

    @classmethod
    def g_edge(cls, dimension: int) -> "ExpoEdgeKind":
        return cls(StepKind.G_EDGE, dimension)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value}
        if self.dimension is not None:
            data["dimension"] = self.dimension
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExpoEdgeKind":
        try:
            return cls(StepKind(data["kind"]), data.get("dimension"))
        except (KeyError, ValueError, TypeError) as e:
            raise MalformedCertificateError(f"bad step annotation {data!r}") from e


PLAIN_STEP = ExpoEdgeKind()


@dataclass
class WalkSpec:
    """A walk, path or cycle as a vertex sequence with per-step annotations.

    For a closed walk the first vertex is repeated at the end, so
    ``len(kinds) == len(vertices) - 1`` always holds when kinds are present.
    """
    vertices: List[int] = field(default_factory=list)
    kinds: List[ExpoEdgeKind] = field(default_factory=list)
    closed: bool = False

    @property
    def length(self) -> int:
        return max(len(self.vertices) - 1, 0)

    def steps(self) -> List[Tuple[int, int]]:
        return list(zip(self.vertices[:-1], self.vertices[1:]))

    def distinct_vertices(self) -> List[int]:
        body = self.vertices[:-1] if self.closed else self.vertices
        return list(body)

    def dimensions(self) -> List[Optional[int]]:
        return [k.dimension for k in self.kinds]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": [int(v) for v in self.vertices],
            "kinds": [k.to_dict() for k in self.kinds],
            "closed": self.closed,
            "length": self.length,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WalkSpec":
        if not isinstance(data, dict) or "vertices" not in data:
            raise MalformedCertificateError("walk needs a 'vertices' list")
        vertices = data["vertices"]
        if not isinstance(vertices, list) or not all(isinstance(v, int) for v in vertices):
            raise MalformedCertificateError("walk vertices must be integers")
        kinds = [ExpoEdgeKind.from_dict(k) for k in data.get("kinds", [])]
        if kinds and len(kinds) != max(len(vertices) - 1, 0):
            raise MalformedCertificateError(
                f"{len(kinds)} step annotations for {len(vertices)} vertices")
        closed = bool(data.get("closed", False))
        if closed and vertices and vertices[0] != vertices[-1]:
            raise MalformedCertificateError("closed walk must end where it starts")
        return cls(list(vertices), kinds, closed)


@dataclass
class CutWitness:
    """A vertex or edge set claimed to disconnect a graph."""
    kind: str = "edge"  # "vertex" | "edge"
    elements: List[Any] = field(default_factory=list)
    component_sizes: List[int] = field(default_factory=list)
    label: Optional[str] = None  # "F1", "F2", "min-cut", "undefined-small-case"

    @property
    def size(self) -> int:
        return len(self.elements)

    def to_dict(self) -> Dict[str, Any]:
        if self.kind == "edge":
            elements = [[int(u), int(v)] for u, v in self.elements]
        else:
            elements = [int(v) for v in self.elements]
        data: Dict[str, Any] = {
            "kind": self.kind,
            "elements": elements,
            "componentSizes": list(self.component_sizes),
        }
        if self.label:
            data["label"] = self.label
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CutWitness":
        kind = data.get("kind")
        if kind not in ("vertex", "edge"):
            raise MalformedCertificateError(f"unknown cut kind {kind!r}")
        raw = data.get("elements", [])
        if kind == "edge":
            elements = [tuple(e) for e in raw]
            if any(len(e) != 2 for e in elements):
                raise MalformedCertificateError("edge cut elements must be pairs")
        else:
            elements = list(raw)
        return cls(kind, elements, list(data.get("componentSizes", [])), data.get("label"))


@dataclass
class HamCycleCert:
    """A Hamiltonian cycle together with the expression of its host."""
    cycle: WalkSpec
    host: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"type": "ham-cycle", "host": self.host, "cycle": self.cycle.to_dict()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "HamCycleCert":
        if data.get("type") != "ham-cycle":
            raise MalformedCertificateError("not a ham-cycle certificate")
        cycle = WalkSpec.from_dict(data.get("cycle", {}))
        if not cycle.closed:
            raise MalformedCertificateError("ham-cycle certificate holds an open walk")
        return cls(cycle, data.get("host", ""))


@dataclass
class CistPair:
    """Two spanning-tree edge sets over the same host."""
    tree1: List[Tuple[int, int]] = field(default_factory=list)
    tree2: List[Tuple[int, int]] = field(default_factory=list)
    host: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": "cist-pair",
            "host": self.host,
            "tree1": [[int(u), int(v)] for u, v in self.tree1],
            "tree2": [[int(u), int(v)] for u, v in self.tree2],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CistPair":
        if data.get("type") != "cist-pair":
            raise MalformedCertificateError("not a cist-pair certificate")
        try:
            tree1 = [(int(u), int(v)) for u, v in data["tree1"]]
            tree2 = [(int(u), int(v)) for u, v in data["tree2"]]
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedCertificateError("tree edges must be integer pairs") from e
        return cls(tree1, tree2, data.get("host", ""))


@dataclass
class RouteSegment:
    kind: StepKind
    dimension: Optional[int]
    vertices: List[int]

    @property
    def length(self) -> int:
        return max(len(self.vertices) - 1, 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "dimension": self.dimension,
            "vertices": [int(v) for v in self.vertices],
            "length": self.length,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RouteSegment":
        try:
            return cls(StepKind(data["kind"]), data.get("dimension"), [int(v) for v in data["vertices"]])
        except (KeyError, ValueError, TypeError) as e:
            raise MalformedCertificateError(f"bad route segment {data!r}") from e


@dataclass
class RoutePlan:
    """Alternating H-path / G-path decomposition of a route in G^H."""
    source: int
    target: int
    mode: str
    segments: List[RouteSegment] = field(default_factory=list)
    total: WalkSpec = field(default_factory=WalkSpec)
    required: List[int] = field(default_factory=list)    # D, as exponent vertices
    exponent_walk: List[int] = field(default_factory=list)  # W_D
    bfs_distance: Optional[int] = None

    @property
    def length(self) -> int:
        return self.total.length

    @property
    def stretch(self) -> Optional[float]:
        if self.bfs_distance is None:
            return None
        if self.bfs_distance == 0:
            return 1.0
        return self.length / self.bfs_distance

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "type": "route-plan",
            "source": int(self.source),
            "target": int(self.target),
            "mode": self.mode,
            "required": list(self.required),
            "exponentWalk": list(self.exponent_walk),
            "segments": [s.to_dict() for s in self.segments],
            "total": self.total.to_dict(),
            "length": self.length,
        }
        if self.bfs_distance is not None:
            data["bfsDistance"] = self.bfs_distance
            data["stretch"] = self.stretch
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RoutePlan":
        if data.get("type") != "route-plan":
            raise MalformedCertificateError("not a route-plan document")
        try:
            return cls(
                source=int(data["source"]),
                target=int(data["target"]),
                mode=str(data["mode"]),
                segments=[RouteSegment.from_dict(s) for s in data.get("segments", [])],
                total=WalkSpec.from_dict(data["total"]),
                required=[int(i) for i in data.get("required", [])],
                exponent_walk=[int(w) for w in data.get("exponentWalk", [])],
                bfs_distance=data.get("bfsDistance"),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedCertificateError(f"route plan is missing {e}") from e


class SuperLambdaVerdict(Enum):
    YES = "yes"
    NO = "no-with-witness"
    UNDEFINED = "undefined-small-case"


@dataclass
class ConnectivityReport:
    kappa: int
    lam: int
    delta: int
    maximally_connected: bool
    super_lambda: Optional[SuperLambdaVerdict] = None
    lambda_prime: Optional[int] = None
    witness: Optional[CutWitness] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "kappa": self.kappa,
            "lambda": self.lam,
            "delta": self.delta,
            "maximallyConnected": self.maximally_connected,
        }
        if self.super_lambda is not None:
            data["superLambda"] = self.super_lambda.value
            data["lambdaPrime"] = self.lambda_prime
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data


@dataclass(frozen=True)
class FamilySpec:
    """A named generator family with integer parameters, e.g. ("debruijn", (2, 3))."""
    family: str
    params: Tuple[int, ...] = ()


@dataclass(frozen=True)
class Magnitude:
    """An order or diameter that may be too large to hold as an integer.

    ``value`` is set whenever the exact integer is kept; ``text`` is always
    set. ``log2`` is kept for powers of two so nested exponentials can still
    be rendered.
    """
    value: Optional[int]
    text: str
    log2: Optional["Magnitude"] = None

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def to_json(self) -> str:
        if self.value is not None and self.value.bit_length() <= 4096:
            return str(self.value)
        return self.text

    def __str__(self) -> str:
        return self.text


@dataclass
class CheckResult:
    """One formula-versus-measurement comparison."""
    name: str
    expected: Any
    measured: Any = None

    @property
    def measured_available(self) -> bool:
        return self.measured is not None

    @property
    def agreed(self) -> Optional[bool]:
        if self.measured is None:
            return None
        return self.expected == self.measured

    def to_dict(self) -> Dict[str, Any]:
        data = {"name": self.name, "expected": _jsonable(self.expected)}
        if self.measured is not None:
            data["measured"] = _jsonable(self.measured)
            data["agreed"] = self.agreed
        return data


@dataclass
class AnalysisReport:
    """Formula-derived values and measured values side by side."""
    spec: str
    order: Magnitude
    size: Optional[Magnitude] = None
    min_degree: Optional[int] = None
    max_degree: Optional[int] = None
    diameter: Dict[str, Any] = field(default_factory=dict)
    connectivity: Optional[ConnectivityReport] = None
    hamiltonicity: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    materialized: bool = False
    timing: Dict[str, float] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def mismatches(self) -> List[CheckResult]:
        return [c for c in self.checks if c.agreed is False]

    def to_dict(self, schema_version: str, canonical: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schemaVersion": schema_version,
            "spec": self.spec,
            "order": self.order.to_json(),
            "size": self.size.to_json() if self.size else None,
            "minDegree": self.min_degree,
            "maxDegree": self.max_degree,
            "diameter": {k: _jsonable(v) for k, v in self.diameter.items()},
            "materialized": self.materialized,
            "checks": [c.to_dict() for c in self.checks],
        }
        if self.connectivity is not None:
            data["connectivity"] = self.connectivity.to_dict()
        if self.hamiltonicity:
            data["hamiltonicity"] = self.hamiltonicity
        if self.notes:
            data["notes"] = list(self.notes)
        if not canonical:
            data["timing"] = {k: round(v, 4) for k, v in self.timing.items()}
        return data


def _jsonable(value: Any) -> Any:
    if isinstance(value, Magnitude):
        return value.to_json()
    if isinstance(value, int) and not isinstance(value, bool) and abs(value) >= 2 ** 53:
        return str(value)
    return value


@dataclass
class VerificationRecord:
    """A single ledger row: one check against one subject expression."""
    id: Optional[int] = None
    timestamp: Optional[datetime] = None
    subject: Optional[str] = None
    check_name: Optional[str] = None
    expected: Optional[str] = None
    measured: Optional[str] = None
    agreed: Optional[bool] = None
    metadata: Optional[Dict[str, Any]] = None


@dataclass
class LedgerStats:
    """Aggregated statistics over ledger rows in a time window."""
    total_checks: int = 0
    agreed_checks: int = 0
    mismatched_checks: int = 0
    formula_only_checks: int = 0
    subjects: int = 0
    first_check: Optional[datetime] = None
    last_check: Optional[datetime] = None

    @property
    def agreement_rate(self) -> float:
        measured = self.agreed_checks + self.mismatched_checks
        return self.agreed_checks / measured if measured else 0.0


class DatabaseSchema:
    """Ledger schema definitions."""

    CREATE_CHECKS_TABLE = """
    CREATE TABLE IF NOT EXISTS verification_checks (
        id INTEGER PRIMARY KEY AUTOINCREMENT,
        timestamp DATETIME DEFAULT CURRENT_TIMESTAMP,
        subject TEXT NOT NULL,
        check_name TEXT NOT NULL,
        expected TEXT,
        measured TEXT,
        agreed INTEGER,
        metadata TEXT
    )
    """

    CREATE_RUNS_TABLE = """
    CREATE TABLE IF NOT EXISTS verification_runs (
        id INTEGER PRIMARY KEY AUTOINCREMENT,
        run_start DATETIME DEFAULT CURRENT_TIMESTAMP,
        command TEXT,
        total_checks INTEGER DEFAULT 0,
        config_snapshot TEXT
    )
    """

    CREATE_SUBJECT_INDEX = """
    CREATE INDEX IF NOT EXISTS idx_checks_subject ON verification_checks (subject)
    """

    @staticmethod
    def get_all_schemas() -> List[str]:
        """Get all schema creation statements."""
        return [
            DatabaseSchema.CREATE_CHECKS_TABLE,
            DatabaseSchema.CREATE_RUNS_TABLE,
            DatabaseSchema.CREATE_SUBJECT_INDEX,
        ]
