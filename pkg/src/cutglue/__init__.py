"""Strip pairings on marked surfaces.

Enumerate parity-respecting pairings, read off the boundary structure of
the strip-attached surface, apply cut-and-glue moves, and verify the
signature/connectivity facts exhaustively at desk scale.
"""

__version__ = "0.1.0"

from .boundary import (
    BoundaryProfile,
    boundary_of_strip_side,
    boundary_profile,
    is_balanced,
    signature,
)
from .connectivity import (
    MoveGraph,
    MovePath,
    NotConnectedError,
    SignatureMismatchError,
    build_move_graph,
    conjecture_scan,
    export_dot,
    find_path,
)
from .enumeration import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    EnumerationReport,
    enumerate_pairings,
    enumeration_report,
    pairing_from_rank,
    pairing_rank,
)
from .layers import (
    LayerProfile,
    StuckReductionError,
    is_planar,
    is_planar_by_nesting,
    layer_profile,
    reduce_layers,
    tau,
)
from .moves import (
    IllegalMoveError,
    Move,
    MoveVerdict,
    apply_move,
    classify_move,
    legal_moves,
    raw_swap,
)
from .surface import (
    DuplicateVertexError,
    MissingPairError,
    Pairing,
    PairingError,
    SameParityPairError,
    SurfaceSpec,
    UncoveredVertexError,
    VertexRangeError,
    balanced_existence_parity,
    successor,
    validate_pairing,
)

__all__ = [
    "__version__",
    "BoundaryProfile",
    "boundary_of_strip_side",
    "boundary_profile",
    "is_balanced",
    "signature",
    "MoveGraph",
    "MovePath",
    "NotConnectedError",
    "SignatureMismatchError",
    "build_move_graph",
    "conjecture_scan",
    "export_dot",
    "find_path",
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "EnumerationReport",
    "enumerate_pairings",
    "enumeration_report",
    "pairing_from_rank",
    "pairing_rank",
    "LayerProfile",
    "StuckReductionError",
    "is_planar",
    "is_planar_by_nesting",
    "layer_profile",
    "reduce_layers",
    "tau",
    "IllegalMoveError",
    "Move",
    "MoveVerdict",
    "apply_move",
    "classify_move",
    "legal_moves",
    "raw_swap",
    "DuplicateVertexError",
    "MissingPairError",
    "Pairing",
    "PairingError",
    "SameParityPairError",
    "SurfaceSpec",
    "UncoveredVertexError",
    "VertexRangeError",
    "balanced_existence_parity",
    "successor",
    "validate_pairing",
]
