"""Exact arithmetic in the pre-Lie algebra of admissible graphs."""
from .combination import GraphCombination
from .enumeration import (
    GraphEntry,
    GraphSet,
    ResourceLimitError,
    enumerate_graphs,
    is_prime,
    prime_factors,
    product,
)
from .factorization import (
    Side,
    alpha,
    collapse,
    insertion_orbit_report,
    is_normal_subgraph,
    verify_unique_factorization,
)
from .graph import (
    ZERO,
    AdmissibleGraph,
    GraphKind,
    GraphStructureError,
    SignedClass,
    aut_order,
    canonicalize,
    is_isomorphic,
    negate_at,
    normalize,
    validate,
)
from .grammar import GraphParseError, canonical_string, format_graph, parse_graph, read_graph
from .insertion import (
    InsertionData,
    InvalidInsertionError,
    apply_insertion,
    coefficient_of,
    compose,
    deg_b,
    insert_at,
    insertion_data,
    leibniz_count,
)
from .named import NAMED_GRAPHS, named
from .verification import (
    build_Z,
    coefficient_theorem_sweep,
    constant_case_check,
    g23_census,
    g23_table,
    mc_defect,
)

__version__ = "0.1.0"
