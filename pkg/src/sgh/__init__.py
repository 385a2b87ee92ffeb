"""Signed graphs, walk-girths, and bounds for signed K4-minor-free graphs."""

from .core import (
    C01,
    C10,
    C11,
    INF,
    MIXED,
    NEG,
    POS,
    DisconnectedError,
    GirthVector,
    GraphError,
    SignedGraph,
    class_of,
    digon,
    negative_cycle,
    negative_cycle_girths,
    negative_loop,
    switch,
    switching_equivalent,
    walk_girths,
)
from .distance import (
    Certificate,
    CertificateError,
    TheoremViolation,
    TriangleSet,
    algebraic_distance,
    algebraic_distances,
    certify_sp_complete,
    f_g_transform,
    is_g_closed,
    lift_certificate,
)
from .edc import lift_walk, spc, spc_cover_bijection
from .hom import (
    Homomorphism,
    find_homomorphism,
    no_hom_filter,
    random_sp_signed_graph,
    verify_homomorphism,
)
from .kernels import BACKEND
from .tube import build_twisted_tube, tube_distance, verify_tube_certificate
from .weighted import WeightedSignedGraph, build_T, enumerate_Lg, is_g_wide, triple_is_g_wide

__version__ = "0.1.0"
