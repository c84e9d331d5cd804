"""Exact main-eigenvalue counting and classification for signed graphs
and (0,1,2)-multigraphs with unicyclic base graphs."""

from .canon import (
    are_isomorphic, automorphism_orbit_count, canonical_form, canonical_graph,
    graph_from_key,
)
from .classify import (
    ClassificationResult, SixTypeResult, UNCLASSIFIED, case_of,
    check_cycle_symmetry, classify_two_main, six_type_classify,
)
from .enumeration import (
    EnumerationRecord, EnumerationTask, connected_shapes, enumerate_graphs,
    tree_shapes, unicyclic_shapes,
)
from .errors import (
    BadParameters, GraphParseError, NoTypeMatches, NotAdjacent, NotUnicyclic,
    NumericalFailure, OrderTooLarge, OrderTooSmall, TwomainError, UnknownTag,
)
from .families import (
    CyclicPattern, FamilySpec, H1Membership, ONE_MAIN, U_PATTERNS, expected_ab,
    generate_cyclic, generate_family, is_member_H1,
)
from .files import parse_graph_file, serialize_graph
from .graphs import (
    DegreeProfile, Multigraph, SignedGraph, SimpleGraph, associated_multigraph,
    b_graph, degree_profile, is_connected, is_net_regular, net_degree_profile,
    signed_from_multigraph,
)
from .spectral import (
    ABCertificate, NoCertificate, SpectralReport, TwoMainEvidence, WalkMatrix,
    main_count_exact, main_eigenvalues_float, solve_ab, two_main_check,
    walk_matrix, walk_rank,
)
from .structure import (
    UnicyclicDecomposition, VertexRole, longest_v_path, unicyclic_decompose,
    vertex_role,
)
from .verify import explore_open, run_suite, verify_theorems

__version__ = "0.1.0"
