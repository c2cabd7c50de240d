"""Signless-Laplacian (Q) cospectral graphs built with the partial transpose."""

from .graph import (
    ClusteredGraph,
    Graph,
    GraphError,
    asymmetric_edge_set,
    brute_count_partially_symmetric,
    build,
    build_graph,
    build_slots,
    count_partially_symmetric,
    disjoint_union,
    is_partially_symmetric,
    partial_transpose,
    relabel,
)
from .iso import CanonicalForm, SizeGuardError, are_isomorphic, canonical_form, fingerprint
from .spectral import QPolynomial, are_q_cospectral, poly_multiply, q_polynomial, q_spectrum, signless_laplacian
from .tu import (
    BudgetExceeded,
    TUSubgraph,
    are_comparable,
    classify_tu,
    coefficient_via_tu,
    coefficients_via_tu,
    tu_weight,
)
from .generators import (
    GeneratorReport,
    HypothesisError,
    corollary1_graph,
    corollary2_graph,
    procedure1_union,
    procedure2_add_pairs,
    procedure3_add_psym_cross,
    procedure4_extend,
    procedure5_extend,
    report,
    sample_procedure1,
    sample_procedure2,
    sample_procedure3,
    sample_procedure4,
    sample_procedure5,
    theorem1_graph,
)
from .survey import (
    CospectralClass,
    SurveyRow,
    aggregate_ratio,
    compare_with_reference,
    cospectral_classes,
    enumerate_graphs,
    pt_realizable,
    survey_table,
    table_tsv,
)
from .fixtures import fixture_suite
from .io import from_graph6, ingest_graph6, to_graph6

__version__ = "0.1.0"
