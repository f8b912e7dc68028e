"""Exact generalized-skew-spectrum tools for small oriented graphs."""

from .census import (
    CensusRecord,
    MateClassReport,
    export_records,
    find_mates,
    import_records,
    run_census,
    verify_candidate_mate,
)
from .characterization import (
    FnReport,
    WdgssVerdict,
    certificate_lemma_audit,
    fn_membership,
    mate_bound,
    pairwise_level_audit,
    snf_structure_check,
    wdgss_criterion,
)
from .graph_core import (
    OrientedGraph,
    apply_permutation,
    canonical_form,
    enumerate_all,
    from_compact,
    is_isomorphic,
    parse_graph,
    skew_adjacency,
    to_compact,
    transpose,
)
from .primes import FactoredInteger, factorize, is_prime
from .spectral import (
    QCertificate,
    SpectralFingerprint,
    fingerprint,
    generalized_cospectral,
    is_controllable,
    recover_q,
    verify_gamma_membership,
    walk_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "CensusRecord",
    "FactoredInteger",
    "FnReport",
    "MateClassReport",
    "OrientedGraph",
    "QCertificate",
    "SpectralFingerprint",
    "WdgssVerdict",
    "apply_permutation",
    "canonical_form",
    "certificate_lemma_audit",
    "enumerate_all",
    "export_records",
    "factorize",
    "find_mates",
    "fingerprint",
    "fn_membership",
    "from_compact",
    "generalized_cospectral",
    "import_records",
    "is_controllable",
    "is_isomorphic",
    "is_prime",
    "mate_bound",
    "pairwise_level_audit",
    "parse_graph",
    "recover_q",
    "run_census",
    "skew_adjacency",
    "snf_structure_check",
    "to_compact",
    "transpose",
    "verify_candidate_mate",
    "verify_gamma_membership",
    "walk_matrix",
    "wdgss_criterion",
]
