"""Signed graphs with exactly two distinct adjacency eigenvalues.

Exact integer-arithmetic certificates for orthogonal signed matrices and
two-eigenvalue adjacency spectra, the classical generators (Hadamard,
conference, Kronecker, doubling, Williamson blocks), the two-graph
correspondence, and 2-lifts that turn good signatures into regular
Ramanujan graphs.
"""

from .constructions import (
    WilliamsonQuadruple,
    conference_block,
    double,
    kronecker,
    kronecker_orthogonal,
    paley_conference,
    shift_antisymmetric,
    sylvester_hadamard,
    williamson,
    williamson_preset,
)
from .core import (
    Graph,
    OrthogonalityCertificate,
    SignedGraph,
    SignedMatrix,
    count_switching_classes,
    disjoint_union,
    enumerate_switching_classes,
    ground,
    is_orthogonal,
    is_regular,
    resign,
    star,
    switching_canonical,
    switching_equivalent,
)
from .lifts_ramanujan import (
    GroundRamanujanReport,
    LemmaRamReport,
    LiftedGraph,
    RamanujanReport,
    TableRowReport,
    bipartite_complement,
    complement,
    ground_ramanujan_from_symmetric,
    is_good_signature,
    is_ramanujan,
    k_c4_complement,
    lemma_ram_check,
    lift_spectrum_check,
    table_row,
    two_lift,
)
from .spectra import (
    Spectrum,
    TwoEigCertificate,
    bipartite_two_eig_check,
    certify_two_eigenvalues,
    degree_from_certificate,
    eigenvalues_symmetric,
    spectrum_union,
)
from .twographs import (
    TwoGraph,
    descendant,
    is_regular_twograph,
    signed_complete_from_graph,
    twograph_from_signed_complete,
    validate_twograph,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GroundRamanujanReport",
    "LemmaRamReport",
    "LiftedGraph",
    "OrthogonalityCertificate",
    "RamanujanReport",
    "SignedGraph",
    "SignedMatrix",
    "Spectrum",
    "TableRowReport",
    "TwoEigCertificate",
    "TwoGraph",
    "WilliamsonQuadruple",
    "bipartite_complement",
    "bipartite_two_eig_check",
    "certify_two_eigenvalues",
    "complement",
    "conference_block",
    "count_switching_classes",
    "degree_from_certificate",
    "descendant",
    "disjoint_union",
    "double",
    "eigenvalues_symmetric",
    "enumerate_switching_classes",
    "ground",
    "ground_ramanujan_from_symmetric",
    "is_good_signature",
    "is_orthogonal",
    "is_ramanujan",
    "is_regular",
    "is_regular_twograph",
    "k_c4_complement",
    "kronecker",
    "kronecker_orthogonal",
    "lemma_ram_check",
    "lift_spectrum_check",
    "paley_conference",
    "resign",
    "shift_antisymmetric",
    "signed_complete_from_graph",
    "spectrum_union",
    "star",
    "switching_canonical",
    "switching_equivalent",
    "sylvester_hadamard",
    "table_row",
    "twograph_from_signed_complete",
    "two_lift",
    "validate_twograph",
    "williamson",
    "williamson_preset",
]
