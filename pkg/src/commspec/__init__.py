"""Exact commuting-graph spectra of finite groups.

Build a finite group from a Cayley table or a named family, form the
commuting graph on its non-central elements, compute the adjacency
spectrum in exact integer arithmetic, and verify the closed-form spectrum
predictions for groups whose central quotient is Z_p x Z_p or dihedral.
"""

from .catalog import (
    FamilySpec,
    build,
    direct_product,
    extraspecial,
    list_catalog,
    parse_family,
)
from .errors import (
    AbelianGroupError,
    AxiomViolation,
    CommspecError,
    EmptyInputError,
    IncompleteSpectrumError,
    IndexOutOfRange,
    NonzeroDiagonalError,
    NotMonicError,
    NotPrimeError,
    NotSymmetricError,
    ParameterOutOfRange,
    ParseError,
    UnsupportedFamilyError,
)
from .graphs import (
    CliqueDecomposition,
    CommutingGraph,
    build_commuting_graph,
    clique_decomposition,
    connected_components,
    export_dot,
    graph_json,
    raw_graph,
)
from .groups import (
    Center,
    Centralizer,
    FiniteGroup,
    QuotientGroup,
    Recognition,
    center,
    centralizer,
    centralizer_count,
    format_cayley_text,
    from_cayley_table,
    from_cayley_text,
    load_cayley_file,
    max_noncommuting_set,
    quotient_by_center,
    recognize_small,
)
from .predictions import (
    CorollaryCheck,
    Prediction,
    PredictionCheck,
    VerificationReport,
    predict_dihedral_quotient,
    predict_family,
    predict_zpzp,
    report_json_dict,
    verify_centralizer_corollaries,
    verify_group,
)
from .spectra import (
    CharPoly,
    SpectralAnalysis,
    Spectrum,
    char_poly,
    char_poly_json,
    clique_union_spectrum,
    exact_determinant,
    integer_spectrum,
    is_integral,
    monic_linear,
    spectra_agree,
    spectrum_from_pairs,
    spectrum_json,
)

__version__ = "0.1.0"
