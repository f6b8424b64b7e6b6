"""Exact spectra, star complements and domination numbers of small graphs."""

from .algebraic import AlgebraicNumber, QuadraticElement, UnsupportedDegreeError
from .domination import (
    DOMINATION,
    TOTAL,
    DominationCertificate,
    DominationVariant,
    domination_number,
    epn_witnesses,
    is_p_dominating,
    is_total_dominating,
    tok_hypothesis,
)
from .graph import (
    Graph,
    GraphFamily,
    GraphFormatError,
    encode_graph6,
    enumerate_connected,
    generate,
    induced_subgraph,
    is_connected,
    parse_graph6,
)
from .matrix import charpoly
from .poly import Interval, IntPolynomial, isolate_real_roots, poly_gcd, sturm_count, yun_squarefree
from .spectra import (
    MatrixKind,
    SpectrumSummary,
    is_eigenvalue_of,
    is_lambda_annihilator,
    matrix_of,
    multiplicity,
    rank_of_graph,
    spectrum,
)
from .starsets import (
    StarPartition,
    find_connected_star_complement,
    find_star_set,
    is_location_dominating,
    is_star_set,
)
from .verifier import Census, Check, Status, TheoremReport, run_checks, sweep

__version__ = "0.1.0"
