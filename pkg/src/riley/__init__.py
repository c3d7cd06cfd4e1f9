"""Exact computation with two-bridge knot groups.

Builds Schubert presentations and Riley polynomials of two-bridge knots
in exact rational arithmetic, counts real roots with Sturm sequences,
computes signatures from even continued fractions, and cross-checks the
double twist closed forms against the general matrix construction.
"""

from .chebyshev import cheb_diff, cheb_eval, cheb_poly, trace_poly
from .exact import (
    BiPoly,
    Rational,
    SymLaurent,
    SymmetryError,
    UniPoly,
    compose,
    parse_rational,
    poly_gcd,
    squarefree_part,
    symmetrize_to_xy,
)
from .realroots import (
    RootCount,
    SturmChain,
    count_in_interval,
    count_real_roots,
    isolate_roots,
    sturm_chain,
)
from .rileypoly import (
    ClosedFormParams,
    Mat2Sym,
    RileyPoly,
    RileyValidationError,
    closed_form_params,
    riley_closed_form,
    riley_general,
    riley_parabolic,
    rho_generator,
    word_matrix,
)
from .signature import (
    EvenCF,
    SignatureError,
    SymMatrix,
    TwoBridgeSignature,
    even_cf,
    goeritz_like_matrix,
    matrix_signature,
    signature_family,
    signature_two_bridge,
)
from .twobridge import (
    DoubleTwist,
    KnotId,
    SchubertWord,
    epsilon,
    epsilon_fast,
    epsilon_sequence,
    family_to_pq,
    family_word,
    normalize,
    odd_representative,
    schubert_word,
)
from .verifier import (
    ConjectureRecord,
    CrossValidationError,
    ScanResult,
    TheoremRecord,
    check_conjecture,
    check_theorem1,
    check_theorem2,
    cross_validate,
    emit_report,
    enumerate_knots,
    scan_conjecture,
    sweep_theorem1,
    sweep_theorem2,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "ClosedFormParams",
    "ConjectureRecord",
    "CrossValidationError",
    "DoubleTwist",
    "EvenCF",
    "KnotId",
    "Mat2Sym",
    "Rational",
    "RileyPoly",
    "RileyValidationError",
    "RootCount",
    "ScanResult",
    "SchubertWord",
    "SignatureError",
    "SturmChain",
    "SymLaurent",
    "SymMatrix",
    "SymmetryError",
    "TheoremRecord",
    "TwoBridgeSignature",
    "UniPoly",
    "cheb_diff",
    "cheb_eval",
    "cheb_poly",
    "check_conjecture",
    "check_theorem1",
    "check_theorem2",
    "closed_form_params",
    "compose",
    "count_in_interval",
    "count_real_roots",
    "cross_validate",
    "emit_report",
    "enumerate_knots",
    "epsilon",
    "epsilon_fast",
    "epsilon_sequence",
    "even_cf",
    "family_to_pq",
    "family_word",
    "goeritz_like_matrix",
    "isolate_roots",
    "matrix_signature",
    "normalize",
    "odd_representative",
    "parse_rational",
    "poly_gcd",
    "riley_closed_form",
    "riley_general",
    "riley_parabolic",
    "rho_generator",
    "scan_conjecture",
    "schubert_word",
    "signature_family",
    "signature_two_bridge",
    "squarefree_part",
    "sturm_chain",
    "sweep_theorem1",
    "sweep_theorem2",
    "symmetrize_to_xy",
    "trace_poly",
    "word_matrix",
]
