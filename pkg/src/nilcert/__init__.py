"""Exact polynomial algebra and a certificate pipeline for a family of
space curves whose first Quot scheme has a nilpotent function of prescribed
order."""

from .certificate import (
    CertificateReport,
    CurveParameters,
    build_matrix_A,
    descend_witness,
    find_nonvanishing_point,
    run_certificate,
)
from .fields import QQ, PrimeField
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    eliminate,
    hilbert_function,
    ideal_equal,
    ideal_membership,
    ideal_quotient,
    nilpotency_order,
    normal_form,
    ring_map_kernel,
    saturate,
)
from .modsyz import (
    ModulePresentation,
    PolyMatrix,
    SyzygyModule,
    compose_is_zero,
    maximal_minors,
    module_spans_equal,
    presentation_chart,
    syzygies,
)
from .parsing import format_polynomial, parse_polynomial
from .polyring import MonomialOrder, Polynomial, PolyRing, substitute, weighted_degree
from .semigroup import NumericalSemigroup, frobenius_number, gaps, genus_delta

__version__ = "0.1.0"
