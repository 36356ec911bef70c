"""Digital (t,s)- and (u,e,s)-sequences over prime-power bases.

Generating matrices are built columnwise from Riemann-Roch spaces of a
global function field, optionally with finite rows, and everything is
checkable by independent brute force: rank criteria, interval counting,
and exact star discrepancy.
"""

from .bounds import bound_eval, c_fk, c_tez, compare_condition, degree_product_demo
from .construct import (
    GenMatrix,
    SeqSpec,
    build_matrices,
    divisor_pair,
    dump_matrices,
    li_decompose,
    make_spec,
    select_yr,
)
from .digital import DigitPoint, block_digit_arrays, generate_block, generate_point
from .funcfield import (
    CurveFunction,
    Divisor,
    ELLIPTIC_F2,
    FieldInstance,
    Place,
    RATIONAL,
    RationalFunction,
    ff_create,
    local_expansion,
    nr_index,
    place_enumerate,
    pole_order,
    rr_basis,
    valuation,
)
from .gf import (
    FieldCtx,
    FieldElement,
    digit_to_element,
    element_to_digit,
    field_create,
    vector_decompose,
)
from .kernels import BACKEND, get_backend
from .polyring import (
    Polynomial,
    irreducible_count,
    irreducible_enumerate,
    is_irreducible,
    padic_expansion,
    parse_polynomial,
    poly_gcd,
)
from .verify import (
    VerifyReport,
    classical_rank_check,
    find_volume_reading_anomaly,
    geometric_net_check,
    minimal_t,
    net_rank_check,
    row_length_audit,
    seq_rank_check,
    sequence_block_check,
    star_discrepancy_exact,
    t_from_ue,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CurveFunction",
    "DigitPoint",
    "Divisor",
    "ELLIPTIC_F2",
    "FieldCtx",
    "FieldElement",
    "FieldInstance",
    "GenMatrix",
    "Place",
    "Polynomial",
    "RATIONAL",
    "RationalFunction",
    "SeqSpec",
    "VerifyReport",
    "block_digit_arrays",
    "bound_eval",
    "build_matrices",
    "c_fk",
    "c_tez",
    "classical_rank_check",
    "compare_condition",
    "degree_product_demo",
    "digit_to_element",
    "divisor_pair",
    "dump_matrices",
    "element_to_digit",
    "ff_create",
    "field_create",
    "find_volume_reading_anomaly",
    "generate_block",
    "generate_point",
    "geometric_net_check",
    "get_backend",
    "irreducible_count",
    "irreducible_enumerate",
    "is_irreducible",
    "li_decompose",
    "local_expansion",
    "make_spec",
    "minimal_t",
    "net_rank_check",
    "nr_index",
    "padic_expansion",
    "parse_polynomial",
    "place_enumerate",
    "pole_order",
    "poly_gcd",
    "rr_basis",
    "row_length_audit",
    "select_yr",
    "seq_rank_check",
    "sequence_block_check",
    "star_discrepancy_exact",
    "t_from_ue",
    "valuation",
    "vector_decompose",
]
