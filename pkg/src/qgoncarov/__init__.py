"""Exact q-Goncarov interpolation bases and q-Fubini numbers."""

from qgoncarov._kernels import BACKEND
from qgoncarov.combinat import (
    Composition, classical_fubini, compositions, constant_term_formula,
    constant_term_recurrence, q_fubini, q_fubini_compositions,
)
from qgoncarov.errors import (
    BasisError, GridTooShortError, InconsistencyError, ParseError, PoleError, QGoncarovError,
)
from qgoncarov.goncarov import (
    GoncarovBasis, Grid, check_bino, check_cascade, check_defg, check_dt,
    expand_in_goncarov, goncarov_poly, interpolate, shifted_basis, verify_biorthogonality,
)
from qgoncarov.operators import (
    BasicSequence, DeltaOperator, delta_apply, delta_power_apply, g_tilde, hahn_apply_direct,
    hahn_basic, hahn_sequence, monomial_basic, monomial_sequence, operator_from_spec,
    oplus_expand, q_hermite,
)
from qgoncarov.parse import parse_node_expr
from qgoncarov.qfield import (
    ONE, Q, ZERO, QPoly, QRat, as_qrat, q_binomial, q_factorial, q_integer, q_pochhammer, specialize,
)
from qgoncarov.xpoly import X, XPoly, change_of_basis, evaluate

__version__ = "0.1.0"
