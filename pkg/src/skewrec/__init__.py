"""Exact solver for left linear recurrences over fields, quaternion
algebras and octonion division algebras."""

from .errors import (
    ContextMismatch,
    DegenerateFrame,
    DimensionMismatch,
    DivisionByZero,
    InternalError,
    LamViolation,
    NoRepresentative,
    NoRootsFound,
    NoSolution,
    ParseError,
    SingularU,
    Singular,
    SkewrecError,
    UnsupportedDegree,
    UnsupportedOrder,
    ValidationError,
    ZeroDivisor,
)
from .scalar import FieldContext, ScalarValue, scalar_parse, scalar_render
from .algebra import (
    ConjClass,
    OctValue,
    OctonionAlgebra,
    QuatValue,
    QuaternionAlgebra,
    SubalgebraFrame,
    build_frame,
    conj_class,
    polar_form,
    same_class,
    spherical_representative,
)
from .poly import (
    LeftPoly,
    RootReport,
    companion_poly,
    conj_poly,
    divide_by_linear,
    factor_central_quartic,
    poly_eval_left,
    poly_product,
    quadratic_roots,
)
from .matlin import (
    DMatrix,
    JordanData,
    companion_matrix,
    eig_check,
    jordan_block_power,
    jordan_from_roots,
    jordan_matrix,
    mat_inverse,
    sylvester_chain_solve,
    vandermonde,
)
from .solver import (
    AssocForm,
    ClosedForm,
    OctSplitForm,
    RecurrenceSpec,
    Term,
    VerifyReport,
    eval_closed_form,
    iterate_oracle,
    primitive_char_poly,
    promote_field_quadratic,
    solve,
    solve_diagonalizable,
    solve_jordan,
    solve_octonion2,
    verify_closed_form,
)

__version__ = "0.1.0"
