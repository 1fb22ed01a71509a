"""taftgal: exact verification for Taft-algebra comodule algebras and
biGalois objects over Q(zeta_N)."""

__version__ = "0.1.0"

from .field import (
    Field,
    Scalar,
    FieldError,
    ParseError,
    ScalarDivisionError,
    make_field,
    primitive_root,
    arith,
    parse_scalar,
)
