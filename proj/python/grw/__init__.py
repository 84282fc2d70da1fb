"""Exact generalized rank weight computations for linear codes over F_{q^m}.

The heavy lifting lives in the compiled extension ``grw._core``; this package
re-exports its public surface. Counts are plain Python ints (exact at any
size), field elements cross the boundary as expressions like ``"a^2+a"``,
integers, or coefficient lists.
"""

from ._core import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    FieldSpec,
    GrwError,
    InconsistentBTableError,
    InvalidInput,
    LinearCode,
    UnderdeterminedError,
    falling_q_product,
    find_irreducible,
    gauss_binom,
    gauss_forward,
    gauss_inversion,
    load_code,
    mrd_b,
    mrd_distribution,
    vandermonde_check,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "FieldSpec",
    "GrwError",
    "InconsistentBTableError",
    "InvalidInput",
    "LinearCode",
    "UnderdeterminedError",
    "falling_q_product",
    "find_irreducible",
    "gauss_binom",
    "gauss_forward",
    "gauss_inversion",
    "load_code",
    "mrd_b",
    "mrd_distribution",
    "vandermonde_check",
]
