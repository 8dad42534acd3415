"""Hilbert series of invariants of classical groups acting on graded GL_d-modules.

Everything is exact: coefficients are ``int`` or ``fractions.Fraction``.
The usual path is ``hilbert_form`` -> (``regrade_form``) -> ``expand`` ->
``multiplicity_table`` -> ``dual_check``.
"""

from .algebras import (
    AlgebraSpec,
    cocharacter_table,
    grassmann_cocharacter_table,
    hilbert_form,
    triangular_cocharacter_table,
)
from .errors import ConfigError, DecompositionError, DualCheckError, FormSyntaxError, VariableMismatch
from .formparse import parse_form
from .invariants import (
    GroupSpec,
    InvariantSeries,
    dual_check,
    filter_invariants,
    has_invariant,
    substitute_invariants,
)
from .multiplicity import MultTable, multiplicity_table, table_to_M, table_to_Mprime
from .polyring import (
    Factor,
    FormTerm,
    GradedSeries,
    RationalForm,
    TPoly,
    expand_rational_form,
    poly_add,
    poly_mul,
    series_equal,
    series_mul,
    substitute_vars,
)
from .regrade import ModuleSpec, module_weights, regrade_form, regrade_hilbert
from .symfunc import (
    SchurExpansion,
    conjugate,
    is_symmetric,
    kostka,
    partitions_of,
    schur_decompose,
    schur_poly,
)

__version__ = "0.1.0"
