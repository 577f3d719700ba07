"""Exact computations for rank-2 Nichols algebras of diagonal type.

The package covers cyclotomic arithmetic, braiding matrices and their
reflections, generalized root systems, Lyndon words and hyperletters, the
braided coproduct on the free algebra, and the identification of the Lie
algebra spanned by the Cartan root-vector powers.
"""

from .braiding import (
    BraidingMatrix,
    DynkinDiagram,
    bilinear_form,
    cartan_entry,
    cartan_matrix,
    diagram,
    from_diagram,
    is_cartan_vertex,
    parse_matrix_text,
    reflect,
)
from .cyclo import Cyclotomic, CyclotomicField, make_root, parse_literal, session_conductor
from .errors import (
    BudgetExceededError,
    CartanUndefinedError,
    ConductorMismatchError,
    ConstraintError,
    DomainError,
    InconsistencyError,
    LiteralParseError,
    NicholsError,
    RootSystemNotFiniteError,
    UnrecognizedDegreePatternError,
)
from .lieinfer import LieReport, build_report, degree_lattice, identify_type
from .presets import RowPreset, preset_matrix
from .rootsys import (
    HilbertSeries,
    RootSystemData,
    cartan_roots,
    check_condition_11,
    hilbert_series_A,
    hilbert_series_B,
    hilbert_series_L,
    positive_roots,
    weyl_orbit,
)
from .tensoralg import (
    TensorElement,
    TensorSquareElement,
    braided_bracket,
    coproduct,
    coproduct_component,
    hyperletter,
    nichols_graded_dim,
    nichols_root_height,
    shuffle_pairing,
)

__version__ = "0.1.0"
