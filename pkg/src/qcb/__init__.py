"""Exact canonical-basis computations for the quantum orthogonal algebras."""

from .canonical import (
    APath,
    CanonicalMatrix,
    IterationLimit,
    NotAdmissible,
    NotOrthogonalTableau,
    a_path,
    a_vector,
    canonical_matrix,
    global_column,
    marsh_path,
)
from .crystal import SpinColumn, Word, component_bfs, raise_to_highest, spin_apply, vec_edge, word_apply, word_eps_phi
from .laurent import InexactDivision, LaurentPoly, NegativePower, divide_exact, quantum_factorial, quantum_int
from .modvec import ModuleVector, apply_monomial, highest_vector, module_f_divided
from .rootdata import AlgebraKind, NonIntegralPairing, cartan_exponent, letter_leq_B, letter_weight2, qi_exponent
from .shapes import (
    Column,
    MalformedWord,
    NotInOmegaPlus,
    Shape,
    ShapeMismatch,
    Tabloid,
    decompose_lambda,
    enumerate_columns,
    enumerate_tableaux,
    enumerate_tabloids,
    highest_tabloid,
    is_admissible,
    is_orthogonal_tableau,
    parse_column,
    parse_tabloid,
    shape_for_lambda,
    shape_of,
    tabloid_leq,
    tabloid_reading,
    weight2_of_tabloid,
    word_to_tabloid,
)
from .spinmod import SpinVector, spin_module_f, spin_t_exponent
from .wedge import StepLimitExceeded, WedgeVector, straighten, tensor_lift_f, wedge_f, wedge_f_divided, wedge_t_exponent

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
