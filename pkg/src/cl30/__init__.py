"""Cl(3,0) geometric algebra with rotors, the dihedral group of the square,
its real group algebra, and the 2x2 matrix layer those operators generate."""

from .multivector import (
    DEFAULT_TOL,
    Cliffor,
    NonInvertibleError,
    Vec3,
    E1,
    E2,
    E3,
    ONE,
    PSEUDOSCALAR,
    ZERO,
    geometric_product,
    grade_project,
    inverse,
    pauli_decompose,
    reverse,
)
from .rotors import (
    AxisAngle,
    Rotor,
    canonicalize,
    compose_axis_angle,
    exp_half,
    flip,
    log_rotor,
    reflect,
    rotate_cliffor,
    rotate_vector,
    rotor_product,
)
from .dihedral import (
    D4Element,
    ELEMENTS,
    LABELS,
    VERTICES,
    UnknownElementError,
    action_on_vector,
    element,
    element_from_rotor,
    multiplication_table,
    multiply,
)
from .group_algebra import (
    GroupAlgebraElement,
    annihilates,
    equivalent_on,
    fermion_dyadic,
    ga_apply,
    ga_multiply,
    null_identities,
)
from .matrices import (
    LeftActingMatrix,
    NonPlanarVectorError,
    OperatorMatrix,
    RightActingMatrix,
    apply_right,
    campbell_matrices,
    cliffor_from_matrix,
    d4_matrix_of,
    decompose_fermion,
    matrix_multiply,
    pauli_matrices,
    pauli_rep,
    transpose,
)
from .chains import KetChainExpr, KetStep, MixedChainError, ScaleStep, eval_chain

__version__ = "0.1.0"
