"""Exact computations with Lie bialgebra structures on generalized Witt algebras."""

__version__ = "0.1.0"

from .scalars import AlgebraConfig, DimensionError, Q, check_spanning, compare, pair
from .witt import WittElement, bracket, grade, jacobi_defect
from .tensors import (
    Tensor,
    cycle,
    diag_act,
    diag_act2,
    diag_act3,
    grade_tensor,
    sym_split,
    tensor2_of,
    tensor3_of,
    tensor_of,
    twist,
)
from .bialgebra import (
    ClassificationReport,
    classify,
    cobracket,
    cocycle_defect,
    cojacobi_defect,
    cybe_c,
    michaelis_r,
    mybe_defect,
    ng_taft_defect,
)
from .cohomology import (
    DerivationTable,
    alternating_witness,
    annihilator_witness,
    derivation_defect,
    homog_decompose,
    inner_from,
    solve_inner,
)
from .textio import format_any, parse, parse_element, parse_tensor
