"""Almost strict n-categories from combinatorial Morse flow data.

Three categories and two functors:

  W   integer index tuples (strict; the laws hold literally),
  V   the same data read as vector-space/hom-space dimensions,
  X   critical-point cells over a flow-data document (almost strict;
      the laws hold after normalizing labels),

with G: X -> W and F: X -> V sending every cell to its index data, a
generic axiom engine that mechanically checks the category laws, and a
built-in 2-torus fixture whose cell counts and image tables are known.
"""

from .axioms import (
    AXIOM_IDS,
    AxiomEntry,
    AxiomFailure,
    AxiomReport,
    check_axioms,
    check_globularity,
    composable,
)
from .errors import (
    ConstraintViolation,
    DuplicateId,
    FlowDataInconsistent,
    InvalidArguments,
    NCatError,
    NoSource,
    NotComposable,
    SchemaError,
    UnknownAtom,
    UnknownId,
)
from .flowdata import (
    CritPoint,
    FlowData,
    ModuliSpace,
    ValidationCheck,
    ValidationReport,
    emit_flow_data,
    parse_flow_data,
    validate_flow_data,
)
from .functors import check_functor_laws, functor_f, functor_g, ind, ind_env
from .torus import TorusExpected, torus_document, torus_expected, torus_flow_data
from .vcat import (
    VCategory,
    VCell,
    v_compose,
    v_from_w,
    v_identity,
    v_render,
    v_source,
    v_target,
    v_to_w,
)
from .wcat import (
    WCategory,
    WCell,
    w_compose,
    w_composable,
    w_enumerate,
    w_identity,
    w_make,
    w_render,
    w_source,
    w_target,
)
from .xcat import (
    Atom,
    Pt,
    Seq,
    XCategory,
    XCell,
    normalize,
    point_like,
    x_cells,
    x_composable,
    x_composable_pairs,
    x_compose,
    x_identity,
    x_render,
    x_source,
    x_target,
)

__version__ = "0.1.0"
