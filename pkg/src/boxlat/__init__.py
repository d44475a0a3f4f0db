"""Finite lattice workbench: box products, lattice tensor products, semilattice
tensor products and congruence lattices, with exhaustive verification."""

from types import ModuleType as _ModuleType

from .box import (
    BoxDotElement,
    BoxElement,
    box_closure,
    box_closure_oracle,
    box_join,
    box_product,
    duality_iso,
    hom_box,
    hom_ltp,
    join_basis_decomposition,
    lattice_tensor_product,
    ltp_defined,
    pure_box,
    pure_circ,
    pure_ltensor,
    retraction_rho,
    triangle_down,
    triangle_up,
)
from .congruence import (
    Congruence,
    congruence_lattice,
    is_simple,
    principal_congruence,
    restrict_congruence,
)
from .constructions import (
    alpha_iso,
    cong_preserving_embedding,
    m3_angle,
    m3_of,
    n5_angle,
    n5_of,
)
from .errors import BoxlatError
from .expr import evaluate, parse_expr
from .freedist import c_star, eval_P, free_distributive
from .io import export, load_json
from .kernels import BACKEND
from .order import (
    FiniteLattice,
    LatticeHom,
    boolean,
    catalog,
    chain,
    dual,
    find_isomorphism,
    is_distributive,
    is_isomorphic,
    m3,
    n5,
)
from .tensor import BiIdeal, bi_ideal_closure, mixed_tensor, pure_tensor, tensor_product
from .verify import VerificationReport, verify_all

__version__ = "0.1.0"

__all__ = sorted(
    name for name, value in globals().items()
    if not name.startswith("_") and not isinstance(value, _ModuleType)
)
