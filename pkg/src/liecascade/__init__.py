"""Kostant cascades, Chevalley bases and exact index computations for Borel subalgebras."""
from .cascade import Cascade, build_cascade, cascade_leq, gamma_set, parabolic_closure
from .chevalley import (
    ChevalleyAlgebra,
    StructureTable,
    Subalgebra,
    borel,
    build_algebra,
    build_d_m,
    nilradical_n,
    parabolic,
    parabolic_nilradical,
    parabolic_q_plus,
)
from .index import (
    IndexReport,
    SamplingConfig,
    cascade_form,
    form_matrix,
    index_estimate,
    index_of_form,
    is_frobenius,
    is_regular,
    product_index_check,
)
from .linalg import rank_exact, rank_mod_p
from .roots import (
    RootSystem,
    SimpleType,
    cartan_matrix,
    highest_root,
    inner_product,
    irreducible_components,
    is_root,
    orthogonal_subsystem,
    parse_type,
    root_string,
    root_system,
)

__version__ = "0.1.0"
