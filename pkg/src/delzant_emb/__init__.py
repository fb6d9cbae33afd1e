"""Exact equivariant ball-embedding invariants of Delzant polytopes."""

from .catalog import build, chopped, cp_product, cube, hirzebruch, pentagon, simplex
from .delzant import (
    DelzantReport,
    VertexData,
    all_vertex_data,
    euler_characteristic,
    validate_delzant,
    vertex_data,
)
from .emb import (
    CLOSED,
    OPEN,
    BallImage,
    EmbeddingSpaceDescriptor,
    StepFunction,
    ball_momentum_image,
    c_p,
    check_affine_correspondence,
    emb_at,
    emb_function,
    embedding_space,
    plateau_thresholds,
    standard_ball_polytope,
)
from .errors import *  # noqa: F401,F403
from .geometry import (
    HalfSpace,
    Polytope,
    affine_image,
    contains_point,
    contains_polytope,
    corner_chop,
    edges,
    hull_from_vertices,
    product,
    scale,
    vertices_from_halfspaces,
)
from .lattice import (
    PrimitiveDecomposition,
    is_unimodular,
    primitive_decompose,
    random_unimodular,
    sl_length,
)

__version__ = "0.1.0"
