"""Exact matrices, resistances and tree counts for ladder-type graphs."""

from .closed_form import (
    contracted_tree_count,
    kirchhoff_index,
    lplus,
    qplus,
    resistance,
    tree_count,
)
from .graphs import Family, FamilySpec, build_graph, contract_edge, incidence_matrix, laplacian_matrix
from .linalg import RationalMatrix, penrose_check, pinv_incidence, pinv_laplacian
from .sequences import IdentityId, QuadExt, SeqKind, binet_value, check_identity, seq_value

__version__ = "0.1.0"
