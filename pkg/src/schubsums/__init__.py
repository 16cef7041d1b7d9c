"""Exact equivariant Schubert calculus for the classical Weyl groups."""

from .counting import (
    count_embeddings,
    enumerate_embeddings,
    n_w_count,
    n_w_polynomial,
    type_a_embedding_count,
)
from .gamma import GammaResult, gamma_bruteforce, gamma_polynomial, lead_term
from .polyring import ExactDivisionError, MultiPoly, UniPolyQ, apply_reflection, exact_divide, interpolate
from .restriction import inversion_roots, restrict, restrict_direct
from .rootsys import DynkinDiagram, build_diagram, parse_diagram_name, positive_roots, reflect_root
from .schubert import ConstantCache, equivariant_constant, inner_sum, ordinary_constant, set_disk_cache
from .support import (
    DecoratedSupport,
    automorphism_count,
    canonical_class_rep,
    dynkin_support,
    equivalent,
)
from .weyl import (
    WeylElement,
    bruhat_leq,
    canonical_reduced_word,
    from_word,
    length_sphere,
    lower_interval,
)

__version__ = "0.1.0"
