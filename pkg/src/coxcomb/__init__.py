"""Exact Euclidean Coxeter complexes for the classical root systems.

The package builds root systems A, B, C, D in exact rational arithmetic,
walks their special-vertex graphs, generates the distinguished combing
word between any two special vertices, recognizes combings by a two-step
local rule and a finite state automaton, and verifies the geometric
claims behind all of this by brute force over bounded regions.
"""

from .combing import (
    Automaton,
    CombingWord,
    EdgeClass,
    build_fsa,
    combing_word,
    enumerate_local_paths,
    is_local_path,
    is_transition,
    word_endpoint,
    word_vertices,
)
from .complexes import (
    FineGraph,
    HullBox,
    SpecialStep,
    SpecialVertex,
    ball,
    degree,
    fine_graph,
    graph_distance,
    hull_box,
    hull_contains,
    is_special,
    is_special_by_coords,
    origin,
    special_vertex,
    standard_alcove,
    step_catalog,
    vertex_at,
)
from .exact import CapExceeded, RatVec, inner, norm_sq, vec
from .rootsystem import (
    KINDS,
    RootSystem,
    build_root_system,
    coweight_coords,
    expand_in_simple_roots,
    positive_roots,
)
from .verify import (
    Report,
    check_ftp,
    check_lemma_62,
    check_local_global,
    check_quasi_constants,
    check_uniqueness_and_hull,
)
from .weyl import (
    WeylElement,
    dominant_representative,
    elements_fixing,
    enumerate_weyl_group,
    orbit,
    reflection,
    simple_reflection,
    weyl_order_formula,
)

__version__ = "0.1.0"

__all__ = [
    "Automaton",
    "CapExceeded",
    "CombingWord",
    "EdgeClass",
    "FineGraph",
    "HullBox",
    "KINDS",
    "RatVec",
    "Report",
    "RootSystem",
    "SpecialStep",
    "SpecialVertex",
    "WeylElement",
    "__version__",
    "ball",
    "build_fsa",
    "build_root_system",
    "check_ftp",
    "check_lemma_62",
    "check_local_global",
    "check_quasi_constants",
    "check_uniqueness_and_hull",
    "combing_word",
    "coweight_coords",
    "degree",
    "dominant_representative",
    "elements_fixing",
    "enumerate_local_paths",
    "enumerate_weyl_group",
    "expand_in_simple_roots",
    "fine_graph",
    "graph_distance",
    "hull_box",
    "hull_contains",
    "inner",
    "is_local_path",
    "is_special",
    "is_special_by_coords",
    "is_transition",
    "norm_sq",
    "orbit",
    "origin",
    "positive_roots",
    "reflection",
    "simple_reflection",
    "special_vertex",
    "standard_alcove",
    "step_catalog",
    "vec",
    "vertex_at",
    "weyl_order_formula",
    "word_endpoint",
    "word_vertices",
]
