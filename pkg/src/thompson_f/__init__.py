"""Thompson's group F: tree pair diagrams, the exact word-length metric,
normal forms, the seesaw family, and a breadth-first Cayley-graph oracle.
"""

from .errors import (
    CapacityError,
    GrammarError,
    MalformedPairError,
    ThompsonFError,
    UnreducedPairError,
)
from .fordham import CaretType, classify, classify_pair, length, weight
from .geodesy import (
    Ball,
    Path,
    bfs_ball,
    distance,
    fellow_traveller_demo,
    greedy_geodesic,
    synchronous_distance,
)
from .group_ops import (
    DEFAULT_ORDER,
    GENERATORS,
    Generator,
    condition_holds,
    evaluate,
    format_genword,
    generator_pair,
    inverse,
    invert_word,
    multiply,
    parse_genword,
    right_multiply_generator,
)
from .kernels import BACKEND
from .normal_form import (
    NormalForm,
    format_nf,
    nf_to_genword,
    nf_to_pair,
    pair_to_nf,
    parse_nf,
)
from .seesaw import (
    SeesawParams,
    SwingReport,
    reducing_generators,
    seesaw_nf,
    seesaw_word,
    verify_swing,
)
from .trees import IDENTITY, Tree, TreePair, caret, enumerate_trees, leaf, reduce

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "Ball",
    "CapacityError",
    "CaretType",
    "DEFAULT_ORDER",
    "GENERATORS",
    "Generator",
    "GrammarError",
    "IDENTITY",
    "MalformedPairError",
    "NormalForm",
    "Path",
    "SeesawParams",
    "SwingReport",
    "ThompsonFError",
    "Tree",
    "TreePair",
    "UnreducedPairError",
    "bfs_ball",
    "caret",
    "classify",
    "classify_pair",
    "condition_holds",
    "distance",
    "enumerate_trees",
    "evaluate",
    "fellow_traveller_demo",
    "format_genword",
    "format_nf",
    "generator_pair",
    "greedy_geodesic",
    "inverse",
    "invert_word",
    "leaf",
    "length",
    "multiply",
    "nf_to_genword",
    "nf_to_pair",
    "pair_to_nf",
    "parse_genword",
    "parse_nf",
    "reduce",
    "reducing_generators",
    "right_multiply_generator",
    "seesaw_nf",
    "seesaw_word",
    "synchronous_distance",
    "verify_swing",
    "weight",
]
