"""Kernel backend selection.

The hot operations (multiplication, reduction, caret classification, word
length) exist twice: a compiled Cython extension ``_ckernel`` and the
pure-Python reference ``pykernel``.  The compiled backend is used when it is
importable; set ``THOMPSON_F_PURE=1`` to force the pure backend.
"""

import os

from . import pykernel

_force_pure = os.environ.get("THOMPSON_F_PURE", "") not in ("", "0")

if not _force_pure:
    try:
        from . import _ckernel as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = pykernel
        BACKEND = "pure"
else:
    _impl = pykernel
    BACKEND = "pure"

# Constants come from the reference module; both backends share them.
X0 = pykernel.X0
X0_INV = pykernel.X0_INV
X1 = pykernel.X1
X1_INV = pykernel.X1_INV
GENERATOR_DIAGRAMS = pykernel.GENERATOR_DIAGRAMS
WEIGHT_TABLE = pykernel.WEIGHT_TABLE

tree_end = _impl.tree_end
validate_tree = _impl.validate_tree
union_trees = _impl.union_trees
reduce_pair = _impl.reduce_pair
is_reduced = _impl.is_reduced
multiply = _impl.multiply
condition_holds = _impl.condition_holds
rotate = _impl.rotate
right_multiply = _impl.right_multiply
classify = _impl.classify
fordham_length = _impl.fordham_length

ALL_BACKENDS = {"pure": pykernel}
if BACKEND == "cython":
    ALL_BACKENDS["cython"] = _impl
