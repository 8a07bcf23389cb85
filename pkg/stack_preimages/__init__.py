from stack_preimages._version import __version__
from stack_preimages.exceptions import StackPreimagesError
from stack_preimages.hooks import fertility, valid_compositions
from stack_preimages.permutations import Permutation, parse_permutation, preimages, sort_once

__all__ = [
    "Permutation",
    "StackPreimagesError",
    "__version__",
    "fertility",
    "parse_permutation",
    "preimages",
    "sort_once",
    "valid_compositions",
]
