from stack_preimages.permutations.patterns import (
    Pattern,
    av_n,
    av_n_ending_in_max,
    av_nk,
    contains,
    parse_pattern,
)
from stack_preimages.permutations.perm import (
    Permutation,
    descents,
    direct_sum,
    family,
    parse_permutation,
    peaks,
    reverse_complement,
    standardize,
)
from stack_preimages.permutations.stacksort import (
    image_multiset,
    preimages,
    pushpop_word,
    sort_iter,
    sort_once,
)

__all__ = [
    "Pattern",
    "Permutation",
    "av_n",
    "av_n_ending_in_max",
    "av_nk",
    "contains",
    "descents",
    "direct_sum",
    "family",
    "image_multiset",
    "parse_pattern",
    "parse_permutation",
    "peaks",
    "preimages",
    "pushpop_word",
    "reverse_complement",
    "sort_iter",
    "sort_once",
    "standardize",
]
