"""Decide unary-semigroup identities over all (finite) epigroups."""

from .decider import FAILS, HOLDS, Verdict, decide_identity, decide_zword_identity, render_trace
from .lcp import longest_common_prefix, longest_common_suffix, normal_equal
from .normalizer import (
    NormalSword,
    PeriodReport,
    find_period,
    is_fully_normal,
    is_normal,
    merge_product,
    normalize,
    reduce_omega_power,
)
from .omega_poly import OmegaPoly, parse_poly, render_poly
from .sword import (
    Sword,
    concat,
    prefix_of_length,
    s_canonical,
    s_equal,
    s_neighbors,
    strip_prefix,
    strip_suffix,
)
from .zterm import (
    HeightRepresentation,
    Letter,
    OmegaPower,
    Pseudoinverse,
    exponent_defect,
    expand,
    height,
    height_representation,
    length,
    mirror,
    parse,
    render,
    term_to_zword,
    to_json,
    zword_to_term,
)

__all__ = [
    "FAILS",
    "HOLDS",
    "HeightRepresentation",
    "Letter",
    "NormalSword",
    "OmegaPoly",
    "OmegaPower",
    "PeriodReport",
    "Pseudoinverse",
    "Sword",
    "Verdict",
    "concat",
    "decide_identity",
    "decide_zword_identity",
    "expand",
    "exponent_defect",
    "find_period",
    "height",
    "height_representation",
    "is_fully_normal",
    "is_normal",
    "length",
    "longest_common_prefix",
    "longest_common_suffix",
    "merge_product",
    "mirror",
    "normal_equal",
    "normalize",
    "parse",
    "parse_poly",
    "prefix_of_length",
    "reduce_omega_power",
    "render",
    "render_poly",
    "render_trace",
    "s_canonical",
    "s_equal",
    "s_neighbors",
    "strip_prefix",
    "strip_suffix",
    "term_to_zword",
    "to_json",
    "zword_to_term",
]
