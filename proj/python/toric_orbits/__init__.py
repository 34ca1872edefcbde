"""Torus orbit classification for complete toric varieties.

Exact-arithmetic computations on complete fans: divisor class groups,
divisor class monoids, Demazure roots, orbit classes of the automorphism
group and of its identity component, orbit closure posets, fan symmetries,
and recognition of products of projective spaces.

Ray indices are 0-based throughout this package; the fan file format and
the command line tool use 1-based indices.
"""

from ._core import (
    ClassGroup,
    Fan,
    FanError,
    IncompleteFanError,
    Root,
    b_surface,
    build_fan,
    class_group,
    classify,
    classify_aut,
    closure_poset,
    decompose_product,
    demazure_roots,
    family,
    hirzebruch,
    is_transitive,
    parse_fan,
    poset_dot,
    product,
    projective_space,
    report,
    serialize_fan,
    symmetries,
    upsilon,
    weighted_p11s,
)

__all__ = [
    "ClassGroup",
    "Fan",
    "FanError",
    "IncompleteFanError",
    "Root",
    "b_surface",
    "build_fan",
    "class_group",
    "classify",
    "classify_aut",
    "closure_poset",
    "decompose_product",
    "demazure_roots",
    "family",
    "hirzebruch",
    "is_transitive",
    "parse_fan",
    "poset_dot",
    "product",
    "projective_space",
    "report",
    "serialize_fan",
    "symmetries",
    "upsilon",
    "weighted_p11s",
]
