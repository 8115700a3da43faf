"""Particle gathering in tilt models."""

from ._tilt import (
    Polyomino,
    TiltError,
    apply,
    full_gathering,
    is_gatherable,
    lower_bound,
    normalize,
    s1_gathering,
    scs_binary,
    sgs,
    tally_intersection_smallest,
)

__all__ = [
    "Polyomino",
    "TiltError",
    "apply",
    "full_gathering",
    "is_gatherable",
    "lower_bound",
    "normalize",
    "s1_gathering",
    "scs_binary",
    "sgs",
    "tally_intersection_smallest",
]
