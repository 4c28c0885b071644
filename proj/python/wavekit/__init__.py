from ._core import (
    WavekitError,
    abelianize,
    canonical_form,
    depth,
    embeds_in_family,
    homology,
    is_11_tunnel,
    is_positive,
    is_primitive,
    is_primitive_or_power,
    is_realizable,
    meridian_pair,
    recognize,
    reduce,
    unknotting_dot,
    vertical_pair,
    whitehead_minimize,
)

__all__ = [
    "WavekitError",
    "abelianize",
    "canonical_form",
    "depth",
    "embeds_in_family",
    "homology",
    "is_11_tunnel",
    "is_positive",
    "is_primitive",
    "is_primitive_or_power",
    "is_realizable",
    "meridian_pair",
    "recognize",
    "reduce",
    "unknotting_dot",
    "vertical_pair",
    "whitehead_minimize",
]
