"""Exact braid groups, the braid action on free groups, and circle-valued
cocycle deformations, with machine-checkable identities throughout.

All circle values are written additively (see :mod:`braidphase.phase`), all
words are exact, and the word problem in the braid group is decided by two
independent oracles: the faithful action on the free group and the Garside
left normal form.
"""

from .artin import (
    FreeAutomorphism,
    artin_auto,
    artin_generator,
    compose,
    equal_auto,
    is_inner_for_pure,
)
from .braid import (
    BraidWord,
    GarsideForm,
    Permutation,
    PureWord,
    center_z,
    center_z_pure_word,
    delta,
    embed,
    equal,
    garside_normal_form,
    is_pure,
    p3_image,
    parse_braid_word,
    parse_pure_word,
    permutation_of,
    pure_generator,
    rewrite_pure,
)
from .cocycle import (
    BraidOneCocycle,
    CohomologyParameters,
    MackeyTwoCocycle,
    PureOneCocycle,
    SemidirectElement,
    TabulatedOmega,
    TwoCocycleSigmaPhi,
    Verdict,
    build_braid_cocycle,
    build_pure_cocycle,
    center_element,
    coboundary_of_character,
    cocycle_from_json,
    cocycle_to_json,
    cohomology_parameters,
    evaluate_conditions,
    extend,
    extend_pure,
    mu_params,
    mu_phi,
    nu,
    restrict_to_pure,
    sigma_eval,
    sigma_regular,
    similar_braid_cocycles,
    validate_braid_cocycle,
    validate_omega,
)
from .errors import MissingOmegaError, ParseError, RankError
from .freegroup import (
    Character,
    FreeWord,
    OrbitProbe,
    conjugate_orbit_probe,
    iter_reduced_words,
    parse_free_word,
)
from .phase import Angle, parse_angle

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "BraidOneCocycle",
    "BraidWord",
    "Character",
    "CohomologyParameters",
    "FreeAutomorphism",
    "FreeWord",
    "GarsideForm",
    "MackeyTwoCocycle",
    "MissingOmegaError",
    "OrbitProbe",
    "ParseError",
    "Permutation",
    "PureOneCocycle",
    "PureWord",
    "RankError",
    "SemidirectElement",
    "TabulatedOmega",
    "TwoCocycleSigmaPhi",
    "Verdict",
    "artin_auto",
    "artin_generator",
    "build_braid_cocycle",
    "build_pure_cocycle",
    "center_element",
    "center_z",
    "center_z_pure_word",
    "coboundary_of_character",
    "cocycle_from_json",
    "cocycle_to_json",
    "cohomology_parameters",
    "compose",
    "conjugate_orbit_probe",
    "delta",
    "embed",
    "equal",
    "equal_auto",
    "evaluate_conditions",
    "extend",
    "extend_pure",
    "garside_normal_form",
    "is_inner_for_pure",
    "is_pure",
    "iter_reduced_words",
    "mu_params",
    "mu_phi",
    "nu",
    "p3_image",
    "parse_angle",
    "parse_braid_word",
    "parse_free_word",
    "parse_pure_word",
    "permutation_of",
    "pure_generator",
    "restrict_to_pure",
    "rewrite_pure",
    "sigma_eval",
    "sigma_regular",
    "similar_braid_cocycles",
    "validate_braid_cocycle",
    "validate_omega",
]
