"""Monomial ideals with prescribed depth functions of powers, and tools to verify them."""

__version__ = "0.1.0"

from .betti import (
    BettiTable,
    betti_table,
    depth_of_quotient,
    depth_prefix,
    depth_table,
    lcm_lattice,
    observed_limit_and_dstab,
    socle_nonzero,
)
from .constructions import (
    DepthSpec,
    WitnessRequest,
    admissible_ndr,
    construct_from_spec,
    example_fixtures,
    ndr_witness,
    prop_ideal,
    socle_witness,
    validate_spec,
)
from .depth_model import DepthFunction, min_convolution, predict_ndr, predict_spec
from .linalg import GF2, GF3, QQ, FieldSpec
from .monomial import MonomialIdeal, Ring, power


__all__ = [
    "BettiTable",
    "betti_table",
    "depth_of_quotient",
    "depth_prefix",
    "depth_table",
    "lcm_lattice",
    "observed_limit_and_dstab",
    "socle_nonzero",
    "DepthSpec",
    "WitnessRequest",
    "admissible_ndr",
    "construct_from_spec",
    "example_fixtures",
    "ndr_witness",
    "prop_ideal",
    "socle_witness",
    "validate_spec",
    "DepthFunction",
    "min_convolution",
    "predict_ndr",
    "predict_spec",
    "GF2",
    "GF3",
    "QQ",
    "FieldSpec",
    "MonomialIdeal",
    "Ring",
    "power",
]
