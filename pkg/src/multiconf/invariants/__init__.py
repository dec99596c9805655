"""Hilbert series, degree, height and graded Betti numbers."""

from .betti import (
    BettiTable,
    ResourceCapExceeded,
    SchreyerResolution,
    betti_monomial,
    betti_polynomial,
    lcm_lattice,
    reduced_homology_ranks,
    schreyer_resolution,
    upper_koszul_complex,
)
from .hilbert import (
    HilbertData,
    degree_of,
    height_monomial,
    height_of,
    hilbert_numerator,
    hilbert_numerator_inclusion_exclusion,
    initial_ideal,
)

__all__ = [
    "BettiTable",
    "ResourceCapExceeded",
    "SchreyerResolution",
    "betti_monomial",
    "betti_polynomial",
    "lcm_lattice",
    "reduced_homology_ranks",
    "schreyer_resolution",
    "upper_koszul_complex",
    "HilbertData",
    "degree_of",
    "height_monomial",
    "height_of",
    "hilbert_numerator",
    "hilbert_numerator_inclusion_exclusion",
    "initial_ideal",
]
