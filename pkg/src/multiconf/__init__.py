"""Multicomplex configuration ideals: construction, structure checks and glicci certificates."""

from .algebra import *  # noqa: F401,F403
from .algebra import __all__ as _algebra_all
from .configuration import (
    ConfigurationError,
    ConfigurationIdeal,
    FormFamily,
    build_ideal,
    point_ideals,
    validate_input,
    verify_theorem,
)
from .instances import InputError, ProblemInput, parse_input, random_instance, to_document
from .invariants import (
    BettiTable,
    ResourceCapExceeded,
    betti_monomial,
    betti_polynomial,
    degree_of,
    height_of,
    hilbert_numerator,
)
from .liaison import (
    BiliaisonWitness,
    GlicciCertificate,
    GlicciError,
    GvdError,
    GvdSplit,
    glicci_chain,
    gvd_split,
    is_nondegenerate,
    polarize_configuration,
    verify_biliaison_step,
)
from .multicomplex import (
    MonomialIdeal,
    Multicomplex,
    MulticomplexError,
    colon_link,
    deletion,
    ideal_of,
    new_multicomplex,
    standard_monomials,
)
from .polarization import (
    PolarizationContext,
    PolarizedBasis,
    check_induced_gb,
    check_nzd_polarization,
    geom_polarize,
    geom_polarize_basis,
    polarize_full,
)

__all__ = list(_algebra_all) + [
    "ConfigurationError",
    "ConfigurationIdeal",
    "FormFamily",
    "build_ideal",
    "point_ideals",
    "validate_input",
    "verify_theorem",
    "InputError",
    "ProblemInput",
    "parse_input",
    "random_instance",
    "to_document",
    "BettiTable",
    "ResourceCapExceeded",
    "betti_monomial",
    "betti_polynomial",
    "degree_of",
    "height_of",
    "hilbert_numerator",
    "BiliaisonWitness",
    "GlicciCertificate",
    "GlicciError",
    "GvdError",
    "GvdSplit",
    "glicci_chain",
    "gvd_split",
    "is_nondegenerate",
    "polarize_configuration",
    "verify_biliaison_step",
    "MonomialIdeal",
    "Multicomplex",
    "MulticomplexError",
    "colon_link",
    "deletion",
    "ideal_of",
    "new_multicomplex",
    "standard_monomials",
    "PolarizationContext",
    "PolarizedBasis",
    "check_induced_gb",
    "check_nzd_polarization",
    "geom_polarize",
    "geom_polarize_basis",
    "polarize_full",
]
