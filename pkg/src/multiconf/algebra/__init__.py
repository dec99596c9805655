"""Exact fields, term orders, polynomials and a Gröbner engine."""

from .field import GF, QQ, ModP, PrimeField, RationalField, parse_field
from .groebner import (
    buchberger,
    divide,
    first_nonreducing_pair,
    is_groebner_basis,
    reduce,
    reduced_groebner,
    spoly,
)
from .ideal import (
    Ideal,
    colon,
    groebner_basis,
    intersect,
    is_regular_element,
    radical_member,
    zero_divisor_witness,
)
from .linalg import rank, rref, sparse_rank
from .monomial import BlockOrder, InducedOrder, Lex, TermOrder, divides, minimalize, term_cmp
from .polynomial import Poly, Ring

__all__ = [
    "GF",
    "QQ",
    "ModP",
    "PrimeField",
    "RationalField",
    "parse_field",
    "buchberger",
    "divide",
    "first_nonreducing_pair",
    "is_groebner_basis",
    "reduce",
    "reduced_groebner",
    "spoly",
    "Ideal",
    "colon",
    "groebner_basis",
    "intersect",
    "is_regular_element",
    "radical_member",
    "zero_divisor_witness",
    "rank",
    "rref",
    "sparse_rank",
    "BlockOrder",
    "InducedOrder",
    "Lex",
    "TermOrder",
    "divides",
    "minimalize",
    "term_cmp",
    "Poly",
    "Ring",
]
