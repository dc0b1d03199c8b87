"""Saito dicriticities, configurations and moduli dimensions of numbered
resolution trees of plane-curve singularities."""

from ._saitotree import (
    SaitoError,
    Tree,
    check_upper_bound,
    dot,
    family,
    from_char_exponents,
    gluing,
    index_sums,
    milnor,
    moduli,
    multiplicities,
    multiplicity_sequence,
    parse,
    profile,
    saito,
    saito_bruteforce,
    saito_number,
    serialize,
    theta01,
    theta02,
    theta11,
    tjurina,
    valuations,
)

__all__ = [
    "SaitoError",
    "Tree",
    "check_upper_bound",
    "dot",
    "family",
    "from_char_exponents",
    "gluing",
    "index_sums",
    "milnor",
    "moduli",
    "multiplicities",
    "multiplicity_sequence",
    "parse",
    "profile",
    "saito",
    "saito_bruteforce",
    "saito_number",
    "serialize",
    "theta01",
    "theta02",
    "theta11",
    "tjurina",
    "valuations",
]
