"""Hypoplactic monoid: quasi-ribbon tableaux, the hypoplactic congruence,
identities satisfied by hypo and derivations from the basis {L, M, R}."""

from ._core import (
    DerivationError,
    ParseError,
    ResourceLimitError,
    canonical_form,
    check,
    consequence_bfs,
    derive,
    enumerate_identities,
    equivalent,
    format_word,
    holds_in_hypo,
    inversions,
    non_embedding_witness,
    p_symbol,
    parse_word,
    phi_n,
    reading_word,
    satisfies,
    shortest_identity_length,
    tableau_text,
    verify_derivation,
)

__all__ = [
    "DerivationError",
    "ParseError",
    "ResourceLimitError",
    "canonical_form",
    "check",
    "consequence_bfs",
    "derive",
    "enumerate_identities",
    "equivalent",
    "format_word",
    "holds_in_hypo",
    "inversions",
    "non_embedding_witness",
    "p_symbol",
    "parse_word",
    "phi_n",
    "reading_word",
    "satisfies",
    "shortest_identity_length",
    "tableau_text",
    "verify_derivation",
]
