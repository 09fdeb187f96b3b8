"""Inverse zero-sum toolkit: subsequence sums over Z_n and product-one free
sequences over dihedral groups."""

from zerosum.errors import DomainError, InvariantViolation, ParseError
from zerosum.zn import ResidueSequence, bar, format_sequence, parse_sequence, scale, sums
from zerosum.subsums import (
    IntervalWitness,
    TheoremReport,
    complement_witness,
    interval_decompose,
    is_zero_sum_free,
    lemma1_decompose,
    lemma2_decompose,
    subsum_witness,
    subsums_int,
    subsums_mod,
    verify_interval_theorem,
)
from zerosum.normalizer import BoundReport, NormalizerResult, check_multiplicity_bound, find_normalizer

__all__ = [
    "BoundReport",
    "DomainError",
    "IntervalWitness",
    "InvariantViolation",
    "NormalizerResult",
    "ParseError",
    "ResidueSequence",
    "TheoremReport",
    "bar",
    "check_multiplicity_bound",
    "complement_witness",
    "find_normalizer",
    "format_sequence",
    "interval_decompose",
    "is_zero_sum_free",
    "lemma1_decompose",
    "lemma2_decompose",
    "parse_sequence",
    "scale",
    "subsum_witness",
    "subsums_int",
    "subsums_mod",
    "sums",
    "verify_interval_theorem",
]
