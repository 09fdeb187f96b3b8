"""Residues mod n, the bar map and unordered sequences over Z_n."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping

from zerosum.errors import DomainError, ParseError

_HEADER = re.compile(r"^\s*n\s*=\s*(?P<n>[^:]*?)\s*:(?P<body>.*)$", re.DOTALL)
_INT = re.compile(r"^[+-]?\d+$")


def check_modulus(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise DomainError(f"modulus must be an integer >= 2, got {n!r}")
    return n


def bar(value: int, n: int) -> int:
    """Least positive integer congruent to ``value`` mod ``n``.

    The zero class maps to ``n``, so the result always lies in ``[1, n]``.

    >>> bar(7, 5), bar(0, 5), bar(4, 5)
    (2, 5, 4)
    """
    r = value % n
    return r if r else n


@dataclass(frozen=True)
class ResidueSequence:
    """A finite multiset of residues mod ``n``.

    ``counts`` holds ``(residue, multiplicity)`` pairs sorted by residue with
    every multiplicity >= 1; use :meth:`from_terms` or :meth:`from_counts`
    rather than building it by hand.
    """

    n: int
    counts: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        check_modulus(self.n)
        prev = -1
        for a, m in self.counts:
            if not (0 <= a < self.n) or m < 1 or a <= prev:
                raise DomainError(f"invalid multiplicity table {self.counts!r} for n={self.n}")
            prev = a

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[int]) -> ResidueSequence:
        check_modulus(n)
        return cls.from_counts(n, Counter(t % n for t in terms))

    @classmethod
    def from_counts(cls, n: int, counts: Mapping[int, int]) -> ResidueSequence:
        check_modulus(n)
        merged: Counter[int] = Counter()
        for a, m in counts.items():
            if m < 0:
                raise DomainError(f"negative multiplicity {m} for residue {a}")
            merged[a % n] += m
        return cls(n, tuple(sorted((a, m) for a, m in merged.items() if m > 0)))

    @classmethod
    def empty(cls, n: int) -> ResidueSequence:
        return cls(n)

    @cached_property
    def length(self) -> int:
        return sum(m for _, m in self.counts)

    def __len__(self) -> int:
        return self.length

    @property
    def multiplicity(self) -> dict[int, int]:
        return dict(self.counts)

    def v(self, a: int) -> int:
        """Multiplicity of the residue ``a``."""
        return self.multiplicity.get(a % self.n, 0)

    @cached_property
    def terms(self) -> tuple[int, ...]:
        return tuple(a for a, m in self.counts for _ in range(m))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.counts)

    def max_multiplicity(self) -> int:
        return max((m for _, m in self.counts), default=0)

    def divides(self, other: ResidueSequence) -> bool:
        """True when this sequence is a subsequence of ``other``."""
        if self.n != other.n:
            return False
        big = other.multiplicity
        return all(big.get(a, 0) >= m for a, m in self.counts)

    def __str__(self) -> str:
        return format_sequence(self)


def parse_sequence(text: str) -> ResidueSequence:
    """Parse ``n=<int>: a1,a2,...`` (entries reduced mod n).

    >>> parse_sequence("n=7: 8,1").counts
    ((1, 2),)
    """
    m = _HEADER.match(text)
    if m is None:
        raise ParseError("expected 'n=<int>: <terms>'", text.strip())
    raw_n = m.group("n")
    if not _INT.match(raw_n):
        raise ParseError("bad modulus", raw_n)
    n = int(raw_n)
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    body = m.group("body").strip()
    if not body:
        return ResidueSequence.empty(n)
    terms = []
    for token in body.split(","):
        token = token.strip()
        if not _INT.match(token):
            raise ParseError("bad term", token)
        terms.append(int(token))
    return ResidueSequence.from_terms(n, terms)


def format_sequence(S: ResidueSequence) -> str:
    body = ",".join(str(a) for a in S.terms)
    return f"n={S.n}: {body}" if body else f"n={S.n}:"


def scale(S: ResidueSequence, g: int) -> ResidueSequence:
    """Multiply every term by the unit ``g``."""
    if gcd(g, S.n) != 1:
        raise DomainError(f"g={g} is not a unit mod {S.n}")
    return ResidueSequence.from_counts(S.n, {(g * a) % S.n: m for a, m in S.counts})


def sums(S: ResidueSequence) -> tuple[int, int]:
    """Return ``(sigma mod n, integer sum of bar values)``; ``(0, 0)`` if empty."""
    sigma_bar = sum(bar(a, S.n) * m for a, m in S.counts)
    return sigma_bar % S.n, sigma_bar


def sigma_bar(S: ResidueSequence) -> int:
    return sums(S)[1]
