"""The dihedral group D_2n = <x, y | x^2 = y^n = 1, yx = xy^-1> in normal form.

An element is ``x^eps y^a``; in text it is written ``r<a>`` (eps = 0) or
``s<a>`` (eps = 1).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable

from zerosum.bits import iter_bits
from zerosum.errors import DomainError, ParseError
from zerosum.groups import GroupSpec, Key, ProductEngine, free_multisets

DEFAULT_CLASSIFY_BUDGET = 8

_HEADER = re.compile(r"^\s*D\s+n\s*=\s*(?P<n>[^:]*?)\s*:(?P<body>.*)$", re.DOTALL)
_TERM = re.compile(r"^(?P<kind>[rs])(?P<a>[+-]?\d+)$")


@dataclass(frozen=True, order=True)
class DihedralElement:
    n: int
    reflection: bool
    rotation: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise DomainError(f"dihedral group needs n >= 3, got {self.n}")
        object.__setattr__(self, "reflection", bool(self.reflection))
        object.__setattr__(self, "rotation", self.rotation % self.n)

    @classmethod
    def identity(cls, n: int) -> DihedralElement:
        return cls(n, False, 0)

    @classmethod
    def y(cls, n: int, a: int = 1) -> DihedralElement:
        return cls(n, False, a)

    @classmethod
    def xy(cls, n: int, a: int = 0) -> DihedralElement:
        return cls(n, True, a)

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        return dihedral_mul(self, other)

    def inverse(self) -> DihedralElement:
        if self.reflection:
            return self
        return DihedralElement(self.n, False, -self.rotation)

    @property
    def gid(self) -> int:
        """Id of this element in ``GroupSpec.dihedral(n)``."""
        return self.rotation if self.reflection else self.n + self.rotation

    @classmethod
    def from_gid(cls, n: int, gid: int) -> DihedralElement:
        return cls(n, True, gid) if gid < n else cls(n, False, gid - n)

    def __str__(self) -> str:
        return ("s" if self.reflection else "r") + str(self.rotation)

    def pretty(self) -> str:
        a = self.rotation
        ya = "" if a == 0 else "y" if a == 1 else f"y^{a}"
        if self.reflection:
            return "x" + ya
        return ya or "1"


def dihedral_mul(u: DihedralElement, v: DihedralElement) -> DihedralElement:
    # x^e y^a * x^f y^b = x^(e+f) y^((-1)^f a + b), from y^a x = x y^-a
    if u.n != v.n:
        raise DomainError(f"cannot multiply elements of D_{2 * u.n} and D_{2 * v.n}")
    a = -u.rotation if v.reflection else u.rotation
    return DihedralElement(u.n, u.reflection != v.reflection, a + v.rotation)


@dataclass(frozen=True)
class DihedralSequence:
    """Multiset over D_2n; ``counts`` pairs ``(reflection, rotation)`` with multiplicities."""

    n: int
    counts: tuple[tuple[tuple[bool, int], int], ...] = ()

    @classmethod
    def from_elements(cls, n: int, elems: Iterable[DihedralElement]) -> DihedralSequence:
        if n < 3:
            raise DomainError(f"dihedral group needs n >= 3, got {n}")
        c: Counter[tuple[bool, int]] = Counter()
        for e in elems:
            if e.n != n:
                raise DomainError(f"element {e} is not in D_{2 * n}")
            c[(e.reflection, e.rotation)] += 1
        return cls(n, tuple(sorted(c.items())))

    @classmethod
    def from_key(cls, n: int, key: Key) -> DihedralSequence:
        return cls.from_elements(n, (DihedralElement.from_gid(n, g) for g in key))

    @property
    def elements(self) -> list[DihedralElement]:
        return [DihedralElement(self.n, eps, a) for (eps, a), m in self.counts for _ in range(m)]

    @property
    def length(self) -> int:
        return sum(m for _, m in self.counts)

    def __len__(self) -> int:
        return self.length

    @property
    def key(self) -> Key:
        return tuple(sorted(e.gid for e in self.elements))

    def rotation_part(self) -> list[int]:
        """Exponents of the terms lying in <y>."""
        return [e.rotation for e in self.elements if not e.reflection]

    def __str__(self) -> str:
        return format_dihedral(self)


def parse_dihedral(text: str) -> DihedralSequence:
    """Parse ``D n=<int>: term(,term)*`` with terms ``r<a>`` / ``s<a>``."""
    m = _HEADER.match(text)
    if m is None:
        raise ParseError("expected 'D n=<int>: <terms>'", text.strip())
    raw_n = m.group("n")
    if not re.fullmatch(r"\d+", raw_n):
        raise ParseError("bad modulus", raw_n)
    n = int(raw_n)
    if n < 3:
        raise DomainError(f"dihedral group needs n >= 3, got {n}")
    body = m.group("body").strip()
    elems = []
    if body:
        for token in body.split(","):
            token = token.strip()
            t = _TERM.match(token)
            if t is None:
                raise ParseError("bad dihedral term", token)
            elems.append(DihedralElement(n, t.group("kind") == "s", int(t.group("a"))))
    return DihedralSequence.from_elements(n, elems)


def format_dihedral(S: DihedralSequence) -> str:
    body = ",".join(str(e) for e in S.elements)
    return f"D n={S.n}: {body}" if body else f"D n={S.n}:"


@lru_cache(maxsize=None)
def _engine(n: int) -> ProductEngine:
    return ProductEngine(GroupSpec.dihedral(n))


def _elements_of(n: int, mask: int) -> set[DihedralElement]:
    return {DihedralElement.from_gid(n, g) for g in iter_bits(mask)}


def _require_nonempty(S: DihedralSequence) -> None:
    if S.length == 0:
        raise DomainError("sequence must be nonempty")


def pi_products(S: DihedralSequence) -> set[DihedralElement]:
    """Products of all orderings of the full sequence."""
    _require_nonempty(S)
    return _elements_of(S.n, _engine(S.n).pi(S.key))


def big_pi(S: DihedralSequence) -> set[DihedralElement]:
    """Products of all orderings of all nonempty subsequences."""
    _require_nonempty(S)
    return _elements_of(S.n, _engine(S.n).big_pi(S.key))


@dataclass(frozen=True)
class ProductWitness:
    ordered_terms: list[DihedralElement]
    product: DihedralElement

    def check(self) -> bool:
        acc = DihedralElement.identity(self.product.n)
        for e in self.ordered_terms:
            acc = acc * e
        return bool(self.ordered_terms) and acc == self.product

    def __str__(self) -> str:
        return " * ".join(e.pretty() for e in self.ordered_terms) + f" = {self.product.pretty()}"


def is_product_one_free(S: DihedralSequence) -> tuple[bool, ProductWitness | None]:
    _require_nonempty(S)
    order = _engine(S.n).one_witness(S.key)
    if order is None:
        return True, None
    terms = [DihedralElement.from_gid(S.n, g) for g in order]
    return False, ProductWitness(terms, DihedralElement.identity(S.n))


def extremal_family(n: int) -> set[Key]:
    """Canonical keys of the predicted length-n product-one free sequences over D_2n."""
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    fam = set()
    for t in range(1, n):
        if gcd(t, n) != 1:
            continue
        for s in range(n):
            elems = [DihedralElement.y(n, t)] * (n - 1) + [DihedralElement.xy(n, s)]
            fam.add(DihedralSequence.from_elements(n, elems).key)
    if n == 3:
        fam.add(DihedralSequence.from_elements(3, [DihedralElement.xy(3, a) for a in range(3)]).key)
    return fam


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    found_count: int
    expected_count: int
    matches_family: bool
    extras: list[DihedralSequence]
    missing: list[DihedralSequence]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "found_count": self.found_count,
            "expected_count": self.expected_count,
            "matches_family": self.matches_family,
            "extras": [format_dihedral(s) for s in self.extras],
            "missing": [format_dihedral(s) for s in self.missing],
        }


def free_of_length(n: int, first: int | None = None) -> list[Key]:
    """Canonical keys of every product-one free length-n sequence over D_2n.

    The search only extends free sequences; see ``free_multisets``.
    """
    G = GroupSpec.dihedral(n)
    return [k for k in free_multisets(G, n, first=first, engine=ProductEngine(G)) if len(k) == n]


def compare_with_family(n: int, found: Iterable[Key]) -> ClassificationReport:
    found = set(found)
    fam = extremal_family(n)
    extras = [DihedralSequence.from_key(n, k) for k in sorted(found - fam)]
    missing = [DihedralSequence.from_key(n, k) for k in sorted(fam - found)]
    return ClassificationReport(n, len(found), len(fam), not extras and not missing, extras, missing)


def verify_classification(n: int, budget: int = DEFAULT_CLASSIFY_BUDGET) -> ClassificationReport:
    if not 3 <= n <= budget:
        raise DomainError(f"n={n} outside the enumeration budget [3, {budget}]")
    return compare_with_family(n, free_of_length(n))
