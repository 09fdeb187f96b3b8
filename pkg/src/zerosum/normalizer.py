"""Unit-multiplier normalization and the classical multiplicity bounds."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd

from zerosum.errors import DomainError
from zerosum.subsums import is_zero_sum_free
from zerosum.zn import ResidueSequence, bar

BEN = "BEN"
SC = "SC"
OUT_OF_RANGE = "out-of-range"


@dataclass(frozen=True)
class NormalizerResult:
    g: int
    total: int
    achieves_bound: bool

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    regime: str
    required: int
    achieved: int
    holds: bool

    def to_dict(self) -> dict:
        return asdict(self)


def units(n: int) -> list[int]:
    return [g for g in range(1, n) if gcd(g, n) == 1]


def scaled_bar_sum(S: ResidueSequence, g: int) -> int:
    return sum(bar(g * a, S.n) * m for a, m in S.counts)


def find_normalizer(S: ResidueSequence) -> NormalizerResult:
    """Unit ``g`` minimizing the bar-sum of ``g*S`` (smallest ``g`` on ties)."""
    if S.length == 0:
        raise DomainError("cannot normalize the empty sequence")
    if S.v(0):
        raise DomainError(f"{S} contains the residue 0")
    g, total = min(((g, scaled_bar_sum(S, g)) for g in units(S.n)), key=lambda p: (p[1], p[0]))
    return NormalizerResult(g, total, total <= S.n - 1)


def bound_regime(n: int, k: int) -> tuple[str, int]:
    """Which multiplicity bound applies to length ``n - k`` and what it demands.

    At ``n == 3k - 2`` both bounds give the same value; it is reported as BEN.
    """
    if k < 1 or n < 2 * k + 1:
        return OUT_OF_RANGE, 0
    if n >= 3 * k - 2:
        return BEN, n - 2 * k + 1
    return SC, n - k - (n - 1) // 3


def check_multiplicity_bound(S: ResidueSequence, k: int) -> BoundReport:
    n = S.n
    if S.length != n - k:
        raise DomainError(f"|S|={S.length} but n-k={n - k}")
    regime, required = bound_regime(n, k)
    if regime == OUT_OF_RANGE:
        raise DomainError(f"need n >= 2k+1 >= 3, got n={n}, k={k}")
    if not is_zero_sum_free(S):
        raise DomainError(f"{S} is not zero-sum free")
    achieved = S.max_multiplicity()
    return BoundReport(n, k, regime, required, achieved, achieved >= required)
