"""Subsequence sums over Z_n and over the integers (via the bar map).

Both sum sets are computed with bit-vector reachability: bit ``s`` of an int
is set when ``s`` is the sum of some nonempty subsequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from zerosum.bits import iter_bits, rotate_bits
from zerosum.errors import DomainError, InvariantViolation
from zerosum.zn import ResidueSequence, bar, format_sequence, sigma_bar


@dataclass(frozen=True)
class SubsumSetMod:
    n: int
    members: frozenset[int]

    def __contains__(self, x: int) -> bool:
        return x in self.members


@dataclass(frozen=True)
class SubsumSetInt:
    members: frozenset[int]
    upper: int

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def missing(self) -> list[int]:
        return [t for t in range(1, self.upper + 1) if t not in self.members]


@dataclass(frozen=True)
class IntervalWitness:
    subsequence: ResidueSequence
    target: int

    def validate(self, S: ResidueSequence) -> None:
        if self.subsequence.length == 0:
            raise InvariantViolation("empty witness")
        if not self.subsequence.divides(S):
            raise InvariantViolation(f"witness {self.subsequence} does not divide {S}")
        got = sigma_bar(self.subsequence)
        if got != self.target:
            raise InvariantViolation(f"witness sums to {got}, expected {self.target}")


@dataclass(frozen=True)
class TheoremReport:
    sequence: str
    hypotheses_met: bool
    n: int
    k: int
    sigma_bar: int
    equality_holds: bool
    missing_targets: list[int]
    corollary_holds: bool
    failed_hypotheses: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "sequence": self.sequence,
            "n": self.n,
            "k": self.k,
            "sigma_bar": self.sigma_bar,
            "hypotheses_met": self.hypotheses_met,
            "failed_hypotheses": list(self.failed_hypotheses),
            "equality_holds": self.equality_holds,
            "missing_targets": list(self.missing_targets),
            "corollary_holds": self.corollary_holds,
        }


def reach_mod(S: ResidueSequence) -> int:
    """Bitmask of residues that are sums of nonempty subsequences of ``S``."""
    n = S.n
    reach = 0
    for a, m in S.counts:
        single = 1 << a
        for _ in range(m):
            grown = reach | rotate_bits(reach, a, n) | single
            if grown == reach:
                break
            reach = grown
    return reach


def subsums_mod(S: ResidueSequence) -> SubsumSetMod:
    return SubsumSetMod(S.n, frozenset(iter_bits(reach_mod(S))))


def is_zero_sum_free(S: ResidueSequence) -> bool:
    return not reach_mod(S) & 1


def reach_int(S: ResidueSequence) -> int:
    """Bitmask over ``[0, sigma_bar]``; bit 0 stands for the empty subsequence."""
    reach = 1
    for a, m in S.counts:
        w = bar(a, S.n)
        for _ in range(m):
            reach |= reach << w
    return reach


def subsums_int(S: ResidueSequence) -> SubsumSetInt:
    return SubsumSetInt(frozenset(iter_bits(reach_int(S) >> 1 << 1)), sigma_bar(S))


def _witness_table(S: ResidueSequence) -> tuple[list[int], dict[int, int]]:
    # items sorted by bar value so the first route found to a total uses the
    # smallest available terms; pred[t] is the item that first reached t
    items = sorted(S.terms, key=lambda a: bar(a, S.n))
    pred: dict[int, int] = {}
    reach = 1
    for i, a in enumerate(items):
        fresh = (reach << bar(a, S.n)) & ~reach
        for t in iter_bits(fresh):
            pred[t] = i
        reach |= fresh
    return items, pred


def subsum_witness(S: ResidueSequence, t: int) -> IntervalWitness | None:
    """A nonempty subsequence of ``S`` whose bar-sum is ``t``, or ``None``."""
    if t < 1:
        raise DomainError(f"target must be >= 1, got {t}")
    items, pred = _witness_table(S)
    if t not in pred:
        return None
    chosen = []
    rest = t
    while rest:
        i = pred[rest]
        chosen.append(items[i])
        rest -= bar(items[i], S.n)
    return IntervalWitness(ResidueSequence.from_terms(S.n, chosen), t)


def lemma1_decompose(v1: int, v2: int, N: int) -> tuple[int, int]:
    """Write ``N = alpha + 2*beta`` using at most ``v1`` ones and ``v2`` twos."""
    if v1 < 1 or v2 < 1:
        raise DomainError(f"need v1 >= 1 and v2 >= 1, got v1={v1}, v2={v2}")
    if not 1 <= N <= v1 + 2 * v2:
        raise DomainError(f"N={N} outside [1, {v1 + 2 * v2}]")
    beta = max(0, -(-(N - v1) // 2))
    return N - 2 * beta, beta


def lemma2_decompose(v1: int, v3: int, N: int) -> tuple[int, int]:
    """Write ``N = alpha + 3*gamma`` using at most ``v1`` ones and ``v3`` threes.

    Needs two ones: with a single 1 the value 2 is never reachable.
    """
    if v1 < 2 or v3 < 1:
        raise DomainError(f"need v1 >= 2 and v3 >= 1, got v1={v1}, v3={v3}")
    if not 1 <= N <= v1 + 3 * v3:
        raise DomainError(f"N={N} outside [1, {v1 + 3 * v3}]")
    gamma = max(0, -(-(N - v1) // 3))
    return N - 3 * gamma, gamma


def complement_witness(S: ResidueSequence, T: ResidueSequence) -> ResidueSequence:
    """Return ``S`` with the terms of ``T`` removed (multiplicity-wise)."""
    if not T.divides(S):
        raise DomainError(f"{T} does not divide {S}")
    left = S.multiplicity
    for a, m in T.counts:
        left[a] -= m
    return ResidueSequence.from_counts(S.n, left)


def theorem_hypotheses(S: ResidueSequence, k: int) -> list[str]:
    """Names of the interval-theorem hypotheses that ``S`` (of length n-k) fails."""
    n = S.n
    failed = []
    if 2 * k + 1 < 3:
        failed.append("2k+1 >= 3")
    if n < 2 * k + 1:
        failed.append("n >= 2k+1")
    if not is_zero_sum_free(S):
        failed.append("zero-sum free")
    if sigma_bar(S) > n - 1:
        failed.append("sigma_bar <= n-1")
    return failed


def interval_decompose(S: ResidueSequence, t: int) -> IntervalWitness:
    """Witness for ``t`` in ``[1, sigma_bar(S)]`` under the theorem's hypotheses.

    Targets up to ``n // 2`` come straight from the DP; larger ones are the
    complement of a witness for ``sigma_bar(S) - t``.
    """
    n = S.n
    k = n - S.length
    failed = theorem_hypotheses(S, k)
    if failed:
        raise DomainError(f"hypothesis failed for {S} (k={k}): {', '.join(failed)}")
    total = sigma_bar(S)
    if not 1 <= t <= total:
        raise DomainError(f"target t={t} outside [1, {total}]")
    if t <= n // 2:
        w = subsum_witness(S, t)
    elif t == total:
        w = IntervalWitness(S, t)
    else:
        part = subsum_witness(S, total - t)
        w = None if part is None else IntervalWitness(complement_witness(S, part.subsequence), t)
    if w is None:
        raise InvariantViolation(f"no witness for t={t} in {S} despite valid hypotheses")
    w.validate(S)
    return w


def verify_interval_theorem(S: ResidueSequence, k: int) -> TheoremReport:
    n = S.n
    if S.length != n - k:
        raise DomainError(f"|S|={S.length} but n-k={n - k}")
    failed = theorem_hypotheses(S, k)
    ss = subsums_int(S)
    missing = ss.missing()
    corollary = all(t in ss.members for t in range(1, n - k + 1))
    return TheoremReport(
        sequence=format_sequence(S),
        hypotheses_met=not failed,
        n=n,
        k=k,
        sigma_bar=ss.upper,
        equality_holds=not missing,
        missing_targets=missing,
        corollary_holds=corollary,
        failed_hypotheses=failed,
    )
