"""Exhaustive verification suites.

Each suite splits its instance space into a fixed, ordered list of chunks.
Chunks are evaluated independently (inline or in a process pool) and merged
in list order, so the report never depends on the number of workers.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from zerosum.davenport import abelian_lower_bound, davenport_search
from zerosum.dihedral import (
    DihedralElement,
    DihedralSequence,
    big_pi,
    compare_with_family,
    free_of_length,
)
from zerosum.errors import DomainError, InvariantViolation
from zerosum.groups import GroupSpec
from zerosum.normalizer import check_multiplicity_bound, find_normalizer
from zerosum.bits import rotate_bits
from zerosum.subsums import (
    interval_decompose,
    subsums_int,
    verify_interval_theorem,
)
from zerosum.zn import ResidueSequence, bar, format_sequence, scale

SUITES = (
    "interval-theorem",
    "normalizer",
    "bounds",
    "classification",
    "davenport",
    "oracle-equivalence",
)

DIRECT_SUMS = ([2, 2], [3, 3], [2, 4], [2, 2, 2])
ORACLE_DIHEDRAL = ((3, 6), (4, 6))  # (n, max length) for D_6 and D_8
ORACLE_ZN_CAP = 10


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 12
    jobs: int = 1
    seed: int = 0
    samples: int = 1000
    output_format: str = "text"

    def __post_init__(self) -> None:
        if self.jobs < 1:
            raise DomainError(f"jobs must be >= 1, got {self.jobs}")
        if self.output_format not in ("text", "json"):
            raise DomainError(f"unknown format {self.output_format!r}")

    def report_view(self) -> dict:
        # jobs and output format do not influence results, so they stay out of the report
        return {"max_n": self.max_n, "seed": self.seed, "samples": self.samples}


# -- enumeration -------------------------------------------------------------


def zero_sum_free_sequences(
    n: int, max_len: int, first: int | None = None, max_bar: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Zero-sum free multisets over Z_n as ascending term tuples, lexicographically.

    With ``max_bar`` only sequences whose bar-sum stays within it are produced.
    """
    budget = max_bar if max_bar is not None else n * max_len

    def walk(terms: tuple[int, ...], reach: int, total: int) -> Iterator[tuple[int, ...]]:
        if len(terms) == max_len:
            return
        for a in range(terms[-1], n):
            if total + a > budget:
                break
            grown = reach | rotate_bits(reach, a, n) | (1 << a)
            if grown & 1:
                continue
            child = terms + (a,)
            yield child
            yield from walk(child, grown, total + a)

    for a in range(1, n) if first is None else [first]:
        if max_len >= 1 and a <= budget:
            yield (a,)
            yield from walk((a,), 1 << a, a)


# -- chunk workers -----------------------------------------------------------
# Every worker returns (counts: dict, counterexamples: list[dict]).


def _interval_chunk(n: int, first: int) -> tuple[dict, list]:
    counts: Counter[str] = Counter()
    bad = []
    min_len = n - (n - 1) // 2
    # sequences already satisfying the bar-sum hypothesis
    for terms in zero_sum_free_sequences(n, n - 1, first=first, max_bar=n - 1):
        if len(terms) < min_len:
            continue
        S = ResidueSequence.from_terms(n, terms)
        rep = verify_interval_theorem(S, n - len(terms))
        counts["direct"] += 1
        if not (rep.hypotheses_met and rep.equality_holds and rep.corollary_holds):
            bad.append({"kind": "direct", **rep.to_dict()})
    # every zero-sum free sequence of admissible length, after normalization
    for terms in zero_sum_free_sequences(n, n - 1, first=first):
        if len(terms) < min_len:
            continue
        S = ResidueSequence.from_terms(n, terms)
        norm = find_normalizer(S)
        rep = verify_interval_theorem(scale(S, norm.g), n - len(terms))
        counts["normalized"] += 1
        if not (rep.hypotheses_met and rep.equality_holds and rep.corollary_holds):
            bad.append({"kind": "normalized", "original": format_sequence(S), "g": norm.g, **rep.to_dict()})
    return dict(counts), bad


def random_theorem_instance(rng: random.Random, max_n: int) -> tuple[ResidueSequence, int]:
    """A random sequence meeting the interval-theorem hypotheses, plus a target."""
    n = rng.randint(3, max_n)
    k = rng.randint(1, (n - 1) // 2)
    length = n - k
    total = rng.randint(length, n - 1)
    cuts = sorted(rng.sample(range(1, total), length - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    return ResidueSequence.from_terms(n, parts), rng.randint(1, total)


def _witness_chunk(seed: int, samples: int, max_n: int) -> tuple[dict, list]:
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        S, t = random_theorem_instance(rng, max_n)
        try:
            interval_decompose(S, t)
        except (InvariantViolation, DomainError) as exc:
            bad.append({"kind": "witness", "sequence": format_sequence(S), "t": t, "error": str(exc)})
    return {"witness_samples": samples}, bad


def _normalizer_chunk(n: int, first: int) -> tuple[dict, list]:
    counts = 0
    bad = []
    for terms in zero_sum_free_sequences(n, n - 1, first=first):
        if 2 * len(terms) <= n:
            continue
        S = ResidueSequence.from_terms(n, terms)
        res = find_normalizer(S)
        counts += 1
        if not res.achieves_bound:
            bad.append({"sequence": format_sequence(S), **res.to_dict()})
    return {"instances": counts}, bad


def _bounds_chunk(n: int, first: int) -> tuple[dict, list]:
    counts: Counter[str] = Counter()
    bad = []
    for terms in zero_sum_free_sequences(n, n - 1, first=first):
        k = n - len(terms)
        if k < 1 or n < 2 * k + 1:
            continue
        S = ResidueSequence.from_terms(n, terms)
        norm = find_normalizer(S)
        T = scale(S, norm.g)
        rep = check_multiplicity_bound(T, k)
        counts[rep.regime] += 1
        if not (norm.achieves_bound and rep.holds):
            bad.append({"sequence": format_sequence(S), "normalized": format_sequence(T), **rep.to_dict()})
    return dict(counts), bad


def _classification_chunk(n: int, first: int) -> tuple[dict, list]:
    return {"keys": free_of_length(n, first=first)}, []


def _davenport_chunk(kind: str, arg) -> tuple[dict, list]:
    if kind == "cyclic":
        G, expected, max_len = GroupSpec.cyclic(arg), arg - 1, arg + 1
    elif kind == "sum":
        expected = abelian_lower_bound(list(arg))[0]
        G, max_len = GroupSpec.direct_sum(list(arg)), expected + 2
    else:
        G, expected, max_len = GroupSpec.dihedral(arg), arg, arg + 1
    res = davenport_search(G, max_len)
    row = {"group": G.name, "d": res.d, "expected": expected, "status": res.status,
           "example": [G.labels[i] for i in res.extremal_example]}
    bad = [] if res.exact and res.d == expected else [row]
    return {"rows": [row]}, bad


def brute_force_int_subsums(weights: tuple[int, ...]) -> set[int]:
    """Sums of all nonempty sub-multisets, one entry per count vector."""
    grid = np.zeros(1, dtype=np.int64)
    for w, m in sorted(Counter(weights).items()):
        grid = np.add.outer(grid, w * np.arange(m + 1)).ravel()
    # entry 0 is the empty choice; every other entry is positive
    return set(grid[1:].tolist())


def brute_force_products(elems: list[DihedralElement]) -> set[DihedralElement]:
    """Products over every ordering of every nonempty subsequence.

    Walks all arrangements one term at a time, skipping repeated values at the
    same position so each distinct arrangement is visited once.
    """
    n = elems[0].n
    pool = Counter((int(e.reflection), e.rotation) for e in elems)
    seen: set[tuple[int, int]] = set()

    def walk(eps: int, rot: int) -> None:
        for (f, b), m in list(pool.items()):
            if not m:
                continue
            # x^eps y^rot * x^f y^b = x^(eps+f) y^((-1)^f rot + b)
            nxt = (eps ^ f, ((-rot if f else rot) + b) % n)
            seen.add(nxt)
            pool[(f, b)] -= 1
            walk(*nxt)
            pool[(f, b)] += 1

    walk(0, 0)
    return {DihedralElement(n, bool(e), a) for e, a in seen}


def _oracle_zn_chunk(n: int, max_len: int) -> tuple[dict, list]:
    bad = []
    count = 0
    cache: dict[tuple[int, ...], set[int]] = {}

    def walk(terms: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        yield terms
        if len(terms) < max_len:
            for a in range(terms[-1] if terms else 0, n):
                yield from walk(terms + (a,))

    for terms in walk(()):
        S = ResidueSequence.from_terms(n, terms)
        weights = tuple(sorted(bar(a, n) for a in terms))
        if weights not in cache:
            cache[weights] = brute_force_int_subsums(weights)
        count += 1
        if set(subsums_int(S).members) != cache[weights]:
            bad.append({"kind": "subsums_int", "sequence": format_sequence(S)})
    return {"zn_instances": count}, bad


def _oracle_dihedral_chunk(n: int, max_len: int) -> tuple[dict, list]:
    bad = []
    count = 0
    elements = [DihedralElement(n, e, a) for e in (False, True) for a in range(n)]

    def walk(start: int, chosen: list[DihedralElement]) -> Iterator[list[DihedralElement]]:
        if chosen:
            yield chosen
        if len(chosen) < max_len:
            for i in range(start, len(elements)):
                yield from walk(i, chosen + [elements[i]])

    memo: dict[tuple, set] = {}
    for chosen in walk(0, []):
        S = DihedralSequence.from_elements(n, chosen)
        count += 1
        got = big_pi(S)
        want = memo.get(S.key)
        if want is None:
            want = memo[S.key] = brute_force_products(chosen)
        if got != want:
            bad.append({"kind": "big_pi", "sequence": str(S)})
    return {f"dihedral_{2 * n}_instances": count}, bad


# -- suite definitions -------------------------------------------------------


def _chunks(suite: str, cfg: SweepConfig) -> list[tuple[Callable, tuple]]:
    ns = range(3, cfg.max_n + 1)
    if suite == "interval-theorem":
        out = [(_interval_chunk, (n, a)) for n in ns for a in range(1, n)]
        if cfg.samples:
            out.append((_witness_chunk, (cfg.seed, cfg.samples, cfg.max_n)))
        return out
    if suite == "normalizer":
        return [(_normalizer_chunk, (n, a)) for n in ns for a in range(1, n)]
    if suite == "bounds":
        return [(_bounds_chunk, (n, a)) for n in ns for a in range(1, n)]
    if suite == "classification":
        return [(_classification_chunk, (n, g)) for n in ns for g in range(2 * n) if g != n]
    if suite == "davenport":
        out = [(_davenport_chunk, ("cyclic", n)) for n in range(2, cfg.max_n + 1)]
        out += [(_davenport_chunk, ("sum", tuple(ns_))) for ns_ in DIRECT_SUMS]
        out += [(_davenport_chunk, ("dihedral", n)) for n in ns]
        return out
    if suite == "oracle-equivalence":
        cap = min(cfg.max_n, ORACLE_ZN_CAP)
        out = [(_oracle_zn_chunk, (n, cap)) for n in range(2, cap + 1)]
        out += [(_oracle_dihedral_chunk, spec) for spec in ORACLE_DIHEDRAL]
        return out
    raise DomainError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


def _call(task: tuple[Callable, tuple]) -> tuple[dict, list]:
    fn, args = task
    return fn(*args)


def _merge(suite: str, chunks: list[tuple[Callable, tuple]], results: list[tuple[dict, list]]) -> tuple[dict, list]:
    counterexamples = [c for _, bad in results for c in bad]
    if suite == "classification":
        found: dict[int, list] = {}
        for (_, (n, _)), (part, _) in zip(chunks, results):
            found.setdefault(n, []).extend(part["keys"])
        counts = {}
        for n, keys in found.items():
            rep = compare_with_family(n, keys)
            counts[str(n)] = rep.found_count
            if not rep.matches_family:
                counterexamples.append(rep.to_dict())
        return counts, counterexamples
    if suite == "davenport":
        return {"groups": [row for part, _ in results for row in part["rows"]]}, counterexamples
    total: Counter[str] = Counter()
    for part, _ in results:
        total.update(part)
    return dict(sorted(total.items())), counterexamples


def run_sweep(suite: str, cfg: SweepConfig, timing: bool = True) -> dict:
    """Run ``suite`` and return the JSON-ready report.

    ``elapsed_ms`` is ``None`` when ``timing`` is off, which makes the report a
    pure function of ``suite`` and ``cfg.report_view()``.
    """
    if suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    chunks = _chunks(suite, cfg)
    start = time.perf_counter()
    if cfg.jobs == 1:
        results = [_call(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_call, chunks))
    counts, counterexamples = _merge(suite, chunks, results)
    elapsed = round((time.perf_counter() - start) * 1000) if timing else None
    return {
        "suite": suite,
        "config": cfg.report_view(),
        "counts": counts,
        "counterexamples": counterexamples,
        "elapsed_ms": elapsed,
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


